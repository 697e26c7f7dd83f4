"""Named verification suites shared by the command-line driver.

Each suite appends Check entries to a VerificationReport; the acceptance
runner executes the full release gate over all five space families.
"""

from __future__ import annotations

import math

import numpy as np

from . import compactform, contact, crossmodel, homgeo, tanbundle
from .compactform import ToleranceConfig
from .crossmodel import Family, RestrictedFrame, SpaceId
from .homgeo import MetricParams
from .report import VerificationReport

_FRAME_CACHE: dict[str, RestrictedFrame] = {}

FAMILY_BY_FLAG = {
    "sphere": Family.SPHERE, "rp": Family.REAL_PROJECTIVE,
    "cp": Family.COMPLEX_PROJECTIVE, "hp": Family.QUATERNIONIC_PROJECTIVE,
    "cayley": Family.CAYLEY_PLANE,
}


def space_from_flags(space: str, n: int) -> SpaceId:
    if space not in FAMILY_BY_FLAG:
        raise ValueError(f"unknown space {space!r}; choose from "
                         f"{sorted(FAMILY_BY_FLAG)}")
    return SpaceId(FAMILY_BY_FLAG[space], n)


def get_frame(space: SpaceId) -> RestrictedFrame:
    key = space.label()
    if key not in _FRAME_CACHE:
        _FRAME_CACHE[key] = crossmodel.build_frame(space)
    return _FRAME_CACHE[key]


def suite_table1(space: SpaceId, rep: VerificationReport,
                 tol: ToleranceConfig) -> None:
    """Dimensions and restricted-root multiplicities of the space."""
    frame = get_frame(space)
    me, mh = crossmodel.table1_multiplicities(space)
    rep.add(f"table1/{space.label()}/multiplicities",
            "restricted-root multiplicities match the classification table",
            (frame.m_eps, frame.m_half) == (me, mh),
            details=f"got ({frame.m_eps}, {frame.m_half}), want ({me}, {mh})")
    rep.add(f"table1/{space.label()}/base_dim",
            "dim of the base equals the classification-table value",
            frame.dim_mbar == 2 * space.base_dim - 1,
            details=f"dim mbar = {frame.dim_mbar} = 2*{space.base_dim}-1")
    want_h = crossmodel.table1_h_dim(space)
    rep.add(f"table1/{space.label()}/h_dim",
            "dim of the slice-isotropy algebra matches the table",
            frame.h_basis.shape[1] == want_h,
            details=f"got {frame.h_basis.shape[1]}, want {want_h}")


def suite_brackets(space: SpaceId, rep: VerificationReport,
                   tol: ToleranceConfig) -> None:
    """Algebra integrity and bracket-inclusion laws of the frame."""
    frame = get_frame(space)
    alg = compactform.verify_algebra(frame.alg, tol)
    rep.add(f"brackets/{space.label()}/algebra",
            "antisymmetry, Jacobi and invariant-form residuals vanish",
            alg["passed"], residual=max(alg["residuals"].values()))
    laws = crossmodel.verify_bracket_laws(frame, tol)
    rep.add(f"brackets/{space.label()}/inclusions",
            "restricted-root bracket inclusions and pairing identities hold",
            laws["passed"], residual=max(laws["checks"].values()))
    if space.family is Family.COMPLEX_PROJECTIVE:
        fix = crossmodel.fixture_check_cp2_brackets(frame, tol)
        rep.add(f"brackets/{space.label()}/cp_scalars",
                "complex-projective bracket scalars match the fixed table",
                fix["passed"], residual=max(fix["checks"].values()))


def suite_metrics(space: SpaceId, rep: VerificationReport,
                  tol: ToleranceConfig) -> None:
    """Sampled properties of the invariant-metric family."""
    frame = get_frame(space)
    rng = np.random.default_rng(20240811)
    worst_sym = 0.0
    killing_ok = True
    for _ in range(10):
        p = MetricParams(*np.exp(rng.uniform(-1.5, 1.5, 5)))
        metric = homgeo.metric_from_params(frame, p)
        ut = homgeo.u_tensor(frame, metric)
        worst_sym = max(worst_sym, float(np.max(np.abs(ut - ut.transpose(1, 0, 2)))))
        x = np.zeros(frame.dim_mbar)
        x[0] = 1.0
        is_kill, _ = homgeo.is_killing(frame, metric, x, tol)
        want = tol.is_zero(p.a_eps - p.b_eps) and (
            frame.m_half == 0 or tol.is_zero(p.a_half - p.b_half))
        killing_ok = killing_ok and (is_kill == want)
    rep.add(f"metrics/{space.label()}/u_symmetry",
            "the metric correction bilinear is symmetric",
            tol.is_zero(worst_sym), residual=worst_sym)
    rep.add(f"metrics/{space.label()}/killing_criterion",
            "the Cartan field is Killing exactly when a_l = b_l",
            killing_ok)
    c = 2.0
    prop = homgeo.metric_from_params(
        frame, MetricParams(math.sqrt(c), c, c, c, c))
    rep.add(f"metrics/{space.label()}/naturally_reductive",
            "proportional metrics are naturally reductive, others are not",
            homgeo.is_naturally_reductive(frame, prop, tol)
            and not homgeo.is_naturally_reductive(
                frame, homgeo.metric_from_params(
                    frame, MetricParams(1, 1, 1, 4, 0.25)), tol))


def suite_tashiro(space: SpaceId, rep: VerificationReport,
                  tol: ToleranceConfig) -> None:
    frame = get_frame(space)
    out = contact.tashiro_suite(frame, [0.25, 0.5, 1.0, 2.0], tol)
    for entry in out["entries"]:
        rep.add(f"tashiro/{space.label()}/r={entry['r']}",
                "standard structure contact only at r = 1/2; rectified always "
                "contact, K-contact only on constant-curvature spaces at r = 1",
                entry["passed"],
                details=f"std_contact={entry['standard_contact']}, "
                        f"rect_k={entry['rectified_k_contact']}")


def suite_sasakian(space: SpaceId, r: float, kappa: float,
                   rep: VerificationReport, tol: ToleranceConfig) -> None:
    frame = get_frame(space)
    cls = contact.classify(contact.theorem_main_structure(frame, r, kappa), tol)
    rep.add(f"sasakian/{space.label()}/r={r}/kappa={kappa}",
            "the q=1 K-contact structure is Sasakian (both normality checks)",
            cls.flags["sasakian"],
            residual=max(cls.residuals["nijenhuis"], cls.residuals["nabla_phi"]))


def suite_uniqueness(space: SpaceId, r: float, kappa: float, grid: int,
                     rep: VerificationReport, tol: ToleranceConfig) -> None:
    frame = get_frame(space)
    scan = contact.uniqueness_scan(frame, r, kappa, grid, tol=tol)
    rep.add(f"uniqueness/{space.label()}/r={r}/kappa={kappa}",
            "only the distinguished parameters admit a K-contact structure",
            scan["unique"] and scan["min_failing_residual"] > 1e-3,
            residual=scan["max_passing_residual"],
            details=f"{scan['n_passed']}/{scan['n_points']} grid points pass; "
                    f"min failing residual {scan['min_failing_residual']:.2e}")


SUITES = ("table1", "brackets", "metrics", "tashiro", "sasakian", "uniqueness")


def run_suite(space: SpaceId, suite: str, r: float, kappa: float, grid: int,
              rep: VerificationReport, tol: ToleranceConfig) -> None:
    names = SUITES if suite == "all" else (suite,)
    for name in names:
        if name == "table1":
            suite_table1(space, rep, tol)
        elif name == "brackets":
            suite_brackets(space, rep, tol)
        elif name == "metrics":
            suite_metrics(space, rep, tol)
        elif name == "tashiro":
            suite_tashiro(space, rep, tol)
        elif name == "sasakian":
            suite_sasakian(space, r, kappa, rep, tol)
        elif name == "uniqueness":
            suite_uniqueness(space, r, kappa, grid, rep, tol)
        else:
            raise ValueError(f"unknown suite {name!r}")


# --- acceptance gate -------------------------------------------------------

TABLE1_SPACES = (
    [SpaceId(Family.SPHERE, n) for n in range(2, 7)]
    + [SpaceId(Family.REAL_PROJECTIVE, n) for n in range(2, 7)]
    + [SpaceId(Family.COMPLEX_PROJECTIVE, n) for n in range(2, 5)]
    + [SpaceId(Family.QUATERNIONIC_PROJECTIVE, n) for n in range(1, 4)]
    + [SpaceId(Family.CAYLEY_PLANE)]
)

REPRESENTATIVE_SPACES = (
    SpaceId(Family.SPHERE, 4), SpaceId(Family.REAL_PROJECTIVE, 3),
    SpaceId(Family.COMPLEX_PROJECTIVE, 2),
    SpaceId(Family.QUATERNIONIC_PROJECTIVE, 2), SpaceId(Family.CAYLEY_PLANE),
)


def lemma_u_closed_forms_residual(frame: RestrictedFrame,
                                  params: MetricParams) -> float:
    """Worst deviation of the solved U-map from its closed-form expressions."""
    metric = homgeo.metric_from_params(frame, params)
    a, ae, ah, be, bh = params.as_tuple()
    s = frame.slices()
    n = frame.dim_mbar

    def e(i: int) -> np.ndarray:
        v = np.zeros(n)
        v[i] = 1.0
        return v

    u = lambda x, y: homgeo.u_map(frame, metric, x, y)  # noqa: E731
    x = e(0)
    worst = float(np.max(np.abs(u(x, x))))
    a2 = a * a
    for j in range(frame.m_eps):
        xi, ze = e(s["m_eps"].start + j), e(s["k_eps"].start + j)
        worst = max(worst,
                    float(np.max(np.abs(u(x, xi) - (a2 - ae) / (2 * be) * ze))),
                    float(np.max(np.abs(u(x, ze) - (be - a2) / (2 * ae) * xi))),
                    float(np.max(np.abs(u(xi, ze) - (ae - be) / (2 * a2) * x))))
        for k in range(frame.m_eps):
            worst = max(worst, float(np.max(np.abs(
                u(xi, e(s["m_eps"].start + k))))))
            if k != j:
                worst = max(worst, float(np.max(np.abs(
                    u(xi, e(s["k_eps"].start + k))))))
    for p in range(frame.m_half):
        xh, zh = e(s["m_half"].start + p), e(s["k_half"].start + p)
        worst = max(worst,
                    float(np.max(np.abs(u(x, xh) - (a2 - ah) / (4 * bh) * zh))),
                    float(np.max(np.abs(u(x, zh) - (bh - a2) / (4 * ah) * xh))))
        for j in range(frame.m_eps):
            xi, ze = e(s["m_eps"].start + j), e(s["k_eps"].start + j)
            worst = max(worst,
                        float(np.max(np.abs(u(xi, xh) - (ah - ae) / (2 * bh)
                                            * frame.bracket_mbar(xi, xh)))),
                        float(np.max(np.abs(u(xi, zh) - (bh - ae) / (2 * ah)
                                            * frame.bracket_mbar(xi, zh)))),
                        float(np.max(np.abs(u(xh, ze) - (be - ah) / (2 * ah)
                                            * frame.bracket_mbar(xh, ze)))),
                        float(np.max(np.abs(u(ze, zh) - (bh - be) / (2 * bh)
                                            * frame.bracket_mbar(ze, zh)))))
        for q in range(frame.m_half):
            zq = e(s["k_half"].start + q)
            br = frame.bracket_mbar(xh, zq)
            m_eps_part = np.zeros(n)
            m_eps_part[s["m_eps"]] = br[s["m_eps"]]
            delta = x / (2 * a2) if p == q else 0.0
            worst = max(worst, float(np.max(np.abs(
                u(xh, zq) - (ah - bh) / 2 * (delta - m_eps_part / ae)))))
    return worst


def acceptance_report(tol: ToleranceConfig, grid: int = 5) -> VerificationReport:
    """The full release gate: ten criteria over all five space families."""
    rep = VerificationReport(config={"command": "acceptance",
                                     "tol": tol.absolute, "grid": grid})
    # 1. classification-table reproduction
    ok1 = True
    for space in TABLE1_SPACES:
        frame = get_frame(space)
        me, mh = crossmodel.table1_multiplicities(space)
        ok1 = ok1 and frame.m_eps == me and frame.m_half == mh \
            and frame.dim_mbar == 2 * space.base_dim - 1 \
            and frame.h_basis.shape[1] == crossmodel.table1_h_dim(space)
    rep.add("criterion-01/table1",
            "dimensions, multiplicities and isotropy dims match the table", ok1)

    # 2. algebra integrity
    worst2 = 0.0
    for space in REPRESENTATIVE_SPACES:
        res = compactform.verify_algebra(get_frame(space).alg, tol)["residuals"]
        worst2 = max(worst2, res["jacobi"], res["ad_invariance"])
    rep.add("criterion-02/algebra_integrity",
            "Jacobi and form-invariance residuals below 1e-9", worst2 < 1e-9,
            residual=worst2)

    # 3. closed-form equivalence of the metric correction bilinear
    rng = np.random.default_rng(7)
    worst3 = 0.0
    for space in (SpaceId(Family.COMPLEX_PROJECTIVE, 3),
                  SpaceId(Family.QUATERNIONIC_PROJECTIVE, 2)):
        frame = get_frame(space)
        for _ in range(50):
            p = MetricParams(*np.exp(rng.uniform(-2.3, 2.3, 5)))
            worst3 = max(worst3, lemma_u_closed_forms_residual(frame, p))
    rep.add("criterion-03/u_closed_forms",
            "solved U-map equals closed forms over 50 random parameter sets",
            worst3 < 1e-9, residual=worst3)

    # 4. contact criterion biconditional
    frame = get_frame(SpaceId(Family.COMPLEX_PROJECTIVE, 2))
    ok4 = True
    for trial in range(60):
        r = float(np.exp(rng.uniform(-1, 1)))
        a = float(np.exp(rng.uniform(-1, 1)))
        qe, qh = np.exp(rng.uniform(-1, 1, 2))
        le, lh = contact.lambda_r(r)
        if trial % 2 == 0:  # force the criterion to hold
            ae, ah = a * le / (2 * r * qe), a * lh / (2 * r * qh)
        else:
            ae, ah = np.exp(rng.uniform(-1, 1, 2))
        params = MetricParams(a, ae, ah, qe * qe * ae, qh * qh * ah)
        st = contact.phi_q_structure(frame, r, float(qe), float(qh), a, params,
                                     induced=True)
        flag = contact.classify(st, tol).flags["contact_metric"]
        want = (abs(ae - a * le / (2 * r * qe)) < 1e-9
                and abs(ah - a * lh / (2 * r * qh)) < 1e-9)
        ok4 = ok4 and (flag == want)
    rep.add("criterion-04/contact_criterion",
            "contact flag is equivalent to the closed-form condition on a_l", ok4)

    # 5. contact behaviour of standard and rectified structures over radii
    ok5 = all(contact.tashiro_suite(get_frame(s), [0.25, 0.5, 1.0, 2.0],
                                    tol)["passed"]
              for s in REPRESENTATIVE_SPACES)
    rep.add("criterion-05/tashiro",
            "standard contact only at r=1/2; rectified contact always and "
            "K-contact (then Sasakian) only at r=1 on constant curvature", ok5)

    # 6. main theorem: Sasakian over the full (space, r, kappa) matrix
    worst6 = 0.0
    ok6 = True
    agree6 = True
    for space in REPRESENTATIVE_SPACES:
        fr = get_frame(space)
        for r in (0.5, 1.0, 2.0):
            for kappa in (0.5, 1.0, 3.0):
                cls = contact.classify(
                    contact.theorem_main_structure(fr, r, kappa), tol)
                nij, nab = cls.residuals["nijenhuis"], cls.residuals["nabla_phi"]
                worst6 = max(worst6, nij, nab)
                ok6 = ok6 and cls.flags["sasakian"]
                agree6 = agree6 and ((nij < 1e-8) == (nab < 1e-8))
    rep.add("criterion-06/main_theorem",
            "both normality checks pass and agree over the full matrix",
            ok6 and agree6 and worst6 < 1e-8, residual=worst6)

    # 7. uniqueness of the K-contact parameters
    ok7 = True
    for space in (SpaceId(Family.COMPLEX_PROJECTIVE, 2),
                  SpaceId(Family.QUATERNIONIC_PROJECTIVE, 1)):
        scan = contact.uniqueness_scan(get_frame(space), 1.0, 1.0, grid, tol=tol)
        ok7 = ok7 and scan["unique"] and scan["min_failing_residual"] > 1e-3
    rep.add("criterion-07/uniqueness",
            "only the distinguished parameter point passes the K-contact scan",
            ok7)

    # 8. sphere coincidence of the two metrics
    fr = get_frame(SpaceId(Family.SPHERE, 4))
    g_main = contact.theorem_main_structure(fr, 1.0, 0.5).metric.gram
    g_std = contact.standard_structure(fr, 1.0).metric.gram
    res8 = float(np.max(np.abs(g_main - 0.25 * g_std)))
    rep.add("criterion-08/sphere_coincidence",
            "theorem metric at kappa=1/2 is a quarter of the standard metric",
            res8 < 1e-12, residual=res8)

    # 9. complex-projective bracket scalars
    worst9 = 0.0
    for n in (2, 3):
        fix = crossmodel.fixture_check_cp2_brackets(
            get_frame(SpaceId(Family.COMPLEX_PROJECTIVE, n)), tol)
        worst9 = max(worst9, max(fix["checks"].values()))
    rep.add("criterion-09/cp_bracket_scalars",
            "basis-independent bracket scalars reproduced", worst9 < 1e-9,
            residual=worst9)

    # 10. Hermitian pairing biconditional and extension verdicts
    ok10 = True
    fr = get_frame(SpaceId(Family.COMPLEX_PROJECTIVE, 2))
    for _ in range(30):
        t = float(np.exp(rng.uniform(-1, 1)))
        qfun = (lambda c: (lambda s: c * s))(float(np.exp(rng.uniform(-1, 1))))
        vals = {k: float(np.exp(rng.uniform(-1, 1))) for k in tanbundle.FNS_KEYS}
        if rng.random() < 0.5:  # force the Hermitian conditions
            qe, qh = tanbundle.q_values(qfun, t)
            vals["b"] = vals["a"]
            vals["b_eps"] = qe * qe * vals["a_eps"]
            vals["b_half"] = qh * qh * vals["a_half"]
        fns = {k: (lambda v: (lambda s: v))(v) for k, v in vals.items()}
        pred = tanbundle.is_hermitian(fns, qfun, t, tol)
        j = tanbundle.jq_matrix(fr, qfun, t)
        g = tanbundle.ambient_metric(fr, fns, t)
        direct = float(np.max(np.abs(j.T @ g @ j - g))) < 1e-9 * max(
            1.0, float(np.max(np.abs(g))))
        ok10 = ok10 and (pred == direct)
    verdicts = (tanbundle.extension_admissible(lambda t: t),
                tanbundle.extension_admissible(lambda t: 1.0),
                tanbundle.extension_admissible(math.sqrt))
    ok10 = ok10 and verdicts == ("yes", "no", "no")
    rep.add("criterion-10/hermitian_extension",
            "Hermitian pairing biconditional and radial extension verdicts",
            ok10, details=f"verdicts={verdicts}")
    return rep.finalize()
