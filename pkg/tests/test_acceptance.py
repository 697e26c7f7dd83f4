"""Release gate: the ten acceptance criteria, one test per criterion."""

import math
import time

import numpy as np
import pytest

from crosscontact import compactform, contact, crossmodel, suites, tanbundle
from crosscontact.crossmodel import Family, SpaceId
from crosscontact.homgeo import MetricParams
from crosscontact.suites import REPRESENTATIVE_SPACES, TABLE1_SPACES, get_frame


def test_criterion_01_table1_reproduction():
    """All table rows: exact integer dims, multiplicities, isotropy dims; < 30 s."""
    start = time.perf_counter()
    for space in TABLE1_SPACES:
        frame = get_frame(space)
        me, mh = crossmodel.table1_multiplicities(space)
        assert (frame.m_eps, frame.m_half) == (me, mh), space.label()
        assert frame.dim_mbar == 2 * space.base_dim - 1, space.label()
        assert frame.h_basis.shape[1] == crossmodel.table1_h_dim(space)
    assert time.perf_counter() - start < 30.0


def test_criterion_02_algebra_integrity():
    """Jacobi and invariant-form residuals below 1e-9 on all five families; < 60 s."""
    start = time.perf_counter()
    for space in REPRESENTATIVE_SPACES:
        out = compactform.verify_algebra(get_frame(space).alg)
        assert out["passed"], (space.label(), out)
        assert out["residuals"]["jacobi"] < 1e-9
        assert out["residuals"]["ad_invariance"] < 1e-9
    assert time.perf_counter() - start < 60.0


def test_criterion_03_u_closed_forms():
    """Solved U-map equals closed forms, 50 random parameter sets per space, < 1e-9."""
    rng = np.random.default_rng(7)
    for space in (SpaceId(Family.COMPLEX_PROJECTIVE, 3),
                  SpaceId(Family.QUATERNIONIC_PROJECTIVE, 2)):
        frame = get_frame(space)
        worst = 0.0
        for _ in range(50):
            params = MetricParams(*np.exp(rng.uniform(-2.3, 2.3, 5)))
            worst = max(worst,
                        suites.lemma_u_closed_forms_residual(frame, params))
        assert worst < 1e-9, (space.label(), worst)


def test_criterion_04_contact_criterion_biconditional():
    """contact_metric flag holds exactly when a_l = a lambda(r) / (2 r q_l)."""
    frame = get_frame(SpaceId(Family.COMPLEX_PROJECTIVE, 2))
    rng = np.random.default_rng(21)
    for trial in range(60):
        r = float(np.exp(rng.uniform(-1, 1)))
        a = float(np.exp(rng.uniform(-1, 1)))
        qe, qh = (float(v) for v in np.exp(rng.uniform(-1, 1, 2)))
        le, lh = contact.lambda_r(r)
        if trial % 2 == 0:
            ae, ah = a * le / (2 * r * qe), a * lh / (2 * r * qh)
        else:
            ae, ah = (float(v) for v in np.exp(rng.uniform(-1, 1, 2)))
        params = MetricParams(a, ae, ah, qe * qe * ae, qh * qh * ah)
        st = contact.phi_q_structure(frame, r, qe, qh, a, params, induced=True)
        flag = contact.classify(st).flags["contact_metric"]
        want = (abs(ae - a * le / (2 * r * qe)) < 1e-9
                and abs(ah - a * lh / (2 * r * qh)) < 1e-9)
        assert flag == want, (trial, r, a, qe, qh, ae, ah)


def test_criterion_05_tashiro_radius_sweep():
    """Standard/rectified contact behaviour at r in {1/4, 1/2, 1, 2}, all families."""
    for space in REPRESENTATIVE_SPACES:
        out = contact.tashiro_suite(get_frame(space), [0.25, 0.5, 1.0, 2.0])
        assert out["passed"], (space.label(), out["entries"])


def test_criterion_06_main_theorem_matrix():
    """Sasakian over 5 spaces x r in {1/2,1,2} x kappa in {1/2,1,3}; both
    normality checks below 1e-8 and in agreement; < 2 min."""
    start = time.perf_counter()
    for space in REPRESENTATIVE_SPACES:
        frame = get_frame(space)
        for r in (0.5, 1.0, 2.0):
            for kappa in (0.5, 1.0, 3.0):
                cls = contact.classify(
                    contact.theorem_main_structure(frame, r, kappa))
                nij = cls.residuals["nijenhuis"]
                nab = cls.residuals["nabla_phi"]
                assert cls.flags["sasakian"], (space.label(), r, kappa)
                assert nij < 1e-8 and nab < 1e-8, (space.label(), r, kappa)
                assert (nij < 1e-8) == (nab < 1e-8)
    assert time.perf_counter() - start < 120.0


def test_criterion_07_uniqueness_scan():
    """Five-point log grid per axis: only the distinguished point passes and
    every other point fails by more than 1e-3."""
    for space in (SpaceId(Family.COMPLEX_PROJECTIVE, 2),
                  SpaceId(Family.QUATERNIONIC_PROJECTIVE, 1)):
        scan = contact.uniqueness_scan(get_frame(space), 1.0, 1.0, 5)
        assert scan["unique"] and scan["theorem_point_passed"], space.label()
        assert scan["n_passed"] == 1
        assert scan["min_failing_residual"] > 1e-3


def test_criterion_08_sphere_metric_coincidence():
    """On the sphere the kappa = 1/2 theorem metric equals a quarter of the
    standard one to 1e-12."""
    frame = get_frame(SpaceId(Family.SPHERE, 4))
    g_main = contact.theorem_main_structure(frame, 1.0, 0.5).metric.gram
    g_std = contact.standard_structure(frame, 1.0).metric.gram
    assert float(np.max(np.abs(g_main - 0.25 * g_std))) < 1e-12


def test_criterion_09_cp_bracket_scalars():
    """Basis-independent complex-projective bracket scalars within 1e-9."""
    for n in (2, 3):
        frame = get_frame(SpaceId(Family.COMPLEX_PROJECTIVE, n))
        out = crossmodel.fixture_check_cp2_brackets(frame)
        assert out["passed"], out["checks"]
        assert max(out["checks"].values()) < 1e-9


def test_criterion_10_hermitian_and_extension():
    """Hermitian predicate matches the direct isometry test on random data and
    the radial extension verdicts are (yes, no, no)."""
    frame = get_frame(SpaceId(Family.COMPLEX_PROJECTIVE, 2))
    rng = np.random.default_rng(30)
    for _ in range(30):
        t = float(np.exp(rng.uniform(-1, 1)))
        c = float(np.exp(rng.uniform(-1, 1)))
        qfun = lambda s, c=c: c * s  # noqa: E731
        vals = {k: float(np.exp(rng.uniform(-1, 1))) for k in tanbundle.FNS_KEYS}
        if rng.random() < 0.5:
            qe, qh = tanbundle.q_values(qfun, t)
            vals["b"] = vals["a"]
            vals["b_eps"] = qe * qe * vals["a_eps"]
            vals["b_half"] = qh * qh * vals["a_half"]
        fns = {k: (lambda s, v=v: v) for k, v in vals.items()}
        j = tanbundle.jq_matrix(frame, qfun, t)
        g = tanbundle.ambient_metric(frame, fns, t)
        direct = float(np.max(np.abs(j.T @ g @ j - g))) \
            < 1e-9 * max(1.0, float(np.max(np.abs(g))))
        assert tanbundle.is_hermitian(fns, qfun, t) == direct
    assert tanbundle.extension_admissible(lambda t: t) == "yes"
    assert tanbundle.extension_admissible(lambda t: 1.0) == "no"
    assert tanbundle.extension_admissible(math.sqrt) == "no"


def test_acceptance_gate_report_all_pass():
    """The packaged release gate reports 10/10 criteria passing."""
    rep = suites.acceptance_report(compactform.DEFAULT_TOL)
    assert rep.passed, rep.to_text()
    assert rep.summary() == {"total": 10, "passed": 10, "failed": 0}
