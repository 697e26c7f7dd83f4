"""Almost Hermitian structures on the punctured tangent bundle and slice induction."""

import numpy as np
import pytest

from crosscontact import contact, tanbundle
from crosscontact.tanbundle import BundleError

identity = lambda t: t  # noqa: E731


def test_jq_squares_to_minus_identity(frames):
    for frame in frames.values():
        for q in (identity, lambda t: 1.0, lambda t: np.sqrt(t)):
            for t in (0.3, 1.0, 2.5):
                j = tanbundle.jq_matrix(frame, q, t)
                n = frame.dim_mbar + 1
                assert np.max(np.abs(j @ j + np.eye(n))) < 1e-12


def test_jq_block_action(cp2):
    """With q = id at t = 1: xi_eps -> -zeta_eps and xi_half -> -2 zeta_half."""
    s = cp2.slices()
    n = cp2.dim_mbar
    j = tanbundle.jq_matrix(cp2, identity, 1.0)
    xi_e = np.zeros(n + 1)
    xi_e[s["m_eps"].start] = 1.0
    out = tanbundle.jq_apply(cp2, identity, 1.0, xi_e)
    want = np.zeros(n + 1)
    want[s["k_eps"].start] = -1.0
    assert np.allclose(out, want)
    xi_h = np.zeros(n + 1)
    xi_h[s["m_half"].start] = 1.0
    out = tanbundle.jq_apply(cp2, identity, 1.0, xi_h)
    want = np.zeros(n + 1)
    want[s["k_half"].start] = -2.0
    assert np.allclose(out, want)
    # X and the radial direction swap with a sign
    assert j[n, 0] == 1.0 and j[0, n] == -1.0


def test_sasaki_metric_with_identity_q_is_hermitian(frames):
    fns = tanbundle.sasaki_fns()
    for frame in frames.values():
        for t in (0.25, 1.0, 3.0):
            assert tanbundle.is_hermitian(fns, identity, t)
            g = tanbundle.ambient_metric(frame, fns, t)
            j = tanbundle.jq_matrix(frame, identity, t)
            assert np.max(np.abs(j.T @ g @ j - g)) < 1e-12


def test_gf_family_with_constant_q_is_hermitian(cp2):
    for f in (lambda t: 1.0, lambda t: t, lambda t: 2.0 / (1.0 + t * t)):
        fns = tanbundle.gf_fns(f)
        for t in (0.5, 1.0, 2.0):
            assert tanbundle.is_hermitian(fns, lambda t: 1.0, t)
            g = tanbundle.ambient_metric(cp2, fns, t)
            j = tanbundle.jq_matrix(cp2, lambda t: 1.0, t)
            assert np.max(np.abs(j.T @ g @ j - g)) < 1e-12


def test_hermitian_biconditional_randomized(cp2):
    """is_hermitian agrees with J^T G J = G on random metric functions."""
    rng = np.random.default_rng(12)
    for _ in range(40):
        vals = dict(zip(tanbundle.FNS_KEYS, np.exp(rng.uniform(-1.5, 1.5, 6))))
        if rng.random() < 0.5:  # force the Hermitian relations half the time
            vals["b"] = vals["a"]
            vals["b_eps"] = vals["a_eps"]
            vals["b_half"] = vals["a_half"] / 4.0
        fns = {k: (lambda t, v=v: v) for k, v in vals.items()}
        q = lambda t: t  # q_eps = 1, q_half = 1/2 at t = 1  # noqa: E731
        g = tanbundle.ambient_metric(cp2, fns, 1.0)
        j = tanbundle.jq_matrix(cp2, q, 1.0)
        isometry = np.max(np.abs(j.T @ g @ j - g)) < 1e-9
        assert tanbundle.is_hermitian(fns, q, 1.0) == isometry


@pytest.mark.parametrize("q,verdict", [
    (identity, "yes"),
    (lambda t: 1.0, "no"),
    (lambda t: np.sqrt(t), "no"),
    (lambda t: t * t, "no"),
    (lambda t: 3.0 * t, "yes"),
    (lambda t: t * (1.0 + np.sin(1.0 / t)), "inconclusive"),
])
def test_extension_admissible(q, verdict):
    assert tanbundle.extension_admissible(q) == verdict


def test_extension_probe_validation():
    with pytest.raises(BundleError):
        tanbundle.extension_admissible(identity, probe_ts=[0.5, 0.1])


def test_induced_slice_matches_standard_structure(cp2):
    """The Sasaki pair induces the standard structure on every slice."""
    fns = tanbundle.sasaki_fns()
    for r in (0.25, 0.5, 1.0, 2.0):
        got = tanbundle.induce_slice_structure(cp2, fns, identity, r)
        std = contact.standard_structure(cp2, r)
        assert np.array_equal(got.phi, std.phi)
        assert np.array_equal(got.metric.gram, std.metric.gram)
        assert np.array_equal(got.eta, std.eta)


def test_induced_slice_matches_theorem_structure(frames):
    """g^f with q = 1 induces the theorem structure with kappa = f(r)."""
    rng = np.random.default_rng(13)
    for _ in range(10):
        r = float(np.exp(rng.uniform(-1.0, 1.0)))
        kappa = float(np.exp(rng.uniform(-1.0, 1.0)))
        fns = tanbundle.gf_fns(lambda t, k=kappa: k)
        for label in ("cp2", "hp1"):
            frame = frames[label]
            got = tanbundle.induce_slice_structure(frame, fns, lambda t: 1.0, r)
            want = contact.theorem_main_structure(frame, r, kappa)
            assert np.max(np.abs(got.phi - want.phi)) < 1e-12
            assert np.max(np.abs(got.metric.gram - want.metric.gram)) < 1e-12


def test_induced_slices_are_sasakian(frames):
    for frame in frames.values():
        fns = tanbundle.gf_fns(lambda t: 2.0 / (1.0 + t * t))
        st = tanbundle.induce_slice_structure(frame, fns, lambda t: 1.0, 1.5)
        assert contact.classify(st).flags["sasakian"]


def test_non_hermitian_pair_rejected(cp2):
    fns = tanbundle.sasaki_fns()
    with pytest.raises(BundleError):
        tanbundle.induce_slice_structure(cp2, fns, lambda t: 1.0, 1.0)


def test_invalid_inputs(cp2):
    with pytest.raises(BundleError):
        tanbundle.q_values(identity, 0.0)
    with pytest.raises(BundleError):
        tanbundle.jq_matrix(cp2, lambda t: -1.0, 1.0)
    with pytest.raises(BundleError):
        tanbundle.ambient_metric(cp2, tanbundle.sasaki_fns(), -2.0)
    with pytest.raises(BundleError):
        tanbundle.jq_apply(cp2, identity, 1.0, np.zeros(3))


def test_base_point_pair_consistency(cp2):
    """J^q on (xi, u) pairs at a base point matches the coordinate matrix.

    A tangent pair (xi, u) in m x m at footpoint t X maps to frame-plus-radial
    coordinates by reading xi on the horizontal slots and u on the vertical
    ones; applying J^q there reproduces the pairwise formulas
    (xi, u) -> (-<u,X> X - sum q_l/lambda_l <u,xi_s> xi_s,
                <xi,X> X + sum lambda_l/q_l <xi,xi_s> xi_s).
    """
    t = 0.8
    q = identity
    qe, qh = tanbundle.q_values(q, t)
    lam = {"eps": t, "half": t / 2.0}
    qv = {"eps": qe, "half": qh}
    s = cp2.slices()
    ip = cp2.ip
    m_cols = [("a", cp2.x)] + \
        [("eps", cp2.mbar[:, k]) for k in range(s["m_eps"].start, s["m_eps"].stop)] + \
        [("half", cp2.mbar[:, k]) for k in range(s["m_half"].start, s["m_half"].stop)]
    rng = np.random.default_rng(14)
    for _ in range(10):
        cx = rng.normal(size=len(m_cols))
        cu = rng.normal(size=len(m_cols))
        xi = sum(c * col for c, (_, col) in zip(cx, m_cols))
        u = sum(c * col for c, (_, col) in zip(cu, m_cols))
        vec = np.zeros(cp2.dim_mbar + 1)
        vec[0] = xi @ ip @ cp2.x
        vec[s["m_eps"]] = [xi @ ip @ cp2.mbar[:, k]
                           for k in range(s["m_eps"].start, s["m_eps"].stop)]
        vec[s["m_half"]] = [xi @ ip @ cp2.mbar[:, k]
                            for k in range(s["m_half"].start, s["m_half"].stop)]
        vec[s["k_eps"]] = [-(u @ ip @ cp2.mbar[:, k - s["k_eps"].start
                                               + s["m_eps"].start]) / lam["eps"]
                           for k in range(s["k_eps"].start, s["k_eps"].stop)]
        vec[s["k_half"]] = [-(u @ ip @ cp2.mbar[:, k - s["k_half"].start
                                                + s["m_half"].start]) / lam["half"]
                            for k in range(s["k_half"].start, s["k_half"].stop)]
        vec[cp2.dim_mbar] = u @ ip @ cp2.x
        out = tanbundle.jq_apply(cp2, q, t, vec)
        # expected image pair per the displayed formulas
        xi2 = -(u @ ip @ cp2.x) * cp2.x
        u2 = (xi @ ip @ cp2.x) * cp2.x
        for blk, col in m_cols[1:]:
            xi2 = xi2 - qv[blk] / lam[blk] * (u @ ip @ col) * col
            u2 = u2 + lam[blk] / qv[blk] * (xi @ ip @ col) * col
        want = np.zeros(cp2.dim_mbar + 1)
        want[0] = xi2 @ ip @ cp2.x
        want[s["m_eps"]] = [xi2 @ ip @ cp2.mbar[:, k]
                            for k in range(s["m_eps"].start, s["m_eps"].stop)]
        want[s["m_half"]] = [xi2 @ ip @ cp2.mbar[:, k]
                             for k in range(s["m_half"].start, s["m_half"].stop)]
        want[s["k_eps"]] = [-(u2 @ ip @ cp2.mbar[:, k - s["k_eps"].start
                                                 + s["m_eps"].start]) / lam["eps"]
                            for k in range(s["k_eps"].start, s["k_eps"].stop)]
        want[s["k_half"]] = [-(u2 @ ip @ cp2.mbar[:, k - s["k_half"].start
                                                  + s["m_half"].start]) / lam["half"]
                             for k in range(s["k_half"].start, s["k_half"].stop)]
        want[cp2.dim_mbar] = u2 @ ip @ cp2.x
        assert np.max(np.abs(out - want)) < 1e-12
