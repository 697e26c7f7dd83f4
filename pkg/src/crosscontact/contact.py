"""Invariant almost contact metric structures on the tangent sphere bundle.

Structures are stored at the origin in the restricted-root frame: phi as a
matrix, the characteristic vector as X/a(r), the contact form as a(r)<X,.>.
Classification (contact / K-contact / Sasakian) is by explicit residuals.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import homgeo
from .compactform import DEFAULT_TOL, ToleranceConfig
from .crossmodel import RestrictedFrame
from .homgeo import InvariantMetric, MetricParams


class ContactError(ValueError):
    pass


@dataclass
class AlmostContactStructure:
    """(phi, char, eta, g) data at the origin plus the defining scalars."""

    frame: RestrictedFrame
    r: float
    phi: np.ndarray
    char: np.ndarray  # characteristic vector, frame coordinates
    eta: np.ndarray  # contact covector, frame coordinates
    metric: InvariantMetric
    q_eps: float
    q_half: float

    @property
    def a_scalar(self) -> float:
        return self.metric.params.a


@dataclass
class StructureClass:
    """Classification flags with the residuals that justify them."""

    flags: dict[str, bool]
    residuals: dict[str, float] = field(default_factory=dict)


def lambda_r(r: float) -> tuple[float, float]:
    """(eps, eps/2) restricted-root values at radius r."""
    return r, r / 2.0


def _phi_matrix(frame: RestrictedFrame, q_eps: float, q_half: float) -> np.ndarray:
    """phi: X -> 0, xi -> -(1/q_l) zeta, zeta -> q_l xi, per restricted root."""
    if q_eps <= 0 or (frame.m_half and q_half <= 0):
        raise ContactError("q values must be positive")
    phi = np.zeros((frame.dim_mbar, frame.dim_mbar))
    s = frame.slices()
    for block, q in (("eps", q_eps), ("half", q_half)):
        xi, ze = s[f"m_{block}"], s[f"k_{block}"]
        for i, j in zip(range(xi.start, xi.stop), range(ze.start, ze.stop)):
            phi[j, i] = -1.0 / q
            phi[i, j] = q
    return phi


def phi_q_structure(frame: RestrictedFrame, r: float, q_eps: float, q_half: float,
                    a_scalar: float, params: MetricParams,
                    induced: bool = False,
                    tol: ToleranceConfig = DEFAULT_TOL) -> AlmostContactStructure:
    """Assemble (phi^q, X/a, a<X,.>, g) from the q scalars and metric parameters."""
    if r <= 0 or a_scalar <= 0:
        raise ContactError("radius and scale must be positive")
    if induced:
        # structure induced from an ambient Hermitian pair: b_l = q_l^2 a_l
        for b, q, a in ((params.b_eps, q_eps, params.a_eps),
                        (params.b_half, q_half, params.a_half)):
            if not tol.is_zero(b - q * q * a, scale=b):
                raise ContactError("parameters violate the Hermitian pairing b_l = q_l^2 a_l")
    metric = homgeo.metric_from_params(frame, params)
    phi = _phi_matrix(frame, q_eps, q_half)
    char = np.zeros(frame.dim_mbar)
    char[0] = 1.0 / a_scalar
    eta = np.zeros(frame.dim_mbar)
    eta[0] = a_scalar
    return AlmostContactStructure(frame, r, phi, char, eta, metric, q_eps, q_half)


def standard_structure(frame: RestrictedFrame, r: float) -> AlmostContactStructure:
    """The structure induced by the Sasaki metric on the radius-r sphere bundle."""
    le, lh = lambda_r(r)
    params = MetricParams(1.0, 1.0, 1.0, le * le, lh * lh)
    return phi_q_structure(frame, r, le, lh, 1.0, params, induced=True)


def rectified_structure(frame: RestrictedFrame, r: float) -> AlmostContactStructure:
    """Standard structure rescaled (char 2r X, metric /(4r^2)) to a contact candidate."""
    le, lh = lambda_r(r)
    s = 1.0 / (2.0 * r)
    params = MetricParams(s, s * s, s * s, 0.25, 1.0 / 16.0)
    return phi_q_structure(frame, r, le, lh, s, params, induced=True)


def theorem_main_structure(frame: RestrictedFrame, r: float,
                           kappa: float) -> AlmostContactStructure:
    """The K-contact structure with characteristic vector X/kappa (q identically 1)."""
    if kappa <= 0:
        raise ContactError("kappa must be positive")
    params = MetricParams(kappa, kappa / 2.0, kappa / 4.0, kappa / 2.0, kappa / 4.0)
    return phi_q_structure(frame, r, 1.0, 1.0, kappa, params, induced=True)


def d_eta_matrix(structure: AlmostContactStructure) -> np.ndarray:
    """Matrix of the scaled d eta: a(r) * (-1/2) <X, [e_i, e_j]>."""
    return -0.5 * structure.a_scalar * structure.frame.cbar[:, :, 0]


def d_eta(structure: AlmostContactStructure, u: np.ndarray, v: np.ndarray) -> float:
    """Exterior derivative of the scaled contact form on frame vectors."""
    return float(np.asarray(u) @ d_eta_matrix(structure) @ np.asarray(v))


def fundamental_two_form(structure: AlmostContactStructure,
                         u: np.ndarray, v: np.ndarray) -> float:
    """Phi(u, v) = g(u, phi v)."""
    return float(np.asarray(u) @ structure.metric.gram @ structure.phi @ np.asarray(v))


def axiom_residuals(structure: AlmostContactStructure) -> dict[str, float]:
    """Residuals of the almost contact metric axioms."""
    phi, char, eta = structure.phi, structure.char, structure.eta
    g = structure.metric.gram
    eye = np.eye(len(char))
    return {
        "phi_squared": float(np.max(np.abs(phi @ phi + eye - np.outer(char, eta)))),
        "eta_char": abs(float(eta @ char) - 1.0),
        "phi_char": float(np.max(np.abs(phi @ char))),
        "eta_phi": float(np.max(np.abs(eta @ phi))),
        "compatibility": float(np.max(np.abs(phi.T @ g @ phi - g + np.outer(eta, eta)))),
    }


def nijenhuis_tensor(structure: AlmostContactStructure) -> np.ndarray:
    """Normality tensor N(e_i, e_j) (Nijenhuis torsion plus the 2 d eta term)."""
    c = structure.frame.cbar
    phi = structure.phi
    t2 = np.einsum("ai,bj,abk->ijk", phi, phi, c)
    t3 = np.einsum("ai,ajl,kl->ijk", phi, c, phi)
    t4 = np.einsum("bj,ibl,kl->ijk", phi, c, phi)
    return -c + t2 - t3 - t4


def nijenhuis(structure: AlmostContactStructure,
              u: np.ndarray, v: np.ndarray) -> np.ndarray:
    return np.einsum("i,j,ijk->k", np.asarray(u, float), np.asarray(v, float),
                     nijenhuis_tensor(structure))


def nabla_phi_residual(structure: AlmostContactStructure) -> float:
    """Max deviation of alpha(u, phi v) - phi alpha(u, v) = g(u,v) char - eta(v) u."""
    frame, phi = structure.frame, structure.phi
    alpha = homgeo.alpha_tensor(frame, structure.metric)
    lhs = np.einsum("bj,ibk->ijk", phi, alpha) - np.einsum("ijl,kl->ijk", alpha, phi)
    g = structure.metric.gram
    rhs = np.einsum("ij,k->ijk", g, structure.char) \
        - np.einsum("j,ik->ijk", structure.eta, np.eye(frame.dim_mbar))
    return float(np.max(np.abs(lhs - rhs)))


def classify(structure: AlmostContactStructure,
             tol: ToleranceConfig = DEFAULT_TOL) -> StructureClass:
    """Contact / K-contact / Sasakian flags from explicit residuals."""
    frame = structure.frame
    residuals = dict(axiom_residuals(structure))
    axioms = max(residuals.values())
    residuals["axioms"] = axioms
    g = structure.metric.gram
    residuals["contact"] = float(np.max(np.abs(g @ structure.phi
                                               - d_eta_matrix(structure))))
    residuals["killing"] = homgeo.killing_residual(
        frame, structure.metric, structure.a_scalar * structure.char)
    residuals["nijenhuis"] = float(np.max(np.abs(nijenhuis_tensor(structure))))
    residuals["nabla_phi"] = nabla_phi_residual(structure)

    acm = tol.is_zero(axioms)
    contact = acm and tol.is_zero(residuals["contact"])
    k_contact = contact and tol.is_zero(residuals["killing"])
    sasakian = k_contact and tol.is_zero(residuals["nijenhuis"]) \
        and tol.is_zero(residuals["nabla_phi"])
    return StructureClass(
        flags={"almost_contact_metric": acm, "contact_metric": contact,
               "k_contact": k_contact, "sasakian": sasakian},
        residuals=residuals)


def tashiro_suite(frame: RestrictedFrame, radii: list[float],
                  tol: ToleranceConfig = DEFAULT_TOL) -> dict:
    """Contact behaviour of the standard and rectified structures over radii."""
    entries = []
    all_ok = True
    for r in radii:
        std = classify(standard_structure(frame, r), tol)
        rect = classify(rectified_structure(frame, r), tol)
        expect_std_contact = abs(r - 0.5) < 1e-12
        expect_rect_k = abs(r - 1.0) < 1e-12 and frame.m_half == 0
        ok = (std.flags["contact_metric"] == expect_std_contact
              and rect.flags["contact_metric"]
              and rect.flags["k_contact"] == expect_rect_k
              and (not rect.flags["k_contact"] or rect.flags["sasakian"]))
        all_ok = all_ok and ok
        entries.append({"r": r,
                        "standard_contact": std.flags["contact_metric"],
                        "rectified_contact": rect.flags["contact_metric"],
                        "rectified_k_contact": rect.flags["k_contact"],
                        "rectified_sasakian": rect.flags["sasakian"],
                        "expected_standard_contact": expect_std_contact,
                        "expected_rectified_k_contact": expect_rect_k,
                        "standard_residuals": std.residuals,
                        "rectified_residuals": rect.residuals,
                        "passed": ok})
    return {"space": frame.space.label(), "entries": entries, "passed": all_ok}


def _k_contact_candidate_residual(frame: RestrictedFrame, kappa: float,
                                  params: MetricParams) -> float:
    """Worst axiom/Killing residual of the unique contact candidate phi for a metric.

    The candidate is forced by g(phi u, v) = kappa * d eta(u, v); the metric
    carries a K-contact structure with characteristic vector X/kappa iff the
    candidate satisfies the almost-contact axioms and X is Killing.
    """
    metric = homgeo.metric_from_params(frame, params)
    g = metric.gram
    d_eta_unscaled = -0.5 * frame.cbar[:, :, 0]
    # g(phi u, v) = kappa d_eta(u, v)  =>  phi^T G = kappa D  =>  phi = -kappa G^-1 D
    phi = -kappa * np.linalg.solve(g, d_eta_unscaled)
    char = np.zeros(frame.dim_mbar)
    char[0] = 1.0 / kappa
    eta = np.zeros(frame.dim_mbar)
    eta[0] = kappa
    eye = np.eye(frame.dim_mbar)
    res = max(
        float(np.max(np.abs(phi @ phi + eye - np.outer(char, eta)))),
        float(np.max(np.abs(phi.T @ g @ phi - g + np.outer(eta, eta)))),
        homgeo.killing_residual(frame, metric, kappa * char),
    )
    return res


def uniqueness_scan(frame: RestrictedFrame, r: float, kappa: float,
                    grid_size: int = 5, span: float = 2.0,
                    tol: ToleranceConfig = DEFAULT_TOL) -> dict:
    """Log-grid scan showing only the theorem parameters admit a K-contact structure."""
    if grid_size < 3:
        raise ContactError("grid needs at least 3 points per axis")
    le, lh = lambda_r(r)
    target = {"a_eps": kappa * le / (2 * r), "a_half": kappa * lh / (2 * r),
              "b_eps": kappa * le / (2 * r), "b_half": kappa * lh / (2 * r)}
    axes = ["a_eps", "b_eps"] + (["a_half", "b_half"] if frame.m_half else [])
    grids = {k: np.geomspace(target[k] / span, target[k] * span, grid_size)
             for k in axes}
    # force the exact theorem point onto the (odd) center of each axis
    for k in axes:
        grids[k][(grid_size - 1) // 2] = target[k]

    points = []
    n_pass = 0
    theorem_passed = False
    worst_pass = 0.0
    best_fail = np.inf
    from itertools import product
    for combo in product(*(grids[k] for k in axes)):
        vals = dict(zip(axes, combo))
        params = MetricParams(kappa, vals["a_eps"], vals.get("a_half", 1.0),
                              vals["b_eps"], vals.get("b_half", 1.0))
        res = _k_contact_candidate_residual(frame, kappa, params)
        ok = tol.is_zero(res)
        is_target = all(abs(vals[k] - target[k]) < 1e-14 for k in axes)
        if ok:
            n_pass += 1
            worst_pass = max(worst_pass, res)
            if is_target:
                theorem_passed = True
        else:
            best_fail = min(best_fail, res)
        points.append({"params": {k: float(vals[k]) for k in axes},
                       "residual": res, "passed": ok, "theorem_point": is_target})
    return {"space": frame.space.label(), "r": r, "kappa": kappa,
            "axes": axes, "grid_size": grid_size,
            "n_points": len(points), "n_passed": n_pass,
            "theorem_point_passed": theorem_passed,
            "min_failing_residual": float(best_fail),
            "max_passing_residual": float(worst_pass),
            "unique": theorem_passed and n_pass == 1,
            "points": points}
