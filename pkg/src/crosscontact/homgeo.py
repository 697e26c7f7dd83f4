"""Invariant Riemannian geometry of G/H at the origin.

A G-invariant metric is a block-diagonal Gram matrix on the restricted-root
frame; the U-map is the symmetric correction in the Levi-Civita bilinear
alpha(u, v) = [u, v]/2 + U(u, v), obtained from a Gram linear system.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .compactform import DEFAULT_TOL, ToleranceConfig
from .crossmodel import RestrictedFrame


class GeometryError(ValueError):
    pass


@dataclass(frozen=True)
class MetricParams:
    """Block coefficients (a, a_eps, a_half, b_eps, b_half) of an invariant metric."""

    a: float
    a_eps: float
    a_half: float
    b_eps: float
    b_half: float

    def __post_init__(self):
        if min(self.a, self.a_eps, self.a_half, self.b_eps, self.b_half) <= 0:
            raise GeometryError("metric parameters must be strictly positive")

    def as_tuple(self) -> tuple[float, ...]:
        return (self.a, self.a_eps, self.a_half, self.b_eps, self.b_half)


@dataclass
class InvariantMetric:
    """Invariant metric as its Gram matrix in the restricted-root frame."""

    params: MetricParams
    gram: np.ndarray

    def inner(self, u: np.ndarray, v: np.ndarray) -> float:
        return float(np.asarray(u) @ self.gram @ np.asarray(v))


def metric_from_params(frame: RestrictedFrame, params: MetricParams) -> InvariantMetric:
    """Assemble the Gram matrix a^2 on the Cartan line and a_l, b_l on each block."""
    diag = np.empty(frame.dim_mbar)
    s = frame.slices()
    diag[s["a"]] = params.a ** 2
    diag[s["m_eps"]] = params.a_eps
    diag[s["m_half"]] = params.a_half
    diag[s["k_eps"]] = params.b_eps
    diag[s["k_half"]] = params.b_half
    return InvariantMetric(params, np.diag(diag))


def u_tensor(frame: RestrictedFrame, metric: InvariantMetric) -> np.ndarray:
    """U[i,j,:] solving 2<U(e_i,e_j), w> = <[w,e_i],e_j> + <[w,e_j],e_i> for all w."""
    cg = np.einsum("wil,lj->wij", frame.cbar, metric.gram)
    rhs = cg + cg.transpose(0, 2, 1)  # rhs[w,i,j]
    ginv = 1.0 / np.diag(metric.gram)
    return 0.5 * np.einsum("wij,w->ijw", rhs, ginv)


def u_map(frame: RestrictedFrame, metric: InvariantMetric,
          u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """The symmetric bilinear U-map evaluated on frame-coordinate vectors."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.shape != (frame.dim_mbar,) or v.shape != (frame.dim_mbar,):
        raise GeometryError("vectors must be in frame coordinates")
    return np.einsum("i,j,ijk->k", u, v, u_tensor(frame, metric))


def levi_civita_alpha(frame: RestrictedFrame, metric: InvariantMetric,
                      u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """alpha(u,v) = [u,v]_mbar / 2 + U(u,v) in frame coordinates."""
    return 0.5 * frame.bracket_mbar(np.asarray(u, float), np.asarray(v, float)) \
        + u_map(frame, metric, u, v)


def alpha_tensor(frame: RestrictedFrame, metric: InvariantMetric) -> np.ndarray:
    return 0.5 * frame.cbar + u_tensor(frame, metric)


def killing_residual(frame: RestrictedFrame, metric: InvariantMetric,
                     xi: np.ndarray) -> float:
    """Max over basis pairs of |<U(e_i,e_j), xi>| (zero iff xi is Killing)."""
    ut = u_tensor(frame, metric)
    vals = np.einsum("ijk,kl,l->ij", ut, metric.gram, np.asarray(xi, float))
    return float(np.max(np.abs(vals)))


def is_killing(frame: RestrictedFrame, metric: InvariantMetric, xi: np.ndarray,
               tol: ToleranceConfig = DEFAULT_TOL) -> tuple[bool, float]:
    res = killing_residual(frame, metric, xi)
    return tol.is_zero(res), res


def is_naturally_reductive(frame: RestrictedFrame, metric: InvariantMetric,
                           tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """True iff the U-map vanishes identically."""
    return tol.is_zero(float(np.max(np.abs(u_tensor(frame, metric)))))


def is_submersion_metric(params: MetricParams,
                         tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """True iff the metric projects isometrically onto the base (a = a_eps = a_half = 1)."""
    return all(tol.is_zero(p - 1.0) for p in (params.a, params.a_eps, params.a_half))
