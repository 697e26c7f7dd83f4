"""The punctured tangent bundle as G/H x R+: J^q structures and slice induction.

Vectors carry one extra radial slot appended to the frame coordinates. Radial
functions are plain positive evaluators; only pointwise values are used.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

from . import contact
from .compactform import DEFAULT_TOL, ToleranceConfig
from .crossmodel import RestrictedFrame
from .homgeo import MetricParams

RadialFunction = Callable[[float], float]

FNS_KEYS = ("a", "b", "a_eps", "a_half", "b_eps", "b_half")


class BundleError(ValueError):
    pass


def q_values(q: RadialFunction, t: float) -> tuple[float, float]:
    """(q_eps, q_half)(t) = q evaluated on the restricted-root values at t."""
    if t <= 0:
        raise BundleError("radial coordinate must be positive")
    return float(q(t)), float(q(t / 2.0))


def jq_matrix(frame: RestrictedFrame, q: RadialFunction, t: float) -> np.ndarray:
    """J^q at (o, t) on frame-plus-radial coordinates."""
    qe, qh = q_values(q, t)
    n = frame.dim_mbar
    j = np.zeros((n + 1, n + 1))
    j[n, 0] = 1.0  # X -> d/dt
    j[0, n] = -1.0  # d/dt -> -X
    s = frame.slices()
    for block, qv in (("eps", qe), ("half", qh)):
        if qv <= 0:
            raise BundleError("q must be positive on the sampled domain")
        xi, ze = s[f"m_{block}"], s[f"k_{block}"]
        for a, b in zip(range(xi.start, xi.stop), range(ze.start, ze.stop)):
            j[b, a] = -1.0 / qv
            j[a, b] = qv
    return j


def jq_apply(frame: RestrictedFrame, q: RadialFunction, t: float,
             vec: np.ndarray) -> np.ndarray:
    vec = np.asarray(vec, dtype=float)
    if vec.shape != (frame.dim_mbar + 1,):
        raise BundleError("vector must carry frame coordinates plus one radial slot")
    return jq_matrix(frame, q, t) @ vec


def ambient_metric(frame: RestrictedFrame, fns: dict[str, RadialFunction],
                   t: float) -> np.ndarray:
    """Gram of the invariant ambient metric at (o, t), radial slot last."""
    if t <= 0:
        raise BundleError("radial coordinate must be positive")
    vals = {k: float(fns[k](t)) for k in FNS_KEYS}
    if min(vals.values()) <= 0:
        raise BundleError("metric functions must be positive at the sample")
    diag = np.empty(frame.dim_mbar + 1)
    s = frame.slices()
    diag[s["a"]] = vals["a"] ** 2
    diag[s["m_eps"]] = vals["a_eps"]
    diag[s["m_half"]] = vals["a_half"]
    diag[s["k_eps"]] = vals["b_eps"]
    diag[s["k_half"]] = vals["b_half"]
    diag[frame.dim_mbar] = vals["b"] ** 2
    return np.diag(diag)


def sasaki_fns() -> dict[str, RadialFunction]:
    """Metric functions of the Sasaki metric: unit on lifts, lambda^2 on zeta blocks."""
    return {"a": lambda t: 1.0, "b": lambda t: 1.0,
            "a_eps": lambda t: 1.0, "a_half": lambda t: 1.0,
            "b_eps": lambda t: t * t, "b_half": lambda t: t * t / 4.0}


def gf_fns(f: RadialFunction) -> dict[str, RadialFunction]:
    """The J^1-compatible family: a = b = f, a_l = b_l = f(t) lambda(t) / (2t)."""
    return {"a": f, "b": f,
            "a_eps": lambda t: f(t) / 2.0, "a_half": lambda t: f(t) / 4.0,
            "b_eps": lambda t: f(t) / 2.0, "b_half": lambda t: f(t) / 4.0}


def is_hermitian(fns: dict[str, RadialFunction], q: RadialFunction, t: float,
                 tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """True iff a = b and b_l = q_l^2 a_l at the sample t."""
    qe, qh = q_values(q, t)
    a, b = float(fns["a"](t)), float(fns["b"](t))
    checks = [a - b,
              float(fns["b_eps"](t)) - qe * qe * float(fns["a_eps"](t)),
              float(fns["b_half"](t)) - qh * qh * float(fns["a_half"](t))]
    return all(tol.is_zero(c, scale=max(abs(a), 1.0)) for c in checks)


def extension_admissible(q: RadialFunction,
                         probe_ts: list[float] | None = None) -> str:
    """'yes'/'no'/'inconclusive' verdict on 0 < lim_{t->0} q(t)/t < inf."""
    if probe_ts is None:
        probe_ts = list(np.geomspace(1e-1, 1e-6, 11))
    probe_ts = sorted(probe_ts, reverse=True)
    if probe_ts[-1] > 1e-4:
        raise BundleError("probe sequence must reach below 1e-4")
    ratios = np.array([float(q(t)) / t for t in probe_ts])
    tail = ratios[-5:]
    spread = (tail.max() - tail.min()) / max(abs(tail).max(), 1e-300)
    if spread < 1e-3 and tail.min() > 0:
        return "yes"
    diffs = np.diff(ratios)
    if np.all(diffs > 0) and ratios[-1] > 100.0 * ratios[0]:
        return "no"  # diverges towards +inf
    if np.all(diffs < 0) and ratios[-1] < ratios[0] / 100.0:
        return "no"  # collapses towards 0
    return "inconclusive"


def induce_slice_structure(frame: RestrictedFrame, fns: dict[str, RadialFunction],
                           q: RadialFunction, r: float,
                           tol: ToleranceConfig = DEFAULT_TOL
                           ) -> contact.AlmostContactStructure:
    """Almost contact metric structure induced on the radius-r slice."""
    if not is_hermitian(fns, q, r, tol):
        raise BundleError("ambient pair is not Hermitian at the slice radius")
    qe, qh = q_values(q, r)
    params = MetricParams(float(fns["a"](r)), float(fns["a_eps"](r)),
                          float(fns["a_half"](r)), float(fns["b_eps"](r)),
                          float(fns["b_half"](r)))
    return contact.phi_q_structure(frame, r, qe, qh, params.a, params,
                                   induced=True, tol=tol)
