"""Positive root systems of simple complex Lie algebras.

Roots are generated by closure from a Cartan matrix, inner products are
fixed by the trace-form self-consistency of the adjoint representation,
and the antisymmetric structure constants N(a, b) are assigned with the
extraspecial-pair sign convention.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

Coeffs = tuple[int, ...]


class RootSystemError(ValueError):
    """Invalid input or internal inconsistency while building a root system."""


# Cartan matrices in the layouts used by the five symmetric spaces:
# A_n standard, C_{n+1} with the long root last, F4 with two long roots first.


def cartan_matrix_A(n: int) -> np.ndarray:
    c = 2 * np.eye(n, dtype=int)
    for i in range(n - 1):
        c[i, i + 1] = c[i + 1, i] = -1
    return c


def cartan_matrix_C(n: int) -> np.ndarray:
    """C_n with simple roots a_1..a_{n-1} short and a_n long."""
    if n < 2:
        raise RootSystemError("C_n needs rank >= 2")
    c = cartan_matrix_A(n)
    c[n - 2, n - 1] = -1
    c[n - 1, n - 2] = -2
    return c


def cartan_matrix_F4() -> np.ndarray:
    """F4 with a_1, a_2 long and a_3, a_4 short (arrow a_2 => a_3)."""
    c = 2 * np.eye(4, dtype=int)
    c[0, 1] = c[1, 0] = -1
    c[1, 2] = -2
    c[2, 1] = -1
    c[2, 3] = c[3, 2] = -1
    return c


@dataclass(frozen=True)
class SimpleBasis:
    """A basis of simple roots given by its Cartan matrix."""

    rank: int
    cartan_matrix: np.ndarray
    family_tag: str

    def __post_init__(self):
        c = np.asarray(self.cartan_matrix)
        if c.shape != (self.rank, self.rank):
            raise RootSystemError("Cartan matrix shape does not match rank")
        if not np.all(np.diag(c) == 2):
            raise RootSystemError("Cartan matrix diagonal must be 2")
        off = c - np.diag(np.diag(c))
        if np.any(off > 0):
            raise RootSystemError("off-diagonal Cartan entries must be <= 0")
        if np.any((off == 0) != (off.T == 0)):
            raise RootSystemError("Cartan zero pattern must be symmetric")

    @classmethod
    def A(cls, n: int) -> "SimpleBasis":
        return cls(n, cartan_matrix_A(n), "A")

    @classmethod
    def C(cls, n: int) -> "SimpleBasis":
        return cls(n, cartan_matrix_C(n), "C")

    @classmethod
    def F4(cls) -> "SimpleBasis":
        return cls(4, cartan_matrix_F4(), "F4")


@dataclass(frozen=True)
class Root:
    """A root as integer coefficients over the simple basis."""

    coeffs: Coeffs

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def __add__(self, other: "Root") -> "Root":
        return Root(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Root") -> "Root":
        return Root(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Root":
        return Root(tuple(-a for a in self.coeffs))

    def is_positive(self) -> bool:
        return any(self.coeffs) and all(a >= 0 for a in self.coeffs)

    def sort_key(self) -> tuple:
        return (self.height, self.coeffs)


@dataclass
class RootSystem:
    """Positive roots plus inner products and signed structure constants."""

    basis: SimpleBasis
    positive_roots: list[Root]
    gram: np.ndarray | None = None
    structure_signs: dict[tuple[Coeffs, Coeffs], float] = field(default_factory=dict)

    def __post_init__(self):
        self._pos_set = {r.coeffs for r in self.positive_roots}

    @property
    def rank(self) -> int:
        return self.basis.rank

    @property
    def max_root(self) -> Root:
        return self.positive_roots[-1]

    def is_root(self, r: Root) -> bool:
        return r.coeffs in self._pos_set or (-r).coeffs in self._pos_set

    def inner(self, alpha: Root, beta: Root) -> float:
        """Killing-normalized <alpha, beta> = B(t_alpha, t_beta)."""
        if self.gram is None:
            raise RootSystemError("Gram matrix not computed")
        a = np.array(alpha.coeffs)
        b = np.array(beta.coeffs)
        return float(a @ self.gram @ b)

    @property
    def has_signs(self) -> bool:
        return bool(self.structure_signs)


def _cartan_pairing(basis: SimpleBasis, beta: Root, j: int) -> int:
    """<beta, alpha_j^v> = 2(beta, alpha_j)/(alpha_j, alpha_j) from the Cartan matrix."""
    return int(sum(n * basis.cartan_matrix[k, j] for k, n in enumerate(beta.coeffs)))


def generate_positive_roots(basis: SimpleBasis) -> RootSystem:
    """All positive roots by closure over simple-root strings, ordered by (height, lex)."""
    rank = basis.rank
    simple = [Root(tuple(int(i == j) for i in range(rank))) for j in range(rank)]
    roots: set[Coeffs] = {r.coeffs for r in simple}
    # process strictly by height so down-strings only consult completed levels
    height = 1
    while True:
        level = [Root(c) for c in roots if sum(c) == height]
        if not level:
            break
        for beta in level:
            for j, alpha in enumerate(simple):
                # walk down to find p, then extend the string up to q = -p - <beta, a_j^v>
                p = 0
                down = beta
                while (down - alpha).is_positive() and (down - alpha).coeffs in roots:
                    down = down - alpha
                    p -= 1
                q = -p - _cartan_pairing(basis, beta, j)
                up = beta
                for _ in range(q):
                    up = up + alpha
                    roots.add(up.coeffs)
        height += 1
    ordered = sorted((Root(c) for c in roots), key=Root.sort_key)
    rs = RootSystem(basis, ordered)
    mu = ordered[-1]
    for r in ordered:
        if any(m < n for m, n in zip(mu.coeffs, r.coeffs)):
            raise RootSystemError("maximal root does not dominate all positive roots")
    return rs


def killing_gram(rs: RootSystem) -> np.ndarray:
    """Gram matrix of simple roots, scaled so <a,b> = sum_g <a,g><b,g> over all roots."""
    basis = rs.basis
    rank = basis.rank
    c = basis.cartan_matrix
    # symmetrize: d_j proportional to (a_j, a_j)/2 with d_i c_ij = d_j c_ji
    d = np.zeros(rank)
    d[0] = 1.0
    pend = [0]
    seen = {0}
    while pend:
        i = pend.pop()
        for j in range(rank):
            if j not in seen and c[i, j] != 0:
                d[j] = d[i] * c[j, i] / c[i, j]
                seen.add(j)
                pend.append(j)
    if len(seen) != rank:
        raise RootSystemError("Cartan matrix is not indecomposable")
    g0 = np.array([[c[i, j] * d[j] for j in range(rank)] for i in range(rank)])
    g0 = (g0 + g0.T) / 2
    # Killing scale: c*(a,b) = c^2 * sum_{g in Delta} (a,g)(b,g)
    coeff = np.array([r.coeffs for r in rs.positive_roots], dtype=float)
    prods = coeff @ g0  # (n_roots, rank): (gamma, alpha_j)
    s11 = 2.0 * float(prods[:, 0] @ prods[:, 0])
    scale = g0[0, 0] / s11
    gram = scale * g0
    # self-consistency on every pair
    prods = coeff @ gram
    resid = np.max(np.abs(gram - 2.0 * prods.T @ prods))
    if resid > 1e-9 * max(1.0, np.max(np.abs(gram))):
        raise RootSystemError(f"Killing self-consistency failed, residual {resid:.3e}")
    rs.gram = gram
    return gram


def root_string(rs: RootSystem, alpha: Root, beta: Root) -> tuple[int, int]:
    """The alpha-string through beta: beta + n*alpha is a root for p <= n <= q."""
    if alpha.coeffs == beta.coeffs or alpha.coeffs == (-beta).coeffs:
        raise RootSystemError("root string undefined for alpha = +-beta")
    p = 0
    cur = beta
    while rs.is_root(cur - alpha):
        cur = cur - alpha
        p -= 1
    q = 0
    cur = beta
    while rs.is_root(cur + alpha):
        cur = cur + alpha
        q += 1
    return p, q


def _n_magnitude(rs: RootSystem, alpha: Root, beta: Root) -> float:
    """|N(alpha,beta)| = sqrt(q(1-p)/2 * <alpha,alpha>) from the alpha-string."""
    p, q = root_string(rs, alpha, beta)
    return math.sqrt(q * (1 - p) / 2.0 * rs.inner(alpha, alpha))


def assign_structure_constants(rs: RootSystem) -> RootSystem:
    """Fill the signed table N(a,b) for positive pairs, extraspecial pairs positive.

    For each positive non-simple gamma the extraspecial pair (a1, gamma - a1),
    a1 minimal in the (height, lex) order, gets a positive sign; every other
    special pair is forced by the Jacobi identity.
    """
    if rs.gram is None:
        killing_gram(rs)
    order = {r.coeffs: i for i, r in enumerate(rs.positive_roots)}
    table: dict[tuple[Coeffs, Coeffs], float] = {}

    def put(a: Root, b: Root, val: float):
        table[(a.coeffs, b.coeffs)] = val
        table[(b.coeffs, a.coeffs)] = -val

    def lookup(a: Root, b: Root) -> float:
        """N for arbitrary-sign roots, reduced to the positive table via (*), (**)."""
        s = a + b
        if not rs.is_root(s):
            return 0.0
        apos, bpos = a.is_positive(), b.is_positive()
        if apos and bpos:
            return table[(a.coeffs, b.coeffs)]
        if not apos and not bpos:
            return -table[((-a).coeffs, (-b).coeffs)]
        if not apos:  # reduce to the (positive, negative) case
            return -lookup(b, a)
        # a > 0, b < 0; cycle (a, b, -s): N(a,b) = N(b,-s) = N(-s,a)
        if s.is_positive():
            return -table[((-b).coeffs, s.coeffs)]
        return table[((-s).coeffs, a.coeffs)]

    for gamma in rs.positive_roots:
        if gamma.height < 2:
            continue
        pairs = []
        for alpha in rs.positive_roots:
            if alpha.sort_key() >= gamma.sort_key():
                break
            beta = gamma - alpha
            if beta.coeffs in order and order[alpha.coeffs] <= order[beta.coeffs]:
                pairs.append((alpha, beta))
        pairs.sort(key=lambda ab: ab[0].sort_key())
        a1, b1 = pairs[0]  # extraspecial: minimal alpha (always simple)
        put(a1, b1, _n_magnitude(rs, a1, b1))
        for alpha, beta in pairs[1:]:
            # Jacobi identity on (E_{-a1}, E_alpha, E_beta), all brackets land on E_{b1}
            denom = lookup(gamma, -a1)
            t1 = lookup(-a1, alpha)
            t1 = t1 * lookup(alpha - a1, beta) if t1 else 0.0
            t2 = lookup(beta, -a1)
            t2 = t2 * lookup(beta - a1, alpha) if t2 else 0.0
            val = -(t1 + t2) / denom
            want = _n_magnitude(rs, alpha, beta)
            if abs(abs(val) - want) > 1e-9 * max(1.0, want):
                raise RootSystemError(
                    f"sign propagation inconsistent at {alpha.coeffs}+{beta.coeffs}: "
                    f"|N| = {abs(val):.12g}, expected {want:.12g}")
            put(alpha, beta, val)

    rs.structure_signs = table
    rs.n_lookup = lookup  # type: ignore[attr-defined]
    return rs


def n_constant(rs: RootSystem, alpha: Root, beta: Root) -> float:
    """Signed N(alpha, beta) for any pair of (possibly negative) roots."""
    if not rs.has_signs:
        raise RootSystemError("structure constants not assigned")
    return rs.n_lookup(alpha, beta)  # type: ignore[attr-defined]
