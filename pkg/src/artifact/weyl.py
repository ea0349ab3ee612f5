"""Reflection groups of the del Pezzo lattices and the order-3 constructions in W(E6).

W(E6) is realised on the 27 lines (degree-27 permutations); W(A4) and W(D5)
act on their own root sets.  Lattice matrices are recovered from line
permutations because the lines span the lattice.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache, cached_property

import numpy as np

from . import permgroup as pg
from .exact import PolyCyc, char_poly
from .piclattice import (
    PicVec,
    canonical_class,
    extend_to_weyl,
    gram_matrix,
    hyperplane,
    exceptional,
    line_index,
    line_vectors,
    matrix_to_line_perm,
    pairing,
)

RootVec = PicVec

_L12 = line_index("L12")


class CarterType(enum.Enum):
    A2 = "A2"
    A2xA2 = "A2xA2"
    Other = "Other"


# (t-1)^4 (t^2+t+1) and (t-1)^2 (t^2+t+1)^2, lowest degree first
_CYCLO3 = PolyCyc([1, 1, 1])
_A2_POLY = PolyCyc([-1, 1]) ** 4 * _CYCLO3
_A2A2_POLY = PolyCyc([-1, 1]) ** 2 * _CYCLO3 ** 2


def roots(n: int = 6) -> tuple[RootVec, ...]:
    """Norm -2 classes orthogonal to K in ``<L, E_1..E_n>``, by bounded search."""
    if n not in (4, 5, 6):
        raise ValueError("n must be 4, 5 or 6")
    K = canonical_class(n)
    out = []
    for l in range(-3, 4):
        for e in itertools.product(range(-2, 3), repeat=n):
            v = PicVec(l, e)
            if pairing(v, K) == 0 and pairing(v, v) == -2:
                out.append(v)
    return tuple(sorted(out, key=lambda v: (v.l, v.e)))


def simple_roots() -> tuple[RootVec, ...]:
    E = [exceptional(i) for i in range(1, 7)]
    simple = [E[i] - E[i + 1] for i in range(5)]
    simple.append(hyperplane() - E[0] - E[1] - E[2])
    return tuple(simple)


def reflect(x: PicVec, r: RootVec) -> PicVec:
    """s_r(x) = x + (x.r) r for a root r (r.r = -2)."""
    return x + pairing(x, r) * r


def _reflection_matrix(r: RootVec) -> np.ndarray:
    n = len(r.e)
    J = gram_matrix(n)
    rv = r.as_array()
    return np.eye(n + 1, dtype=np.int64) + np.outer(rv, rv @ J)


def matrix_from_line_perm(images) -> np.ndarray:
    V = line_vectors()
    p = list(images)
    M = np.empty((7, 7), dtype=np.int64)
    M[:, 1:] = V[p[:6]].T
    M[:, 0] = V[p[_L12]] + V[p[0]] + V[p[1]]   # L = L12 + E1 + E2
    return M


def matrices_from_line_perms(arr: np.ndarray) -> np.ndarray:
    """Batch version of :func:`matrix_from_line_perm`: ``(N, 27) -> (N, 7, 7)``."""
    V = line_vectors()
    arr = np.asarray(arr, dtype=np.int64)
    M = np.empty((len(arr), 7, 7), dtype=np.int64)
    M[:, :, 1:] = V[arr[:, :6]].transpose(0, 2, 1)
    M[:, :, 0] = V[arr[:, _L12]] + V[arr[:, 0]] + V[arr[:, 1]]
    return M


@dataclass(frozen=True)
class WeylElem:
    """An element of W(E6) stored as a permutation of the 27 line indices."""

    perm: pg.Perm
    _matrix: np.ndarray | None = field(default=None, compare=False, repr=False)

    @classmethod
    def from_matrix(cls, M: np.ndarray) -> WeylElem:
        M = np.asarray(M, dtype=np.int64)
        return cls(pg.Perm(matrix_to_line_perm(M)), M)

    @classmethod
    def identity(cls) -> WeylElem:
        return cls(pg.Perm.identity(27))

    @cached_property
    def matrix(self) -> np.ndarray:
        if self._matrix is not None:
            return self._matrix
        return matrix_from_line_perm(self.perm.images)

    def __mul__(self, other: WeylElem) -> WeylElem:
        return WeylElem(self.perm * other.perm)

    def __pow__(self, k: int) -> WeylElem:
        return WeylElem(self.perm ** k)

    def inverse(self) -> WeylElem:
        return WeylElem(self.perm.inverse())

    def order(self) -> int:
        return self.perm.order()

    def __call__(self, line) -> int:
        i = line_index(line) if isinstance(line, str) else int(line)
        return self.perm(i)

    def __hash__(self):
        return hash(self.perm)


def reflection(r: RootVec) -> WeylElem:
    if pairing(r, r) != -2 or pairing(r, canonical_class(len(r.e))) != 0:
        raise ValueError(f"{r!r} is not a root")
    if len(r.e) != 6:
        raise ValueError("line permutations are only modelled for n = 6")
    M = _reflection_matrix(r)
    return WeylElem.from_matrix(M)


def _root_action_perms(n: int) -> list[pg.Perm]:
    rs = roots(n)
    lookup = {v: k for k, v in enumerate(rs)}
    gens = []
    for r in rs:
        if (r.l, r.e) < ((-r).l, (-r).e):
            continue
        gens.append(pg.Perm(lookup[reflect(v, r)] for v in rs))
    return gens


@cache
def generate(n: int = 6) -> pg.PermGroup:
    """W(A4), W(D5) or W(E6) as the closure of all reflections."""
    if n == 6:
        positive = [r for r in roots(6) if (r.l, r.e) > ((-r).l, (-r).e)]
        return pg.closure([reflection(r).perm for r in positive])
    if n in (4, 5):
        return pg.closure(_root_action_perms(n))
    raise ValueError("n must be 4, 5 or 6")


def weyl_e6() -> pg.PermGroup:
    return generate(6)


# ---------------------------------------------------------------------------
# Carter typing


@cache
def _kperp_projection() -> tuple[np.ndarray, np.ndarray, int]:
    """Matrices ``(A, S, d)`` with restricted map ``R = A @ S^T J M S / d``."""
    S = np.array([r.as_array() for r in simple_roots()], dtype=np.int64).T   # 7x6
    J = gram_matrix()
    G = S.T @ J @ S
    # exact inverse of the Gram matrix of the simple roots
    Gf = [[Fraction(int(x)) for x in row] for row in G]
    n = len(Gf)
    aug = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(Gf)]
    for c in range(n):
        piv = next(r for r in range(c, n) if aug[r][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    Ginv = [row[n:] for row in aug]
    d = 1
    for row in Ginv:
        for x in row:
            d = d * x.denominator // np.gcd(d, x.denominator)
    A = np.array([[int(x * d) for x in row] for row in Ginv], dtype=np.int64)
    return A, S, d


def restricted_matrix(M: np.ndarray) -> np.ndarray:
    """Matrix of ``M`` on K-perp in the simple-root basis (6x6 integer)."""
    A, S, d = _kperp_projection()
    J = gram_matrix()
    num = A @ S.T @ J @ np.asarray(M, dtype=np.int64) @ S
    if (num % d).any():
        raise AssertionError("restriction to K-perp is not integral")
    return num // d


def kperp_char_poly(g: WeylElem) -> PolyCyc:
    return char_poly(restricted_matrix(g.matrix).tolist())


def carter_type(g: WeylElem) -> CarterType:
    p = kperp_char_poly(g)
    if p == _A2_POLY:
        return CarterType.A2
    if p == _A2A2_POLY:
        return CarterType.A2xA2
    return CarterType.Other


def _batch_char_poly(R: np.ndarray) -> np.ndarray:
    """Integer characteristic polynomials of a stack of integer matrices.

    Faddeev-LeVerrier with exact int64 arithmetic; returns coefficients lowest
    degree first, shape ``(N, n+1)``.
    """
    N, n, _ = R.shape
    coeffs = np.zeros((N, n + 1), dtype=np.int64)
    coeffs[:, n] = 1
    Mk = np.zeros_like(R)
    eye = np.eye(n, dtype=np.int64)
    for k in range(1, n + 1):
        Mk = R @ Mk + coeffs[:, n - k + 1, None, None] * eye
        tr = np.trace(R @ Mk, axis1=1, axis2=2)
        if (tr % k).any():
            raise AssertionError("non-integral Faddeev-LeVerrier step")
        coeffs[:, n - k] = -tr // k
    return coeffs


def carter_types_of_rows(rows: np.ndarray) -> list[CarterType]:
    """Carter type of every line permutation in ``rows`` via the integer batch path."""
    M = matrices_from_line_perms(np.asarray(rows))
    A, S, d = _kperp_projection()
    num = A @ S.T @ gram_matrix() @ M @ S
    if (num % d).any():
        raise AssertionError("restriction to K-perp is not integral")
    cp = _batch_char_poly(num // d)
    a2 = np.array([int(c.a) for c in _A2_POLY.coefficients])
    a2a2 = np.array([int(c.a) for c in _A2A2_POLY.coefficients])
    is_a2, is_a2a2 = (cp == a2).all(axis=1), (cp == a2a2).all(axis=1)
    return [CarterType.A2 if x else CarterType.A2xA2 if y else CarterType.Other
            for x, y in zip(is_a2, is_a2a2)]


def carter_census(G: pg.PermGroup | None = None) -> dict[CarterType, np.ndarray]:
    """Boolean masks (aligned with ``G.array``) of the A2 and A2xA2 elements."""
    G = weyl_e6() if G is None else G
    types = np.array([t.value for t in carter_types_of_rows(G.array)])
    return {
        CarterType.A2: types == CarterType.A2.value,
        CarterType.A2xA2: types == CarterType.A2xA2.value,
    }


# ---------------------------------------------------------------------------
# S6 and the element r


def standard_s6(*cycles: tuple[int, ...]) -> WeylElem:
    """Permutation of E_1..E_6 (1-based cycles) fixing L."""
    sigma = list(range(1, 7))
    for cyc in cycles:
        for k, x in enumerate(cyc):
            sigma[x - 1] = cyc[(k + 1) % len(cyc)]
    return WeylElem.from_matrix(extend_to_weyl([f"E{s}" for s in sigma]))


def element_b() -> WeylElem:
    return standard_s6((4, 5, 6))


def element_c() -> WeylElem:
    return standard_s6((1, 2, 3))


def build_r() -> WeylElem:
    r = WeylElem.from_matrix(extend_to_weyl(["Q1", "Q2", "Q3", "L56", "L46", "L45"]))
    if r.order() != 3:
        raise AssertionError("r does not have order 3")
    r2 = r * r
    expected = ["L23", "L13", "L12", "Q4", "Q5", "Q6"]
    if [r2(f"E{i}") for i in range(1, 7)] != [line_index(x) for x in expected]:
        raise AssertionError("r^2 does not act as expected on E_1..E_6")
    return r


def set_preservers(G: pg.PermGroup | None = None) -> list[WeylElem]:
    """Elements of W(E6) mapping {E1,E2,E3} and {E4,E5,E6} to themselves."""
    G = weyl_e6() if G is None else G
    arr = G.array
    first = np.isin(arr[:, :3], [0, 1, 2]).all(axis=1)
    second = np.isin(arr[:, 3:6], [3, 4, 5]).all(axis=1)
    return [WeylElem(pg.Perm(row)) for row in arr[first & second]]


def commutes_with_set_preservers(r: WeylElem) -> bool:
    return all(g * r == r * g for g in set_preservers())


def preserves_sixer(g: WeylElem) -> bool:
    return set(g.perm.images[:6]) == set(range(6))


@dataclass
class SylowReport:
    class_size: int
    centralizer_order: int
    sylow_order: int
    sylow_rank: int | None
    fermat_centralizer_order: int
    fermat_sylow_order: int
    coincide: bool

    @property
    def ok(self) -> bool:
        return (self.class_size * self.centralizer_order == len(weyl_e6())
                and self.sylow_rank == 3 and self.coincide)


def verify_sylow_lemma() -> SylowReport:
    """Centralizer of b in W(E6), its Sylow 3-subgroup, and the Fermat-side comparison."""
    from . import fermat

    W = weyl_e6()
    b = element_b()
    cls = pg.conjugacy_class(W, b.perm)
    C = pg.centralizer(W, b.perm)
    Z = pg.sylow3_unique(C)
    if not pg.normalizes(C, Z):
        raise AssertionError("Sylow 3-subgroup is not normal in the centralizer")

    marking = fermat.find_marking(adapted_to=fermat.a2_census()[0])
    H = fermat.embedded_group(marking)
    if b.perm not in H:
        raise AssertionError("b is not in the embedded Fermat automorphism group")
    CH = pg.centralizer(H, b.perm)
    ZH = pg.sylow3_unique(CH)
    return SylowReport(
        class_size=len(cls),
        centralizer_order=C.order,
        sylow_order=Z.order,
        sylow_rank=pg.is_elementary_abelian_3(Z),
        fermat_centralizer_order=CH.order,
        fermat_sylow_order=ZH.order,
        coincide=ZH == Z,
    )
