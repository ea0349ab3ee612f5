"""Finite checks for the linear-algebra, field and symbol-algebra lemmas.

Covers the diagonal (Z/3)^3 counting in GL_4, cube roots in pure cubic
extensions, projective diagonal groups in PGL_2, the prime-order orbit
criterion and the degree-3 symbol algebra with ``x*y = w*y*x``.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import permgroup as pg
from .exact import (
    ONE,
    ZERO,
    CycNum,
    RadCubicNum,
    cyc_is_rational,
    is_rational_cube,
    nullspace,
    projective_closure,
    rad_cube,
    rad_trace,
)

W = CycNum.omega_power
ExponentQuad = tuple[int, int, int, int]


# ---------------------------------------------------------------------------
# Diagonal (Z/3)^3 in GL_4


def quad_trace(q: ExponentQuad) -> CycNum:
    return sum((W(e) for e in q), ZERO)


def determinant_condition(q: ExponentQuad) -> bool:
    return sum(q) % 3 == 0


def trace_condition(q: ExponentQuad, has_omega: bool = False) -> bool:
    # with w in the field every trace is a field element
    return True if has_omega else cyc_is_rational(quad_trace(q))


def quad_perm(q: ExponentQuad) -> pg.Perm:
    """Translation by ``q`` on four disjoint copies of Z/3 (points 3*i + x)."""
    return pg.Perm(3 * i + (x + q[i]) % 3 for i in range(4) for x in range(3))


@dataclass
class RepLemmaReport:
    has_omega: bool
    cond1: list[ExponentQuad]
    cond12: list[ExponentQuad]
    witness_quad: ExponentQuad
    witness_fails_trace: bool
    cond1_rank: int | None
    order27_subgroups_inside: int
    non_closed_pair: tuple[ExponentQuad, ExponentQuad] | None

    @property
    def ok(self) -> bool:
        if len(self.cond1) != 27 or self.cond1_rank != 3:
            return False
        if self.has_omega:
            return len(self.cond12) == 27 and self.order27_subgroups_inside == 1
        return (len(self.cond12) == 19 and self.witness_fails_trace
                and self.order27_subgroups_inside == 0 and self.non_closed_pair is not None)


def rep_lemma_check(has_omega: bool = False) -> RepLemmaReport:
    quads = list(itertools.product(range(3), repeat=4))
    cond1 = [q for q in quads if determinant_condition(q)]
    cond12 = [q for q in cond1 if trace_condition(q, has_omega)]
    witness = (1, 1, 1, 0)

    G = pg.closure([quad_perm(q) for q in cond1])
    if G.order != len(cond1):
        raise AssertionError("determinant-one quads are not closed under addition")
    # G has order 27, so its only subgroup of order 27 is G itself
    subset = pg.PermGroup(12, np.array([quad_perm(q).images for q in cond12]))
    inside = int(G.issubgroup(subset))

    allowed = set(cond12)
    pair = next(((p, q) for p, q in itertools.combinations(cond12, 2)
                 if tuple((x + y) % 3 for x, y in zip(p, q)) not in allowed), None)
    return RepLemmaReport(
        has_omega=has_omega,
        cond1=cond1,
        cond12=cond12,
        witness_quad=witness,
        witness_fails_trace=determinant_condition(witness) and not trace_condition(witness, has_omega),
        cond1_rank=pg.is_elementary_abelian_3(G),
        order27_subgroups_inside=inside,
        non_closed_pair=pair,
    )


# ---------------------------------------------------------------------------
# Pure cubic extensions


@dataclass
class RadCubicReport:
    alpha: Fraction
    samples: int
    rational_cubes: int
    mismatches: list[RadCubicNum]
    trace_failures: list[RadCubicNum]
    expansion_ok: bool

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.trace_failures and self.expansion_ok


def _cube_of_pure_part(alpha: Fraction, v: Fraction, w: Fraction) -> tuple[Fraction, Fraction, Fraction]:
    # (vX + wX^2)^3 = v^3 a + w^3 a^2 + 3a v^2 w X + 3a v w^2 X^2
    return (v ** 3 * alpha + w ** 3 * alpha ** 2, 3 * alpha * v * v * w, 3 * alpha * v * w * w)


def rad_cubic_classification(alpha, samples: int = 1000, seed: int = 0) -> RadCubicReport:
    """Random check that ``y^3`` is rational iff ``y`` is ``c``, ``c X`` or ``c X^2``."""
    alpha = Fraction(alpha)
    if alpha == 0 or is_rational_cube(alpha):
        raise ValueError(f"{alpha} is a rational cube")
    rng = random.Random(seed)

    def coord() -> Fraction:
        if rng.random() < 0.5:
            return Fraction(0)
        return Fraction(rng.randint(-9, 9), rng.randint(1, 5))

    mismatches, trace_failures, rational = [], [], 0
    for _ in range(samples):
        y = RadCubicNum(alpha, coord(), coord(), coord())
        cubed_rational = rad_cube(y).is_rational()
        rational += cubed_rational
        if cubed_rational != (sum(c != 0 for c in y.coefficients) <= 1):
            mismatches.append(y)
        if rad_trace(y) != 3 * y.u:
            trace_failures.append(y)

    # a cubic identity in (v, w) holds everywhere once it holds on a 4x4 grid
    expansion_ok = all(
        rad_cube(RadCubicNum(alpha, 0, v, w)).coefficients == _cube_of_pure_part(alpha, Fraction(v), Fraction(w))
        for v in range(4) for w in range(4)
    )
    return RadCubicReport(alpha, samples, rational, mismatches, trace_failures, expansion_ok)


# ---------------------------------------------------------------------------
# PGL_2


@dataclass
class PGL2Report:
    classes: int
    diag_1_w_order: int
    diag_w_w_trivial: bool

    @property
    def ok(self) -> bool:
        return self.classes == 3 and self.diag_1_w_order == 3 and self.diag_w_w_trivial


def _diag2(a: int, b: int):
    return [[W(a), ZERO], [ZERO, W(b)]]


def pgl2_diagonal_check() -> PGL2Report:
    classes = projective_closure([_diag2(a, b) for a, b in itertools.product(range(3), repeat=2)])
    gen = projective_closure([_diag2(0, 1)])
    trivial = projective_closure([_diag2(1, 1)])
    return PGL2Report(len(classes), len(gen), len(trivial) == 1)


# ---------------------------------------------------------------------------
# Orbits of subgroups of (Z/p)^*


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n ** 0.5) + 1))


def prime_orbit_check(p: int) -> bool:
    """Whether some subgroup of (Z/p)^* has an orbit of size exactly 3 on nonzero residues.

    Orbits of a subgroup H acting by multiplication have size |H|, so this is
    decided by searching for the cyclic subgroups of order 3.
    """
    if not is_prime(p) or p in (2, 3) or p >= 10**4:
        raise ValueError("p must be a prime with 5 <= p < 10^4")
    g = np.arange(2, p, dtype=np.int64)
    for h in g[(g * g % p) * g % p == 1]:
        h = int(h)
        orbit = {1, h, h * h % p}
        if len(orbit) == 3:
            return True
    return False


def primes_between(lo: int, hi: int) -> list[int]:
    sieve = np.ones(hi, dtype=bool)
    sieve[:2] = False
    for k in range(2, int(hi ** 0.5) + 1):
        if sieve[k]:
            sieve[k * k::k] = False
    return [int(p) for p in np.nonzero(sieve)[0] if p >= lo]


# ---------------------------------------------------------------------------
# Degree-3 symbol algebra


class SymbolAlg:
    """The algebra over Q(w) with basis x^i y^j, x^3 = a, y^3 = b, x y = w y x.

    Elements are length-9 lists of CycNum indexed by ``3*i + j``.
    """

    def __init__(self, a, b):
        self.a, self.b = Fraction(a), Fraction(b)
        if self.a == 0 or self.b == 0:
            raise ValueError("parameters must be nonzero")
        self.table = self._structure_constants()

    def _structure_constants(self) -> dict[tuple[int, int], tuple[CycNum, int]]:
        # y^j x^k = w^(2jk) x^k y^j
        table = {}
        for i, j, k, l in itertools.product(range(3), repeat=4):
            coef = W(2 * j * k) * (self.a ** ((i + k) // 3)) * (self.b ** ((j + l) // 3))
            table[3 * i + j, 3 * k + l] = (coef, 3 * ((i + k) % 3) + (j + l) % 3)
        return table

    def basis(self, i: int, j: int) -> list[CycNum]:
        v = [ZERO] * 9
        v[3 * (i % 3) + j % 3] = ONE
        return v

    def one(self) -> list[CycNum]:
        return self.basis(0, 0)

    def scalar(self, c) -> list[CycNum]:
        return [CycNum.coerce(c) * e for e in self.one()]

    @property
    def x(self) -> list[CycNum]:
        return self.basis(1, 0)

    @property
    def y(self) -> list[CycNum]:
        return self.basis(0, 1)

    def mul(self, u, v) -> list[CycNum]:
        out = [ZERO] * 9
        for s, cu in enumerate(u):
            if not cu:
                continue
            for t, cv in enumerate(v):
                if not cv:
                    continue
                coef, k = self.table[s, t]
                out[k] = out[k] + cu * cv * coef
        return out

    def x_inverse(self) -> list[CycNum]:
        return [c / self.a for c in self.basis(2, 0)]

    def y_inverse(self) -> list[CycNum]:
        return [c / self.b for c in self.basis(0, 2)]

    def center_dimension(self) -> int:
        rows = []
        for m in range(9):
            e = [ONE if k == m else ZERO for k in range(9)]
            # column k of the map z -> e z - z e applied to basis element k
            cols = []
            for k in range(9):
                z = [ONE if t == k else ZERO for t in range(9)]
                cols.append([p - q for p, q in zip(self.mul(e, z), self.mul(z, e))])
            rows.extend([[cols[k][r] for k in range(9)] for r in range(9)])
        return len(nullspace(rows))

    def is_associative(self) -> bool:
        for s, t, u in itertools.product(range(9), repeat=3):
            es, et, eu = (self.basis(k // 3, k % 3) for k in (s, t, u))
            if self.mul(self.mul(es, et), eu) != self.mul(es, self.mul(et, eu)):
                return False
        return True

    def monomial_class(self, v) -> int:
        """Index of the single basis monomial supporting ``v`` (classes modulo scalars)."""
        support = [k for k, c in enumerate(v) if c]
        if len(support) != 1:
            raise ValueError("not a scalar multiple of a monomial")
        return support[0]


@dataclass
class SymbolAlgebraReport:
    a: Fraction
    b: Fraction
    associative: bool
    center_dimension: int
    conjugation_ok: bool
    x_cubed_central: bool
    projective_order: int
    projective_rank: int | None
    commutator: list = field(repr=False, default_factory=list)
    commutator_is_omega: bool = False

    @property
    def ok(self) -> bool:
        return (self.associative and self.center_dimension == 1 and self.conjugation_ok
                and self.x_cubed_central and self.projective_order == 9
                and self.projective_rank == 2 and self.commutator_is_omega)


def symbol_algebra_check(a, b) -> SymbolAlgebraReport:
    A = SymbolAlg(a, b)
    x, y, xi, yi = A.x, A.y, A.x_inverse(), A.y_inverse()
    if A.mul(x, xi) != A.one() or A.mul(y, yi) != A.one():
        raise AssertionError("inverse formulas are wrong")

    conj = A.mul(A.mul(x, y), xi)
    conjugation_ok = conj == [W(1) * c for c in y]

    x3 = A.mul(A.mul(x, x), x)
    central = x3 == A.scalar(A.a) and all(
        A.mul(x3, A.basis(i, j)) == A.mul(A.basis(i, j), x3) == [A.a * c for c in A.basis(i, j)]
        for i in range(3) for j in range(3))

    def left_perm(g):
        return pg.Perm(A.monomial_class(A.mul(g, A.basis(k // 3, k % 3))) for k in range(9))

    P = pg.closure([left_perm(x), left_perm(y)])
    comm = A.mul(A.mul(x, y), A.mul(xi, yi))
    omega_one = A.scalar(W(1))
    return SymbolAlgebraReport(
        a=A.a, b=A.b,
        associative=A.is_associative(),
        center_dimension=A.center_dimension(),
        conjugation_ok=conjugation_ok,
        x_cubed_central=central,
        projective_order=P.order,
        projective_rank=pg.is_elementary_abelian_3(P),
        commutator=comm,
        commutator_is_omega=comm == omega_one and W(1) != ONE and W(1) ** 3 == ONE,
    )
