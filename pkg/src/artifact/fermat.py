"""The Fermat cubic x^3 + y^3 + z^3 + t^3 = 0 over Q(w) and the plane model.

Automorphisms are projective monomial matrices ``D * P_sigma`` with
``P_sigma e_i = e_sigma(i)`` and ``D = diag(1, w^d1, w^d2, w^d3)``.  Lines are
``{x_0 + w^a x_k = 0, x_m + w^b x_n = 0}`` with ``{k, m, n} = {1, 2, 3}``, ``m < n``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache

import numpy as np

from . import permgroup as pg
from .exact import (
    ONE,
    ZERO,
    CycNum,
    PolyCyc,
    char_poly,
    det,
    mat_inverse,
    mat_mul,
    nullspace,
    projective_closure,
    projectively_equal,
)
from .piclattice import intersection_matrix, line_index
from .weyl import CarterType, WeylElem

W = CycNum.omega_power
PAIRING_NAMES = {1: "xy|zt", 2: "xz|yt", 3: "xt|yz"}


class MarkingError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# Lines


@dataclass(frozen=True, order=True)
class FermatLine:
    pairing: int   # the coordinate paired with x_0
    a: int
    b: int

    @property
    def rest(self) -> tuple[int, int]:
        m, n = (i for i in (1, 2, 3) if i != self.pairing)
        return m, n

    def forms(self) -> list[list[CycNum]]:
        """The two defining linear forms as coefficient rows."""
        m, n = self.rest
        f1 = [ZERO] * 4
        f1[0], f1[self.pairing] = ONE, W(self.a)
        f2 = [ZERO] * 4
        f2[m], f2[n] = ONE, W(self.b)
        return [f1, f2]

    def spanning_points(self) -> tuple[list[CycNum], list[CycNum]]:
        m, n = self.rest
        p = [ZERO] * 4
        p[self.pairing], p[0] = ONE, -W(self.a)
        q = [ZERO] * 4
        q[n], q[m] = ONE, -W(self.b)
        return p, q

    def __repr__(self):
        return f"({PAIRING_NAMES[self.pairing]}, {self.a}, {self.b})"


def lies_on_surface(line: FermatLine) -> bool:
    """Substitute ``s*P + t*Q`` into the cubic and check every coefficient vanishes."""
    p, q = line.spanning_points()
    coeffs = [
        sum((x ** 3 for x in p), ZERO),
        3 * sum((x * x * y for x, y in zip(p, q)), ZERO),
        3 * sum((x * y * y for x, y in zip(p, q)), ZERO),
        sum((y ** 3 for y in q), ZERO),
    ]
    forms = line.forms()
    on_line = all(sum((f[i] * pt[i] for i in range(4)), ZERO) == 0 for f in forms for pt in (p, q))
    return on_line and all(c == 0 for c in coeffs)


@cache
def fermat_lines() -> tuple[FermatLine, ...]:
    lines = tuple(FermatLine(k, a, b) for k in (1, 2, 3) for a in range(3) for b in range(3))
    bad = [ln for ln in lines if not lies_on_surface(ln)]
    if bad:
        raise AssertionError(f"lines not on the surface: {bad}")
    return lines


def forms_determinant(l1: FermatLine, l2: FermatLine) -> CycNum:
    return det(l1.forms() + l2.forms())


def lines_meet(l1: FermatLine, l2: FermatLine) -> bool:
    if l1 == l2:
        raise ValueError("lines must be distinct")
    return forms_determinant(l1, l2) == 0


@cache
def fermat_incidence() -> np.ndarray:
    lines = fermat_lines()
    M = np.zeros((27, 27), dtype=np.int64)
    for i, j in itertools.combinations(range(27), 2):
        if lines_meet(lines[i], lines[j]):
            M[i, j] = M[j, i] = 1
    return M


def _line_from_forms(forms: list[dict[int, int]]) -> FermatLine:
    """Normalise two binomial forms (coord -> w-exponent) to a FermatLine."""
    pairing = a = b = None
    for f in forms:
        u, v = sorted(f)
        e = (f[v] - f[u]) % 3
        if u == 0:
            pairing, a = v, e
        else:
            b = e
    if pairing is None or b is None:
        raise AssertionError(f"forms {forms} do not define a Fermat line")
    return FermatLine(pairing, a, b)


# ---------------------------------------------------------------------------
# Automorphisms


@dataclass(frozen=True, order=True)
class FermatAut:
    sigma: tuple[int, int, int, int]
    d: tuple[int, int, int]

    @classmethod
    def from_monomial(cls, sigma, dd) -> FermatAut:
        """From a monomial matrix with diagonal exponents ``dd`` (length 4), modulo scalars."""
        dd = [x % 3 for x in dd]
        return cls(tuple(sigma), tuple((x - dd[0]) % 3 for x in dd[1:]))

    @classmethod
    def diagonal(cls, a: int, b: int, c: int) -> FermatAut:
        return cls((0, 1, 2, 3), (a % 3, b % 3, c % 3))

    @classmethod
    def coordinate_cycle(cls, *cycle: int) -> FermatAut:
        """Permutation of coordinates, 1-based cycle as written for (x, y, z, t)."""
        sigma = list(range(4))
        for k, x in enumerate(cycle):
            sigma[x - 1] = cycle[(k + 1) % len(cycle)] - 1
        return cls(tuple(sigma), (0, 0, 0))

    @property
    def dd(self) -> tuple[int, int, int, int]:
        return (0, *self.d)

    def matrix(self) -> list[list[CycNum]]:
        M = [[ZERO] * 4 for _ in range(4)]
        for i in range(4):
            j = self.sigma[i]
            M[j][i] = W(self.dd[j])
        return M

    def __mul__(self, other: FermatAut) -> FermatAut:
        sg, so = self.sigma, other.sigma
        sigma = tuple(sg[so[i]] for i in range(4))
        inv_g = [0] * 4
        for i, j in enumerate(sg):
            inv_g[j] = i
        dd = [self.dd[j] + other.dd[inv_g[j]] for j in range(4)]
        return FermatAut.from_monomial(sigma, dd)

    def is_identity(self) -> bool:
        return self.sigma == (0, 1, 2, 3) and self.d == (0, 0, 0)

    def order(self) -> int:
        k, p = 1, self
        while not p.is_identity():
            p, k = p * self, k + 1
        return k

    def apply_to_line(self, line: FermatLine) -> FermatLine:
        # a form with exponents f_i becomes f o M^-1, with exponent f_i - dd[sigma(i)] at sigma(i)
        out = []
        for f in _line_exponent_forms(line):
            out.append({self.sigma[i]: (e - self.dd[self.sigma[i]]) % 3 for i, e in f.items()})
        return _line_from_forms(out)

    def __repr__(self):
        return f"FermatAut(sigma={self.sigma}, d={self.d})"


def _line_exponent_forms(line: FermatLine) -> list[dict[int, int]]:
    m, n = line.rest
    return [{0: 0, line.pairing: line.a}, {m: 0, n: line.b}]


def _cubic_after_substitution(M) -> dict[tuple[int, ...], CycNum]:
    """Coefficients of sum_i (M x)_i^3 as a polynomial in x_0..x_3."""
    poly: dict[tuple[int, ...], CycNum] = {}
    for row in M:
        terms = [(j, c) for j, c in enumerate(row) if c]
        for (j1, c1), (j2, c2), (j3, c3) in itertools.product(terms, repeat=3):
            exps = [0, 0, 0, 0]
            for j in (j1, j2, j3):
                exps[j] += 1
            key = tuple(exps)
            poly[key] = poly.get(key, ZERO) + c1 * c2 * c3
    return {k: v for k, v in poly.items() if v}


def preserves_equation(g: FermatAut) -> bool:
    poly = _cubic_after_substitution(g.matrix())
    cubes = {tuple(3 if i == j else 0 for i in range(4)) for j in range(4)}
    if set(poly) != cubes:
        return False
    return len(set(poly.values())) == 1


@cache
def fermat_aut_group() -> tuple[FermatAut, ...]:
    auts = tuple(sorted(FermatAut(s, d) for s in itertools.permutations(range(4))
                        for d in itertools.product(range(3), repeat=3)))
    if not all(preserves_equation(g) for g in auts):
        raise AssertionError("an automorphism does not preserve the Fermat equation")
    return auts


def fermat_line_perm(g: FermatAut) -> pg.Perm:
    lines = fermat_lines()
    index = {ln: k for k, ln in enumerate(lines)}
    return pg.Perm(index[g.apply_to_line(ln)] for ln in lines)


# ---------------------------------------------------------------------------
# Eigenvalues of monomial matrices, as exponents of a primitive 36th root of unity

_MU = 36
_W_EXP = _MU // 3
_A2_PATTERN = (0, 0, _W_EXP, _W_EXP)
_A2A2_PATTERN = (0, 0, _W_EXP, 2 * _W_EXP)


def monomial_eigen_exponents(sigma, dd) -> tuple[int, ...]:
    """Eigenvalues of ``D * P_sigma`` as sorted exponents mod 36.

    A k-cycle whose entries multiply to w^s contributes the k-th roots of w^s.
    """
    seen, out = set(), []
    for start in range(4):
        if start in seen:
            continue
        cyc, j = [], start
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = sigma[j]
        k = len(cyc)
        s = sum(dd[j] for j in cyc) * _W_EXP
        # solve k*e = s (mod 36)
        out.extend((s + _MU * m) // k % _MU for m in range(k))
    return tuple(sorted(out))


def _matches_up_to_scalar(exps: tuple[int, ...], pattern: tuple[int, ...]) -> bool:
    return any(tuple(sorted((e + t) % _MU for e in exps)) == pattern for t in range(_MU))


def eigen_type(g: FermatAut) -> CarterType:
    exps = monomial_eigen_exponents(g.sigma, g.dd)
    if _matches_up_to_scalar(exps, _A2_PATTERN):
        return CarterType.A2
    if _matches_up_to_scalar(exps, _A2A2_PATTERN):
        return CarterType.A2xA2
    return CarterType.Other


def a2_census() -> list[FermatAut]:
    found = [g for g in fermat_aut_group() if eigen_type(g) is CarterType.A2]
    if len(found) != 6:
        raise AssertionError(f"expected 6 elements of type A2, found {len(found)}")
    for g, h in itertools.combinations(found, 2):
        if not projectively_equal(mat_mul(g.matrix(), h.matrix()), mat_mul(h.matrix(), g.matrix())):
            raise AssertionError(f"{g} and {h} do not commute")
    return found


# ---------------------------------------------------------------------------
# Marking: Fermat lines <-> abstract line classes


@dataclass(frozen=True)
class Marking:
    fermat_to_lattice: tuple[int, ...]
    sixer: tuple[int, ...]   # Fermat line indices sent to E1..E6

    @property
    def lattice_to_fermat(self) -> tuple[int, ...]:
        inv = [0] * 27
        for f, m in enumerate(self.fermat_to_lattice):
            inv[m] = f
        return tuple(inv)

    def preserves_incidence(self) -> bool:
        A, B = fermat_incidence(), intersection_matrix()
        m = self.fermat_to_lattice
        return all(A[i, j] == B[m[i], m[j]] for i, j in itertools.combinations(range(27), 2))


def _classify(sixer: tuple[int, ...]) -> Marking | None:
    A = fermat_incidence()
    mapping: dict[int, int] = {f: k for k, f in enumerate(sixer)}
    for f in range(27):
        if f in mapping:
            continue
        hit = tuple(k + 1 for k in range(6) if A[f, sixer[k]])
        if len(hit) == 5:
            missing = next(i for i in range(1, 7) if i not in hit)
            mapping[f] = line_index(("Q", missing))
        elif len(hit) == 2:
            mapping[f] = line_index(("L", *hit))
        else:
            return None
    if sorted(mapping.values()) != list(range(27)):
        return None
    m = Marking(tuple(mapping[f] for f in range(27)), sixer)
    return m if m.preserves_incidence() else None


def _skew(A, i, chosen) -> bool:
    return all(A[i, c] == 0 and i != c for c in chosen)


def find_marking(adapted_to: FermatAut | None = None) -> Marking:
    """An incidence-preserving bijection to the abstract 27 lines.

    With ``adapted_to`` (an order-3 automorphism) the sixer is chosen so the
    automorphism fixes E1, E2, E3 and sends E4 -> E5 -> E6 -> E4.
    """
    A = fermat_incidence()
    if adapted_to is None:
        def search(chosen: list[int], start: int):
            if len(chosen) == 6:
                return _classify(tuple(chosen))
            for k in range(start, 27):
                if _skew(A, k, chosen):
                    found = search(chosen + [k], k + 1)
                    if found:
                        return found
            return None
        result = search([], 0)
    else:
        s = fermat_line_perm(adapted_to)
        fixed = [i for i in range(27) if s(i) == i]
        result = None
        for triple in itertools.combinations(fixed, 3):
            if not all(A[i, j] == 0 for i, j in itertools.combinations(triple, 2)):
                continue
            for x in range(27):
                orbit = [x, s(x), s(s(x))]
                if len(set(orbit)) != 3 or s(orbit[2]) != x:
                    continue
                if all(_skew(A, o, list(triple)) for o in orbit) and \
                        all(A[i, j] == 0 for i, j in itertools.combinations(orbit, 2)):
                    result = _classify(tuple(triple) + tuple(orbit))
                    if result:
                        break
            if result:
                break
    if result is None:
        raise MarkingError("no incidence-preserving marking found")
    return result


def embed_aut(m: Marking) -> dict[FermatAut, WeylElem]:
    to_lat, to_fer = m.fermat_to_lattice, m.lattice_to_fermat
    out = {}
    for g in fermat_aut_group():
        p = fermat_line_perm(g)
        out[g] = WeylElem(pg.Perm(to_lat[p(to_fer[k])] for k in range(27)))
    return out


def embedded_group(m: Marking) -> pg.PermGroup:
    images = embed_aut(m)
    arr = np.array([w.perm.images for w in images.values()], dtype=np.int16)
    H = pg.PermGroup(27, np.unique(arr, axis=0))
    if H.order != len(images):
        raise AssertionError("the embedding is not injective")
    return H


# ---------------------------------------------------------------------------
# Plane model


class ProjPoint3:
    """A point of the projective plane over Q(w)."""

    __slots__ = ("coords",)

    def __init__(self, *coords):
        cs = tuple(CycNum.coerce(c) for c in coords)
        if len(cs) != 3 or not any(cs):
            raise ValueError("need three coordinates, not all zero")
        self.coords = cs

    def normalized(self) -> tuple[CycNum, ...]:
        lead = next(c for c in self.coords if c)
        return tuple(c / lead for c in self.coords)

    def __eq__(self, other):
        if not isinstance(other, ProjPoint3):
            return NotImplemented
        return self.normalized() == other.normalized()

    def __hash__(self):
        return hash(self.normalized())

    def transform(self, M) -> ProjPoint3:
        return ProjPoint3(*(sum((M[i][j] * self.coords[j] for j in range(3)), ZERO) for i in range(3)))

    def __repr__(self):
        return "[" + ":".join(map(repr, self.coords)) + "]"


def plane_marked_points() -> tuple[ProjPoint3, ...]:
    w, w2 = W(1), W(2)
    return (
        ProjPoint3(1, 1, 1), ProjPoint3(w, 1, w2), ProjPoint3(w2, 1, w),
        ProjPoint3(1, 0, 0), ProjPoint3(0, 1, 0), ProjPoint3(0, 0, 1),
    )


def veronese_row(p: ProjPoint3) -> list[CycNum]:
    x, y, z = p.coords
    return [x * x, y * y, z * z, x * y, x * z, y * z]


@dataclass
class GeneralPositionReport:
    triple_determinants: dict[tuple[int, int, int], CycNum]
    conic_determinant: CycNum

    @property
    def ok(self) -> bool:
        return all(self.triple_determinants.values()) and bool(self.conic_determinant)


def general_position(points=None) -> GeneralPositionReport:
    pts = plane_marked_points() if points is None else points
    dets = {t: det([pts[i].coords for i in t]) for t in itertools.combinations(range(len(pts)), 3)}
    return GeneralPositionReport(dets, det([veronese_row(p) for p in pts]))


def plane_b() -> list[list[CycNum]]:
    """Cyclic coordinate shift e_1 -> e_2 -> e_3 -> e_1."""
    M = [[ZERO] * 3 for _ in range(3)]
    for i in range(3):
        M[(i + 1) % 3][i] = ONE
    return M


def plane_c() -> list[list[CycNum]]:
    return [[W(1), ZERO, ZERO], [ZERO, ONE, ZERO], [ZERO, ZERO, W(2)]]


def mu3_eigenvalues(M) -> list[CycNum]:
    """Eigenvalues of ``M`` when they all lie in {1, w, w^2} (asserted)."""
    p = char_poly(M)
    roots = []
    rest = p
    for k in range(3):
        lam = W(k)
        while rest.degree > 0 and rest(lam) == 0:
            rest, _ = rest.divmod(PolyCyc([-lam, 1]))
            roots.append(lam)
    if rest.degree != 0:
        raise ValueError("eigenvalues are not all cube roots of unity")
    return roots


def fixed_points(M) -> list[list[list[CycNum]]]:
    """Bases of the eigenspaces of ``M``; their projectivisations are the fixed points."""
    n = len(M)
    spaces = []
    for lam in sorted(set(mu3_eigenvalues(M)), key=lambda c: (c.a, c.b)):
        shifted = [[M[i][j] - (lam if i == j else ZERO) for j in range(n)] for i in range(n)]
        spaces.append(nullspace(shifted))
    return spaces


def common_fixed_points(X, Y) -> list[list[CycNum]]:
    """Common eigenvectors of ``X`` and ``Y`` (one basis vector per shared line or more)."""
    n = len(X)
    common = []
    for lx in set(mu3_eigenvalues(X)):
        for ly in set(mu3_eigenvalues(Y)):
            rows = [[X[i][j] - (lx if i == j else ZERO) for j in range(n)] for i in range(n)]
            rows += [[Y[i][j] - (ly if i == j else ZERO) for j in range(n)] for i in range(n)]
            common.extend(nullspace(rows))
    return common


def point_perm(M, points) -> pg.Perm:
    pts = list(points)
    return pg.Perm(pts.index(p.transform(M)) for p in pts)


@dataclass
class PlaneActionReport:
    b_on_points: tuple[int, ...]
    c_on_points: tuple[int, ...]
    group_order: int
    point_group_order: int
    b_fixed: list
    c_fixed: list
    common_fixed: list
    commutator_exponent: int | None

    @property
    def ok(self) -> bool:
        return (self.b_on_points == (0, 1, 2, 4, 5, 3)
                and self.c_on_points == (1, 2, 0, 3, 4, 5)
                and self.group_order == 9 and self.point_group_order == 9
                and not self.common_fixed
                and self.commutator_exponent in (1, 2))


def plane_actions_check() -> PlaneActionReport:
    pts = plane_marked_points()
    B, C = plane_b(), plane_c()
    comm = mat_mul(mat_mul(B, C), mat_mul(mat_inverse(B), mat_inverse(C)))
    k = next((e for e in range(3) if comm == [[W(e) if i == j else ZERO for j in range(3)]
                                              for i in range(3)]), None)
    pb, pc = point_perm(B, pts), point_perm(C, pts)
    b_fixed = [ProjPoint3(*v) for space in fixed_points(B) for v in space]
    c_fixed = [ProjPoint3(*v) for space in fixed_points(C) for v in space]
    return PlaneActionReport(
        b_on_points=pb.images,
        c_on_points=pc.images,
        group_order=len(projective_closure([B, C])),
        point_group_order=pg.closure([pb, pc]).order,
        b_fixed=b_fixed,
        c_fixed=c_fixed,
        common_fixed=common_fixed_points(B, C),
        commutator_exponent=k,
    )


