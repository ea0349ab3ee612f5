"""Exact arithmetic over Q, the Eisenstein field Q(w) and pure cubic extensions Q(cbrt(alpha)).

Rationals are :class:`fractions.Fraction`.  Elements of Q(w) are stored in the
basis {1, w} with w^2 = -1 - w, so equality is coordinate equality.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rat = Fraction
Scalar = Union[int, Fraction, "CycNum"]


@dataclass(frozen=True, slots=True)
class CycNum:
    """The element ``a + b*w`` of Q(w), w a primitive cube root of unity."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @classmethod
    def coerce(cls, x: Scalar) -> CycNum:
        if isinstance(x, CycNum):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(Fraction(x), Fraction(0))
        raise TypeError(f"cannot coerce {type(x).__name__} to CycNum")

    @classmethod
    def omega_power(cls, k: int) -> CycNum:
        """w^k for any integer k."""
        return _OMEGA_POWERS[k % 3]

    def __add__(self, other):
        try:
            o = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        return CycNum(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return CycNum(-self.a, -self.b)

    def __sub__(self, other):
        try:
            o = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        return CycNum(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return CycNum.coerce(other) - self

    def __mul__(self, other):
        try:
            o = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        return cyc_mul(self, o)

    __rmul__ = __mul__

    def inverse(self) -> CycNum:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(w)")
        c = self.conjugate()
        return CycNum(c.a / n, c.b / n)

    def __truediv__(self, other):
        try:
            o = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return CycNum.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> CycNum:
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, CycNum):
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def conjugate(self) -> CycNum:
        # w -> w^2 = -1 - w
        return CycNum(self.a - self.b, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def __repr__(self):
        if self.b == 0:
            return f"CycNum({self.a})"
        return f"CycNum({self.a} + {self.b}w)"


ZERO = CycNum(0, 0)
ONE = CycNum(1, 0)
OMEGA = CycNum(0, 1)
_OMEGA_POWERS = (ONE, OMEGA, CycNum(-1, -1))


def cyc_mul(x: CycNum, y: CycNum) -> CycNum:
    # (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2, and w^2 = -1 - w
    bd = x.b * y.b
    return CycNum(x.a * y.a - bd, x.a * y.b + x.b * y.a - bd)


def cyc_is_rational(x: CycNum) -> bool:
    return x.b == 0


# ---------------------------------------------------------------------------
# Pure cubic extensions


@dataclass(frozen=True, slots=True)
class RadCubicNum:
    """``u + v*X + w*X^2`` in Q[X]/(X^3 - alpha).

    ``alpha`` is not required to be a non-cube; see :func:`is_rational_cube`.
    """

    alpha: Fraction
    u: Fraction = Fraction(0)
    v: Fraction = Fraction(0)
    w: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("alpha", "u", "v", "w"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.alpha == 0:
            raise ValueError("alpha must be nonzero")

    @property
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.u, self.v, self.w)

    def _check(self, other: RadCubicNum):
        if other.alpha != self.alpha:
            raise ValueError("elements of different extensions")

    def __add__(self, other: RadCubicNum) -> RadCubicNum:
        self._check(other)
        return RadCubicNum(self.alpha, self.u + other.u, self.v + other.v, self.w + other.w)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RadCubicNum(self.alpha, self.u * other, self.v * other, self.w * other)
        self._check(other)
        al = self.alpha
        p, q = self.coefficients, other.coefficients
        prod = [Fraction(0)] * 5
        for i in range(3):
            for j in range(3):
                prod[i + j] += p[i] * q[j]
        # X^3 = alpha, X^4 = alpha X
        return RadCubicNum(al, prod[0] + al * prod[3], prod[1] + al * prod[4], prod[2])

    __rmul__ = __mul__

    def is_rational(self) -> bool:
        return self.v == 0 and self.w == 0

    def basis_element(self, k: int) -> RadCubicNum:
        coeffs = [Fraction(0)] * 3
        coeffs[k] = Fraction(1)
        return RadCubicNum(self.alpha, *coeffs)

    def multiplication_matrix(self) -> list[list[Fraction]]:
        """Matrix of ``z -> self*z`` in the basis 1, X, X^2 (columns are images)."""
        cols = [(self * self.basis_element(k)).coefficients for k in range(3)]
        return [[cols[j][i] for j in range(3)] for i in range(3)]


def rad_cube(y: RadCubicNum) -> RadCubicNum:
    return y * y * y


def rad_trace(y: RadCubicNum) -> Fraction:
    """Trace of multiplication by ``y`` on the three-dimensional extension."""
    m = y.multiplication_matrix()
    return m[0][0] + m[1][1] + m[2][2]


def integer_cube_root(n: int) -> int | None:
    """The integer ``r`` with ``r**3 == n``, or None."""
    if n < 0:
        r = integer_cube_root(-n)
        return None if r is None else -r
    lo, hi = 0, 1
    while hi ** 3 < n:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** 3 < n:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo ** 3 == n else None


def is_rational_cube(alpha: Fraction) -> bool:
    alpha = Fraction(alpha)
    return (integer_cube_root(alpha.numerator) is not None
            and integer_cube_root(alpha.denominator) is not None)


# ---------------------------------------------------------------------------
# Polynomials and small matrices over Q(w)


class PolyCyc:
    """Polynomial with CycNum coefficients, lowest degree first."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Sequence[Scalar]):
        coeffs = [CycNum.coerce(c) for c in coefficients]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coefficients: tuple[CycNum, ...] = tuple(coeffs)

    @classmethod
    def from_roots(cls, roots: Sequence[Scalar]) -> PolyCyc:
        p = cls([1])
        for r in roots:
            p = p * cls([-CycNum.coerce(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_monic(self) -> bool:
        return bool(self.coefficients) and self.coefficients[-1] == ONE

    def __call__(self, x: Scalar) -> CycNum:
        acc = ZERO
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other: PolyCyc) -> PolyCyc:
        n = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (ZERO,) * (n - len(self.coefficients))
        b = other.coefficients + (ZERO,) * (n - len(other.coefficients))
        return PolyCyc([x + y for x, y in zip(a, b)])

    def __mul__(self, other: PolyCyc) -> PolyCyc:
        if not self.coefficients or not other.coefficients:
            return PolyCyc([])
        out = [ZERO] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, x in enumerate(self.coefficients):
            for j, y in enumerate(other.coefficients):
                out[i + j] = out[i + j] + x * y
        return PolyCyc(out)

    def __pow__(self, k: int) -> PolyCyc:
        out = PolyCyc([1])
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other: PolyCyc) -> tuple[PolyCyc, PolyCyc]:
        if not other.coefficients:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coefficients)
        lead = other.coefficients[-1].inverse()
        dq = len(rem) - len(other.coefficients)
        quo = [ZERO] * max(dq + 1, 0)
        for k in range(dq, -1, -1):
            c = rem[k + len(other.coefficients) - 1] * lead
            quo[k] = c
            for j, oc in enumerate(other.coefficients):
                rem[k + j] = rem[k + j] - c * oc
        return PolyCyc(quo), PolyCyc(rem)

    def __eq__(self, other):
        if not isinstance(other, PolyCyc):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"PolyCyc({list(self.coefficients)!r})"


Matrix = Sequence[Sequence[Scalar]]


def as_cyc_matrix(matrix: Matrix) -> list[list[CycNum]]:
    rows = [[CycNum.coerce(x) for x in row] for row in matrix]
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("matrix must be square")
    return rows


def mat_mul(x: Matrix, y: Matrix) -> list[list[CycNum]]:
    n, m, p = len(x), len(y), len(y[0])
    return [[sum((CycNum.coerce(x[i][k]) * y[k][j] for k in range(m)), ZERO)
             for j in range(p)] for i in range(n)]


def identity(n: int) -> list[list[CycNum]]:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def char_poly(matrix: Matrix) -> PolyCyc:
    """det(t*I - A) by the Faddeev-LeVerrier recursion."""
    a = as_cyc_matrix(matrix)
    n = len(a)
    if n > 7:
        raise ValueError("char_poly supports n <= 7")
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    m = [[ZERO] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I;  c_{n-k} = -tr(A M_k) / k
        m = mat_mul(a, m)
        for i in range(n):
            m[i][i] = m[i][i] + coeffs[n - k + 1]
        am = mat_mul(a, m)
        tr = sum((am[i][i] for i in range(n)), ZERO)
        coeffs[n - k] = -tr / k
    return PolyCyc(coeffs)


def row_reduce(matrix: Sequence[Sequence[Scalar]]) -> tuple[list[list[CycNum]], list[int]]:
    """Reduced row echelon form and pivot columns (works for any shape)."""
    rows = [[CycNum.coerce(x) for x in row] for row in matrix]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(matrix: Sequence[Sequence[Scalar]]) -> int:
    return len(row_reduce(matrix)[1])


def nullspace(matrix: Sequence[Sequence[Scalar]]) -> list[list[CycNum]]:
    """A basis of {v : A v = 0}."""
    rref, pivots = row_reduce(matrix)
    ncols = len(matrix[0])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -rref[i][f]
        basis.append(v)
    return basis


def det(matrix: Matrix) -> CycNum:
    """Determinant by Gaussian elimination over Q(w)."""
    a = as_cyc_matrix(matrix)
    n = len(a)
    result = ONE
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return ZERO
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            result = -result
        result = result * a[c][c]
        inv = a[c][c].inverse()
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return result


def mat_inverse(M) -> list[list[CycNum]]:
    n = len(M)
    aug = [list(M[i]) + identity(n)[i] for i in range(n)]
    rref, pivots = row_reduce(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in rref]


def projectively_equal(X, Y) -> bool:
    """``X = lambda * Y`` for some nonzero scalar."""
    lam = None
    for rx, ry in zip(X, Y):
        for x, y in zip(rx, ry):
            if bool(x) != bool(y):
                return False
            if x:
                q = x / y
                if lam is None:
                    lam = q
                elif q != lam:
                    return False
    return lam is not None


def projective_closure(mats) -> list[list[list[CycNum]]]:
    """Group generated by invertible matrices, modulo scalars."""
    def key(M):
        lead = next(x for row in M for x in row if x)
        return tuple(x / lead for row in M for x in row)

    elems = {key(identity(len(mats[0]))): identity(len(mats[0]))}
    frontier = list(elems.values())
    while frontier:
        nxt = []
        for X in frontier:
            for G in mats:
                Y = mat_mul(G, X)
                k = key(Y)
                if k not in elems:
                    elems[k] = Y
                    nxt.append(Y)
        frontier = nxt
    return list(elems.values())
