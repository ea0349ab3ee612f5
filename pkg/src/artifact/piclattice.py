"""The Picard lattice of a smooth cubic surface and its 27 lines.

Classes are written ``l*L + sum(e_i * E_i)`` with pairing ``L^2 = 1``,
``E_i^2 = -1``.  Line indexing is fixed: E1..E6 -> 0..5, Q1..Q6 -> 6..11 and
L_ij (i < j, lexicographic) -> 12..26.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

import numpy as np


class NotASixerError(ValueError):
    pass


class TransversalError(RuntimeError):
    """A five-line configuration did not have exactly one transversal."""


@dataclass(frozen=True, slots=True)
class PicVec:
    l: int
    e: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "e", tuple(int(x) for x in self.e))

    @classmethod
    def from_array(cls, arr) -> PicVec:
        return cls(int(arr[0]), tuple(int(x) for x in arr[1:]))

    @property
    def rank(self) -> int:
        return 1 + len(self.e)

    def as_array(self) -> np.ndarray:
        return np.array((self.l, *self.e), dtype=np.int64)

    def __add__(self, other: PicVec) -> PicVec:
        return PicVec(self.l + other.l, tuple(a + b for a, b in zip(self.e, other.e)))

    def __sub__(self, other: PicVec) -> PicVec:
        return PicVec(self.l - other.l, tuple(a - b for a, b in zip(self.e, other.e)))

    def __neg__(self) -> PicVec:
        return PicVec(-self.l, tuple(-a for a in self.e))

    def __rmul__(self, k: int) -> PicVec:
        return PicVec(k * self.l, tuple(k * a for a in self.e))

    def __repr__(self):
        return f"PicVec({self.l}; {', '.join(map(str, self.e))})"


def pairing(u: PicVec, v: PicVec) -> int:
    if len(u.e) != len(v.e):
        raise ValueError("vectors from lattices of different rank")
    return u.l * v.l - sum(a * b for a, b in zip(u.e, v.e))


def gram_matrix(n: int = 6) -> np.ndarray:
    return np.diag([1] + [-1] * n).astype(np.int64)


def canonical_class(n: int = 6) -> PicVec:
    return PicVec(-3, (1,) * n)


def hyperplane(n: int = 6) -> PicVec:
    return PicVec(1, (0,) * n)


def exceptional(i: int, n: int = 6) -> PicVec:
    """E_i, 1-based."""
    e = [0] * n
    e[i - 1] = 1
    return PicVec(0, tuple(e))


@dataclass(frozen=True, slots=True)
class LineClass:
    tag: tuple  # ("E", i) | ("Q", i) | ("L", i, j), 1-based
    vector: PicVec

    @property
    def name(self) -> str:
        if self.tag[0] == "L":
            return f"L{self.tag[1]}{self.tag[2]}"
        return f"{self.tag[0]}{self.tag[1]}"

    def __repr__(self):
        return self.name


def _tag_vector(tag: tuple) -> PicVec:
    L = hyperplane()
    if tag[0] == "E":
        return exceptional(tag[1])
    if tag[0] == "Q":
        v = 2 * L
        for j in range(1, 7):
            if j != tag[1]:
                v = v - exceptional(j)
        return v
    _, i, j = tag
    return L - exceptional(i) - exceptional(j)


def line_tags() -> list[tuple]:
    tags: list[tuple] = [("E", i) for i in range(1, 7)]
    tags += [("Q", i) for i in range(1, 7)]
    tags += [("L", i, j) for i, j in itertools.combinations(range(1, 7), 2)]
    return tags


@cache
def lines27() -> tuple[LineClass, ...]:
    lines = tuple(LineClass(t, _tag_vector(t)) for t in line_tags())
    solutions = set(exceptional_curve_solutions())
    if {ln.vector for ln in lines} != solutions:
        raise AssertionError("tag convention disagrees with the (-1)-curve solution set")
    return lines


def exceptional_curve_solutions(bound: int = 3) -> list[PicVec]:
    """All ``v`` with ``v^2 = -1`` and ``v.K = -1`` with coefficients bounded by ``bound``.

    The pairing with the ample class ``-K`` is 1, which forces ``0 <= l <= 2``
    and ``|e_i| <= 1``; ``bound = 3`` leaves slack around that.
    """
    K = canonical_class()
    out = []
    rng = range(-bound, bound + 1)
    for l in rng:
        for e in itertools.product(range(-bound + 1, bound), repeat=6):
            v = PicVec(l, e)
            if pairing(v, K) == -1 and pairing(v, v) == -1:
                out.append(v)
    return sorted(out, key=lambda v: (v.l, v.e))


def line_index(name_or_tag) -> int:
    """Index of a line given as ``"Q3"``, ``"L45"`` or a tag tuple."""
    if isinstance(name_or_tag, str):
        s = name_or_tag
        tag = ("L", int(s[1]), int(s[2])) if s[0] == "L" else (s[0], int(s[1]))
    else:
        tag = tuple(name_or_tag)
    return _TAG_INDEX[tag]


_TAG_INDEX = {t: k for k, t in enumerate(line_tags())}


@cache
def line_vectors() -> np.ndarray:
    """``(27, 7)`` integer array of line classes in index order."""
    return np.array([ln.vector.as_array() for ln in lines27()], dtype=np.int64)


@cache
def vector_to_line() -> dict[tuple[int, ...], int]:
    return {tuple(int(x) for x in row): k for k, row in enumerate(line_vectors())}


@cache
def intersection_matrix() -> np.ndarray:
    V = line_vectors()
    return V @ gram_matrix() @ V.T


@dataclass(frozen=True)
class IncidenceGraph:
    adjacency: frozenset[frozenset[int]]

    def neighbours(self, i: int) -> set[int]:
        return {j for e in self.adjacency if i in e for j in e if j != i}

    def degrees(self) -> list[int]:
        deg = [0] * 27
        for e in self.adjacency:
            for i in e:
                deg[i] += 1
        return deg


@cache
def incidence_graph() -> IncidenceGraph:
    M = intersection_matrix()
    edges = frozenset(frozenset((i, j)) for i in range(27) for j in range(i + 1, 27) if M[i, j] == 1)
    return IncidenceGraph(edges)


def _indices(lines) -> list[int]:
    out = []
    for x in lines:
        if isinstance(x, LineClass):
            out.append(line_index(x.tag))
        elif isinstance(x, str):
            out.append(line_index(x))
        else:
            out.append(int(x))
    return out


def is_sixer(lines) -> bool:
    idx = _indices(lines)
    if len(set(idx)) != 6:
        raise ValueError("a sixer needs 6 distinct lines")
    M = intersection_matrix()
    return all(M[i, j] == 0 for i, j in itertools.combinations(idx, 2))


@cache
def sixers() -> tuple[tuple[int, ...], ...]:
    """All unordered sixers, by clique search in the skewness graph."""
    M = intersection_matrix()
    out = []

    def extend(chosen: list[int], start: int):
        if len(chosen) == 6:
            out.append(tuple(chosen))
            return
        for k in range(start, 27):
            if all(M[k, c] == 0 for c in chosen):
                chosen.append(k)
                extend(chosen, k + 1)
                chosen.pop()

    extend([], 0)
    return tuple(out)


def unique_transversal(five) -> LineClass:
    idx = _indices(five)
    if len(set(idx)) != 5:
        raise ValueError("need five distinct lines")
    M = intersection_matrix()
    if any(M[i, j] != 0 for i, j in itertools.combinations(idx, 2)):
        raise ValueError("the five lines must be pairwise skew")
    hits = [k for k in range(27) if all(M[k, i] == 1 for i in idx)]
    if len(hits) != 1:
        raise TransversalError(f"{len(hits)} transversals to {idx}")
    return lines27()[hits[0]]


def extend_to_weyl(images) -> np.ndarray:
    """The lattice map fixing K and sending E_i to ``images[i-1]``.

    ``images`` is a sequence of six lines (LineClass, names or indices) or a
    mapping from 1..6.  Returns a 7x7 integer matrix acting on column vectors.
    """
    if isinstance(images, dict):
        images = [images[i] for i in range(1, 7)]
    idx = _indices(images)
    if len(idx) != 6 or len(set(idx)) != 6 or not is_sixer(idx):
        raise NotASixerError(f"images {idx} are not six pairwise skew lines")
    V = line_vectors()
    K = canonical_class().as_array()
    img_E = V[idx]                              # rows: images of E_1..E_6
    three_L = -K + img_E.sum(axis=0)            # L = (-K + sum E_i)/3
    if (three_L % 3).any():
        raise AssertionError("image of L is not integral")
    M = np.zeros((7, 7), dtype=np.int64)
    M[:, 0] = three_L // 3
    M[:, 1:] = img_E.T
    verify_lattice_automorphism(M)
    return M


def verify_lattice_automorphism(M: np.ndarray) -> None:
    """Raise unless ``M`` is unimodular, fixes K and preserves the pairing."""
    J = gram_matrix(M.shape[0] - 1)
    K = canonical_class(M.shape[0] - 1).as_array()
    if not np.array_equal(M.T @ J @ M, J):
        raise AssertionError("map does not preserve the pairing")
    if not np.array_equal(M @ K, K):
        raise AssertionError("map does not fix K")
    if _exact_det(M) not in (1, -1):
        raise AssertionError("map is not invertible over the integers")


def _exact_det(M: np.ndarray) -> int:
    a = [[Fraction(int(x)) for x in row] for row in M]
    n, det = len(a), Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return int(det)


def matrix_to_line_perm(M: np.ndarray) -> tuple[int, ...]:
    """The permutation of line indices induced by a lattice automorphism."""
    images = (M @ line_vectors().T).T
    lookup = vector_to_line()
    return tuple(lookup[tuple(int(x) for x in row)] for row in images)
