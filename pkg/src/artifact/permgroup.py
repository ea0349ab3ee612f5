"""Finite permutation groups by full enumeration.

Elements are stored row-wise in an integer array sorted lexicographically, so
two closures of the same group give identical element sequences no matter how
the generators were listed.  Composition convention: ``(p * q)(i) = p(q(i))``.
"""
from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from functools import cached_property

import numpy as np

DEFAULT_MAX_ORDER = 10**6


class GroupTooLarge(RuntimeError):
    """Closure exceeded the configured element budget."""


class NotInGroupError(ValueError):
    pass


class NoNormalSylowError(ValueError):
    """The 3-elements of a group do not form a subgroup."""


class Perm:
    """A bijection of ``range(n)`` given by its image list."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        imgs = tuple(int(i) for i in images)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError(f"not a permutation: {imgs}")
        self.images = imgs
        self._hash = hash(imgs)

    @classmethod
    def identity(cls, n: int) -> Perm:
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> Perm:
        imgs = list(range(n))
        for cyc in cycles:
            for k, x in enumerate(cyc):
                imgs[x] = cyc[(k + 1) % len(cyc)]
        return cls(imgs)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: Perm) -> Perm:
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        p = self.images
        return Perm(p[i] for i in other.images)

    def inverse(self) -> Perm:
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(inv)

    def __pow__(self, k: int) -> Perm:
        if k < 0:
            return self.inverse() ** (-k)
        out = Perm.identity(self.degree)
        for _ in range(k):
            out = out * self
        return out

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(self.degree):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles()))

    def __eq__(self, other):
        if not isinstance(other, Perm):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other: Perm):
        return self.images < other.images

    def __hash__(self):
        return self._hash

    def __repr__(self):
        cyc = [c for c in self.cycles() if len(c) > 1]
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"
        return f"Perm{body}[n={self.degree}]"


def _as_array(perms: Sequence[Perm], n: int) -> np.ndarray:
    if not perms:
        return np.empty((0, n), dtype=np.int16)
    return np.array([p.images for p in perms], dtype=np.int16)


def _sort_rows(arr: np.ndarray) -> np.ndarray:
    order = np.lexsort(arr.T[::-1])
    return arr[order]


def _row_keys(arr: np.ndarray) -> np.ndarray:
    """One opaque fixed-width key per row, usable with np.unique / np.isin."""
    arr = np.ascontiguousarray(arr, dtype=np.int16)
    return arr.view(np.dtype((np.void, arr.dtype.itemsize * arr.shape[1]))).ravel()


def _rows_from_keys(keys: np.ndarray, degree: int) -> np.ndarray:
    return np.frombuffer(keys.tobytes(), dtype=np.int16).reshape(-1, degree)


def _inverse_rows(arr: np.ndarray) -> np.ndarray:
    return np.argsort(arr, axis=1).astype(arr.dtype)


class PermGroup:
    """A fully enumerated permutation group."""

    def __init__(self, degree: int, elements: np.ndarray, generators: Sequence[Perm] | None = None):
        self.degree = degree
        self._array = _sort_rows(np.asarray(elements, dtype=np.int16).reshape(-1, degree))
        self._array.setflags(write=False)
        self._generators = None if generators is None else tuple(generators)

    # -- basic data ------------------------------------------------------
    @property
    def array(self) -> np.ndarray:
        """Elements as a read-only ``(order, degree)`` array in canonical order."""
        return self._array

    @cached_property
    def elements(self) -> tuple[Perm, ...]:
        return tuple(Perm(row) for row in self._array)

    @cached_property
    def _keys(self) -> np.ndarray:
        return np.sort(_row_keys(self._array))

    def contains_rows(self, rows: np.ndarray) -> np.ndarray:
        """Vectorised membership test for a stack of image rows."""
        return np.isin(_row_keys(rows), self._keys)

    @property
    def generators(self) -> tuple[Perm, ...]:
        if self._generators is None:
            self._generators = self._greedy_generators()
        return self._generators

    def _greedy_generators(self) -> tuple[Perm, ...]:
        gens: list[Perm] = []
        current = trivial_group(self.degree)
        for row in self._array:
            if len(current) == len(self):
                break
            if not current.contains_rows(row[None, :])[0]:
                gens.append(Perm(row))
                current = closure(gens, degree=self.degree)
        return tuple(gens)

    @property
    def order(self) -> int:
        return self._array.shape[0]

    def __len__(self) -> int:
        return self.order

    def __contains__(self, g: Perm) -> bool:
        if g.degree != self.degree:
            return False
        return bool(self.contains_rows(np.asarray(g.images, dtype=np.int16)[None, :])[0])

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.degree == other.degree and np.array_equal(self._array, other._array)

    def __hash__(self):
        return hash((self.degree, self._array.tobytes()))

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order})"

    def issubgroup(self, other: PermGroup) -> bool:
        return self.degree == other.degree and bool(other.contains_rows(self._array).all())

    def is_abelian(self) -> bool:
        gens = [np.asarray(g.images) for g in self.generators]
        return all(np.array_equal(a[b], b[a]) for a in gens for b in gens)

    def element_orders(self) -> np.ndarray:
        """Order of every element, aligned with :attr:`array`."""
        arr = self._array
        ident = np.arange(self.degree, dtype=arr.dtype)
        orders = np.zeros(len(arr), dtype=np.int64)
        power = arr.copy()
        k = 1
        while (orders == 0).any():
            done = (orders == 0) & (power == ident).all(axis=1)
            orders[done] = k
            power = np.take_along_axis(arr, power, axis=1)
            k += 1
        return orders

    def _require(self, g: Perm):
        if g not in self:
            raise NotInGroupError(f"{g!r} is not an element of {self!r}")


def trivial_group(degree: int) -> PermGroup:
    return PermGroup(degree, np.arange(degree, dtype=np.int16)[None, :], generators=())


def closure(generators: Sequence[Perm], degree: int | None = None,
            max_order: int = DEFAULT_MAX_ORDER) -> PermGroup:
    """Enumerate the group generated by ``generators`` by breadth-first saturation."""
    generators = list(generators)
    if degree is None:
        if not generators:
            raise ValueError("degree required for an empty generator list")
        degree = generators[0].degree
    if any(g.degree != degree for g in generators):
        raise ValueError("generators must share one degree")
    gens = _as_array(generators, degree)
    ident = np.arange(degree, dtype=np.int16)[None, :]
    seen = _row_keys(ident)
    frontier = ident
    while len(frontier):
        # left-multiply every frontier element by every generator
        cand = np.unique(_row_keys(gens[:, frontier].reshape(-1, degree)))
        fresh = cand[~np.isin(cand, seen)]
        seen = np.union1d(seen, fresh)
        if len(seen) > max_order:
            raise GroupTooLarge(f"closure exceeded {max_order} elements")
        frontier = _rows_from_keys(fresh, degree)
    return PermGroup(degree, _rows_from_keys(seen, degree), generators=generators)


def subgroup_generated(G: PermGroup, elems: Sequence[Perm]) -> PermGroup:
    for g in elems:
        G._require(g)
    return closure(list(elems), degree=G.degree)


def _conjugates_array(G: PermGroup, g: Perm) -> np.ndarray:
    H = G.array
    Hinv = _inverse_rows(H)
    gi = np.asarray(g.images, dtype=np.int16)
    # (h g h^-1)(i) = h[g[h^-1[i]]]
    return np.take_along_axis(H, gi[Hinv], axis=1)


def conjugacy_class(G: PermGroup, g: Perm) -> frozenset[Perm]:
    G._require(g)
    conj = np.unique(_conjugates_array(G, g), axis=0)
    return frozenset(Perm(row) for row in conj)


def centralizer(G: PermGroup, g: Perm) -> PermGroup:
    G._require(g)
    H = G.array
    gi = np.asarray(g.images, dtype=np.int16)
    # h g = g h  <=>  h[g[i]] = g[h[i]]
    mask = (H[:, gi] == gi[H]).all(axis=1)
    return PermGroup(G.degree, H[mask])


def normalizes(G: PermGroup, N: PermGroup) -> bool:
    """True iff every element of ``G`` conjugates ``N`` into itself."""
    for g in N.generators:
        if not N.contains_rows(_conjugates_array(G, g)).all():
            return False
    return True


def sylow3_unique(G: PermGroup) -> PermGroup:
    """The unique Sylow 3-subgroup, certified by the 3-elements forming a group."""
    orders = G.element_orders()
    k = orders.copy()
    while True:
        mask = k % 3 == 0
        if not mask.any():
            break
        k[mask] //= 3
    threes = G.array[k == 1]
    three_part = 1
    n = G.order
    while n % 3 == 0:
        n //= 3
        three_part *= 3
    if len(threes) != three_part:
        raise NoNormalSylowError(
            f"{len(threes)} elements of 3-power order, but the 3-part of |G| is {three_part}")
    S = PermGroup(G.degree, threes)
    # the 3-part count alone does not certify closure under composition
    prod = np.take_along_axis(threes[:, None, :].repeat(len(threes), 1),
                              threes[None, :, :].repeat(len(threes), 0), axis=2)
    if not S.contains_rows(prod.reshape(-1, G.degree)).all():
        raise NoNormalSylowError("elements of 3-power order are not closed under composition")
    return S


def is_elementary_abelian_3(G: PermGroup) -> int | None:
    """``log_3 |G|`` if ``G`` is elementary abelian of exponent 3, else None."""
    if not G.is_abelian():
        return None
    orders = G.element_orders()
    if not ((orders == 1) | (orders == 3)).all():
        return None
    n, r = G.order, 0
    while n % 3 == 0:
        n //= 3
        r += 1
    return r if n == 1 else None


def symmetric_group(n: int) -> PermGroup:
    if n < 2:
        return trivial_group(n)
    gens = [Perm.from_cycles(n, (0, 1)), Perm.from_cycles(n, tuple(range(n)))]
    return closure(gens)
