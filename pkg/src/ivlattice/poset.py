"""Finite posets on the ground set {1, ..., n}.

A poset stores only its strict order, one bitmask row per element:
bit ``y - 1`` of ``up[x - 1]`` is set iff ``x < y``.  Public functions take and
return 1-based labels; the bitmask rows are 0-based.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class PosetError(ValueError):
    """Base class for malformed poset input."""


class ReflexivityError(PosetError):
    def __init__(self, x: int):
        super().__init__(f"element {x} is related to itself")
        self.witness = (x,)


class AntisymmetryError(PosetError):
    def __init__(self, x: int, y: int):
        super().__init__(f"both {x} < {y} and {y} < {x}")
        self.witness = (x, y)


class TransitivityError(PosetError):
    def __init__(self, x: int, y: int, z: int):
        super().__init__(f"{x} < {y} and {y} < {z} but not {x} < {z}")
        self.witness = (x, y, z)


def bits(mask: int) -> Iterable[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Poset:
    n: int
    up: tuple[int, ...]

    @cached_property
    def down(self) -> tuple[int, ...]:
        rows = [0] * self.n
        for x, row in enumerate(self.up):
            for y in bits(row):
                rows[y] |= 1 << x
        return tuple(rows)

    @property
    def lt(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(
            tuple(bool(row >> y & 1) for y in range(self.n)) for row in self.up
        )

    def less(self, x: int, y: int) -> bool:
        return bool(self.up[x - 1] >> (y - 1) & 1)

    def pairs(self) -> list[tuple[int, int]]:
        """Strict pairs ``(x, y)`` with ``x < y``, sorted lexicographically."""
        return [(x + 1, y + 1) for x, row in enumerate(self.up) for y in bits(row)]

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Sequence[int]]) -> Poset:
        lt = [[False] * n for _ in range(n)]
        for pair in pairs:
            x, y = pair
            for v in (x, y):
                if not (isinstance(v, int) and 1 <= v <= n):
                    raise PosetError(f"label {v!r} outside 1..{n}")
            lt[x - 1][y - 1] = True
        return validate_poset(lt)

    @classmethod
    def chain(cls, n: int) -> Poset:
        full = (1 << n) - 1
        return cls(n, tuple(full & ~((1 << (x + 1)) - 1) for x in range(n)))

    @classmethod
    def antichain(cls, n: int) -> Poset:
        return cls(n, (0,) * n)

    def relabel(self, perm: Sequence[int]) -> Poset:
        """Return the isomorphic poset in which element ``x`` becomes ``perm[x-1]``.

        ``perm`` is a 1-based permutation of 1..n.
        """
        rows = [0] * self.n
        for x, row in enumerate(self.up):
            new = 0
            for y in bits(row):
                new |= 1 << (perm[y] - 1)
            rows[perm[x] - 1] = new
        return Poset(self.n, tuple(rows))

    def to_json(self) -> dict:
        return {"n": self.n, "lt": [list(p) for p in self.pairs()]}

    @classmethod
    def from_json(cls, obj: dict) -> Poset:
        try:
            n = obj["n"]
            pairs = obj["lt"]
        except (KeyError, TypeError) as exc:
            raise PosetError(f"poset object needs 'n' and 'lt': {exc}") from None
        if not isinstance(n, int) or n < 1:
            raise PosetError(f"n must be a positive integer, got {n!r}")
        if not all(isinstance(p, (list, tuple)) and len(p) == 2 for p in pairs):
            raise PosetError("every entry of 'lt' must be a pair [x, y]")
        return cls.from_pairs(n, pairs)


def validate_poset(lt) -> Poset:
    """Build a :class:`Poset` from a square boolean matrix of the strict order.

    The matrix must already be transitive; no closure is taken.
    """
    n = len(lt)
    if n < 1:
        raise PosetError("a poset needs at least one element")
    rows = []
    for x, row in enumerate(lt):
        if len(row) != n:
            raise PosetError(f"row {x + 1} has length {len(row)}, expected {n}")
        rows.append(sum(1 << y for y in range(n) if row[y]))
    for x in range(n):
        if rows[x] >> x & 1:
            raise ReflexivityError(x + 1)
    for x in range(n):
        for y in bits(rows[x]):
            if rows[y] >> x & 1:
                raise AntisymmetryError(x + 1, y + 1)
    for x in range(n):
        for y in bits(rows[x]):
            missing = rows[y] & ~rows[x]
            if missing:
                z = next(iter(bits(missing)))
                raise TransitivityError(x + 1, y + 1, z + 1)
    return Poset(n, tuple(rows))


def _check_element(P: Poset, x: int) -> None:
    if not 1 <= x <= P.n:
        raise IndexError(f"element {x} outside 1..{P.n}")


def down_set(P: Poset, x: int) -> frozenset[int]:
    """Elements strictly below ``x``."""
    _check_element(P, x)
    return frozenset(z + 1 for z in bits(P.down[x - 1]))


def up_set(P: Poset, x: int) -> frozenset[int]:
    """Elements strictly above ``x``."""
    _check_element(P, x)
    return frozenset(z + 1 for z in bits(P.up[x - 1]))


def order_equivalent(P: Poset, x: int, y: int) -> bool:
    _check_element(P, x)
    _check_element(P, y)
    return P.down[x - 1] == P.down[y - 1] and P.up[x - 1] == P.up[y - 1]


def restrict(P: Poset, S: Iterable[int]) -> Poset:
    """Induced subposet on ``S``, relabelled 1..|S| keeping label order."""
    keep = sorted(set(S))
    if not keep:
        raise PosetError("cannot restrict to the empty set")
    for x in keep:
        _check_element(P, x)
    pos = {x - 1: i for i, x in enumerate(keep)}
    rows = []
    for x in keep:
        rows.append(sum(1 << pos[y] for y in bits(P.up[x - 1]) if y in pos))
    return Poset(len(keep), tuple(rows))


class PatternId(enum.Enum):
    """Forbidden four-element patterns.

    Pattern elements are ``a, b, c, d`` (labels 1..4 of :attr:`poset`).
    """

    TWO_PLUS_TWO = ((1, 2), (3, 4))
    FENCE_N = ((1, 3), (2, 3), (2, 4))

    @property
    def poset(self) -> Poset:
        return Poset.from_pairs(4, self.value)


def contains_induced(P: Poset, pat: PatternId) -> tuple[int, int, int, int] | None:
    """Find four elements of ``P`` whose induced order is isomorphic to ``pat``.

    The witness lists the images of the pattern's ``a, b, c, d`` in order.
    Plain scan over 4-subsets and their orderings.
    """
    shape = pat.value
    for quad in itertools.combinations(range(P.n), 4):
        sub = [P.up[x] for x in quad]
        mask = sum(1 << x for x in quad)
        if sum(popcount(r & mask) for r in sub) != len(shape):
            continue
        for img in itertools.permutations(quad):
            if all(P.up[img[a - 1]] >> img[b - 1] & 1 for a, b in shape):
                return tuple(x + 1 for x in img)
    return None
