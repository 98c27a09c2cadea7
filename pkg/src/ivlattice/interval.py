"""Interval orders: recognition, admissible labelling, canonical form and
integer interval representations."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .poset import Poset, PosetError, bits, popcount


class NotAnIntervalOrder(ValueError):
    """The poset contains an induced 2+2."""


def _nested(masks) -> bool:
    ordered = sorted(set(masks), key=popcount)
    return all(a & ~b == 0 for a, b in zip(ordered, ordered[1:]))


def is_interval_order(P: Poset, via: str = "down") -> bool:
    """True iff the principal down-sets (or up-sets) are totally ordered by inclusion."""
    if via == "down":
        return _nested(P.down)
    if via == "up":
        return _nested(P.up)
    raise ValueError(f"via must be 'down' or 'up', got {via!r}")


def _keys(P: Poset) -> list[tuple[int, int]]:
    return [(popcount(d), popcount(u)) for d, u in zip(P.down, P.up)]


def admissible_labelling(P: Poset) -> tuple[int, ...]:
    """Labelling ``lam`` (a tuple, ``lam[x-1]`` is the new label of ``x``).

    Elements are sorted by (down-set size, up-set size); in an interval order
    the down-sets are nested, so equal sizes mean equal sets and the residual
    ties are exactly the order-equivalence classes.  Ties go by old label.
    """
    if not is_interval_order(P):
        raise NotAnIntervalOrder("poset contains an induced 2+2")
    keys = _keys(P)
    order = sorted(range(P.n), key=lambda x: (keys[x], x))
    lam = [0] * P.n
    for new, old in enumerate(order):
        lam[old] = new + 1
    return tuple(lam)


def _strictly_inside(a: int, b: int) -> bool:
    return a != b and a & ~b == 0


def is_admissible(P: Poset, lam: Sequence[int]) -> bool:
    """Check ``lam`` against the clause-by-clause definition.

    For every pair with ``lam(x) < lam(y)`` one of: I(x) strictly inside
    I(y); I(x) = I(y) and F(x) strictly inside F(y); x and y order
    equivalent.  ``lam`` must also be a linear extension.
    """
    n = P.n
    if sorted(lam) != list(range(1, n + 1)):
        return False
    for x in range(n):
        for y in bits(P.up[x]):
            if lam[x] >= lam[y]:
                return False
    D, U = P.down, P.up
    for x in range(n):
        for y in range(n):
            if lam[x] >= lam[y]:
                continue
            if _strictly_inside(D[x], D[y]):
                continue
            if D[x] == D[y] and (U[x] == U[y] or _strictly_inside(U[x], U[y])):
                continue
            return False
    return True


@dataclass(frozen=True)
class IntervalOrder:
    """A 2+2-free poset whose identity labelling is admissible.

    Build through :func:`canonical_form`, :func:`as_interval_order` or
    :func:`from_representation`; the constructor itself does not validate.
    """

    poset: Poset

    @property
    def n(self) -> int:
        return self.poset.n

    @cached_property
    def dsize(self) -> tuple[int, ...]:
        return tuple(popcount(d) for d in self.poset.down)

    @cached_property
    def usize(self) -> tuple[int, ...]:
        return tuple(popcount(u) for u in self.poset.up)

    @cached_property
    def code(self) -> int:
        """Strict relation packed over the pairs ``i < j``.

        Pair number ``p`` in row-major order sits at bit ``m - 1 - p`` with
        ``m = n(n-1)/2``, so comparing codes compares flattened matrices
        lexicographically, and relation containment is mask containment.
        """
        return encode(self.poset)

    def pairs(self) -> list[tuple[int, int]]:
        return self.poset.pairs()

    def to_json(self) -> dict:
        return self.poset.to_json()

    def __repr__(self) -> str:
        return f"IntervalOrder(n={self.n}, lt={self.pairs()})"


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def pair_bit(n: int, i: int, j: int) -> int:
    """Bit position of the 0-based pair ``i < j`` inside a relation code."""
    p = i * n - i * (i + 1) // 2 + (j - i - 1)
    return pair_count(n) - 1 - p


def encode(P: Poset) -> int:
    n = P.n
    code = 0
    for i, row in enumerate(P.up):
        for j in bits(row):
            if j <= i:
                raise PosetError("relation codes need a linear-extension labelling")
            code |= 1 << pair_bit(n, i, j)
    return code


def decode(n: int, code: int) -> Poset:
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if code >> pair_bit(n, i, j) & 1:
                rows[i] |= 1 << j
    return Poset(n, tuple(rows))


def canonical_form(P: Poset) -> IntervalOrder:
    lam = admissible_labelling(P)
    return IntervalOrder(P.relabel(lam))


def as_interval_order(P: Poset) -> IntervalOrder:
    """Wrap ``P`` as-is, requiring its identity labelling to be admissible."""
    if not is_interval_order(P):
        raise NotAnIntervalOrder("poset contains an induced 2+2")
    keys = _keys(P)
    if any(a > b for a, b in zip(keys, keys[1:])):
        raise ValueError("identity labelling is not admissible; use canonical_form")
    return IntervalOrder(P)


def is_canonical(P: Poset) -> bool:
    if not is_interval_order(P):
        return False
    keys = _keys(P)
    return all(a <= b for a, b in zip(keys, keys[1:]))


@dataclass(frozen=True)
class IntervalRepresentation:
    intervals: tuple[tuple[int, int], ...]

    @property
    def magnitude(self) -> int:
        return max(b for _, b in self.intervals)

    def to_json(self) -> dict:
        return {"intervals": [list(iv) for iv in self.intervals]}

    @classmethod
    def from_json(cls, obj: dict) -> IntervalRepresentation:
        try:
            raw = obj["intervals"]
        except (KeyError, TypeError):
            raise ValueError("interval object needs an 'intervals' list") from None
        ivs = []
        for iv in raw:
            if not (isinstance(iv, (list, tuple)) and len(iv) == 2
                    and all(isinstance(v, int) for v in iv)):
                raise ValueError(f"malformed interval {iv!r}")
            ivs.append((iv[0], iv[1]))
        return cls(tuple(ivs))


def to_representation(P: IntervalOrder) -> IntervalRepresentation:
    """Integer intervals of minimal magnitude.

    The left end of ``x`` is the rank of I(x) among the distinct down-sets;
    the right end counts distinct up-sets not strictly inside F(x).
    """
    poset = P.poset
    downs = sorted(set(poset.down), key=popcount)
    ups = sorted(set(poset.up), key=popcount)
    down_rank = {d: i for i, d in enumerate(downs)}
    up_rank = {u: i for i, u in enumerate(ups)}
    return IntervalRepresentation(tuple(
        (1 + down_rank[d], len(ups) - up_rank[u])
        for d, u in zip(poset.down, poset.up)
    ))


def from_representation(iv) -> IntervalOrder:
    """Interval order of a family of closed integer intervals (x < y iff b_x < a_y)."""
    if isinstance(iv, IntervalRepresentation):
        iv = iv.intervals
    iv = [tuple(p) for p in iv]
    if not iv:
        raise ValueError("need at least one interval")
    for k, (a, b) in enumerate(iv, 1):
        if a > b:
            raise ValueError(f"interval of element {k} is malformed: [{a}, {b}]")
    rows = tuple(
        sum(1 << y for y, (ay, _) in enumerate(iv) if bx < ay) for _, bx in iv
    )
    return canonical_form(Poset(len(iv), rows))
