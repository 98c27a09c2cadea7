"""The order <=_T on interval orders of size n, meet/join and Hasse diagrams.

``P1 <=_T P2`` iff the strict relation of ``P2`` is contained in that of
``P1``: the chain is the bottom and the antichain the top.  Meets are
relation unions; joins are unions of all catalog members fitting inside the
intersection.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .enumeration import Catalog, CatalogError
from .interval import IntervalOrder, as_interval_order, decode, is_interval_order
from .poset import Poset, validate_poset
from .report import Report


class SizeMismatch(ValueError):
    pass


class TheoremViolation(AssertionError):
    """A computed meet/join left the class; this is a bug, not bad input."""


def _same_size(P1: IntervalOrder, P2: IntervalOrder) -> int:
    if P1.n != P2.n:
        raise SizeMismatch(f"sizes differ: {P1.n} vs {P2.n}")
    return P1.n


def leq_T(P1: IntervalOrder, P2: IntervalOrder) -> bool:
    _same_size(P1, P2)
    return P2.code & ~P1.code == 0


def leq_by_up_sets(P1: IntervalOrder, P2: IntervalOrder) -> bool:
    _same_size(P1, P2)
    return all(b & ~a == 0 for a, b in zip(P1.poset.up, P2.poset.up))


def leq_by_down_sets(P1: IntervalOrder, P2: IntervalOrder) -> bool:
    _same_size(P1, P2)
    return all(b & ~a == 0 for a, b in zip(P1.poset.down, P2.poset.down))


def meet(P1: IntervalOrder, P2: IntervalOrder) -> IntervalOrder:
    """Union of the two strict relations, checked to be a canonical interval order.

    The union is always a 2+2-free poset, but from n = 5 on its identity
    labelling can fail to be admissible; that raises :class:`TheoremViolation`
    rather than returning a relabelled result.
    """
    n = _same_size(P1, P2)
    rows = tuple(a | b for a, b in zip(P1.poset.up, P2.poset.up))
    try:
        Q = validate_poset(Poset(n, rows).lt)
        return as_interval_order(Q)
    except ValueError as exc:
        raise TheoremViolation(f"union of {P1} and {P2} is invalid: {exc}") from exc


def _check_catalog(cat: Catalog, n: int) -> None:
    if cat.n != n:
        raise CatalogError(f"catalog has size {cat.n}, operands have size {n}")
    if cat.sp_only:
        raise CatalogError("join needs the full catalog, not the series-parallel part")


def join_code(codes: np.ndarray, a: int, b: int) -> int:
    """Union of all member codes contained in ``a & b``."""
    inter = np.uint64(a & b)
    inside = codes[(codes & ~inter) == 0]
    return int(np.bitwise_or.reduce(inside)) if inside.size else 0


def join(P1: IntervalOrder, P2: IntervalOrder, cat: Catalog) -> IntervalOrder:
    n = _same_size(P1, P2)
    _check_catalog(cat, n)
    inter = P1.code & P2.code
    code = 0
    for m in cat:
        if m.code & ~inter == 0:
            code |= m.code
    if code not in cat.index:
        raise TheoremViolation(f"join of {P1} and {P2} is not a catalog member")
    return cat[cat.index[code]]


def code_array(cat: Catalog) -> np.ndarray:
    return np.array(cat.codes, dtype=np.uint64)


def order_matrix(cat: Catalog) -> np.ndarray:
    """``L[i, j]`` iff member ``i`` <=_T member ``j``."""
    codes = code_array(cat)
    return (codes[None, :] & ~codes[:, None]) == 0


def transitive_reduction(L: np.ndarray, chunk: int = 1024) -> np.ndarray:
    """Cover matrix of a reflexive order matrix."""
    S = L.copy()
    np.fill_diagonal(S, False)
    Sf = S.astype(np.float32)
    covers = np.empty_like(S)
    for lo in range(0, len(S), chunk):
        two_step = (Sf[lo:lo + chunk] @ Sf) > 0
        covers[lo:lo + chunk] = S[lo:lo + chunk] & ~two_step
    return covers


@dataclass(frozen=True)
class LatticeDiagram:
    n: int
    size: int
    covers: tuple[tuple[int, int], ...]
    sp_only: bool = False

    def to_dot(self, cat: Catalog) -> str:
        lines = ["digraph hasse {", "  rankdir=BT;"]
        for i, m in enumerate(cat):
            label = json.dumps([list(p) for p in m.pairs()])
            lines.append(f"  {i} [label={json.dumps(label)}];")
        for lo, hi in self.covers:
            lines.append(f"  {lo} -> {hi};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_lattice(cat: Catalog) -> LatticeDiagram:
    L = order_matrix(cat)
    C = transitive_reduction(L)
    covers = tuple((int(i), int(j)) for i, j in zip(*np.nonzero(C)))
    return LatticeDiagram(cat.n, len(cat), covers, cat.sp_only)


class OrderTable:
    """Order matrix of a catalog with bound queries answered from it alone."""

    def __init__(self, cat: Catalog):
        self.cat = cat
        self.L = order_matrix(cat)
        # A least element of S has strictly more elements above it than any
        # other member of S, so it is the argmax of ``height`` over S.
        self.height = self.L.sum(axis=1)
        self.depth = self.L.sum(axis=0)

    def least(self, members: np.ndarray) -> int | None:
        idx = np.flatnonzero(members)
        if idx.size == 0:
            return None
        u = int(idx[np.argmax(self.height[idx])])
        return u if self.L[u, idx].all() else None

    def greatest(self, members: np.ndarray) -> int | None:
        idx = np.flatnonzero(members)
        if idx.size == 0:
            return None
        g = int(idx[np.argmax(self.depth[idx])])
        return g if self.L[idx, g].all() else None

    def bounds(self, i: int, j: int) -> tuple[int | None, int | None]:
        """Greatest lower bound and least upper bound of members ``i`` and ``j``."""
        L = self.L
        return self.greatest(L[:, i] & L[:, j]), self.least(L[i, :] & L[j, :])


def meet_table(cat: Catalog) -> np.ndarray:
    size = len(cat)
    codes = cat.codes
    table = np.empty((size, size), dtype=np.int64)
    for i in range(size):
        for j in range(i, size):
            k = cat.index.get(codes[i] | codes[j])
            if k is None:
                raise TheoremViolation(f"union of members {i} and {j} is not a member")
            table[i, j] = table[j, i] = k
    return table


def join_table(cat: Catalog) -> np.ndarray:
    size = len(cat)
    codes = code_array(cat)
    table = np.empty((size, size), dtype=np.int64)
    for i in range(size):
        inter = codes[i] & codes[i:]
        # inside[a, b]: member b fits inside the a-th intersection
        inside = (codes[None, :] & ~inter[:, None]) == 0
        joined = np.bitwise_or.reduce(np.where(inside, codes[None, :], np.uint64(0)), axis=1)
        for off, code in enumerate(joined):
            k = cat.index.get(int(code))
            if k is None:
                raise TheoremViolation(f"join of members {i}, {i + off} not a member")
            table[i, i + off] = table[i + off, i] = k
    return table


def verify_lattice(diag: LatticeDiagram, cat: Catalog,
                   pairs: Iterable[tuple[int, int]] | None = None) -> Report:
    """Check every pair (or the given sample) has a GLB and LUB equal to meet/join.

    Bounds come from the raw order matrix, independently of the union formulas.
    """
    report = Report("lattice", cat.n)
    table = OrderTable(cat)
    L = table.L
    size = len(cat)
    report.record("covers_match_order", set(diag.covers) == {
        (int(i), int(j)) for i, j in zip(*np.nonzero(transitive_reduction(L)))
    })
    chain = cat.index.get((1 << (cat.n * (cat.n - 1) // 2)) - 1)
    report.record("bottom_is_chain", chain is not None and bool(L[chain].all()))
    top = cat.index.get(0)
    report.record("top_is_antichain", top is not None and bool(L[:, top].all()))
    codes = code_array(cat)
    if pairs is None:
        pairs = ((i, j) for i in range(size) for j in range(i, size))
    for name in ("glb_exists", "lub_exists", "meet_is_glb", "join_is_lub"):
        report.checks[name] = True
    checked = 0
    for i, j in pairs:
        checked += 1
        glb, lub = table.bounds(i, j)
        m = cat.index.get(cat[i].code | cat[j].code)
        jn = cat.index.get(join_code(codes, cat[i].code, cat[j].code))
        for name, ok in (("glb_exists", glb is not None),
                         ("lub_exists", lub is not None),
                         ("meet_is_glb", m is not None and glb == m),
                         ("join_is_lub", jn is not None and lub == jn)):
            if not ok and report.checks[name]:
                report.record(name, False, [cat[i].pairs(), cat[j].pairs()])
    report.notes.append(f"{checked} pairs checked over {size} members")
    return report


def relation_union(n: int, codes: Iterable[int]) -> Poset:
    """Union of canonical strict relations given by code (may leave the class)."""
    total = 0
    for c in codes:
        total |= c
    return decode(n, total)


def union_is_interval_order(n: int, codes: Iterable[int]) -> bool:
    P = relation_union(n, codes)
    try:
        validate_poset(P.lt)
    except ValueError:
        return False
    return is_interval_order(P)
