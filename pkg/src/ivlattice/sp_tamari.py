"""Planar rooted trees, their series-parallel interval orders, and checks of
the Tamari restriction."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import comb

import networkx as nx
import numpy as np

from .enumeration import Catalog, sp_filter
from .interval import (IntervalOrder, canonical_form, decode, is_admissible,
                       is_interval_order)
from .lattice import OrderTable, TheoremViolation, build_lattice, join_code
from .report import Report
from .poset import PatternId, Poset, contains_induced


class TreeError(ValueError):
    pass


def _freeze(node) -> tuple:
    if not isinstance(node, (list, tuple)):
        raise TreeError(f"tree nodes must be nested lists, got {node!r}")
    return tuple(_freeze(child) for child in node)


@dataclass(frozen=True)
class PlanarTree:
    """Rooted ordered tree as nested tuples; ``()`` is a leaf.

    Nodes are numbered by preorder with the root as 0.
    """

    structure: tuple

    @classmethod
    def parse(cls, nested) -> PlanarTree:
        return cls(_freeze(nested))

    @cached_property
    def _walk(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        # parent and subtree size per preorder label
        parent, size = [], []

        def visit(node, up):
            me = len(parent)
            parent.append(up)
            size.append(1)
            for child in node:
                size[me] += visit(child, me)
            return size[me]

        visit(self.structure, -1)
        return tuple(parent), tuple(size)

    @property
    def n(self) -> int:
        """Number of non-root nodes."""
        return len(self._walk[0]) - 1

    def descendants(self, k: int) -> range:
        """Proper descendants of node ``k``: a contiguous preorder block."""
        size = self._walk[1][k]
        return range(k + 1, k + size)

    def to_json(self) -> dict:
        def thaw(node):
            return [thaw(c) for c in node]
        return {"tree": thaw(self.structure)}

    @classmethod
    def from_json(cls, obj: dict) -> PlanarTree:
        try:
            return cls.parse(obj["tree"])
        except (KeyError, TypeError):
            raise TreeError("tree object needs a 'tree' entry") from None


def tree_poset(T: PlanarTree) -> Poset:
    """Relation x < y iff x precedes y in preorder and y is not below x."""
    n = T.n
    if n < 1:
        raise TreeError("tree needs at least one non-root node")
    rows = []
    for x in range(1, n + 1):
        below = T.descendants(x)
        rows.append(sum(1 << (y - 1) for y in range(x + 1, n + 1) if y not in below))
    return Poset(n, tuple(rows))


def tree_to_poset(T: PlanarTree) -> IntervalOrder:
    """The interval order of ``T`` with its preorder labels kept.

    Raises :class:`TheoremViolation` if the preorder labelling is not the
    admissible one.
    """
    P = tree_poset(T)
    C = canonical_form(P)
    if C.poset != P:
        raise TheoremViolation(f"preorder labelling of {T.structure} is not admissible")
    return C


@lru_cache(maxsize=None)
def _forests(n: int) -> tuple[tuple, ...]:
    if n == 0:
        return ((),)
    out = []
    for k in range(1, n + 1):
        for first in _forests(k - 1):
            for rest in _forests(n - k):
                out.append((first,) + rest)
    return tuple(out)


def enumerate_trees(n: int) -> list[PlanarTree]:
    """All planar rooted trees with ``n`` non-root nodes (Catalan(n) of them)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return [PlanarTree(f) for f in _forests(n)]


def verify_sp_correspondence(n: int, cat: Catalog) -> Report:
    report = Report("sp_correspondence", n)
    sp = sp_filter(cat)
    images, raw_ok, admissible, patterns_ok = set(), True, True, True
    for T in enumerate_trees(n):
        P = tree_poset(T)
        C = canonical_form(P)
        images.add(C.code)
        if raw_ok and C.poset != P:
            raw_ok = report.record("preorder_is_canonical", False, T.to_json())
        if admissible and not is_admissible(P, range(1, n + 1)):
            admissible = report.record("preorder_is_admissible", False, T.to_json())
        if patterns_ok and (contains_induced(P, PatternId.FENCE_N)
                            or not is_interval_order(P)):
            patterns_ok = report.record("images_avoid_patterns", False, T.to_json())
    report.checks.setdefault("preorder_is_canonical", True)
    report.checks.setdefault("preorder_is_admissible", True)
    report.checks.setdefault("images_avoid_patterns", True)
    sp_codes = set(sp.codes)
    report.record("images_equal_sp_catalog", images == sp_codes, {
        "tree_only": [decode(n, c).pairs() for c in sorted(images - sp_codes)][:5],
        "catalog_only": [sp[sp.index[c]].pairs() for c in sorted(sp_codes - images)][:5],
    } if images != sp_codes else None)
    report.record("trees_injective", len(images) == len(enumerate_trees(n)))
    report.notes.append(f"{len(enumerate_trees(n))} trees, {len(sp)} series-parallel members")
    return report


def verify_tamari_restriction(n: int, cat: Catalog) -> Report:
    """Order-theoretic checks of <=_T restricted to the series-parallel members."""
    report = Report("tamari", n)
    sp = sp_filter(cat)
    size = len(sp)
    report.record("catalan_size", size == catalan(n))
    # (i) relation containment coincides with pointwise down-set containment
    first = None
    for a, b in itertools.product(sp, repeat=2):
        by_relation = b.code & ~a.code == 0
        by_down = all(y & ~x == 0 for x, y in zip(a.poset.down, b.poset.down))
        if by_relation != by_down:
            first = [a.pairs(), b.pairs()]
            break
    report.record("order_is_down_set_containment", first is None, first)
    # (ii) every pair has bounds inside the restriction; (iii) GLB is the global meet
    table = OrderTable(sp)
    glb_first = lub_first = meet_first = None
    for i in range(size):
        for j in range(i, size):
            glb, lub = table.bounds(i, j)
            if glb is None and glb_first is None:
                glb_first = [sp[i].pairs(), sp[j].pairs()]
            if lub is None and lub_first is None:
                lub_first = [sp[i].pairs(), sp[j].pairs()]
            if meet_first is None and (glb is None or sp[glb].code
                                       != sp[i].code | sp[j].code):
                meet_first = [sp[i].pairs(), sp[j].pairs()]
    report.record("restriction_has_glbs", glb_first is None, glb_first)
    report.record("restriction_has_lubs", lub_first is None, lub_first)
    report.record("restricted_meet_is_union", meet_first is None, meet_first)
    return report


def verify_meet_subsemilattice(n: int, cat: Catalog) -> Report:
    """Meets of series-parallel pairs stay fence-free; some join leaves the class."""
    report = Report("meetsub", n)
    sp = sp_filter(cat)
    codes = np.array(cat.codes, dtype=np.uint64)
    meet_first = None
    join_witness = None
    for i, a in enumerate(sp):
        for b in sp.members[i:]:
            union = decode(n, a.code | b.code)
            closed = (a.code | b.code) in cat.index
            if meet_first is None and (
                    not closed or contains_induced(union, PatternId.FENCE_N)):
                meet_first = {"a": a.pairs(), "b": b.pairs(), "union": union.pairs(),
                              "canonical": closed}
            if join_witness is None:
                j = join_code(codes, a.code, b.code)
                J = decode(n, j)
                if j in cat.index and contains_induced(J, PatternId.FENCE_N):
                    join_witness = {"a": a.pairs(), "b": b.pairs(), "join": J.pairs()}
    report.record("meets_stay_series_parallel", meet_first is None, meet_first)
    report.checks["join_leaves_class"] = join_witness is not None
    if join_witness is not None:
        report.witnesses["join_leaves_class"] = join_witness
    elif n < 4:
        report.checks["join_leaves_class"] = True
        report.notes.append("n < 4: the fence cannot occur, no join witness expected")
    return report


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


# Independent model of the Tamari lattice on binary trees, used only as a
# structural cross-check of the restriction.

def binary_trees(n: int) -> list:
    if n == 0:
        return [None]
    return [(l, r) for k in range(n) for l in binary_trees(k) for r in binary_trees(n - 1 - k)]


def _right_rotations(t) -> list:
    if t is None:
        return []
    left, right = t
    out = []
    if left is not None:
        a, b = left
        out.append((a, (b, right)))
    out += [(l2, right) for l2 in _right_rotations(left)]
    out += [(left, r2) for r2 in _right_rotations(right)]
    return out


def rotation_tamari(n: int) -> nx.DiGraph:
    """Hasse diagram of the Tamari lattice via right rotations."""
    G = nx.DiGraph()
    for t in binary_trees(n):
        G.add_node(t)
        for s in _right_rotations(t):
            G.add_edge(t, s)
    return G


def restriction_diagram(n: int, cat: Catalog) -> nx.DiGraph:
    diag = build_lattice(sp_filter(cat))
    G = nx.DiGraph()
    G.add_nodes_from(range(diag.size))
    G.add_edges_from(diag.covers)
    return G


def matches_rotation_tamari(n: int, cat: Catalog) -> bool:
    """Whether the restricted Hasse diagram is isomorphic to the rotation lattice."""
    return nx.is_isomorphic(restriction_diagram(n, cat), rotation_tamari(n))
