"""Brute-force reference computations, kept free of ivlattice imports."""
from __future__ import annotations

import itertools
from functools import lru_cache


def _transitive(rel: frozenset) -> bool:
    return all((a, d) in rel for a, b in rel for c, d in rel if b == c)


def _iso_key(n: int, rel: frozenset) -> tuple:
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(sorted((perm[a], perm[b]) for a, b in rel))
        if best is None or key < best:
            best = key
    return best


@lru_cache(maxsize=None)
def all_posets(n: int) -> tuple[frozenset, ...]:
    """One strict relation (0-based pairs) per isomorphism class of n-element posets.

    Every unordered pair is assigned one of: incomparable, i<j, j<i.
    """
    pairs = list(itertools.combinations(range(n), 2))
    classes = {}
    for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
        rel = frozenset(
            (i, j) if c == 1 else (j, i)
            for (i, j), c in zip(pairs, choice) if c
        )
        if not _transitive(rel):
            continue
        classes.setdefault(_iso_key(n, rel), rel)
    return tuple(classes[k] for k in sorted(classes))


def has_two_plus_two(n: int, rel: frozenset) -> bool:
    """Two strict pairs a<b, c<d with every cross pair incomparable."""
    def inc(x, y):
        return (x, y) not in rel and (y, x) not in rel
    return any(
        len({a, b, c, d}) == 4 and inc(a, c) and inc(a, d) and inc(b, c) and inc(b, d)
        for (a, b), (c, d) in itertools.product(rel, repeat=2)
    )


def has_fence(n: int, rel: frozenset) -> bool:
    for quad in itertools.permutations(range(n), 4):
        a, b, c, d = quad
        want = {(a, c), (b, c), (b, d)}
        induced = {(x, y) for x, y in rel if x in quad and y in quad}
        if induced == want:
            return True
    return False


def interval_order_classes(n: int) -> list[frozenset]:
    return [r for r in all_posets(n) if not has_two_plus_two(n, r)]


def catalan_by_recursion(n: int) -> int:
    c = [1]
    for k in range(1, n + 1):
        c.append(sum(c[i] * c[k - 1 - i] for i in range(k)))
    return c[n]
