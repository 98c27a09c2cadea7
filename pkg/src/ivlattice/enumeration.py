"""Exhaustive generation of canonical interval orders and catalog files."""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .interval import IntervalOrder, canonical_form, is_admissible, is_interval_order
from .poset import PatternId, Poset, bits, contains_induced, restrict
from .report import Report

MAX_N = 9


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class Catalog:
    """Canonical interval orders of one size, sorted by relation code."""

    n: int
    members: tuple[IntervalOrder, ...]
    sp_only: bool = False
    index: dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "index", {m.code: i for i, m in enumerate(self.members)}
        )
        if len(self.index) != len(self.members):
            raise CatalogError("duplicate catalog members")

    @classmethod
    def from_members(cls, n: int, members: Iterable[IntervalOrder], sp_only=False):
        return cls(n, tuple(sorted(members, key=lambda m: m.code)), sp_only)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[IntervalOrder]:
        return iter(self.members)

    def __getitem__(self, i: int) -> IntervalOrder:
        return self.members[i]

    def __contains__(self, P: IntervalOrder) -> bool:
        return P.n == self.n and P.code in self.index

    def position(self, P: IntervalOrder) -> int:
        if P.n != self.n:
            raise CatalogError(f"size {P.n} does not match catalog size {self.n}")
        return self.index[P.code]

    @property
    def codes(self) -> list[int]:
        return [m.code for m in self.members]

    def dumps(self) -> str:
        head = {"n": self.n, "count": len(self), "sp_only": self.sp_only}
        lines = [json.dumps(head)]
        lines.extend(json.dumps(m.to_json()) for m in self.members)
        return "\n".join(lines) + "\n"

    def write(self, path) -> None:
        Path(path).write_text(self.dumps())

    @classmethod
    def loads(cls, text: str) -> Catalog:
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise CatalogError("empty catalog file")
        head = json.loads(lines[0])
        try:
            n, count, sp_only = head["n"], head["count"], head["sp_only"]
        except (KeyError, TypeError):
            raise CatalogError("catalog header needs n, count and sp_only") from None
        members = []
        for ln in lines[1:]:
            P = Poset.from_json(json.loads(ln))
            if P.n != n:
                raise CatalogError(f"member of size {P.n} in catalog of size {n}")
            C = canonical_form(P)
            if C.poset != P:
                raise CatalogError(f"member {ln} is not in canonical form")
            members.append(C)
        if len(members) != count:
            raise CatalogError(f"header says {count} members, found {len(members)}")
        return cls.from_members(n, members, sp_only)

    @classmethod
    def read(cls, path) -> Catalog:
        return cls.loads(Path(path).read_text())


def _down_closed(P: Poset) -> list[int]:
    # Labels of a canonical order form a linear extension, so every element's
    # down-set is decided before the element itself.
    out = [0]
    for x in range(P.n):
        need = P.down[x]
        out += [s | 1 << x for s in out if need & ~s == 0]
    return out


def _up_closed(P: Poset, within: int) -> list[int]:
    out = [0]
    for x in reversed(range(P.n)):
        if not within >> x & 1:
            continue
        need = P.up[x]
        out += [s | 1 << x for s in out if need & ~s == 0]
    return out


def one_point_extensions(P: IntervalOrder) -> list[IntervalOrder]:
    """All canonical interval orders obtained by adjoining one new element."""
    base = P.poset
    n = base.n
    full = (1 << n) - 1
    seen: dict[int, IntervalOrder] = {}
    for below in _down_closed(base):
        above_all = full
        for d in bits(below):
            above_all &= base.up[d]
        for above in _up_closed(base, above_all):
            rows = list(base.up)
            for d in bits(below):
                rows[d] |= 1 << n
            rows.append(above)
            Q = Poset(n + 1, tuple(rows))
            if not is_interval_order(Q):
                continue
            C = canonical_form(Q)
            seen.setdefault(C.code, C)
    return sorted(seen.values(), key=lambda m: m.code)


def enumerate_catalog(n: int, max_n: int = MAX_N, parents_reversed=False) -> Catalog:
    """Catalog of all interval orders of size ``n`` up to isomorphism.

    ``parents_reversed`` walks each level's parents in reverse order; the
    result must not depend on it.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > max_n:
        raise ValueError(f"n={n} exceeds the configured maximum {max_n}")
    level = [IntervalOrder(Poset.antichain(1))]
    for _ in range(1, n):
        found: dict[int, IntervalOrder] = {}
        parents = reversed(level) if parents_reversed else level
        for P in parents:
            for C in one_point_extensions(P):
                found.setdefault(C.code, C)
        level = sorted(found.values(), key=lambda m: m.code)
    return Catalog.from_members(n, level)


def is_series_parallel(P: IntervalOrder) -> bool:
    return contains_induced(P.poset, PatternId.FENCE_N) is None


def sp_filter(cat: Catalog) -> Catalog:
    """Members avoiding the fence N (series-parallel interval orders)."""
    return Catalog.from_members(
        cat.n, (m for m in cat if is_series_parallel(m)), sp_only=True
    )


def verify_labelling(cat: Catalog, relabellings: int = 50, seed: int = 0) -> Report:
    """Every member is admissibly labelled and is recovered from random relabellings."""
    rng = random.Random(seed)
    report = Report("labelling", cat.n)
    ident = list(range(1, cat.n + 1))
    checks = {"identity_admissible": None, "relabelling_invariant": None,
              "deletion_stays_canonical": None}
    for m in cat:
        if checks["identity_admissible"] is None and not is_admissible(m.poset, ident):
            checks["identity_admissible"] = m.pairs()
        for _ in range(relabellings):
            perm = ident[:]
            rng.shuffle(perm)
            shuffled = m.poset.relabel(perm)
            if checks["relabelling_invariant"] is None and canonical_form(shuffled) != m:
                checks["relabelling_invariant"] = {"member": m.pairs(), "perm": perm}
        if cat.n > 1 and checks["deletion_stays_canonical"] is None:
            smaller = restrict(m.poset, range(1, cat.n))
            if canonical_form(smaller).poset != smaller:
                checks["deletion_stays_canonical"] = m.pairs()
    for name, witness in checks.items():
        report.record(name, witness is None, witness)
    report.notes.append(f"{len(cat)} members, {relabellings} relabellings each, seed {seed}")
    return report
