"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (JSON on stderr) or a failed
verification, 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .enumeration import Catalog, CatalogError, enumerate_catalog, sp_filter, verify_labelling
from .interval import (
    IntervalRepresentation,
    NotAnIntervalOrder,
    canonical_form,
    from_representation,
    to_representation,
)
from .lattice import SizeMismatch, TheoremViolation, build_lattice, join, meet, verify_lattice
from .poset import Poset, PosetError
from .sp_tamari import (
    PlanarTree,
    TreeError,
    tree_to_poset,
    verify_meet_subsemilattice,
    verify_sp_correspondence,
    verify_tamari_restriction,
)

log = logging.getLogger("ivlattice")

DOMAIN_ERRORS = (
    OSError,
    json.JSONDecodeError,
    PosetError,
    NotAnIntervalOrder,
    SizeMismatch,
    CatalogError,
    TreeError,
    TheoremViolation,
    ValueError,
)


def _read_json(path: str):
    return json.loads(Path(path).read_text())


def _emit(obj, out=None) -> None:
    text = json.dumps(obj) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _canonical_input(path: str):
    return canonical_form(Poset.from_json(_read_json(path)))


def _catalog(n: int, sp: bool) -> Catalog:
    cat = enumerate_catalog(n)
    return sp_filter(cat) if sp else cat


def cmd_enumerate(args) -> int:
    text = _catalog(args.n, args.sp).dumps()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_counts(args) -> int:
    print(len(_catalog(args.n, args.sp)))
    return 0


def cmd_canon(args) -> int:
    _emit(_canonical_input(args.input).to_json())
    return 0


def _operands(args):
    a, b = _canonical_input(args.a), _canonical_input(args.b)
    if a.n != b.n:
        raise SizeMismatch(f"sizes differ: {a.n} vs {b.n}")
    return a, b


def cmd_meet(args) -> int:
    a, b = _operands(args)
    _emit(meet(a, b).to_json())
    return 0


def cmd_join(args) -> int:
    a, b = _operands(args)
    if args.catalog:
        cat = Catalog.read(args.catalog)
        if cat.n != a.n:
            raise CatalogError(f"catalog header n={cat.n} but operands have n={a.n}")
    else:
        log.warning("no --catalog given; building the size-%d catalog in memory", a.n)
        cat = enumerate_catalog(a.n)
    _emit(join(a, b, cat).to_json())
    return 0


def cmd_hasse(args) -> int:
    cat = _catalog(args.n, args.sp)
    Path(args.dot).write_text(build_lattice(cat).to_dot(cat))
    return 0


def cmd_verify(args) -> int:
    cat = enumerate_catalog(args.n)
    if args.suite == "lattice":
        reports = [verify_lattice(build_lattice(cat), cat)]
    elif args.suite == "tamari":
        reports = [verify_sp_correspondence(args.n, cat),
                   verify_tamari_restriction(args.n, cat)]
    elif args.suite == "meetsub":
        reports = [verify_meet_subsemilattice(args.n, cat)]
    else:
        reports = [verify_labelling(cat, args.relabellings, args.seed)]
    print(json.dumps([r.to_json() for r in reports], indent=2))
    return 0 if all(r.ok for r in reports) else 1


def cmd_represent(args) -> int:
    _emit(to_representation(_canonical_input(args.input)).to_json())
    return 0


def cmd_from_intervals(args) -> int:
    rep = IntervalRepresentation.from_json(_read_json(args.input))
    _emit(from_representation(rep).to_json())
    return 0


def cmd_tree_to_poset(args) -> int:
    tree = PlanarTree.from_json(_read_json(args.input))
    _emit(tree_to_poset(tree).to_json())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ivlattice", description="Lattices of interval orders."
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def sized(name, help, sp=True):
        p = sub.add_parser(name, help=help)
        p.add_argument("--n", type=int, required=True)
        if sp:
            p.add_argument("--sp", action="store_true",
                           help="series-parallel (fence-free) members only")
        return p

    p = sized("enumerate", "write the catalog of size n")
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)

    sized("counts", "print the catalog size").set_defaults(func=cmd_counts)

    p = sized("hasse", "write the Hasse diagram as DOT")
    p.add_argument("--dot", required=True)
    p.set_defaults(func=cmd_hasse)

    p = sized("verify", "run a verification suite", sp=False)
    p.add_argument("--suite", required=True,
                   choices=["lattice", "tamari", "meetsub", "labelling"])
    p.add_argument("--relabellings", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    for name, func in (("meet", cmd_meet), ("join", cmd_join)):
        p = sub.add_parser(name, help=f"{name} of two interval orders")
        p.add_argument("--a", required=True)
        p.add_argument("--b", required=True)
        if name == "join":
            p.add_argument("--catalog")
        p.set_defaults(func=func)

    for name, func, help in (
        ("canon", cmd_canon, "canonical form of a poset"),
        ("represent", cmd_represent, "integer interval representation"),
        ("from-intervals", cmd_from_intervals, "interval order of an interval family"),
        ("tree-to-poset", cmd_tree_to_poset, "interval order of a planar tree"),
    ):
        p = sub.add_parser(name, help=help)
        p.add_argument("--in", dest="input", required=True)
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DOMAIN_ERRORS as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        sys.stderr.write(json.dumps(err) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
