"""Command-line front end: ``blades <subcommand> ...`` (or ``python -m blades``).

Exit status is 0 on success, 1 on a domain error (bad parameters, a
non-weakly-separated input to ``trees``, ...) and 2 on unparseable input.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from importlib import resources

from . import boundary, enumeration, osp as osplib, subdivision, trees
from .combinatorics import GroundSet, KSubset, WSCollection, is_ws_collection

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE = 0, 1, 2


class ParseError(Exception):
    pass


class DomainError(Exception):
    pass


# --- input helpers ---------------------------------------------------------


def _ints(text: str) -> list[int]:
    try:
        return [int(a) for a in text.split(",") if a.strip()]
    except ValueError:
        raise ParseError(f"expected comma-separated integers, got {text!r}") from None


def _parse_vertex(text: str) -> list[int]:
    text = text.strip()
    if "," not in text and text.isdigit() and len(text) > 1:
        return [int(c) for c in text]
    return _ints(text)


def _parse_sets(text: str) -> list[list[int]]:
    """``13,24`` (digit strings) or ``1,3;2,4`` for labels above 9."""
    text = text.strip()
    if ";" in text:
        return [_ints(part) for part in text.split(";") if part.strip()]
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part.isdigit():
            raise ParseError(f"bad set {part!r}")
        out.append([int(c) for c in part])
    return out


def _parse_point(text: str) -> list[Fraction]:
    try:
        return [Fraction(a.strip()) for a in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational point {text!r}") from None


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON: {e}") from None
    except OSError as e:
        raise ParseError(str(e)) from None


def _ground(args) -> GroundSet:
    if args.sigma:
        g = GroundSet(tuple(_ints(args.sigma)))
        if args.n is not None and g.n != args.n:
            raise DomainError(f"--sigma lists {g.n} labels but --n is {args.n}")
        return g
    if args.n is None:
        raise DomainError("--n is required")
    if args.n < 2:
        raise DomainError("n must be at least 2")
    return GroundSet.standard(args.n)


def _check_kn(k, n):
    if k is None:
        raise DomainError("--k is required")
    if not 1 <= k <= n - 1:
        raise DomainError(f"need 1 <= k <= n-1, got k={k}, n={n}")


def _collection(args) -> WSCollection:
    if getattr(args, "input", None):
        data = _read_json(args.input)
        if not isinstance(data, dict) or "vertices" not in data or "n" not in data:
            raise ParseError("collection JSON needs 'n' and 'vertices'")
        sigma = data.get("sigma") or list(range(1, data["n"] + 1))
        g = GroundSet(tuple(sigma))
        if g.n != data["n"]:
            raise DomainError("sigma length differs from n")
        k = data.get("k")
        vertices = data["vertices"]
    elif getattr(args, "sets", None):
        g = _ground(args)
        k = args.k
        vertices = _parse_sets(args.sets)
    else:
        raise DomainError("give --sets or --in")
    if k is None:
        k = len(vertices[0]) if vertices else None
    _check_kn(k, g.n)
    if any(len(v) != k for v in vertices):
        raise DomainError(f"every vertex must have k={k} elements")
    unique = {tuple(sorted(v)): v for v in vertices}
    return WSCollection.from_lists(g, unique.values())


def _arrangement(args) -> subdivision.BladeArrangement:
    if args.osp:
        g = _ground(args) if (args.n is not None or args.sigma) else None
        osps = [osplib.parse_osp(s, g) for s in args.osp]
        arr = subdivision.BladeArrangement.from_osps(osps)
        if args.k is not None and arr.k != args.k:
            raise DomainError(f"blades live at level {arr.k}, not k={args.k}")
        return arr
    c = _collection(args)
    return subdivision.BladeArrangement.from_vertices(c.ground, c.subsets)


# --- JSON shapes -----------------------------------------------------------


def collection_json(c: WSCollection, k: int | None = None) -> dict:
    return {
        "n": c.ground.n,
        "k": c.k if c.k is not None else k,
        "sigma": list(c.ground.sigma),
        "vertices": [list(v.members) for v in c.subsets],
    }


def cell_json(c: subdivision.Cell) -> dict:
    return {
        "vertices": [list(v) for v in c.sorted_vertices()],
        "inequalities": [{"subset": sorted(q.subset), "bound": q.bound} for q in c.inequalities],
        "dim": c.dim,
        "matroid": subdivision.is_matroid_cell(c),
        "positroid": c.positroid,
    }


def subdivision_json(s: subdivision.Subdivision) -> dict:
    return {
        "n": s.source.ground.n,
        "k": s.source.k,
        "sigma": list(s.source.ground.sigma),
        "blades": [str(b.osp) for b in s.source.entries],
        "cells": [cell_json(c) for c in s.cells],
        "edges": [list(e) for e in s.edges],
    }


def load_schema(name: str) -> dict:
    """One of the shipped JSON schemas, e.g. ``load_schema("collection")``."""
    return json.loads(resources.files("blades").joinpath(f"schemas/{name}.schema.json").read_text())


# --- subcommands -----------------------------------------------------------


def cmd_check_ws(args):
    return json.dumps(is_ws_collection(_collection(args)))


def cmd_blade(args):
    g = _ground(args)
    v = _parse_vertex(args.vertex)
    if args.k is not None and len(v) != args.k:
        raise DomainError(f"vertex has {len(v)} elements, expected k={args.k}")
    _check_kn(len(v), g.n)
    return osplib.format_osp(osplib.blade_from_vertex(KSubset(g, tuple(v))))


def cmd_subdivide(args):
    return json.dumps(subdivision_json(subdivision.induce_subdivision(_arrangement(args))), indent=2)


def cmd_matroidal(args):
    ok, witness = subdivision.is_matroidal(_arrangement(args))
    return json.dumps({"matroidal": ok, "witness": cell_json(witness) if witness else None}, indent=2)


def cmd_boundary(args):
    if args.osp:
        if len(args.osp) != 1:
            raise DomainError("boundary takes a single --osp")
        g = _ground(args) if (args.n is not None or args.sigma) else None
        o = osplib.parse_osp(args.osp[0], g)
        return osplib.format_osp(boundary.restrict_osp(o, args.j))
    c = _collection(args)
    r = boundary.restrict_collection(c, args.j, drop_frozen=not args.keep_frozen)
    return json.dumps(collection_json(r, c.k - 1))


def cmd_enumerate(args):
    if args.n is None or args.k is None:
        raise DomainError("--n and --k are required")
    filt = {"two-interval": enumeration.TWO_INTERVAL}.get(args.filter, args.filter)
    g = enumeration.build_graph(args.k, args.n, filt)
    try:
        res = enumeration.count_maximal_collections(g, threads=args.threads, time_budget=args.time_budget_secs)
    except enumeration.TimeBudgetExceeded:
        raise DomainError(f"time budget of {args.time_budget_secs}s exceeded") from None
    return json.dumps(res.to_json())


def cmd_trees(args):
    c = _collection(args)
    return trees.arrangement_dot(trees.tree_arrangement(c)).rstrip("\n")


def cmd_eval(args):
    x = _parse_point(args.point)
    if args.osp:
        g = _ground(args) if (args.n is not None or args.sigma) else None
        o = osplib.parse_osp(args.osp[0], g)
        member = osplib.blade_membership(o, x, args.method)
        blade = osplib.format_osp(o)
    elif args.vertex:
        g = _ground(args)
        v = KSubset(g, tuple(_parse_vertex(args.vertex)))
        member = osplib.translated_blade_membership(v, x, args.method)
        blade = f"e_{v} + standard blade"
    else:
        raise DomainError("give --osp or --vertex")
    return json.dumps({"blade": blade, "point": [str(c) for c in x], "method": args.method, "member": member})


def cmd_dualgraph(args):
    return subdivision.dual_graph_dot(subdivision.induce_subdivision(_arrangement(args))).rstrip("\n")


COMMANDS = {
    "check-ws": cmd_check_ws,
    "blade": cmd_blade,
    "subdivide": cmd_subdivide,
    "matroidal": cmd_matroidal,
    "boundary": cmd_boundary,
    "enumerate": cmd_enumerate,
    "trees": cmd_trees,
    "eval": cmd_eval,
    "dualgraph": cmd_dualgraph,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="blades", description="Blade arrangements on hypersimplices.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, collection=True, osp=False):
        sp.add_argument("--n", type=int)
        sp.add_argument("--k", type=int)
        sp.add_argument("--sigma", help="cyclic order, comma separated (default 1..n)")
        sp.add_argument("--out", help="write output here instead of stdout")
        if collection:
            sp.add_argument("--sets", help="vertices, e.g. 13,24 or 1,3;2,4")
            sp.add_argument("--in", dest="input", help="collection JSON file, '-' for stdin")
        if osp:
            sp.add_argument("--osp", action="append", help="decorated partition, e.g. '((12_1 34_1))'")
        return sp

    common(sub.add_parser("check-ws", help="test weak separation of a collection"))
    sp = common(sub.add_parser("blade", help="vertex to decorated partition"), collection=False)
    sp.add_argument("--vertex", required=True)
    common(sub.add_parser("subdivide", help="cells of the induced subdivision (JSON)"), osp=True)
    common(sub.add_parser("matroidal", help="matroidality with a failing cell"), osp=True)
    sp = common(sub.add_parser("boundary", help="restrict to the facet x_j = 1"), osp=True)
    sp.add_argument("--j", type=int, required=True)
    sp.add_argument("--keep-frozen", action="store_true")
    sp = common(sub.add_parser("enumerate", help="count maximal weakly separated collections"), collection=False)
    sp.add_argument("--filter", default=enumeration.ALL, choices=[*enumeration.FILTERS, "two-interval"])
    sp.add_argument("--threads", type=int, default=None, help="worker processes (default $BLADES_THREADS or 1)")
    sp.add_argument("--time-budget-secs", type=float, default=None)
    common(sub.add_parser("trees", help="tree arrangement of a k=3 collection (DOT)"))
    sp = common(sub.add_parser("eval", help="blade membership of a rational point"), collection=False, osp=True)
    sp.add_argument("--vertex")
    sp.add_argument("--point", required=True, help="coordinates such as 1/2,1/2,0,1,0")
    sp.add_argument("--method", default="chain", choices=osplib.METHODS)
    common(sub.add_parser("dualgraph", help="dual graph of the subdivision (DOT)"), osp=True)
    return p


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PARSE if e.code else EXIT_OK
    try:
        text = COMMANDS[args.command](args)
    except (ParseError, osplib.OSPParseError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (DomainError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.out:
        with open(args.out, "w") as f:
            f.write(text + "\n")
    else:
        print(text, file=stdout)
    return EXIT_OK


def main():
    sys.exit(run())
