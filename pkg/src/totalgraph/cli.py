"""Command-line front end."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import catalog
from .classify import (
    classify_ring,
    complete_kind,
    evidence_json,
    verify_figures,
    verify_lemmas,
    verify_planar_theorem,
    verify_toroidal_theorem,
)
from .embedding import format_rotation
from .genus import DEFAULT_BUDGET, exact_genus
from .graph import Graph, GraphError, induced_subgraph, parse_edge_list, to_dot, to_edge_list, total_graph
from .ring import RingError, build_ring, is_local, maximal_ideal, two_in_zr, zero_divisors
from .ringexpr import ParseError, parse_ring_expression

EXIT_OK, EXIT_DISCREPANCY, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _ring(expr: str):
    try:
        return build_ring(parse_ring_expression(expr))
    except ParseError as exc:
        raise UsageError(str(exc)) from None
    except RingError as exc:
        raise UsageError(f"cannot build {expr!r}: {exc}") from None


def read_graph_file(path: str) -> Graph:
    try:
        with open(path) as fh:
            return parse_edge_list(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except GraphError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _component_name(g: Graph) -> str:
    kind = complete_kind(g)
    if kind is not None:
        return kind[0]
    return f"<{g.n} vertices, {g.num_edges} edges>"


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_ring_info(args, out) -> int:
    ring = _ring(args.expr)
    z = zero_divisors(ring)
    local = is_local(ring)
    info = {
        "characteristic": ring.characteristic,
        "local": local,
        "maximal_ideal": [ring.names[x] for x in sorted(maximal_ideal(ring))] if local else None,
        "order": ring.order,
        "ring": ring.name,
        "two_in_z": two_in_zr(ring),
        "units": len(ring.units),
        "z_size": len(z),
        "zero_divisors": z.names(),
    }
    if args.format == "json":
        print(_dump(info), file=out)
        return EXIT_OK
    print(f"ring: {ring.name}", file=out)
    print(f"order: {ring.order}", file=out)
    print(f"characteristic: {ring.characteristic}", file=out)
    print(f"|Z(R)|: {len(z)}  ({', '.join(z.names())})", file=out)
    print(f"units: {len(ring.units)}", file=out)
    print(f"local: {'yes' if local else 'no'}", file=out)
    print(f"2 in Z(R): {'yes' if info['two_in_z'] else 'no'}", file=out)
    return EXIT_OK


def cmd_total_graph(args, out) -> int:
    ring = _ring(args.expr)
    g = total_graph(ring)
    if args.format == "edges":
        out.write(to_edge_list(g))
    elif args.format == "dot":
        out.write(to_dot(g, "T"))
    elif args.format == "json":
        doc = {"edges": [[g.labels[u], g.labels[v]] for u, v in g.edges], "ring": ring.name, "vertices": list(g.labels)}
        print(_dump(doc), file=out)
    else:
        print(f"total graph of {ring.name}: {g.n} vertices, {g.num_edges} edges", file=out)
        for v in g.vertices():
            print(f"{g.labels[v]}: " + " ".join(g.labels[w] for w in g.neighbors_sorted[v]), file=out)
    return EXIT_OK


def cmd_genus(args, out) -> int:
    if (args.expr is None) == (args.graph is None):
        raise UsageError("give exactly one of a ring expression or --graph FILE")
    if args.graph is not None:
        g = read_graph_file(args.graph)
        source = args.graph
    else:
        g = total_graph(_ring(args.expr))
        source = f"T({args.expr})"
    ev = exact_genus(g, args.budget)
    parts = []
    for comp in ev.components:
        sub = induced_subgraph(g, comp.vertices)
        if sub.num_edges == 0 and sub.n == 1:
            continue
        value = comp.lower if comp.upper is not None else f">={comp.lower}"
        parts.append(f"{_component_name(sub)} ({value})")
    if args.format == "json":
        doc = {
            "components": [
                {"genus_lower": c.lower, "genus_upper": c.upper, "nodes": c.nodes, "vertices": [g.labels[v] for v in c.vertices]}
                for c in ev.components
            ],
            "evidence": evidence_json(ev, g),
            "graph": source,
            "lower": ev.lower,
            "nodes": ev.nodes,
            "upper": ev.upper,
            "verdict": ev.verdict,
        }
        print(_dump(doc), file=out)
        return EXIT_OK
    if ev.exact:
        print(f"genus = {ev.genus} (exact)", file=out)
    else:
        print(f"genus >= {ev.lower} (undecided: budget of {args.budget} nodes exhausted)", file=out)
    print("components: " + (" + ".join(parts) if parts else "none with edges"), file=out)
    print(f"search nodes: {ev.nodes}", file=out)
    for w in ev.witnesses:
        print(f"lower bound: {w.describe()}", file=out)
    if ev.rotation is not None:
        print("rotation system:", file=out)
        out.write(format_rotation(g, ev.rotation))
    return EXIT_OK


def cmd_classify(args, out) -> int:
    ring = _ring(args.expr)
    rep = classify_ring(ring, args.budget)
    if args.format == "json":
        print(_dump(rep.to_json()), file=out)
        return EXIT_OK
    print(f"ring: {rep.name}  |R| = {rep.order}  |Z(R)| = {rep.z_size}  local: {'yes' if rep.local else 'no'}", file=out)
    print(f"structure: {rep.structure.name if rep.structure else 'unrecognized'}", file=out)
    print(f"class: {rep.summary()}", file=out)
    for w in rep.evidence.witnesses:
        tag = " [trusted-formula]" if w.trusted and "[trusted-formula]" not in w.describe() else ""
        print(f"  - {w.kind}: {w.describe()}{tag}", file=out)
    if rep.evidence.rotation is not None:
        print(f"  - embedding of genus {rep.evidence.upper}:", file=out)
        for line in format_rotation(rep.graph, rep.evidence.rotation).splitlines():
            print(f"      {line}", file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    selected = [s for s in ("planar", "toroidal", "lemmas", "figures") if getattr(args, s)]
    if not selected:
        selected = ["planar", "toroidal", "lemmas", "figures"]
    results = {}
    sweep = None
    if "toroidal" in selected:
        results["toroidal"] = sweep = verify_toroidal_theorem(args.budget, args.threads)
    if "planar" in selected:
        reports = sweep.reports if sweep is not None else None
        results["planar"] = verify_planar_theorem(args.budget, args.threads, reports=reports)
    if "lemmas" in selected:
        results["lemmas"] = verify_lemmas()
    if "figures" in selected:
        results["figures"] = verify_figures()
    discrepancies = [f"{name}: {d}" for name, r in results.items() for d in r.discrepancies]
    if args.report == "json":
        doc = {name: r.to_json() for name, r in results.items()}
        doc["discrepancies"] = discrepancies
        doc["passed"] = not discrepancies
        print(_dump(doc), file=out)
    else:
        for name in selected:
            r = results[name]
            status = "PASS" if r.passed else "FAIL"
            if name in ("planar", "toroidal"):
                print(f"[{status}] {name}: {', '.join(r.found)}", file=out)
                if r.rejected:
                    print(f"        rejected (genus >= 2): {', '.join(r.rejected)}", file=out)
            else:
                print(f"[{status}] {name}: {sum(c.passed for c in r.checks)}/{len(r.checks)} checks", file=out)
        print(f"discrepancies: {len(discrepancies)}", file=out)
        for d in discrepancies:
            print(f"  {d}", file=out)
    return EXIT_DISCREPANCY if discrepancies else EXIT_OK


def cmd_catalog_list(args, out) -> int:
    entries = catalog.catalog_entries()
    if args.format == "json":
        doc = [
            {"genus_class": e.genus_class, "name": e.name, "role": e.role.value, "structure": e.structure}
            for e in entries
        ]
        print(_dump(doc), file=out)
        return EXIT_OK
    for e in entries:
        cls = ">=2" if e.genus_class >= 2 else str(e.genus_class)
        print(f"{e.name:<20} {e.role.value:<27} genus {cls:<4} {e.structure or '-'}", file=out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="totalgraph", description="Total graphs of finite rings and their genus.")
    p.add_argument("--threads", type=_positive, default=os.cpu_count() or 1, help="worker processes for sweeps")
    sub = p.add_subparsers(dest="command", required=True)

    ring = sub.add_parser("ring", help="ring queries")
    ring_sub = ring.add_subparsers(dest="ring_command", required=True)
    info = ring_sub.add_parser("info", help="order, zero-divisors, units, locality")
    info.add_argument("expr")
    info.add_argument("--format", choices=("text", "json"), default="text")
    info.set_defaults(func=cmd_ring_info)

    tg = sub.add_parser("total-graph", help="print the total graph of a ring")
    tg.add_argument("expr")
    tg.add_argument("--format", choices=("text", "json", "dot", "edges"), default="text")
    tg.set_defaults(func=cmd_total_graph)

    gen = sub.add_parser("genus", help="exact genus with certificates")
    gen.add_argument("expr", nargs="?")
    gen.add_argument("--graph", metavar="FILE", help="edge-list file instead of a ring")
    gen.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET, help="search node cap")
    gen.add_argument("--format", choices=("text", "json"), default="text")
    gen.set_defaults(func=cmd_genus)

    cl = sub.add_parser("classify", help="planar / toroidal / genus >= 2 verdict")
    cl.add_argument("expr")
    cl.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    cl.add_argument("--format", choices=("text", "json"), default="text")
    cl.set_defaults(func=cmd_classify)

    ver = sub.add_parser("verify", help="re-run the classification checks")
    ver.add_argument("target", choices=("paper",))
    for flag in ("planar", "toroidal", "lemmas", "figures"):
        ver.add_argument(f"--{flag}", action="store_true")
    ver.add_argument("--report", choices=("text", "json"), default="text")
    ver.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    ver.set_defaults(func=cmd_verify)

    cat = sub.add_parser("catalog", help="named rings")
    cat_sub = cat.add_subparsers(dest="catalog_command", required=True)
    lst = cat_sub.add_parser("list")
    lst.add_argument("--format", choices=("text", "json"), default="text")
    lst.set_defaults(func=cmd_catalog_list)
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
