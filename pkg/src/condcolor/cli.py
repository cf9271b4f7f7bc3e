"""``condcolor`` command line.

Exit codes: 0 proven or valid, 1 proven invalid or mismatch, 2 input error,
3 indeterminate (a search budget ran out).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from condcolor import closed_form, crosscheck, io
from condcolor.families import FamilySpec
from condcolor.graph import Graph, InputError, max_degree, min_degree
from condcolor.kernel import trivial_lower_bound, verify_conditional, vset_lower_bound
from condcolor.solver import DEFAULT_BUDGET, DEFAULT_CAP, compute_chi_r, is_uniquely_kr_colorable

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INPUT = 2
EXIT_INDETERMINATE = 3


def _emit(args, payload: dict, table: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print("\n".join(table))


def _family_from_flags(args) -> FamilySpec:
    if args.spec:
        return FamilySpec.parse(args.spec)
    if not args.family:
        raise InputError("give a family name or --spec")
    return _flags_spec(args.family, args)


def _flags_spec(tag: str, args, outer: bool = True) -> FamilySpec:
    tag = FamilySpec.parse(tag).tag
    if tag in ("line", "middle"):
        if not outer or not args.of:
            raise InputError(f"{tag} needs --of FAMILY")
        return FamilySpec(tag, (_flags_spec(args.of, args, outer=False),))

    def need(name: str) -> int:
        value = getattr(args, name)
        if value is None:
            raise InputError(f"{tag} needs --{name}")
        return value

    if tag in ("path", "cycle", "complete", "gear", "friendship"):
        return FamilySpec(tag, (need("n"),))
    if tag == "windmill":
        return FamilySpec(tag, (need("k"), need("n")))
    if tag == "kary":
        return FamilySpec(tag, (need("k"), need("h")))
    if tag == "kpartite":
        if not args.sizes:
            raise InputError("kpartite needs --sizes, e.g. --sizes 2,3")
        try:
            sizes = tuple(int(s) for s in args.sizes.split(","))
        except ValueError:
            raise InputError(f"bad --sizes {args.sizes!r}") from None
        return FamilySpec(tag, sizes)
    if tag == "unique32":
        return FamilySpec(tag, (need("k"), args.policy))
    raise InputError(f"family {tag!r} is only available through --spec")


def _load_graph(args) -> Graph:
    if getattr(args, "spec", None):
        return FamilySpec.parse(args.spec).build()
    if not args.graph:
        raise InputError("give a graph file or --spec")
    if args.graph == "-":
        return io.loads_graph(sys.stdin.read())
    return io.read_graph(args.graph)


def _summary_lines(g: Graph) -> list[str]:
    delta = max_degree(g) if g.n else 0
    small = min_degree(g) if g.n else 0
    fam = f"family={g.family} " if g.family is not None else ""
    return [f"{fam}n={g.n} |E|={g.num_edges} Delta={delta} delta={small}"]


# commands -------------------------------------------------------------------


def cmd_generate(args) -> int:
    spec = _family_from_flags(args)
    g = spec.build()
    if g.family is None:
        g = g.with_meta(family=spec)
    text = io.dumps_graph(g)
    delta = max_degree(g) if g.n else 0
    small = min_degree(g) if g.n else 0
    payload = {"family": str(spec), "n": g.n, "edges": g.num_edges, "Delta": delta,
               "delta": small}
    if args.out:
        Path(args.out).write_text(text)
        payload["out"] = args.out
        _emit(args, payload, _summary_lines(g) + [f"wrote {args.out}"])
    else:
        sys.stdout.write(text)
        print(_summary_lines(g)[0], file=sys.stderr)
    return EXIT_OK


def cmd_chi(args) -> int:
    g = _load_graph(args)
    clique = [int(x) for x in args.clique.split(",")] if args.clique else None
    cert = compute_chi_r(g, args.r, budget=args.budget, clique=clique)
    payload = {
        "r": args.r,
        "chi_r": cert.chi_r,
        "status": "proven" if cert.proven else "indeterminate",
        "lower_bound": cert.lower_bound,
        "lower_bound_kind": cert.lower_bound_kind,
        "lower_bound_witness": list(cert.lower_bound_witness) if cert.lower_bound_witness else None,
        "witness": list(cert.witness.colors) if cert.witness else None,
        "canonical": cert.canonical,
        "nodes": cert.nodes,
    }
    if cert.proven:
        table = [f"chi_{args.r} = {cert.chi_r}",
                 f"lower bound: {cert.lower_bound} ({cert.lower_bound_kind})"]
        if cert.lower_bound_witness:
            table.append(f"bound witness: {list(cert.lower_bound_witness)}")
        table.append(f"witness: {list(cert.witness.colors)}")
    else:
        table = [f"chi_{args.r} INDETERMINATE (budget {args.budget} nodes exhausted)",
                 f"proven lower bound: {cert.lower_bound} ({cert.lower_bound_kind})"]
    table.append(f"nodes: {cert.nodes}")
    _emit(args, payload, table)
    if args.witness_out and cert.witness is not None:
        Path(args.witness_out).write_text(io.dumps_coloring(cert.witness, args.r))
    return EXIT_OK if cert.proven else EXIT_INDETERMINATE


def cmd_verify(args) -> int:
    g = _load_graph(args)
    doc = io.read_coloring(args.coloring) if args.coloring != "-" else \
        io.loads_coloring(sys.stdin.read())
    r = args.r if args.r is not None else doc.r
    if r is None:
        raise InputError("order r not given and not recorded in the coloring document")
    c = doc.coloring
    if len(c) != g.n:
        raise InputError(f"coloring has {len(c)} entries, graph has {g.n} vertices")
    report = verify_conditional(g, c, r, require_surjective=args.surjective)
    items = [{"condition": v.condition, "where": v.where} for v in report.violations]
    payload = {"ok": report.ok, "k": c.k, "r": r, "violations": items}
    table = ["OK" if report.ok else f"INVALID ({len(items)} violations)"]
    for v in report.violations:
        table.append(f"  {v}")
    _emit(args, payload, table)
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_unique(args) -> int:
    g = _load_graph(args)
    rep = is_uniquely_kr_colorable(g, args.r, cap=args.cap, budget=args.budget)
    if rep.unique is None:
        verdict = "INDETERMINATE"
    else:
        verdict = "UNIQUE" if rep.unique else "NOT UNIQUE"
    payload = {
        "r": args.r, "chi_r": rep.chi_r, "verdict": verdict, "partitions": rep.partitions,
        "complete": rep.complete,
        "first": [list(b) for b in rep.first] if rep.first else None,
        "second": [list(b) for b in rep.second] if rep.second else None,
    }
    table = [f"chi_{args.r} = {rep.chi_r}", f"partitions found: {rep.partitions}"
             + ("" if rep.complete else " (search incomplete)"), f"verdict: {verdict}"]
    if rep.first:
        table.append(f"partition: {[list(b) for b in rep.first]}")
    if rep.second:
        table.append(f"second partition: {[list(b) for b in rep.second]}")
    _emit(args, payload, table)
    return EXIT_INDETERMINATE if rep.unique is None else EXIT_OK


def cmd_bounds(args) -> int:
    g = _load_graph(args)
    triv = trivial_lower_bound(g, args.r)
    size, wit = vset_lower_bound(g, args.r, budget=args.vset_budget)
    payload = {"r": args.r, "trivial": triv, "vset": size, "vset_witness": list(wit.members),
               "best": max(triv, size)}
    table = [f"trivial bound min(r, Delta)+1: {triv}",
             f"Vset-d2r bound: {size}  members {list(wit.members)}",
             f"best: {max(triv, size)}"]
    _emit(args, payload, table)
    return EXIT_OK


def cmd_formula(args) -> int:
    spec = _family_from_flags(args)
    res = closed_form.chi_r_formula(spec, args.r, budget=args.budget)
    payload = {"family": str(spec), "r": args.r, "value": res.value, "guard_ok": res.guard_ok,
               "entry": res.entry, "branch": res.branch}
    if not res.guard_ok:
        _emit(args, payload, [f"{spec}: no closed-form hypothesis holds at r={args.r} "
                              f"(entry {res.entry})"])
        return EXIT_INPUT
    table = [f"chi_{args.r}({spec}) = {res.value}", f"entry: {res.entry}, branch {res.branch}"]
    code = EXIT_OK
    if args.construct:
        try:
            con = closed_form.construct_coloring(spec, args.r, budget=args.budget)
        except closed_form.GuardError:
            table.append("construction: none recorded for this branch")
            payload["construction"] = None
        else:
            eff = min(args.r, max_degree(con.graph))
            rep = closed_form.check_construction(con, res.value, eff)
            payload["construction"] = {"colors": list(con.coloring.colors), "ok": rep.ok,
                                       "violations": [str(v) for v in rep.violations]}
            table.append(f"construction: {list(con.coloring.colors)}")
            table.append("construction verifies" if rep.ok else
                         "CONSTRUCTION-INVALID: " + "; ".join(str(v) for v in rep.violations))
            if not rep.ok:
                code = EXIT_INVALID
    _emit(args, payload, table)
    return code


def cmd_crosscheck(args) -> int:
    fams = [f for f in args.families.split(",") if f] if args.families else None
    try:
        rows = crosscheck.crosscheck(fams, max_n=args.max_n, budget=args.budget)
    except KeyError as exc:
        raise InputError(f"{exc.args[0]}; known keys: {', '.join(crosscheck.SWEEPS)}") from None
    jsonl = crosscheck.to_jsonl(rows)
    if args.out:
        Path(args.out).write_text(jsonl)
    if args.format == "json":
        sys.stdout.write(jsonl)
    else:
        sys.stdout.write(crosscheck.to_table(rows))
    counts = crosscheck.summary(rows)
    if counts[crosscheck.MISMATCH]:
        return EXIT_INVALID
    if counts[crosscheck.INDETERMINATE]:
        return EXIT_INDETERMINATE
    return EXIT_OK


# parser ---------------------------------------------------------------------


def _family_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("family", nargs="?", help="family name, e.g. gear, windmill, middle")
    p.add_argument("--spec", help="full family expression, e.g. 'middle(cycle(5))'")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--h", type=int)
    p.add_argument("--sizes", help="part sizes for kpartite, comma separated")
    p.add_argument("--of", help="base family for line/middle")
    p.add_argument("--policy", default="first", help="edge-choice policy for unique32")


def _graph_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", nargs="?", help="graph document or edge list ('-' for stdin)")
    p.add_argument("--spec", help="build the graph from a family expression instead")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("-v", "--verbose", action="store_true", help="log notices")

    parser = argparse.ArgumentParser(prog="condcolor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common], help="write a family graph document")
    _family_flags(p)
    p.add_argument("--out", "-o", help="output path (stdout if omitted)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("chi", parents=[common], help="compute chi_r exactly")
    _graph_input(p)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node limit")
    p.add_argument("--clique", help="known clique, comma separated ids, used as a lower bound")
    p.add_argument("--witness-out", help="write the witness coloring document here")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("verify", parents=[common], help="check a coloring")
    _graph_input(p)
    p.add_argument("coloring", help="coloring document")
    p.add_argument("--r", type=int)
    p.add_argument("--surjective", action=argparse.BooleanOptionalAction, default=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("unique", parents=[common], help="decide unique (chi_r, r)-colorability")
    _graph_input(p)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum colorings enumerated")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_unique)

    p = sub.add_parser("bounds", parents=[common], help="trivial and Vset-d2r lower bounds")
    _graph_input(p)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--vset-budget", type=int, default=200_000)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("formula", parents=[common], help="closed-form chi_r lookup")
    _family_flags(p)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--construct", action="store_true", help="build and verify the coloring")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("crosscheck", parents=[common], help="formulas against the solver")
    p.add_argument("--families", help=f"comma separated keys from: {', '.join(crosscheck.SWEEPS)}")
    p.add_argument("--max-n", type=int, help="size limit passed to each sweep")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--out", help="also write JSONL rows here")
    p.set_defaults(func=cmd_crosscheck)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
