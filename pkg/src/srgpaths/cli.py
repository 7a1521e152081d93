"""Command-line interface.

Exit codes: 0 success / pattern found, 1 semantic negative (not found,
failed claim, not an SRG), 2 usage or input error, 3 oracle/constructive
disagreement.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import catalog, claims, families as fam, formats, survey
from .errors import BadOrder, BelowThreshold, SearchTimeout, SrgPathsError
from .graph import girth
from .patterns import Pattern, find_induced, is_cograph
from .srg import is_primitive, multipartite_decomposition, srg_params
from .witnesses import (
    explicit_witness,
    latin_cop5,
    latin_p5,
    mols_cop5,
    mols_p5,
    p4_witness,
    sts_cop5,
    sts_p5,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_DISAGREE = 0, 1, 2, 3

GEN_FAMILIES = ("johnson2", "kneser2", "hamming2", "petersen", "c5", "multipartite", "latin", "mols", "sts-block")


class UsageError(Exception):
    pass


def _err(msg: str) -> None:
    print(f"srgpaths: {msg}", file=sys.stderr)


def _write(text: str, out) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


# ---------------------------------------------------------------------------
# input loading


def _detect_kind(path: str, kind: str) -> str:
    if kind != "auto":
        return kind
    suffix = Path(path).suffix.lower()
    return {".lat": "latin", ".latin": "latin", ".mols": "mols", ".sts": "sts"}.get(suffix, "graph6")


def load_input(path: str, kind: str = "auto"):
    """Return ``(graph, design, kind)`` for a file of the given kind."""
    kind = _detect_kind(path, kind)
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    if kind == "graph6":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise UsageError(f"{path}: no graph6 line")
        return formats.parse_graph6(lines[0]), None, kind
    if kind == "latin":
        sq = formats.parse_latin(text)
        return fam.latin_square_graph(sq), sq, kind
    if kind == "mols":
        pair = formats.parse_mols(text)
        return fam.mols_graph(pair), pair, kind
    if kind == "sts":
        s = formats.parse_sts(text)
        return fam.sts_block_graph(s), s, kind
    raise UsageError(f"unknown input kind {kind!r}")


# ---------------------------------------------------------------------------
# gen


def _gen_instance(args) -> catalog.Instance:
    family = args.family
    nums = args.args
    if family == "sts-block":
        sources = [("sts-bose", args.bose), ("sts-skolem", args.skolem), ("sts-paper", args.paper)]
        chosen = [(k, v) for k, v in sources if v is not None]
        if args.file:
            s = formats.parse_sts(Path(args.file).read_text())
            return catalog.Instance(args.file, fam.sts_block_graph(s), fam.expected_params("sts_block", s.m), s, "sts")
        if len(chosen) != 1 and not nums:
            raise UsageError("sts-block needs exactly one of --bose, --skolem, --paper, --file or an order")
        spec = f"{chosen[0][0]}:{chosen[0][1]}" if chosen else f"sts:{nums[0]}"
        return catalog.build(spec)
    spec = ":".join([family] + [str(n) for n in nums])
    return catalog.build(spec)


def cmd_gen(args) -> int:
    inst = _gen_instance(args)
    if args.design:
        if inst.design is None:
            raise UsageError(f"{args.family} has no design text form")
        if isinstance(inst.design, fam.LatinSquare):
            text = formats.write_latin(inst.design)
        elif isinstance(inst.design, fam.MolsPair):
            text = formats.write_mols(inst.design)
        else:
            text = formats.write_sts(inst.design)
    else:
        text = formats.write_graph6(inst.graph) + "\n"
    _write(text, args.output)
    measured = srg_params(inst.graph)
    info = sys.stderr if args.output in (None, "-") else sys.stdout
    print(f"{inst.name}: n={inst.graph.n} expected {inst.expected} measured {measured}", file=info)
    return EXIT_OK


# ---------------------------------------------------------------------------
# find


def _constructive(pattern: Pattern, kind: str, graph, design):
    """Run the construction that applies to this input, or return None."""
    if pattern is Pattern.P4:
        return p4_witness(graph)
    table = {
        ("latin", Pattern.P5): latin_p5,
        ("latin", Pattern.COP5): latin_cop5,
        ("mols", Pattern.P5): mols_p5,
        ("mols", Pattern.COP5): mols_cop5,
        ("sts", Pattern.P5): sts_p5,
        ("sts", Pattern.COP5): sts_cop5,
    }
    construct = table.get((kind, pattern))
    if construct is None:
        return None
    return construct(design)


def cmd_find(args) -> int:
    graph, design, kind = load_input(args.input, args.kind)
    pattern = Pattern.parse(args.pattern)
    deadline = time.monotonic() + args.time_budget if args.time_budget else None
    oracle = None
    if args.mode in ("oracle", "both"):
        try:
            oracle = find_induced(graph, pattern, deadline=deadline)
        except SearchTimeout:
            print(f"{pattern.value}: skipped (time budget {args.time_budget}s)")
            return EXIT_USAGE
        if oracle.found:
            labels = " / ".join(graph.label(v) for v in oracle.witness)
            print(f"oracle: {pattern.value} found: {labels}")
        else:
            print(f"oracle: {pattern.value} not found")
    constructive_found = None
    if args.mode in ("constructive", "both"):
        try:
            w = _constructive(pattern, kind, graph, design)
        except BelowThreshold as exc:
            print(f"constructive: {pattern.value} impossible ({exc})")
            constructive_found = False
        except (BadOrder, SrgPathsError) as exc:
            print(f"constructive: not applicable ({type(exc).__name__}: {exc})")
            w = None
        else:
            if w is None:
                print(f"constructive: no construction for {pattern.value} on {kind} input")
            else:
                print(f"constructive: {w}")
                constructive_found = True
        if args.mode == "constructive":
            if constructive_found is None:
                return EXIT_USAGE
            return EXIT_OK if constructive_found else EXIT_NEGATIVE
    if args.mode == "both" and constructive_found is not None and constructive_found != oracle.found:
        _err("oracle and constructive results disagree")
        return EXIT_DISAGREE
    return EXIT_OK if oracle.found else EXIT_NEGATIVE


# ---------------------------------------------------------------------------
# witness


def cmd_witness(args) -> int:
    pattern = Pattern.parse(args.pattern) if getattr(args, "pattern", None) else Pattern.P4
    if args.construction == "p4":
        graph, _, _ = load_input(args.input, "graph6")
        w = p4_witness(graph)
    elif args.construction == "explicit":
        w = explicit_witness(args.kind, pattern, args.order)
    else:
        design = _witness_design(args)
        construct = {
            ("latin", Pattern.P5): latin_p5,
            ("latin", Pattern.COP5): latin_cop5,
            ("mols", Pattern.P5): mols_p5,
            ("mols", Pattern.COP5): mols_cop5,
            ("sts", Pattern.P5): sts_p5,
            ("sts", Pattern.COP5): sts_cop5,
        }.get((args.construction, pattern))
        if construct is None:
            raise UsageError(f"no {args.construction} construction for {pattern.value}")
        w = construct(design)
    print(w)
    print("vertices: " + " ".join(str(v) for v in w.vertices))
    return EXIT_OK


def _witness_design(args):
    if args.file:
        text = Path(args.file).read_text()
        parser = {"latin": formats.parse_latin, "mols": formats.parse_mols, "sts": formats.parse_sts}
        return parser[args.construction](text)
    if args.construction == "latin" and args.cyclic is not None:
        return fam.cyclic_latin(args.cyclic)
    if args.construction == "mols" and args.cyclic is not None:
        return fam.orthogonal_pair(args.cyclic)
    if args.construction == "sts":
        if args.bose is not None:
            return fam.bose_sts(args.bose)
        if args.skolem is not None:
            return fam.skolem_sts(args.skolem)
        if args.paper is not None:
            return fam.paper_sts13(args.paper)
    raise UsageError("no design given (use --file or a generator option)")


# ---------------------------------------------------------------------------
# check


def cmd_check(args) -> int:
    graph, _, _ = load_input(args.input, args.kind)
    params = srg_params(graph)
    print(f"vertices: {graph.n}, edges: {graph.edge_count()}, girth: {girth(graph)}")
    print(f"cograph: {str(is_cograph(graph)).lower()}")
    if params is None:
        print("strongly regular: no")
        return EXIT_NEGATIVE
    print(f"strongly regular: {params}")
    print(f"primitive: {str(is_primitive(graph)).lower()}")
    shape = multipartite_decomposition(graph)
    if shape is not None:
        print(f"complete multipartite: K_({shape.r} x {shape.m})")
    return EXIT_OK


# ---------------------------------------------------------------------------
# survey / verify-paper


def cmd_survey(args) -> int:
    if args.builtin:
        entries = survey.builtin_entries(args.max_n)
    elif args.manifest:
        path = Path(args.manifest)
        try:
            text = path.read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc}") from exc
        entries = survey.parse_manifest(text, path.parent)
    else:
        raise UsageError("give a manifest path or --builtin")
    results = survey.run_survey(entries, args.time_budget)
    _write(survey.survey_report(results, args.format), args.output)
    summary = survey.summarize(results)
    for line in summary.lines():
        print(line, file=sys.stderr)
    if args.figure:
        from .plots import render_survey_figure

        render_survey_figure(results, args.figure)
    return EXIT_USAGE if summary.errors else EXIT_OK


def cmd_verify_paper(args) -> int:
    opts = claims.Options(seed=args.seed, random_graphs=args.random_graphs, inject_fault=args.inject_fault)
    results = claims.run_claims(args.only, opts)
    _write(claims.claims_report(results, args.format), args.output)
    failed = [r for r in results if r.failed]
    for r in failed:
        _err(f"FAILED {r.claim}: {r.detail}")
    print(
        f"{len(results)} claims, {len(results) - len(failed)} passed or evidence, {len(failed)} failed",
        file=sys.stderr,
    )
    if args.figure:
        from .plots import render_claims_figure

        render_claims_figure(results, args.figure)
    return EXIT_NEGATIVE if failed else EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="srgpaths", description="Induced paths in strongly regular graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a family member as graph6 or design text")
    p.add_argument("family", choices=GEN_FAMILIES)
    p.add_argument("args", nargs="*", type=int, help="order(s) of the family")
    p.add_argument("-o", "--output", help="output path (default stdout)")
    p.add_argument("--bose", type=int, metavar="M")
    p.add_argument("--skolem", type=int, metavar="M")
    p.add_argument("--paper", type=int, metavar="I", help="bundled STS(13) number 1 or 2")
    p.add_argument("--file", help="STS text file for sts-block")
    p.add_argument("--design", action="store_true", help="write the Latin/MOLS/STS text instead of graph6")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("find", help="search a graph for an induced pattern")
    p.add_argument("input")
    p.add_argument("pattern", help="P3, P4, P5, COP5, C5, GEM or COGEM")
    p.add_argument("--kind", default="auto", choices=("auto", "graph6", "latin", "mols", "sts"))
    p.add_argument("--mode", default="oracle", choices=("oracle", "constructive", "both"))
    p.add_argument("--time-budget", type=float, default=survey.DEFAULT_TIME_BUDGET)
    p.set_defaults(func=cmd_find)

    p = sub.add_parser("witness", help="run a constructive witness extraction")
    wsub = p.add_subparsers(dest="construction", required=True)
    w = wsub.add_parser("p4", help="induced P4 in a primitive SRG (graph6 file)")
    w.add_argument("input")
    w.set_defaults(func=cmd_witness)
    w = wsub.add_parser("explicit", help="figure witness in J(m,2) or H(2,m)")
    w.add_argument("kind", choices=("johnson2", "hamming2"))
    w.add_argument("pattern")
    w.add_argument("order", type=int)
    w.set_defaults(func=cmd_witness)
    for name in ("latin", "mols", "sts"):
        w = wsub.add_parser(name, help=f"greedy construction on a {name} design")
        w.add_argument("pattern")
        w.add_argument("--file")
        if name in ("latin", "mols"):
            w.add_argument("--cyclic", type=int, metavar="M")
        else:
            w.add_argument("--bose", type=int, metavar="M")
            w.add_argument("--skolem", type=int, metavar="M")
            w.add_argument("--paper", type=int, metavar="I")
        w.set_defaults(func=cmd_witness)

    p = sub.add_parser("check", help="SRG parameters, primitivity and cograph test")
    p.add_argument("input")
    p.add_argument("--kind", default="auto", choices=("auto", "graph6", "latin", "mols", "sts"))
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("survey", help="analyse every graph in a manifest")
    p.add_argument("manifest", nargs="?")
    p.add_argument("--builtin", action="store_true", help="survey the generated primitive SRGs")
    p.add_argument("--max-n", type=int, default=36)
    p.add_argument("-o", "--output")
    p.add_argument("--format", default="csv", choices=("csv", "jsonl"))
    p.add_argument("--figure", help="also render a figure to this path")
    p.add_argument("--time-budget", type=float, default=survey.DEFAULT_TIME_BUDGET)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("verify-paper", help="run the full claim suite")
    p.add_argument("--only", action="append", choices=claims.GROUPS, help="restrict to a group (repeatable)")
    p.add_argument("-o", "--output")
    p.add_argument("--format", default="csv", choices=("csv", "jsonl"))
    p.add_argument("--figure", help="also render a figure to this path")
    p.add_argument("--seed", type=int, default=claims.DEFAULT_SEED)
    p.add_argument("--random-graphs", type=int, default=claims.DEFAULT_RANDOM_GRAPHS)
    p.add_argument("--inject-fault", action="store_true", help="negative control: drop an edge of Petersen")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BelowThreshold as exc:
        _err(f"BelowThreshold: {exc}")
        return EXIT_NEGATIVE
    except (UsageError, SrgPathsError, OSError) as exc:
        _err(f"{type(exc).__name__}: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
