"""The executable claim suite behind ``verify-paper``.

Each claim yields one ``ClaimResult`` row.  Status is ``pass``/``fail`` for
theorems and fixtures, and ``evidence`` for open questions, which are
reported but never fail a run.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from . import catalog
from . import families as fam
from .errors import BadOrder, BelowThreshold, ImprimitiveInput, SrgPathsError
from .formats import (
    emit_report,
    parse_graph6,
    parse_latin,
    parse_mols,
    parse_sts,
    write_graph6,
    write_latin,
    write_mols,
    write_sts,
)
from .graph import Graph, cycle_graph
from .patterns import Pattern, find_induced, induces_pattern, is_cograph, validate_witness
from .srg import complement_params, is_primitive, srg_params
from .witnesses import (
    explicit_witness,
    latin_cop5,
    latin_p5,
    mols_cop5,
    mols_p5,
    p4_branch,
    p4_witness,
    sts_cop5,
    sts_p5,
)

GROUPS = ("params", "p4", "cograph", "johnson", "hamming", "latin", "sts", "trianglefree", "formats")
CLAIM_COLUMNS = ("claim", "group", "status", "detail")

DEFAULT_SEED = 20240101
DEFAULT_RANDOM_GRAPHS = 10_000

PAPER_STS13_P5 = ("1 2 3", "1 4 5", "4 6 7", "6 8 9", "8 10 11")
PRINTED_STS13_COP5 = ("1 2 3", "1 4 5", "1 9 10", "2 4 8", "4 6 7")
DERIVED_STS13_COP5 = ("1 2 3", "1 4 5", "4 6 7", "3 6 12", "1 9 10")

# cells highlighted in the order-6 cyclic square
LS6_P5_CELLS = ((0, 0), (0, 1), (1, 1), (1, 2), (5, 4))
LS6_COP5_CELLS = ((0, 0), (0, 1), (0, 2), (3, 0), (3, 1))


@dataclass(frozen=True)
class ClaimResult:
    claim: str
    group: str
    status: str
    detail: str

    @property
    def failed(self) -> bool:
        return self.status == "fail"

    def as_row(self) -> dict:
        return {"claim": self.claim, "group": self.group, "status": self.status, "detail": self.detail}


@dataclass
class Options:
    seed: int = DEFAULT_SEED
    random_graphs: int = DEFAULT_RANDOM_GRAPHS
    inject_fault: bool = False


def _ok(flag: bool) -> str:
    return "pass" if flag else "fail"


def _remove_one_edge(g: Graph) -> Graph:
    u, v = g.edges()[0]
    rows = list(g.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows), g.labels)


def _catalog(opts: Options) -> list:
    instances = catalog.parameter_catalog()
    if opts.inject_fault:
        instances = [
            catalog.Instance(i.name, _remove_one_edge(i.graph), i.expected, i.design, i.kind)
            if i.name == "petersen" else i
            for i in instances
        ]
    return instances


# ---------------------------------------------------------------------------
# groups


def claims_params(opts: Options) -> Iterator[ClaimResult]:
    for inst in _catalog(opts):
        measured = srg_params(inst.graph)
        yield ClaimResult(
            f"params/{inst.name}", "params", _ok(measured == inst.expected),
            f"measured {measured} expected {inst.expected}",
        )
    t2 = fam.expected_params("pseudo_latin", 2, 7)
    yield ClaimResult(
        "params/pseudo_latin:t=2:m=7", "params", _ok(t2 == fam.expected_params("mols", 7)),
        f"pseudo-Latin t=2 gives {t2}",
    )
    pet = fam.expected_params("petersen")
    yield ClaimResult(
        "params/complement-formula", "params",
        _ok(complement_params(pet) == fam.expected_params("johnson2", 5)),
        f"complement of {pet} is {complement_params(pet)}",
    )


def claims_p4(opts: Options) -> Iterator[ClaimResult]:
    for inst in _catalog(opts):
        g = inst.graph
        params = srg_params(g)
        if params is None or g.n < 2 or not is_primitive(g):
            continue
        try:
            w = p4_witness(g)
        except SrgPathsError as exc:
            yield ClaimResult(f"p4/{inst.name}", "p4", "fail", f"{type(exc).__name__}: {exc}")
            continue
        branch = p4_branch(params.lam, params.mu)
        ok = (
            validate_witness(g, w.vertices, Pattern.P4)
            and w.branch == branch
            and find_induced(g, Pattern.P4).found
            and not is_cograph(g)
        )
        yield ClaimResult(f"p4/{inst.name}", "p4", _ok(ok), f"branch {w.branch}: {' '.join(w.labels)}")
    for r in range(1, 6):
        for m in range(1, 6):
            g = fam.complete_multipartite(r, m)
            ok = is_cograph(g) and not find_induced(g, Pattern.P4).found
            if g.n >= 2:
                try:
                    p4_witness(g)
                    ok = False
                except ImprimitiveInput:
                    pass
            yield ClaimResult(f"p4/K_{r}x{m}-is-cograph", "p4", _ok(ok), "P4-free, imprimitive")


def random_graph(rng: random.Random, max_n: int = 10) -> Graph:
    n = rng.randint(0, max_n)
    density = rng.random()
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density]
    return Graph.from_edges(n, edges)


def claims_cograph(opts: Options) -> Iterator[ClaimResult]:
    rng = random.Random(opts.seed)
    mismatches = cographs = 0
    for _ in range(opts.random_graphs):
        g = random_graph(rng)
        co = is_cograph(g)
        cographs += co
        if co == find_induced(g, Pattern.P4).found:
            mismatches += 1
    yield ClaimResult(
        "cograph/equivalence", "cograph", _ok(mismatches == 0),
        f"{opts.random_graphs} graphs (seed {opts.seed}), {cographs} cographs, {mismatches} mismatches",
    )


def _threshold_claims(group, kind, build, orders, thresholds) -> Iterator[ClaimResult]:
    for m in orders:
        g = build(m)
        for pattern, bound in thresholds.items():
            found = find_induced(g, pattern).found
            yield ClaimResult(
                f"{group}/{kind}({m})/{pattern.value}", group, _ok(found == (m >= bound)),
                f"oracle found={found}, expected {m >= bound} (threshold m>={bound})",
            )
            try:
                w = explicit_witness(kind, pattern, m)
                ok = m >= bound and validate_witness(g, w.vertices, pattern) and found
                detail = "figure witness " + " ".join(w.labels)
            except BelowThreshold:
                ok = m < bound and not found
                detail = "below threshold"
            yield ClaimResult(f"{group}/{kind}({m})/{pattern.value}/figure", group, _ok(ok), detail)


def claims_johnson(opts: Options) -> Iterator[ClaimResult]:
    yield from _threshold_claims(
        "johnson", "johnson2", fam.johnson2, range(3, 9), {Pattern.P5: 6, Pattern.COP5: 5}
    )
    w = explicit_witness("johnson2", Pattern.P5, 6)
    yield ClaimResult(
        "johnson/figure-labels/P5", "johnson", _ok(w.labels == ("12", "23", "34", "45", "56")),
        " ".join(w.labels),
    )
    w = explicit_witness("johnson2", Pattern.COP5, 5)
    yield ClaimResult(
        "johnson/figure-labels/COP5", "johnson", _ok(w.labels == ("12", "34", "15", "23", "14")),
        " ".join(w.labels),
    )


def claims_hamming(opts: Options) -> Iterator[ClaimResult]:
    yield from _threshold_claims(
        "hamming", "hamming2", fam.hamming2, range(2, 7), {Pattern.P5: 3, Pattern.COP5: 3}
    )
    w = explicit_witness("hamming2", Pattern.P5, 3)
    yield ClaimResult(
        "hamming/figure-labels/P5", "hamming", _ok(w.labels == ("00", "01", "11", "12", "22")),
        " ".join(w.labels),
    )
    w = explicit_witness("hamming2", Pattern.COP5, 3)
    yield ClaimResult(
        "hamming/figure-labels/COP5", "hamming",
        _ok(sorted(w.labels) == ["00", "01", "02", "10", "11"]),
        " ".join(w.labels),
    )


def _constructive(name, group, graph, pattern, construct, design) -> ClaimResult:
    try:
        w = construct(design)
    except SrgPathsError as exc:
        return ClaimResult(name, group, "fail", f"{type(exc).__name__}: {exc}")
    ok = validate_witness(graph, w.vertices, pattern) and find_induced(graph, pattern).found
    return ClaimResult(name, group, _ok(ok), f"{w.branch}: " + " / ".join(w.labels))


def claims_latin(opts: Options) -> Iterator[ClaimResult]:
    for m in range(5, 13):
        sq = fam.cyclic_latin(m)
        g = fam.latin_square_graph(sq)
        yield _constructive(f"latin/cyclic({m})/P5", "latin", g, Pattern.P5, latin_p5, sq)
        if m >= 6:
            yield _constructive(f"latin/cyclic({m})/COP5", "latin", g, Pattern.COP5, latin_cop5, sq)
    for m in (9, 11, 13):
        pair = fam.orthogonal_pair(m)
        g = fam.mols_graph(pair)
        if m in (9, 11):
            yield _constructive(f"latin/mols({m})/P5", "latin", g, Pattern.P5, mols_p5, pair)
        if m in (11, 13):
            yield _constructive(f"latin/mols({m})/COP5", "latin", g, Pattern.COP5, mols_cop5, pair)
    g6 = fam.latin_square_graph(fam.cyclic_latin(6))
    p5 = [fam.cell_index(6, r, c) for r, c in LS6_P5_CELLS]
    cop5 = [fam.cell_index(6, r, c) for r, c in LS6_COP5_CELLS]
    yield ClaimResult(
        "latin/LS6-highlight/P5", "latin", _ok(validate_witness(g6, p5, Pattern.P5)),
        " / ".join(g6.label(v) for v in p5),
    )
    yield ClaimResult(
        "latin/LS6-highlight/COP5", "latin", _ok(induces_pattern(g6, cop5, Pattern.COP5)),
        " / ".join(g6.label(v) for v in cop5),
    )


STS_SYSTEMS = (
    ("sts13-1", lambda: fam.paper_sts13(1)),
    ("sts13-2", lambda: fam.paper_sts13(2)),
    ("bose-15", lambda: fam.bose_sts(15)),
    ("skolem-19", lambda: fam.skolem_sts(19)),
    ("bose-21", lambda: fam.bose_sts(21)),
    ("skolem-25", lambda: fam.skolem_sts(25)),
    ("bose-27", lambda: fam.bose_sts(27)),
)


def _blocks_to_vertices(g: Graph, labels) -> list:
    return [g.index_of(lbl) for lbl in labels]


def claims_sts(opts: Options) -> Iterator[ClaimResult]:
    for name, make in STS_SYSTEMS:
        s = make()
        g = fam.sts_block_graph(s)
        yield _constructive(f"sts/{name}/P5", "sts", g, Pattern.P5, sts_p5, s)
        yield _constructive(f"sts/{name}/COP5", "sts", g, Pattern.COP5, sts_cop5, s)
    for index in (1, 2):
        s = fam.paper_sts13(index)
        g = fam.sts_block_graph(s)
        w = sts_p5(s)
        ok = w.labels == PAPER_STS13_P5 and validate_witness(
            g, _blocks_to_vertices(g, PAPER_STS13_P5), Pattern.P5
        )
        yield ClaimResult(f"sts/sts13-{index}/P5-verbatim", "sts", _ok(ok), " / ".join(w.labels))
        derived = _blocks_to_vertices(g, DERIVED_STS13_COP5)
        yield ClaimResult(
            f"sts/sts13-{index}/COP5-derived-fixture", "sts",
            _ok(induces_pattern(g, derived, Pattern.COP5)), " / ".join(DERIVED_STS13_COP5),
        )
        printed = _blocks_to_vertices(g, PRINTED_STS13_COP5)
        edges = sum(g.has_edge(a, b) for i, a in enumerate(printed) for b in printed[i + 1:])
        yield ClaimResult(
            f"sts/sts13-{index}/COP5-printed", "sts", "evidence",
            f"printed blocks induce {edges} edges; "
            + ("a co-P5" if induces_pattern(g, printed, Pattern.COP5) else "not a co-P5"),
        )
    for m in (3, 7, 9):
        s = fam.sts_by_order(m)
        g = fam.sts_block_graph(s)
        p5 = find_induced(g, Pattern.P5).found
        cop5 = find_induced(g, Pattern.COP5).found
        try:
            sts_p5(s)
            below = False
        except BelowThreshold:
            below = True
        yield ClaimResult(
            f"sts/order-{m}-free", "sts", _ok(not p5 and not cop5 and below),
            f"P5 found={p5}, COP5 found={cop5}",
        )


def claims_trianglefree(opts: Options) -> Iterator[ClaimResult]:
    from .survey import builtin_entries, run_survey, summarize

    pet = fam.petersen()
    c5 = cycle_graph(5)
    yield ClaimResult(
        "trianglefree/petersen", "trianglefree",
        _ok(find_induced(pet, Pattern.P5).found and not find_induced(pet, Pattern.COP5).found),
        "P5 present, COP5 absent",
    )
    yield ClaimResult(
        "trianglefree/c5", "trianglefree",
        _ok(not find_induced(c5, Pattern.P5).found and not find_induced(c5, Pattern.COP5).found),
        "P5 absent, COP5 absent",
    )
    summary = summarize(run_survey(builtin_entries(), workers=1))
    yield ClaimResult(
        "trianglefree/cop5-free-are-triangle-free", "trianglefree", "evidence",
        f"co-P5-free: {', '.join(summary.cop5_free)}; with triangles: "
        f"{', '.join(summary.cop5_free_with_triangles) or 'none'}",
    )
    yield ClaimResult(
        "trianglefree/p5-free", "trianglefree", "evidence",
        f"P5-free: {', '.join(summary.p5_free)}; complement has triangles: "
        f"{', '.join(summary.p5_free_complement_has_triangles) or 'none'}",
    )


def claims_formats(opts: Options) -> Iterator[ClaimResult]:
    bad = [i.name for i in _catalog(opts) if parse_graph6(write_graph6(i.graph)) != i.graph]
    bad += [
        i.name for i in _catalog(opts)
        if write_graph6(parse_graph6(write_graph6(i.graph))) != write_graph6(i.graph)
    ]
    yield ClaimResult("formats/graph6-roundtrip", "formats", _ok(not bad), f"failures: {bad or 'none'}")
    squares = [fam.cyclic_latin(m) for m in range(1, 13)]
    ok = all(parse_latin(write_latin(sq)) == sq for sq in squares)
    pairs = [fam.orthogonal_pair(m) for m in (3, 5, 7, 9, 11)]
    ok = ok and all(parse_mols(write_mols(p)) == p for p in pairs)
    ok = ok and parse_latin(fam.fixture_text("ls6.txt")) == fam.cyclic_latin(6)
    yield ClaimResult("formats/latin-roundtrip", "formats", _ok(ok), "orders 1..12 and MOLS 3..11")
    systems = [make() for _, make in STS_SYSTEMS] + [fam.sts_by_order(m) for m in (3, 7, 9)]
    ok = all(parse_sts(write_sts(s)) == s for s in systems)
    yield ClaimResult("formats/sts-roundtrip", "formats", _ok(ok), f"{len(systems)} systems")
    for index in (1, 2):
        name = f"sts13-{index}.txt"
        text = fam.fixture_text(name)
        try:
            ok = parse_sts(text) == fam.paper_sts13(index) and write_sts(fam.paper_sts13(index)) == text
            detail = "loads, pair invariant holds, equals transcription"
        except SrgPathsError as exc:
            ok, detail = False, str(exc)
        yield ClaimResult(f"formats/fixture-{name}", "formats", _ok(ok), detail)


_RUNNERS: dict = {
    "params": claims_params,
    "p4": claims_p4,
    "cograph": claims_cograph,
    "johnson": claims_johnson,
    "hamming": claims_hamming,
    "latin": claims_latin,
    "sts": claims_sts,
    "trianglefree": claims_trianglefree,
    "formats": claims_formats,
}


def run_claims(groups=None, opts: Optional[Options] = None) -> list:
    opts = opts or Options()
    groups = list(groups) if groups else list(GROUPS)
    unknown = [g for g in groups if g not in _RUNNERS]
    if unknown:
        raise BadOrder(f"unknown claim group(s): {', '.join(unknown)}")
    results = []
    for group in GROUPS:
        if group in groups:
            results.extend(_RUNNERS[group](opts))
    return results


def claims_report(results, fmt: str = "csv") -> str:
    return emit_report([r.as_row() for r in results], fmt, CLAIM_COLUMNS)
