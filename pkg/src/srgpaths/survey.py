"""Batch analysis of graph corpora: SRG check, primitivity and pattern findings.

Manifest lines have the form ``name kind source``:

    petersen   family  petersen
    j62        family  johnson2:6
    hs         graph6  @catalogs/hoffman_singleton.g6
    tiny       graph6  Dhc
    sq6        latin   @ls6.txt
    s13        sts     @sts13-1.txt

``@path`` is resolved relative to the manifest.  A graph6 file with several
lines yields one entry per line, named ``name#1``, ``name#2``, ...
Blank lines and lines starting with ``#`` are ignored.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import catalog, families as fam, formats
from .errors import SearchTimeout, SrgPathsError
from .graph import Graph
from .patterns import Pattern, find_induced
from .srg import SrgParams, is_primitive, srg_params

SURVEY_PATTERNS = (Pattern.P4, Pattern.P5, Pattern.COP5, Pattern.GEM)
DEFAULT_TIME_BUDGET = 60.0


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    kind: str
    payload: str  # graph6 line, design text, or family spec

    def load(self) -> Graph:
        if self.kind == "invalid":
            raise SrgPathsError(self.payload)
        if self.kind == "graph6":
            return formats.parse_graph6(self.payload)
        if self.kind == "latin":
            return fam.latin_square_graph(formats.parse_latin(self.payload))
        if self.kind == "mols":
            return fam.mols_graph(formats.parse_mols(self.payload))
        if self.kind == "sts":
            return fam.sts_block_graph(formats.parse_sts(self.payload))
        if self.kind == "family":
            return catalog.build(self.payload).graph
        raise SrgPathsError(f"unknown entry kind {self.kind!r}")


@dataclass
class SurveyResult:
    name: str
    params: Optional[SrgParams] = None
    primitive: Optional[bool] = None
    triangle_free: Optional[bool] = None
    found: dict = field(default_factory=dict)  # Pattern -> bool, or None when skipped
    witnesses: dict = field(default_factory=dict)  # Pattern -> tuple of labels
    seconds: float = 0.0
    error: Optional[str] = None

    @property
    def skipped(self) -> bool:
        return any(v is None for v in self.found.values())

    def report_rows(self) -> list:
        base = {"graph": self.name}
        if self.params is not None:
            base.update(n=self.params.n, k=self.params.k, **{"lambda": self.params.lam}, mu=self.params.mu)
        base["primitive"] = self.primitive
        if self.error is not None:
            return [dict(base, status=f"error: {self.error}", seconds=self.seconds)]
        rows = []
        for p in SURVEY_PATTERNS:
            if p not in self.found:
                continue
            hit = self.found[p]
            rows.append(dict(
                base,
                pattern=p.value,
                found=hit,
                witness=self.witnesses.get(p),
                status="skipped" if hit is None else "ok",
                seconds=self.seconds,
            ))
        if not rows:
            rows.append(dict(base, status="not-srg" if self.params is None else "ok", seconds=self.seconds))
        return rows


SURVEY_COLUMNS = (
    "graph", "n", "k", "lambda", "mu", "primitive", "pattern", "found", "witness", "status", "seconds",
)


def parse_manifest(text: str, base: Path = Path(".")) -> list:
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(None, 2)
        if len(parts) != 3:
            entries.append(CorpusEntry(f"line{lineno}", "invalid", f"malformed manifest line {line!r}"))
            continue
        name, kind, source = parts
        if source.startswith("@"):
            path = base / source[1:]
            try:
                text_in = path.read_text()
            except OSError as exc:
                entries.append(CorpusEntry(name, "invalid", f"cannot read {path}: {exc}"))
                continue
            if kind == "graph6":
                lines = [ln.strip() for ln in text_in.splitlines() if ln.strip()]
                if len(lines) == 1:
                    entries.append(CorpusEntry(name, kind, lines[0]))
                else:
                    entries.extend(CorpusEntry(f"{name}#{i}", kind, ln) for i, ln in enumerate(lines, 1))
                continue
            source = text_in
        entries.append(CorpusEntry(name, kind, source))
    return entries


def analyse(entry: CorpusEntry, time_budget: float = DEFAULT_TIME_BUDGET) -> SurveyResult:
    start = time.monotonic()
    result = SurveyResult(entry.name)
    try:
        g = entry.load()
    except (SrgPathsError, ValueError) as exc:
        result.error = str(exc)
        return result
    result.params = srg_params(g)
    if result.params is None:
        result.seconds = time.monotonic() - start
        return result
    result.primitive = is_primitive(g)
    result.triangle_free = result.params.lam == 0 or result.params.k == 0
    deadline = start + time_budget
    for p in SURVEY_PATTERNS:
        try:
            outcome = find_induced(g, p, deadline=deadline)
        except SearchTimeout:
            result.found[p] = None
            continue
        result.found[p] = outcome.found
        if outcome.found:
            result.witnesses[p] = tuple(g.label(v) for v in outcome.witness)
    result.seconds = time.monotonic() - start
    return result


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("SRG_PATHS_THREADS", "1")))
    except ValueError:
        return 1


def run_survey(entries, time_budget: float = DEFAULT_TIME_BUDGET, workers: Optional[int] = None) -> list:
    """Analyse every entry; results come back in manifest order."""
    workers = thread_count() if workers is None else workers
    if workers <= 1 or len(entries) <= 1:
        return [analyse(e, time_budget) for e in entries]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(analyse, entries, [time_budget] * len(entries)))


def builtin_entries(max_n: int = 36) -> list:
    return [CorpusEntry(spec, "family", spec) for spec in catalog.builtin_survey_specs(max_n)]


@dataclass(frozen=True)
class SurveySummary:
    srgs: int
    primitive: int
    cop5_free: tuple  # names of primitive SRGs with no induced co-P5
    cop5_free_with_triangles: tuple  # counterexamples to "lambda > 0 gives a co-P5"
    p5_free: tuple
    p5_free_complement_has_triangles: tuple  # counterexamples to "complement lambda > 0 gives a P5"
    skipped: tuple
    errors: tuple

    def lines(self) -> list:
        def names(xs):
            return ", ".join(xs) if xs else "none"

        return [
            f"strongly regular: {self.srgs}, primitive: {self.primitive}",
            f"co-P5-free primitive: {len(self.cop5_free)} ({names(self.cop5_free)})",
            f"  of which contain triangles: {names(self.cop5_free_with_triangles)}",
            f"P5-free primitive: {len(self.p5_free)} ({names(self.p5_free)})",
            f"  of which have complement with triangles: {names(self.p5_free_complement_has_triangles)}",
            f"skipped (time budget): {names(self.skipped)}",
            f"errors: {names(self.errors)}",
        ]


def summarize(results) -> SurveySummary:
    from .srg import complement_params

    srgs = [r for r in results if r.params is not None]
    prim = [r for r in srgs if r.primitive]
    cop5_free = [r for r in prim if r.found.get(Pattern.COP5) is False]
    p5_free = [r for r in prim if r.found.get(Pattern.P5) is False]
    return SurveySummary(
        srgs=len(srgs),
        primitive=len(prim),
        cop5_free=tuple(r.name for r in cop5_free),
        cop5_free_with_triangles=tuple(r.name for r in cop5_free if not r.triangle_free),
        p5_free=tuple(r.name for r in p5_free),
        p5_free_complement_has_triangles=tuple(
            r.name for r in p5_free if complement_params(r.params).lam > 0
        ),
        skipped=tuple(r.name for r in results if r.skipped),
        errors=tuple(r.name for r in results if r.error is not None),
    )


def survey_report(results, fmt: str = "csv") -> str:
    rows = [row for r in results for row in r.report_rows()]
    return formats.emit_report(rows, fmt, SURVEY_COLUMNS)
