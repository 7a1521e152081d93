import csv
import io

from srgpaths.formats import write_graph6
from srgpaths.graph import cycle_graph, path_graph
from srgpaths.patterns import Pattern
from srgpaths.survey import (
    CorpusEntry,
    analyse,
    builtin_entries,
    parse_manifest,
    run_survey,
    summarize,
    survey_report,
    thread_count,
)

from known_graphs import graph6_line, hoffman_singleton


def test_manifest_parsing(tmp_path):
    (tmp_path / "two.g6").write_text("@\nA_\n")
    (tmp_path / "one.g6").write_text(write_graph6(cycle_graph(5)) + "\n")
    text = "# comment\n\npet family petersen\nmany graph6 @two.g6\nc5 graph6 @one.g6\nbad\nmissing graph6 @nope.g6\n"
    entries = parse_manifest(text, tmp_path)
    assert [e.name for e in entries] == ["pet", "many#1", "many#2", "c5", "line6", "missing"]
    assert entries[4].kind == "invalid" and entries[5].kind == "invalid"


def test_analyse_c5():
    r = analyse(CorpusEntry("c5", "graph6", write_graph6(cycle_graph(5))))
    assert r.found[Pattern.P4] and not r.found[Pattern.P5] and not r.found[Pattern.COP5]
    assert r.primitive and r.triangle_free


def test_analyse_non_srg_and_error():
    r = analyse(CorpusEntry("p4", "graph6", write_graph6(path_graph(4))))
    assert r.params is None and r.report_rows()[0]["status"] == "not-srg"
    bad = analyse(CorpusEntry("bad", "graph6", "A"))
    assert bad.error and bad.report_rows()[0]["status"].startswith("error")


def test_time_budget_marks_skipped():
    r = analyse(CorpusEntry("hs", "graph6", graph6_line(hoffman_singleton())), time_budget=0.0)
    assert r.skipped
    assert any(row["status"] == "skipped" for row in r.report_rows())


def test_builtin_survey_summary():
    results = run_survey(builtin_entries(36), workers=1)
    summary = summarize(results)
    assert summary.primitive == len(results)
    assert set(summary.cop5_free) == {"c5", "petersen"}
    assert summary.cop5_free_with_triangles == ()
    # J(5,2) is the only generated P5-free primitive SRG besides C5
    assert set(summary.p5_free) == {"c5", "johnson2:5"}


def test_parallel_matches_serial(monkeypatch):
    entries = builtin_entries(16)
    serial = survey_report(run_survey(entries, workers=1))
    monkeypatch.setenv("SRG_PATHS_THREADS", "3")
    assert thread_count() == 3
    parallel = survey_report(run_survey(entries))

    def strip_time(text):
        return [row[:-1] for row in csv.reader(io.StringIO(text))]

    assert strip_time(serial) == strip_time(parallel)


def test_thread_count_default(monkeypatch):
    monkeypatch.delenv("SRG_PATHS_THREADS", raising=False)
    assert thread_count() == 1
    monkeypatch.setenv("SRG_PATHS_THREADS", "junk")
    assert thread_count() == 1
