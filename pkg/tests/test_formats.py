import json
import string

import networkx as nx
import pytest
from hypothesis import given, settings

from srgpaths import catalog
from srgpaths import families as fam
from srgpaths.errors import MalformedGraph6, NotLatin, NotSts, Ragged, SrgPathsError
from srgpaths.formats import (
    emit_report,
    parse_graph6,
    parse_latin,
    parse_mols,
    parse_sts,
    read_graph6_lines,
    write_graph6,
    write_latin,
    write_mols,
    write_sts,
)
from srgpaths.graph import Graph, complete_graph

from test_graph import graphs, to_nx


def nx_graph6(g):
    return nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


def test_small_graph6_values():
    assert write_graph6(complete_graph(1)) == "@"
    assert write_graph6(complete_graph(2)) == "A_"
    assert parse_graph6("@") == complete_graph(1)
    assert parse_graph6("A_") == complete_graph(2)
    assert parse_graph6(">>graph6<<A_") == complete_graph(2)
    assert write_graph6(Graph(0, ())) == "?"


@pytest.mark.parametrize("n", [0, 1, 2, 5, 62, 63, 64, 100, 200])
def test_graph6_matches_networkx(n):
    h = nx.gnp_random_graph(n, 0.3, seed=n)
    g = Graph.from_edges(n, h.edges())
    assert write_graph6(g) == nx_graph6(g)
    assert parse_graph6(nx_graph6(g)) == g


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=12))
def test_graph6_round_trip(g):
    line = write_graph6(g)
    assert line == nx_graph6(g)
    assert parse_graph6(line) == g


def test_graph6_catalog_round_trip():
    for inst in catalog.parameter_catalog():
        line = write_graph6(inst.graph)
        assert write_graph6(parse_graph6(line)) == line


def test_graph6_errors_carry_offset():
    with pytest.raises(MalformedGraph6, match="byte 1"):
        parse_graph6("A")
    with pytest.raises(MalformedGraph6, match="padding"):
        parse_graph6("A`")
    with pytest.raises(MalformedGraph6, match="byte 1"):
        parse_graph6("A ")
    with pytest.raises(MalformedGraph6):
        parse_graph6("")
    with pytest.raises(MalformedGraph6, match="exceeds"):
        parse_graph6("~@?@")


def test_read_graph6_lines():
    text = "@\n\nA_\n"
    assert read_graph6_lines(text) == [complete_graph(1), complete_graph(2)]


def test_latin_ls6_fixture():
    assert parse_latin(fam.fixture_text("ls6.txt")) == fam.cyclic_latin(6)
    assert parse_latin("0") == fam.cyclic_latin(1)


def test_latin_round_trip():
    for m in range(1, 13):
        sq = fam.cyclic_latin(m)
        assert parse_latin(write_latin(sq)) == sq
    pair = fam.orthogonal_pair(5)
    assert parse_mols(write_mols(pair)) == pair


def test_latin_errors():
    with pytest.raises(NotLatin, match="row 1"):
        parse_latin("0 1 2\n1 1 0\n2 0 1\n")
    with pytest.raises(NotLatin, match="column 0"):
        parse_latin("0 1\n0 1\n")
    with pytest.raises(Ragged):
        parse_latin("0 1\n1\n")
    with pytest.raises(Ragged):
        parse_mols("0 1\n1 0\n")


def test_sts_fixtures_match_transcription():
    for index in (1, 2):
        text = fam.fixture_text(f"sts13-{index}.txt")
        assert parse_sts(text) == fam.paper_sts13(index)
        assert write_sts(fam.paper_sts13(index)) == text


def test_sts_small_cases():
    assert parse_sts("3\n1 2 3\n").blocks == ((1, 2, 3),)
    text = write_sts(fam.sts_by_order(7))
    lines = text.splitlines()
    duplicated = "\n".join(lines[:-1] + [lines[1]]) + "\n"
    with pytest.raises(NotSts, match="covered twice"):
        parse_sts(duplicated)
    with pytest.raises(NotSts):
        parse_sts("")


@pytest.mark.parametrize("index", [1, 2])
def test_sts_rejects_single_character_corruption(index):
    text = fam.fixture_text(f"sts13-{index}.txt")
    alphabet = string.digits + " \nx#-"
    accepted = []
    for pos, ch in enumerate(text):
        for sub in alphabet:
            if sub == ch:
                continue
            mutated = text[:pos] + sub + text[pos + 1:]
            try:
                parse_sts(mutated)
            except SrgPathsError:
                continue
            accepted.append((pos, sub))
    assert accepted == []


def test_sts_round_trip_constructions():
    for m in (3, 7, 9, 13, 15, 19, 21):
        s = fam.sts_by_order(m)
        assert parse_sts(write_sts(s)) == s


def _petersen_row():
    return [
        dict(graph="petersen", n=10, k=3, **{"lambda": 0}, mu=1, primitive=True,
             pattern="P5", found=True, witness=("0", "8"), seconds=0.01),
        dict(graph="petersen", n=10, k=3, **{"lambda": 0}, mu=1, primitive=True,
             pattern="COP5", found=False, witness=None, seconds=0.02),
    ]


def test_report_csv():
    assert emit_report([]) == "graph,n,k,lambda,mu,primitive,pattern,found,witness,seconds\n"
    text = emit_report(_petersen_row())
    assert "P5,true" in text and "COP5,false" in text
    assert text.index("P5,true") < text.index("COP5,false")
    assert "0 | 8" in text


def test_report_jsonl():
    lines = emit_report(_petersen_row(), "jsonl").splitlines()
    assert [json.loads(ln)["pattern"] for ln in lines] == ["P5", "COP5"]
    assert json.loads(lines[0])["witness"] == ["0", "8"]
    with pytest.raises(ValueError):
        emit_report([], "xml")
