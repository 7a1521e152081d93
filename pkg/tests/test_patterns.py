from itertools import combinations, permutations

import pytest
from hypothesis import given, settings

from srgpaths import families as fam
from srgpaths.errors import SearchTimeout
from srgpaths.formats import parse_graph6
from srgpaths.graph import complement, cycle_graph, induced_subgraph, path_graph
from srgpaths.patterns import (
    Pattern,
    SearchOutcome,
    find_induced,
    induces_pattern,
    is_cograph,
    validate_witness,
)

from known_graphs import graph6_line, hoffman_singleton
from test_graph import graphs


def brute_find(g, p):
    """Lexicographically least subset, then least ordering matching the model."""
    model = p.model
    for subset in combinations(range(g.n), model.n):
        for perm in permutations(subset):
            if all(
                g.has_edge(perm[i], perm[j]) == model.has_edge(i, j)
                for i in range(model.n)
                for j in range(i + 1, model.n)
            ):
                return perm
    return None


def test_models():
    assert Pattern.COP5.model == complement(path_graph(5))
    assert Pattern.C5.model == cycle_graph(5)
    assert Pattern.GEM.model.edge_count() == 7
    assert Pattern.P5.complement_pattern is Pattern.COP5
    assert Pattern.parse("co-P5") is Pattern.COP5
    assert Pattern.parse("house") is Pattern.COP5
    with pytest.raises(ValueError):
        Pattern.parse("P9")


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=9))
def test_search_matches_brute_force(g):
    for p in Pattern:
        outcome = find_induced(g, p)
        assert outcome.witness == brute_find(g, p)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_complement_duality(g):
    for p in (Pattern.P4, Pattern.P5, Pattern.GEM):
        assert find_induced(g, p).found == find_induced(complement(g), p.complement_pattern).found


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=10))
def test_cograph_iff_p4_free(g):
    assert is_cograph(g) != find_induced(g, Pattern.P4).found


def test_petersen_facts():
    pet = fam.petersen()
    out = find_induced(pet, Pattern.P5)
    assert out.found and validate_witness(pet, out.witness, Pattern.P5)
    assert not find_induced(pet, Pattern.COP5).found
    assert find_induced(cycle_graph(5), Pattern.P4).found
    assert not find_induced(cycle_graph(5), Pattern.P5).found


def test_validate_requires_pattern_order():
    g = path_graph(5)
    assert validate_witness(g, (0, 1, 2, 3, 4), Pattern.P5)
    assert not validate_witness(g, (0, 2, 1, 3, 4), Pattern.P5)
    assert induces_pattern(g, (0, 2, 1, 3, 4), Pattern.P5)


def test_witness_is_induced():
    g = fam.latin_square_graph(fam.cyclic_latin(6))
    out = find_induced(g, Pattern.COP5)
    assert induced_subgraph(g, out.witness) == Pattern.COP5.model


def test_mask_restricts_search():
    g = path_graph(6)
    assert find_induced(g, Pattern.P5, mask=0b111110).witness == (1, 2, 3, 4, 5)
    assert not find_induced(g, Pattern.P5, mask=0b011110).found


def test_deadline_raises():
    # a co-P5-free graph forces a long search
    g = parse_graph6(graph6_line(hoffman_singleton()))
    with pytest.raises(SearchTimeout):
        find_induced(g, Pattern.COP5, deadline=0.0)


def test_outcome_invariant():
    with pytest.raises(ValueError):
        SearchOutcome(True, None)
    with pytest.raises(ValueError):
        SearchOutcome(False, (1, 2))
