import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from poscodeg import (
    HgParseError,
    Hypergraph,
    codegree_neighborhood,
    codegree_prune,
    degree_profile,
    format_hg,
    link_graph,
    pair_graph,
    parse_hg,
    shadow_graph,
)
from poscodeg.hypergraph import is_independent, is_strongly_independent
from strategies import hypergraphs


def test_edges_are_canonicalised_and_deduplicated():
    h = Hypergraph(3, 5, [(2, 1, 0), (0, 1, 2), (4, 3, 2)])
    assert h.edges == ((0, 1, 2), (2, 3, 4))
    assert (1, 0, 2) in h and len(h) == 2


@pytest.mark.parametrize("edges", [[(0, 0, 1)], [(0, 1)], [(0, 1, 5)], [(-1, 0, 1)]])
def test_bad_edges_rejected(edges):
    with pytest.raises(ValueError):
        Hypergraph(3, 5, edges)


def test_empty_profile_is_zero():
    prof = degree_profile(Hypergraph(3, 4))
    assert prof.delta_pos_codeg == 0 and prof.is_empty and prof.isolated == frozenset(range(4))


def test_delta_codeg_vs_positive():
    h = Hypergraph(3, 5, [(0, 1, 2), (0, 1, 3)])
    prof = degree_profile(h)
    assert prof.delta_pos_codeg == 1
    assert prof.delta_codeg == 0
    assert prof.isolated == {4}


def test_codegree_neighborhood_checks_size():
    h = Hypergraph(3, 5, [(0, 1, 2), (0, 1, 3)])
    assert codegree_neighborhood(h, (1, 0)) == {2, 3}
    assert codegree_neighborhood(h, (3, 4)) == frozenset()
    with pytest.raises(ValueError):
        codegree_neighborhood(h, (0,))
    with pytest.raises(ValueError):
        codegree_neighborhood(h, (0, 9))


def test_derived_graphs():
    h = Hypergraph(3, 5, [(0, 1, 2), (1, 2, 3)])
    assert shadow_graph(h).edges == ((0, 1), (0, 2), (1, 2), (1, 3), (2, 3))
    assert link_graph(h, 1).edges == ((0, 2), (2, 3))
    assert pair_graph(h) == shadow_graph(h)
    assert is_independent(h, {0, 1, 3}) and not is_strongly_independent(h, {0, 1, 3})
    assert is_strongly_independent(h, {0, 3, 4})


@given(hypergraphs())
def test_min_positive_codegree_matches_oracle(h):
    assert degree_profile(h).delta_pos_codeg == oracles.min_pos_codegree(h.r, h.n, h.edges)
    assert degree_profile(h).isolated == oracles.isolated(h.n, h.edges)


@given(hypergraphs(), st.data())
def test_relabel_preserves_profile(h, data):
    perm = data.draw(st.permutations(list(range(h.n))))
    g = h.relabel(perm)
    assert degree_profile(g).delta_pos_codeg == degree_profile(h).delta_pos_codeg
    assert sorted(g.degrees) == sorted(h.degrees)


@given(hypergraphs(max_n=6), st.integers(0, 4))
def test_prune_is_idempotent_and_a_subgraph(h, t):
    p = codegree_prune(h, t)
    assert p.issubgraph(h)
    assert codegree_prune(p, t) == p
    assert p.is_empty() or degree_profile(p).delta_pos_codeg >= t


@given(hypergraphs(max_n=6), st.integers(0, 3))
def test_prune_is_monotone_in_floor(h, t):
    assert codegree_prune(h, t + 1).issubgraph(codegree_prune(h, t))


@given(hypergraphs(max_n=6, max_edges=9), st.integers(1, 3))
def test_prune_matches_maximum_subgraph_oracle(h, t):
    assert set(codegree_prune(h, t).edges) == oracles.max_subgraph_with_floor(h.r, h.n, h.edges, t)


@given(hypergraphs())
def test_hg_round_trip(h):
    assert parse_hg(format_hg(h, "comment\nline two")) == h


@pytest.mark.parametrize("text", [
    "", "# only a comment\n", "3\n", "3 5\n0 1\n", "3 5\n0 2 1\n", "3 5\n0 1 5\n",
    "3 5\n0 1 2\n0 1 2\n", "3 5\n0 x 2\n", "0 5\n",
])
def test_parse_rejects_malformed(text):
    with pytest.raises(HgParseError):
        parse_hg(text)


def test_parse_reports_line_number():
    with pytest.raises(HgParseError) as info:
        parse_hg("3 5\n0 1 2\n\n0 1\n")
    assert info.value.line == 4
