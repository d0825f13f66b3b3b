import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from poscodeg import Hypergraph, degree_profile, make_huv
from poscodeg.lab import (
    all_classes,
    canonical_form,
    enumerate_hypergraphs,
    exact_threshold,
    iter_hypergraphs,
    revalidate_witness,
    sample_instances,
    tightness_report,
)
from strategies import hypergraphs


@given(hypergraphs(max_n=7), st.data())
def test_canonical_form_is_relabelling_invariant(h, data):
    perm = data.draw(st.permutations(list(range(h.n))))
    assert canonical_form(h.relabel(perm)) == canonical_form(h)


@settings(max_examples=60)
@given(hypergraphs(max_n=6, max_edges=6), hypergraphs(max_n=6, max_edges=6))
def test_canonical_form_separates_classes(a, b):
    if a.r != b.r or a.n != b.n:
        return
    same = canonical_form(a) == canonical_form(b)
    assert same == oracles.is_isomorphic(a.r, a.n, a.edges, b.edges)


@pytest.mark.parametrize("r,n", [(2, 4), (2, 5), (2, 6), (2, 7), (3, 4), (3, 5), (3, 6)])
def test_class_counts_match_burnside(r, n):
    assert len(all_classes(r, n)) == oracles.burnside_count(r, n)
    with_floor = list(iter_hypergraphs(r, n))
    assert len(with_floor) == oracles.no_isolated_count(r, n)


def test_enumeration_limits_and_summary():
    with pytest.raises(ValueError):
        list(iter_hypergraphs(3, 7))
    seen = []
    summary = enumerate_hypergraphs(3, 5, 2, seen.append)
    assert summary.yielded == len(seen) and summary.method == "exhaustive"
    assert all(degree_profile(h).delta_pos_codeg >= 2 for h in seen)


def test_sampling_is_seeded_and_isomorph_free():
    a = list(iter_hypergraphs(3, 7, 2, sample=True, count=15, seed=4))
    b = list(iter_hypergraphs(3, 7, 2, sample=True, count=15, seed=4))
    assert a == b
    assert len({canonical_form(h) for h in a}) == len(a)


def test_sample_instances_respect_floor():
    hs = sample_instances(3, 9, 5, 8, seed=2)
    assert len(hs) == 8 and hs == sample_instances(3, 9, 5, 8, seed=2)
    for h in hs:
        prof = degree_profile(h)
        assert prof.delta_pos_codeg >= 5 and not prof.isolated


@pytest.mark.parametrize("n,expected", [(4, 2), (5, 3), (6, 3)])
def test_graph_hamiltonicity_thresholds(n, expected):
    rep = exact_threshold(2, n, "hamiltonian-cycle")
    assert rep.exact_threshold == expected and revalidate_witness(rep)


def test_threshold_errors():
    with pytest.raises(ValueError):
        exact_threshold(3, 7, "pm")
    with pytest.raises(ValueError):
        exact_threshold(3, 5, "loose-hc")
    with pytest.raises(ValueError):
        exact_threshold(3, 6, "c43-tiling")


def test_sampled_threshold_brackets():
    rep = exact_threshold(3, 9, "pm", sample=True, count=30, seed=1)
    assert rep.method == "sampled" and rep.exact_threshold is None
    assert rep.threshold_lower <= rep.threshold_upper
    assert rep.threshold_lower >= make_huv(3, 9, 4)[1].claimed_delta_pos + 1
    assert revalidate_witness(rep)


def test_tightness_reports():
    rep = tightness_report("pm3", [6, 9], samples=3)
    assert not rep["regime_empty"]
    for row in rep["rows"]:
        assert row["construction"]["structure"] == "no" and not row["discrepancies"]
    rep = tightness_report("pm-r", [8, 12], r=4)
    assert rep["regime_empty"]
    with pytest.raises(ValueError):
        tightness_report("nope", [6])


def test_witness_revalidation_rejects_tampering():
    rep = exact_threshold(2, 5, "berge-hc")
    rep.witness = Hypergraph(2, 5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    assert not revalidate_witness(rep)
