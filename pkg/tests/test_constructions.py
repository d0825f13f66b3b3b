import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from poscodeg import complete, degree_profile, loose_cycle_graph, make_huv, sample_with_floor, two_cliques
from poscodeg.constructions import verify_absences
from poscodeg.hypergraph import is_strongly_independent


@given(st.data())
def test_huv_structure(data):
    r = data.draw(st.integers(2, 4))
    n = data.draw(st.integers(r + 1, 9))
    v = data.draw(st.integers(1, n - r + 1))
    h, sheet = make_huv(r, n, v)
    u = n - v
    assert sheet.claimed_delta_pos == u - (r - 2)
    assert degree_profile(h).delta_pos_codeg == oracles.min_pos_codegree(r, n, h.edges)
    assert is_strongly_independent(h, range(u, n))
    assert not degree_profile(h).isolated


def test_huv_with_empty_v_is_complete():
    h, sheet = make_huv(3, 7, 0)
    assert h == complete(3, 7)
    assert sheet.claimed_delta_pos == 5


def test_huv_claims_follow_regimes():
    _, sheet = make_huv(3, 9, 4)
    assert [c["structure"] for c in sheet.claimed_absences] == ["pm"]
    _, sheet = make_huv(3, 8, 5)
    assert [c["structure"] for c in sheet.claimed_absences] == ["pm", "berge-hc", "loose-hc"]


@pytest.mark.parametrize("args", [(3, 9, 4), (3, 8, 5), (2, 6, 4), (3, 10, 6)])
def test_huv_absences_are_confirmed(args):
    _, sheet = make_huv(*args, verify=True)
    assert set(sheet.verified) == {c["structure"] for c in sheet.claimed_absences}
    assert all(v == "no" for v in sheet.verified.values())


def test_verify_raises_on_false_claim():
    h, sheet = make_huv(3, 6, 1)
    fake = type(sheet)(sheet.name, sheet.parameters, sheet.claimed_delta_pos, ({"structure": "pm"},))
    with pytest.raises(AssertionError):
        verify_absences(h, fake)


@pytest.mark.parametrize("args", [(1, 5, 1), (3, 5, 6), (3, 5, 4)])
def test_huv_rejects_bad_parameters(args):
    with pytest.raises(ValueError):
        make_huv(*args)


def test_two_cliques_and_loose_cycle():
    h = two_cliques(8)
    assert len(h) == 8 and degree_profile(h).delta_pos_codeg == 2
    with pytest.raises(ValueError):
        two_cliques(7)
    c = loose_cycle_graph(3, 4)
    assert c.n == 8 and len(c) == 4 and min(c.degrees) == 1
    with pytest.raises(ValueError):
        loose_cycle_graph(2, 2)


@given(st.integers(3, 7), st.integers(0, 4), st.floats(0, 1), st.integers(0, 10**6))
def test_sample_with_floor(n, t, p, seed):
    h = sample_with_floor(3, n, t, p, seed)
    assert h == sample_with_floor(3, n, t, p, seed)
    assert h.is_empty() or degree_profile(h).delta_pos_codeg >= t


@pytest.mark.parametrize("r,n", [(3, 7), (3, 8), (3, 9), (3, 10), (4, 9), (4, 10)])
def test_half_sized_v_follows_the_construction_formula(r, n):
    v = -(-(n + 1) // 2)
    h, sheet = make_huv(r, n, v)
    assert degree_profile(h).delta_pos_codeg == sheet.claimed_delta_pos == (n - v) - r + 2
