import itertools

import pytest
from hypothesis import given, settings

from conftest import coxeter_graphs, delta_graphs
from fckit.automata import accepts, count_by_length
from fckit.catalog import W0, catalog
from fckit.coxeter import CoxeterGraph
from fckit.fc_recognizer import SINK, build_ared, describe_state, fc_delta, initial_state, run_word
from fckit.heaps import is_fc_word, parse_word, word_str
from fckit.oracle import expected_state, verify_delta


def test_sink_absorbs():
    for s in range(3):
        assert fc_delta(W0, SINK, s) is SINK


def test_first_letter_from_initial_state():
    q = fc_delta(W0, initial_state(W0), 0)
    assert q.maximal_labels() == {0}
    # finite edges of W0: (s,t) then (t,u)
    assert word_str(W0, q.q_word(W0, 0)) == "s"
    assert q.q_word(W0, 1) == ()


def test_stsuts_state():
    q = run_word(W0, parse_word(W0, "stsuts"))
    assert q.maximal_labels() == {0}
    assert word_str(W0, q.q_word(W0, 0)) == "sts"
    assert q.q_word(W0, 1) == ()
    assert describe_state(W0, q) == "M={s} q[s,t]=sts q[t,u]=e"


def test_repeat_and_braid_go_to_sink():
    assert run_word(W0, parse_word(W0, "ss")) is SINK
    assert run_word(W0, parse_word(W0, "stst")) is SINK
    assert run_word(W0, parse_word(W0, "tutu")) is not SINK
    assert run_word(W0, parse_word(W0, "tutut")) is SINK
    assert describe_state(W0, SINK) == "SINK"


def test_w0_has_19_states():
    a = build_ared(W0)
    assert a.num_states == 19
    assert len(a.finals) == 18


def test_rank_one():
    g = CoxeterGraph(("s",), ((1,),))
    a = build_ared(g)
    assert a.num_states == 3
    assert count_by_length(a, 4) == [1, 1, 0, 0, 0]


def test_dihedral_language():
    g = catalog("I2", 5)
    a = build_ared(g)
    for n in range(8):
        for w in itertools.product(range(2), repeat=n):
            alternating = all(x != y for x, y in zip(w, w[1:]))
            assert accepts(a, w) == (alternating and n <= 4)


@pytest.mark.parametrize("name", sorted(delta_graphs()))
def test_delta_matches_heaps(name):
    g = delta_graphs()[name]
    report = verify_delta(g, 8 if g.rank > 2 else 10)
    assert report.ok, report.counterexample


@settings(max_examples=40, deadline=None)
@given(coxeter_graphs(min_rank=2, max_rank=4))
def test_delta_matches_heaps_random_graphs(g):
    report = verify_delta(g, 5)
    assert report.ok, report.counterexample


@settings(max_examples=30, deadline=None)
@given(coxeter_graphs(min_rank=1, max_rank=4))
def test_ared_accepts_exactly_fc_reduced_words(g):
    a = build_ared(g)
    for n in range(6):
        for w in itertools.product(range(g.rank), repeat=n):
            assert accepts(a, w) == is_fc_word(g, w)


def test_live_states_are_final_and_prefix_closed():
    a = build_ared(W0)
    sink = [q for q in range(a.num_states) if q not in a.finals]
    assert len(sink) == 1
    assert all(r == sink[0] for r in a.delta[sink[0]])


def test_expected_state_on_non_fc():
    assert expected_state(W0, parse_word(W0, "stst")) is None
