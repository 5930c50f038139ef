import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import coxeter_graphs, delta_graphs
from fckit.catalog import W0, catalog
from fckit.coxeter import CoxeterGraph
from fckit.heaps import CapExceeded, is_fc_word
from fckit.oracle import (
    all_words,
    check_monotonicity,
    enumerate_fc,
    verify_delta,
    verify_oracle,
    wfc_series_bruteforce,
)
from fckit.series import is_ultimately_periodic, series_coefficients, wfc_series


def test_enumeration_examples():
    assert wfc_series_bruteforce(catalog("A", 2), 3) == [1, 2, 2, 0]
    assert wfc_series_bruteforce(catalog("I2", 5), 5) == [1, 2, 2, 2, 2, 0]
    assert wfc_series_bruteforce(CoxeterGraph(("s",), ((1,),)), 1) == [1, 1]
    counts, reps = enumerate_fc(catalog("A", 2), 3)
    assert reps[1] == [(0,), (1,)] and reps[2] == [(0, 1), (1, 0)]


@pytest.mark.parametrize("n, total", [(1, 2), (2, 5), (3, 14), (4, 42), (5, 132)])
def test_catalan_totals(n, total):
    counts = wfc_series_bruteforce(catalog("A", n), n * (n + 1) // 2 + 2)
    assert sum(counts) == total
    assert counts[-1] == counts[-2] == 0


def test_matches_exhaustive_word_listing():
    # count FC elements directly: FC reduced words modulo commutation
    from fckit.heaps import lex_min_rep

    for g in (W0, catalog("affine-A", 2), catalog("B", 3)):
        direct = [len({lex_min_rep(g, w) for w in all_words(g.rank, l) if len(w) == l and is_fc_word(g, w)})
                  for l in range(7)]
        assert wfc_series_bruteforce(g, 6) == direct


def test_cap():
    with pytest.raises(CapExceeded):
        enumerate_fc(catalog("affine-A", 2), 20, cap=50)


@settings(max_examples=30, deadline=None)
@given(coxeter_graphs(min_rank=2, max_rank=4), st.randoms(use_true_random=False))
def test_order_independent(g, rnd):
    order = list(g.generators)
    rnd.shuffle(order)
    assert enumerate_fc(g, 6, order=order)[0] == enumerate_fc(g, 6)[0]


@pytest.mark.parametrize("name", ["A", "B", "D", "H"])
def test_finite_types_terminate(name):
    g = catalog(name, 4)
    counts = wfc_series_bruteforce(g, 30)
    last = max(l for l, c in enumerate(counts) if c)
    assert all(c == 0 for c in counts[last + 1:]) and last < 25


def test_delta_examples():
    assert verify_delta(W0, 8).ok
    assert verify_delta(catalog("A", 3), 8).ok
    assert verify_delta(CoxeterGraph(("s",), ((1,),)), 4).ok


@pytest.mark.parametrize("name", sorted(delta_graphs()))
def test_oracle_vs_automaton(name):
    report = verify_oracle(delta_graphs()[name], 10)
    assert report.ok, report.counterexample


@settings(max_examples=25, deadline=None)
@given(coxeter_graphs(min_rank=1, max_rank=4))
def test_oracle_vs_automaton_random(g):
    assert wfc_series_bruteforce(g, 7) == series_coefficients(wfc_series(g), 7)


def test_affine_a2_prefix_is_periodic():
    g = catalog("affine-A", 2)
    counts = wfc_series_bruteforce(g, 12)
    per = is_ultimately_periodic(wfc_series(g))
    assert per.periodic and per.period == 1
    assert counts == [1, 3] + [6] * 11


def test_monotonicity_examples():
    assert check_monotonicity(catalog("A", 2), W0, 10).ok
    assert check_monotonicity(W0, W0, 8).ok
    assert check_monotonicity(catalog("A", 2), catalog("A", 3), 10).ok
    with pytest.raises(ValueError):
        check_monotonicity(W0, catalog("A", 2), 5)


@settings(max_examples=30, deadline=None)
@given(coxeter_graphs(min_rank=1, max_rank=3), coxeter_graphs(min_rank=2, max_rank=4))
def test_monotonicity_random(small, big):
    from fckit.coxeter import graph_dominates

    if graph_dominates(small, big):
        assert check_monotonicity(small, big, 6).ok


def test_report_json():
    d = verify_delta(catalog("I2", 4), 3).to_dict()
    assert d["status"] == "pass" and d["L"] == 3
    assert json.loads(json.dumps(d))["graph"]["generators"] == ["s1", "s2"]
