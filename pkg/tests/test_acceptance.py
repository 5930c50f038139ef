"""Acceptance criteria, one check per criterion at its stated tolerance.

Run under pytest (a PASS/FAIL line per criterion is printed in the terminal
summary) or directly with ``python tests/test_acceptance.py``.
"""

import time

import pytest

from fckit.automata import accepted_words, count_by_length
from fckit.catalog import W0, catalog, m_members, pa_members, pe_members, pf_members
from fckit.classify import classify_group
from fckit.cli import table_minima
from fckit.fc_recognizer import build_ared, run_word
from fckit.heaps import lex_min_rep, parse_word, word_str
from fckit.oracle import check_monotonicity, commutation_class_counts, enumerate_fc, verify_delta, wfc_series_bruteforce
from fckit.series import IntPolynomial, growth_verdict, is_ultimately_periodic, series_coefficients, wfc_series
from fckit.shortlex import build_shortlex_dfa

try:
    from conftest import inf_rank3
except ImportError:  # direct script run from the repository root
    import sys
    from pathlib import Path

    sys.path.insert(0, str(Path(__file__).parent))
    from conftest import inf_rank3

# Published table: type, denominator (ascending coefficients), smallest positive root
Y_TABLE = [
    ("Y1", {0: 1, 5: -1, 7: -1}, 0.8898912458),
    ("Y2", {0: 1, 5: -1, 9: -1, 11: -1}, 0.8699890716),
    ("Y3", {0: 1, 4: -1, 6: -1}, 0.8688369618),
    ("Y4", {0: 1, 3: -2, 5: -3, 6: -2, 7: -1, 8: 6, 9: 2, 12: 4, 13: 1}, 0.6950969040),
    ("Y5", {0: 1, 2: -1, 3: -1, 6: -2, 7: -1, 8: 3, 9: 1, 12: 1}, 0.9225155924),
    ("Y6", {0: 1, 12: -1, 17: -1, 25: -1}, 0.9378483025),
    ("Y7", {0: 1, 3: -3, 7: -1}, 0.6778224161),
    ("Y8", {0: 1, 12: -1, 17: -1, 25: -1}, 0.9378483025),
    ("Y9", {0: 1, 18: -1, 37: -1}, 0.9740122556),
]
ROOT_TOL = 1e-6

RESULTS = {}


def poly(terms):
    return IntPolynomial([terms.get(k, 0) for k in range(max(terms) + 1)])


def acceptance_graphs():
    return {
        "W0": W0,
        "A3": catalog("A", 3),
        "B3": catalog("B", 3),
        "I2(4)": catalog("I2", 4),
        "I2(5)": catalog("I2", 5),
        "I2(7)": catalog("I2", 7),
        "affine-A2": catalog("affine-A", 2),
        "inf-rank3": inf_rank3(),
    }


def record(number, ok, detail):
    RESULTS.setdefault(number, []).append((ok, detail))
    return ok


# ---------------------------------------------------------------- criteria

def criterion_1():
    start = time.perf_counter()
    a = build_ared(W0)
    elapsed = time.perf_counter() - start
    ok = a.num_states == 19 and elapsed < 1.0
    return record(1, ok, f"Ared(W0) has {a.num_states} states (sink included), built in {elapsed:.3f} s")


def criterion_2():
    q = run_word(W0, parse_word(W0, "stsuts"))
    top = {W0.generators[i] for i in q.maximal_labels()}
    qst, qtu = word_str(W0, q.q_word(W0, 0)), word_str(W0, q.q_word(W0, 1))
    ok = top == {"s"} and qst == "sts" and qtu == ""
    return record(2, ok, f"M={sorted(top)} q_st={qst!r} q_tu={qtu!r}")


def criterion_3():
    f = wfc_series(catalog("Z3"))
    target = IntPolynomial([1, 0, 0, 0, 0, -1])
    per = is_ultimately_periodic(f)
    ok = f.den.divides(target) and per.periodic and 5 % per.period == 0
    return record(3, ok, f"denominator {f.den}, period {per.period}")


def criterion_4():
    coeffs = series_coefficients(wfc_series(catalog("Z6")), 60)
    tail = coeffs[21:61]
    ok = len(tail) == 40 and all(c == 108 for c in tail)
    return record(4, ok, f"l=21..60 values {sorted(set(tail))}")


_TABLE_CACHE = {}


def computed_table():
    if not _TABLE_CACHE:
        start = time.perf_counter()
        rows = table_minima()
        _TABLE_CACHE["elapsed"] = time.perf_counter() - start
        _TABLE_CACHE["rows"] = {r["type"]: r for r in rows}
    return _TABLE_CACHE


def criterion_5_denominator(name, den):
    got = computed_table()["rows"][name]
    ok = IntPolynomial(got["den"]) == poly(den)
    return record(5, ok, f"{name} denominator {got['denominator']}" + ("" if ok else f" != {poly(den)}"))


def criterion_5_root(name, root):
    got = computed_table()["rows"][name]["root"]
    ok = got is not None and abs(got - root) <= ROOT_TOL
    return record(5, ok, f"{name} root {got:.10f} vs {root:.10f}")


def criterion_5_runtime():
    elapsed = computed_table()["elapsed"]
    return record(5, elapsed < 300, f"table runtime {elapsed:.1f} s")


def criterion_6(name, g):
    report = verify_delta(g, 10)
    return record(6, report.ok, f"{name}: {report.status} on {report.checked} words"
                  + (f" {report.counterexample}" if report.counterexample else ""))


def criterion_7(name, g):
    brute = wfc_series_bruteforce(g, 12)
    coeffs = series_coefficients(wfc_series(g), 12)
    return record(7, brute == coeffs, f"{name}: {coeffs}")


def criterion_8(name, g):
    dfa = build_shortlex_dfa(g)
    got = count_by_length(dfa, 8)
    expected = commutation_class_counts(g, 8)
    fixed = all(lex_min_rep(g, w) == w for l in range(9) for w in accepted_words(dfa, l))
    ok = got == expected and fixed
    return record(8, ok, f"{name}: counts {'match' if got == expected else f'{got} != {expected}'}, fixed points {fixed}")


MONOTONE_PAIRS = [("A2", "W0"), ("A2", "A3"), ("A3", "B3")]


def criterion_9(small, big):
    graphs = {"A2": catalog("A", 2), "A3": catalog("A", 3), "B3": catalog("B", 3), "W0": W0}
    report = check_monotonicity(graphs[small], graphs[big], 10)
    return record(9, report.ok, f"({small}, {big}) to L=10: {report.status}")


def classification_sample():
    out = []
    for r in range(2, 7):
        out += [(str(f), g, "PF") for f, g in pf_members(r)]
        out += [(str(f), g, "PA") for f, g in pa_members(r)]
        out += [(str(f), g, "PE") for f, g in pe_members(r)]
    out += [(f"I2:{m}", catalog("I2", m), "PF") for m in (5, 8)]
    out += [(str(f), g, "M") for f, g in m_members(6)]
    return out


def criterion_10():
    sample = classification_sample()
    disagreements = []
    spans = set()
    for name, g, label in sample:
        cls = classify_group(g)
        kind = growth_verdict(wfc_series(g)).kind
        spans.add(label)
        if kind != cls.growth_kind or cls.discrepancy:
            disagreements.append(name)
    ok = len(sample) >= 20 and spans == {"PF", "PA", "PE", "M"} and not disagreements
    return record(10, ok, f"{len(sample) - len(disagreements)}/{len(sample)} catalog graphs agree"
                  + (f"; disagree: {disagreements}" if disagreements else ""))


CATALAN = {2: 5, 3: 14, 4: 42, 5: 132}


def criterion_11(n):
    counts, _ = enumerate_fc(catalog("A", n), n * (n + 1) // 2 + 1)
    return record(11, sum(counts) == CATALAN[n], f"A{n}: {sum(counts)} FC elements (expected {CATALAN[n]})")


# ---------------------------------------------------------------- pytest

def test_criterion_1_ared_w0_states():
    assert criterion_1()


def test_criterion_2_stsuts_state():
    assert criterion_2()


def test_criterion_3_z3_period():
    assert criterion_3()


def test_criterion_4_z6_constant_tail():
    assert criterion_4()


@pytest.mark.parametrize("name, den, root", Y_TABLE, ids=[row[0] for row in Y_TABLE])
def test_criterion_5_denominator(name, den, root):
    assert criterion_5_denominator(name, den)


_Y5_NOTE = ("published root is the second positive root of the published Y5 denominator; "
            "the smallest one is 0.7260395168")


@pytest.mark.parametrize(
    "name, den, root",
    [pytest.param(*row, marks=pytest.mark.xfail(strict=True, reason=_Y5_NOTE)) if row[0] == "Y5" else row
     for row in Y_TABLE],
    ids=[row[0] for row in Y_TABLE],
)
def test_criterion_5_root(name, den, root):
    assert criterion_5_root(name, root)


def test_criterion_5_y5_table_value_is_a_root():
    # documents the Y5 mismatch: the published value does solve the published denominator
    den = poly(Y_TABLE[4][1])
    assert abs(float(den(0.9225155924))) < 1e-8
    assert abs(float(den(computed_table()["rows"]["Y5"]["root"]))) < 1e-8


def test_criterion_5_runtime():
    assert criterion_5_runtime()


@pytest.mark.parametrize("name", list(acceptance_graphs()))
def test_criterion_6_delta(name):
    assert criterion_6(name, acceptance_graphs()[name])


@pytest.mark.parametrize("name", list(acceptance_graphs()))
def test_criterion_7_oracle(name):
    assert criterion_7(name, acceptance_graphs()[name])


@pytest.mark.parametrize("name", list(acceptance_graphs()))
def test_criterion_8_shortlex(name):
    assert criterion_8(name, acceptance_graphs()[name])


@pytest.mark.parametrize("small, big", MONOTONE_PAIRS)
def test_criterion_9_monotonicity(small, big):
    assert criterion_9(small, big)


def test_criterion_10_classification():
    assert criterion_10()


@pytest.mark.parametrize("n", sorted(CATALAN))
def test_criterion_11_catalan(n):
    assert criterion_11(n)


def summary_lines():
    lines = []
    for number in sorted(RESULTS):
        checks = RESULTS[number]
        ok = all(c for c, _ in checks)
        failed = [d for c, d in checks if not c]
        if failed:
            detail = "; ".join(failed)
        elif len(checks) == 1:
            detail = checks[0][1]
        else:
            detail = f"{len(checks)} checks"
        lines.append(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
    return lines


def run_all():
    criterion_1()
    criterion_2()
    criterion_3()
    criterion_4()
    for name, den, root in Y_TABLE:
        criterion_5_denominator(name, den)
        criterion_5_root(name, root)
    criterion_5_runtime()
    for name, g in acceptance_graphs().items():
        criterion_6(name, g)
        criterion_7(name, g)
        criterion_8(name, g)
    for small, big in MONOTONE_PAIRS:
        criterion_9(small, big)
    criterion_10()
    for n in sorted(CATALAN):
        criterion_11(n)
    return summary_lines()


if __name__ == "__main__":
    for line in run_all():
        print(line)
