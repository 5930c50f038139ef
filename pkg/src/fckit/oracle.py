"""Brute-force ground truth built only from heap definitions.

Nothing in this module touches the transition function, the normal-form
automaton or the series code; agreement with them is a genuine cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .coxeter import CoxeterGraph, graph_dominates
from .heaps import CapExceeded, heap_of_word, is_fc_heap, lex_min_rep, max_labels, q_suffix, word_str

DEFAULT_ORACLE_CAP = 10**6


@dataclass
class Report:
    graph: CoxeterGraph
    length: int
    status: str
    counts: list[int] = field(default_factory=list)
    checked: int = 0
    counterexample: dict | None = None

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        out = {"graph": self.graph.to_dict(), "L": self.length, "counts": self.counts, "status": self.status}
        if self.checked:
            out["checked"] = self.checked
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def enumerate_fc(graph: CoxeterGraph, length: int, cap: int = DEFAULT_ORACLE_CAP,
                 order: Sequence[str] | None = None) -> tuple[list[int], list[list[tuple[int, ...]]]]:
    """FC elements by length, as counts and lex-least representatives.

    Each FC element of length ``l + 1`` is ``w s`` for some FC ``w`` of length
    ``l`` (delete a maximal element of its heap), so growing representatives
    one letter at a time reaches all of them.
    """
    levels = [[()]]
    total = 1
    for _ in range(length):
        nxt = set()
        for w in levels[-1]:
            for s in range(graph.rank):
                ws = w + (s,)
                if is_fc_heap(graph, heap_of_word(graph, ws)):
                    nxt.add(lex_min_rep(graph, ws, order))
        total += len(nxt)
        if total > cap:
            raise CapExceeded(f"more than {cap} FC elements")
        levels.append(sorted(nxt))
    return [len(level) for level in levels], levels


def wfc_series_bruteforce(graph: CoxeterGraph, length: int, cap: int = DEFAULT_ORACLE_CAP) -> list[int]:
    return enumerate_fc(graph, length, cap)[0]


def expected_state(graph: CoxeterGraph, word: Sequence[int]):
    """``None`` for non-FC words, else (maximal label mask, per-edge ``(last, length)``)."""
    h = heap_of_word(graph, word)
    if not is_fc_heap(graph, h):
        return None
    mask = 0
    for s in max_labels(h):
        mask |= 1 << s
    qs = []
    for s, t in graph.finite_edges():
        q = q_suffix(graph, h, s, t)
        qs.append((q[-1], len(q)) if q else (None, 0))
    return mask, tuple(qs)


def verify_delta(graph: CoxeterGraph, length: int) -> Report:
    """Run the transition function on every word up to ``length`` letters and
    compare with the heap computed from scratch."""
    from .fc_recognizer import SINK, fc_delta, initial_state

    checked = 0
    stack = [((), initial_state(graph))]
    while stack:
        w, state = stack.pop()
        exp = expected_state(graph, w)
        got = None if state is SINK else (state.maximal, state.q)
        checked += 1
        if exp != got:
            return Report(graph, length, "fail", checked=checked, counterexample={
                "word": word_str(graph, w), "expected": _describe(exp), "got": _describe(got)})
        if len(w) < length:
            for s in reversed(range(graph.rank)):
                stack.append((w + (s,), fc_delta(graph, state, s)))
    return Report(graph, length, "pass", checked=checked)


def _describe(state):
    if state is None:
        return "sink"
    mask, qs = state
    return {"M": mask, "q": [list(q) for q in qs]}


def check_monotonicity(g1: CoxeterGraph, g2: CoxeterGraph, length: int) -> Report:
    """Coefficientwise ``|W1_l| <= |W2_l|`` for a dominated pair of graphs."""
    if not graph_dominates(g1, g2):
        raise ValueError("first graph is not dominated by the second")
    c1 = wfc_series_bruteforce(g1, length)
    c2 = wfc_series_bruteforce(g2, length)
    for l, (a, b) in enumerate(zip(c1, c2)):
        if a > b:
            return Report(g2, length, "fail", counts=c2, counterexample={"length": l, "small": a, "large": b})
    return Report(g2, length, "pass", counts=c2)


def all_words(rank: int, max_length: int):
    for l in range(max_length + 1):
        yield from product(range(rank), repeat=l)


def commutation_class_counts(graph: CoxeterGraph, length: int) -> list[int]:
    """Number of commutation classes of words of each length, by listing all words."""
    out = []
    for l in range(length + 1):
        out.append(len({lex_min_rep(graph, w) for w in product(range(graph.rank), repeat=l)}))
    return out


def verify_shortlex(graph: CoxeterGraph, length: int, order: Sequence[str] | None = None) -> Report:
    """Normal-form automaton against brute force: one accepted word per class,
    and that word is the lex-least one."""
    from .automata import accepted_words, count_by_length
    from .shortlex import build_shortlex_dfa

    dfa = build_shortlex_dfa(graph, order)
    got = count_by_length(dfa, length)
    expected = commutation_class_counts(graph, length)
    if got != expected:
        l = next(i for i, (a, b) in enumerate(zip(got, expected)) if a != b)
        return Report(graph, length, "fail", counts=got,
                      counterexample={"length": l, "accepted": got[l], "classes": expected[l]})
    checked = 0
    for l in range(length + 1):
        for w in accepted_words(dfa, l):
            checked += 1
            if lex_min_rep(graph, w, order) != tuple(w):
                return Report(graph, length, "fail", counts=got, checked=checked,
                              counterexample={"word": word_str(graph, w)})
    return Report(graph, length, "pass", counts=got, checked=checked)


def verify_oracle(graph: CoxeterGraph, length: int, cap: int = DEFAULT_ORACLE_CAP) -> Report:
    """Brute-force FC counts against the coefficients of the generating function."""
    from .series import series_coefficients, wfc_series

    brute = wfc_series_bruteforce(graph, length, cap)
    coeffs = series_coefficients(wfc_series(graph), length)
    if brute != coeffs:
        l = next(i for i, (a, b) in enumerate(zip(brute, coeffs)) if a != b)
        return Report(graph, length, "fail", counts=brute,
                      counterexample={"length": l, "oracle": brute[l], "series": coeffs[l]})
    return Report(graph, length, "pass", counts=brute)
