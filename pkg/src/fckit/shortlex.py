"""Lexicographic normal forms of commutation classes, as a regular language.

A word fails to be the least word of its commutation class exactly when it has
a factor ``t u1 ... uk c`` with ``c < t`` and ``c`` commuting with ``t`` and
with each ``ui``: the final ``c`` can then slide left past the whole factor.
The NFA below guesses such a factor; determinizing and complementing it gives
the normal-form language.
"""

from __future__ import annotations

from typing import Sequence

from .automata import (
    DEFAULT_STATE_CAP,
    Dfa,
    Nfa,
    complement,
    determinize,
    intersect,
)
from .coxeter import CoxeterGraph
from .fc_recognizer import build_ared


def order_ranks(graph: CoxeterGraph, order: Sequence[str] | None) -> list[int]:
    """Position of each generator in the chosen total order (default: document order)."""
    if order is None:
        return list(range(graph.rank))
    order = list(order)
    if sorted(order) != sorted(graph.generators) or len(set(order)) != graph.rank:
        raise ValueError("order must be a permutation of the generators")
    return [order.index(g) for g in graph.generators]


def non_normal_nfa(graph: CoxeterGraph, order: Sequence[str] | None = None) -> Nfa:
    """NFA for words that are not lex-minimal in their commutation class.

    States: 0 = start, ``1 + c`` = a pivot larger than ``c`` was read and
    everything since commutes with ``c``, ``n + 1`` = accepting sink.
    """
    n = graph.rank
    rank = order_ranks(graph, order)
    start, accept = 0, n + 1
    trans = []
    row = []
    for x in range(n):
        targets = {start}
        for c in range(n):
            if rank[c] < rank[x] and graph.commute(c, x):
                targets.add(1 + c)
        row.append(frozenset(targets))
    trans.append(tuple(row))
    for c in range(n):
        row = []
        for x in range(n):
            if x == c:
                row.append(frozenset({accept}))
            elif graph.commute(c, x):
                row.append(frozenset({1 + c}))
            else:
                row.append(frozenset())
        trans.append(tuple(row))
    trans.append(tuple(frozenset({accept}) for _ in range(n)))
    labels = ("start",) + tuple(f"track:{g}" for g in graph.generators) + ("found",)
    return Nfa(graph.generators, tuple(trans), frozenset({start}), frozenset({accept}), labels)


def build_shortlex_dfa(graph: CoxeterGraph, order: Sequence[str] | None = None,
                       cap: int = DEFAULT_STATE_CAP) -> Dfa:
    return complement(determinize(non_normal_nfa(graph, order), cap))


def build_L_dfa(graph: CoxeterGraph, order: Sequence[str] | None = None,
                cap: int = DEFAULT_STATE_CAP) -> Dfa:
    """One word per FC element: its lex-least reduced word."""
    ared = build_ared(graph, cap)
    return intersect(build_shortlex_dfa(graph, order, cap), ared, cap)
