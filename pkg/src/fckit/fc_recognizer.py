"""The automaton recognizing reduced words of fully commutative elements.

A live state is ``FCState(maximal, q)``: ``maximal`` is the bitmask of labels
of the maximal heap elements, and ``q`` holds one entry per edge with finite
label ``m >= 3`` (in ``graph.finite_edges()`` order).  Each entry is
``(last, length)``: the alternating word of the given length ending in the
generator ``last``; the empty word is ``(None, 0)``.  ``SINK`` absorbs every
word whose heap is not FC.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple, Sequence

from .automata import DEFAULT_STATE_CAP, Dfa, explore
from .coxeter import CoxeterGraph

EMPTY = (None, 0)


class FCState(NamedTuple):
    maximal: int
    q: tuple

    def maximal_labels(self) -> frozenset[int]:
        return frozenset(i for i in range(self.maximal.bit_length()) if self.maximal >> i & 1)

    def q_word(self, graph: CoxeterGraph, edge_index: int) -> tuple[int, ...]:
        """Rebuild the alternating word ``[... ts]_r`` stored for an edge."""
        a, b = graph.finite_edges()[edge_index]
        last, r = self.q[edge_index]
        if r == 0:
            return ()
        other = b if last == a else a
        return tuple(last if (r - 1 - k) % 2 == 0 else other for k in range(r))


class _Sink:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "SINK"

    def __reduce__(self):
        return (_Sink, ())


SINK = _Sink()


def initial_state(graph: CoxeterGraph) -> FCState:
    return FCState(0, tuple(EMPTY for _ in graph.finite_edges()))


# Per-edge update kinds for a letter s and edge e.
_ON_EDGE, _BOTH, _ONE, _FAR = range(4)


@lru_cache(maxsize=256)
def _compile(graph: CoxeterGraph):
    edges = graph.finite_edges()
    n = graph.rank
    commuting = []
    actions = []
    for s in range(n):
        mask = 0
        for t in range(n):
            if graph.commute(s, t):
                mask |= 1 << t
        commuting.append(mask)
        row = []
        for a, b in edges:
            m = graph.m[a][b]
            if s in (a, b):
                row.append((_ON_EDGE, b if s == a else a, m))
            else:
                adj_a, adj_b = graph.adjacent(s, a), graph.adjacent(s, b)
                if adj_a and adj_b:
                    row.append((_BOTH, None, m))
                elif adj_a or adj_b:
                    # (touched endpoint, untouched endpoint)
                    row.append((_ONE, (a, b) if adj_a else (b, a), m))
                else:
                    row.append((_FAR, None, m))
        actions.append(tuple(row))
    return tuple(commuting), tuple(actions)


def fc_delta(graph: CoxeterGraph, state, s: int):
    """One transition of the automaton."""
    if state is SINK:
        return SINK
    commuting, actions = _compile(graph)
    maximal, q = state
    if maximal >> s & 1:
        return SINK
    row = actions[s]
    new_q = []
    for (kind, data, m), (last, k) in zip(row, q):
        if kind == _ON_EDGE:
            t = data
            if k > 0 and last == s:
                new_q.append((s, 1))
            else:
                if k == m - 1:
                    return SINK
                new_q.append((s, k + 1))
        elif kind == _FAR:
            new_q.append((last, k))
        elif kind == _BOTH:
            new_q.append(EMPTY)
        else:
            t, u = data
            if k > 0 and last == u:
                new_q.append((u, 1) if maximal >> u & 1 else EMPTY)
            elif k == m - 1:
                new_q.append((last, k))
            else:
                new_q.append(EMPTY)
    new_max = (1 << s) | (maximal & commuting[s])
    return FCState(new_max, tuple(new_q))


def run_word(graph: CoxeterGraph, word: Sequence[int], start=None):
    state = initial_state(graph) if start is None else start
    for s in word:
        state = fc_delta(graph, state, s)
        if state is SINK:
            break
    return state


def build_ared(graph: CoxeterGraph, cap: int = DEFAULT_STATE_CAP) -> Dfa:
    """Accessible part of the automaton; every live state is final."""
    return explore(
        graph.generators,
        initial_state(graph),
        lambda q, s: fc_delta(graph, q, s),
        lambda q: q is not SINK,
        cap,
    )


def describe_state(graph: CoxeterGraph, state) -> str:
    if state is SINK:
        return "SINK"
    names = graph.generators
    top = "{" + ",".join(names[i] for i in sorted(state.maximal_labels())) + "}"
    parts = []
    for idx, (a, b) in enumerate(graph.finite_edges()):
        w = state.q_word(graph, idx)
        parts.append(f"q[{names[a]},{names[b]}]=" + ("".join(names[x] for x in w) or "e"))
    return f"M={top} " + " ".join(parts)
