"""Finite automata over a finite alphabet of generator names.

DFAs are always complete: ``delta[q][a]`` is defined for every state ``q`` and
letter index ``a``.  States are the integers ``0..n-1``; constructions built by
breadth-first exploration number states in discovery order, so equal inputs
give identical automata.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Hashable, Iterable, Sequence

DEFAULT_STATE_CAP = 10**6


class StateCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Dfa:
    alphabet: tuple[str, ...]
    delta: tuple[tuple[int, ...], ...]
    initial: int
    finals: frozenset
    labels: tuple | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        k = len(self.alphabet)
        n = len(self.delta)
        if not 0 <= self.initial < n:
            raise ValueError("initial state out of range")
        for row in self.delta:
            if len(row) != k or any(not 0 <= q < n for q in row):
                raise ValueError("transition table must be total over states x alphabet")

    @property
    def num_states(self) -> int:
        return len(self.delta)

    def run(self, word: Sequence[int], start: int | None = None) -> int:
        q = self.initial if start is None else start
        for a in word:
            q = self.delta[q][a]
        return q

    def state_label(self, q: int):
        return self.labels[q] if self.labels is not None else q


@dataclass(frozen=True)
class Nfa:
    alphabet: tuple[str, ...]
    # transitions[q][a] is a frozenset of successor states
    transitions: tuple[tuple[frozenset, ...], ...]
    initials: frozenset
    finals: frozenset
    labels: tuple | None = field(default=None, compare=False, repr=False)

    @property
    def num_states(self) -> int:
        return len(self.transitions)

    def accepts(self, word: Sequence[int]) -> bool:
        current = set(self.initials)
        for a in word:
            current = set().union(*(self.transitions[q][a] for q in current)) if current else set()
        return bool(current & self.finals)


def explore(
    alphabet: Sequence[str],
    start: Hashable,
    step: Callable[[Hashable, int], Hashable],
    is_final: Callable[[Hashable], bool],
    cap: int = DEFAULT_STATE_CAP,
) -> Dfa:
    """Breadth-first construction of the accessible part of an implicit DFA."""
    alphabet = tuple(alphabet)
    index = {start: 0}
    states = [start]
    delta = []
    queue = deque([start])
    while queue:
        q = queue.popleft()
        row = []
        for a in range(len(alphabet)):
            r = step(q, a)
            j = index.get(r)
            if j is None:
                j = len(states)
                if j >= cap:
                    raise StateCapExceeded(f"more than {cap} states")
                index[r] = j
                states.append(r)
                queue.append(r)
            row.append(j)
        delta.append(tuple(row))
    finals = frozenset(i for i, s in enumerate(states) if is_final(s))
    return Dfa(alphabet, tuple(delta), 0, finals, tuple(states))


def accepts(a: Dfa, word: Sequence[int]) -> bool:
    return a.run(word) in a.finals


def determinize(n: Nfa, cap: int = DEFAULT_STATE_CAP) -> Dfa:
    """Subset construction (accessible subsets only, empty set acts as sink)."""

    def step(subset, letter):
        out = set()
        for q in subset:
            out |= n.transitions[q][letter]
        return frozenset(out)

    return explore(n.alphabet, frozenset(n.initials), step, lambda s: bool(s & n.finals), cap)


def complement(a: Dfa) -> Dfa:
    finals = frozenset(range(a.num_states)) - a.finals
    return Dfa(a.alphabet, a.delta, a.initial, finals, a.labels)


def intersect(a: Dfa, b: Dfa, cap: int = DEFAULT_STATE_CAP) -> Dfa:
    """Accessible product automaton recognizing ``L(a) & L(b)``."""
    if a.alphabet != b.alphabet:
        raise ValueError("alphabets differ")
    da, db = a.delta, b.delta
    fa, fb = a.finals, b.finals
    k = len(a.alphabet)
    # explore() would work here too; this loop avoids tuple hashing overhead on
    # products with hundreds of thousands of states.
    nb = b.num_states
    start = a.initial * nb + b.initial
    index = {start: 0}
    order = [start]
    delta = []
    pos = 0
    while pos < len(order):
        code = order[pos]
        pos += 1
        p, q = divmod(code, nb)
        rp, rq = da[p], db[q]
        row = []
        for x in range(k):
            c = rp[x] * nb + rq[x]
            j = index.get(c)
            if j is None:
                j = len(order)
                if j >= cap:
                    raise StateCapExceeded(f"more than {cap} product states")
                index[c] = j
                order.append(c)
            row.append(j)
        delta.append(tuple(row))
    finals = frozenset(i for i, c in enumerate(order) if c // nb in fa and c % nb in fb)
    labels = tuple(divmod(c, nb) for c in order)
    return Dfa(a.alphabet, tuple(delta), 0, finals, labels)


def universal_dfa(alphabet: Sequence[str]) -> Dfa:
    """One accepting state looping on every letter."""
    return Dfa(tuple(alphabet), (tuple(0 for _ in alphabet),), 0, frozenset({0}))


def trim_accessible(a: Dfa) -> Dfa:
    """Restrict to states reachable from the initial state, renumbered in BFS order."""
    t = explore(a.alphabet, a.initial, lambda q, x: a.delta[q][x], lambda q: q in a.finals)
    labels = None if a.labels is None else tuple(a.labels[q] for q in t.labels)
    return Dfa(t.alphabet, t.delta, 0, t.finals, labels)


def coaccessible_states(a: Dfa) -> set[int]:
    """States from which some final state can be reached."""
    rev: list[list[int]] = [[] for _ in range(a.num_states)]
    for q, row in enumerate(a.delta):
        for r in row:
            rev[r].append(q)
    seen = set(a.finals)
    stack = list(a.finals)
    while stack:
        r = stack.pop()
        for q in rev[r]:
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return seen


def minimize(a: Dfa) -> Dfa:
    """Minimal complete DFA by Hopcroft partition refinement.

    The result is numbered in BFS order from its initial state, so two
    automata with the same language minimize to equal ``Dfa`` values.
    """
    a = trim_accessible(a)
    n, k = a.num_states, len(a.alphabet)
    inv = [[[] for _ in range(n)] for _ in range(k)]
    for q, row in enumerate(a.delta):
        for x, r in enumerate(row):
            inv[x][r].append(q)

    block_of = [0] * n
    blocks: list[set] = []
    finals = set(a.finals)
    others = set(range(n)) - finals
    for part in (finals, others):
        if part:
            for q in part:
                block_of[q] = len(blocks)
            blocks.append(part)

    work = set()
    if len(blocks) == 2:
        smaller = 0 if len(blocks[0]) <= len(blocks[1]) else 1
        work = {(smaller, x) for x in range(k)}
    while work:
        b, x = work.pop()
        splitter = set()
        for r in blocks[b]:
            splitter.update(inv[x][r])
        touched: dict[int, set] = {}
        for q in splitter:
            touched.setdefault(block_of[q], set()).add(q)
        for c, inside in touched.items():
            if len(inside) == len(blocks[c]):
                continue
            outside = blocks[c] - inside
            blocks[c] = inside
            new = len(blocks)
            blocks.append(outside)
            for q in outside:
                block_of[q] = new
            for y in range(k):
                if (c, y) in work:
                    work.add((new, y))
                else:
                    work.add((c, y) if len(inside) <= len(outside) else (new, y))

    quotient_delta = [None] * len(blocks)
    for c, members in enumerate(blocks):
        q = next(iter(members))
        quotient_delta[c] = tuple(block_of[r] for r in a.delta[q])
    quotient_finals = {block_of[q] for q in a.finals}
    m = explore(
        a.alphabet,
        block_of[a.initial],
        lambda c, x: quotient_delta[c][x],
        lambda c: c in quotient_finals,
    )
    return Dfa(m.alphabet, m.delta, 0, m.finals)


def counting_matrix(a: Dfa) -> list[list[int]]:
    """Entry ``[q][r]`` = number of letters leading from ``q`` to ``r``."""
    n = a.num_states
    mat = [[0] * n for _ in range(n)]
    for q, row in enumerate(a.delta):
        for r in row:
            mat[q][r] += 1
    return mat


def count_by_length(a: Dfa, length: int) -> list[int]:
    """``[|L(a) & S^l| for l in 0..length]`` by propagating path counts."""
    vec = {a.initial: 1}
    out = []
    for step in range(length + 1):
        out.append(sum(c for q, c in vec.items() if q in a.finals))
        if step == length:
            break
        nxt: dict[int, int] = {}
        for q, c in vec.items():
            for r in a.delta[q]:
                nxt[r] = nxt.get(r, 0) + c
        vec = nxt
    return out


def words_of_length(alphabet_size: int, length: int) -> Iterable[tuple[int, ...]]:
    return product(range(alphabet_size), repeat=length)


def accepted_words(a: Dfa, length: int) -> list[tuple[int, ...]]:
    """Accepted words of exactly ``length`` letters, in lexicographic order."""
    live = coaccessible_states(a)
    out = []

    def walk(q, prefix):
        if len(prefix) == length:
            if q in a.finals:
                out.append(tuple(prefix))
            return
        for x, r in enumerate(a.delta[q]):
            if r in live:
                prefix.append(x)
                walk(r, prefix)
                prefix.pop()

    if a.initial in live:
        walk(a.initial, [])
    return out


def sink_states(a: Dfa) -> set[int]:
    """Non-final states that loop to themselves on every letter."""
    return {q for q, row in enumerate(a.delta) if q not in a.finals and all(r == q for r in row)}


def to_dot(a: Dfa, hide_sink: bool = False, name: str = "automaton") -> str:
    """Graphviz source; nodes numbered in BFS order from the initial state."""
    order = {a.initial: 0}
    queue = deque([a.initial])
    while queue:
        q = queue.popleft()
        for r in a.delta[q]:
            if r not in order:
                order[r] = len(order)
                queue.append(r)
    hidden = sink_states(a) if hide_sink else set()
    lines = [f"digraph {name} {{", "  rankdir=LR;", '  __start [shape=point, label=""];']
    for q, num in sorted(order.items(), key=lambda kv: kv[1]):
        if q in hidden:
            continue
        shape = "doublecircle" if q in a.finals else "circle"
        lines.append(f'  q{num} [shape={shape}, label="{num}"];')
    lines.append(f"  __start -> q{order[a.initial]};")
    for q, num in sorted(order.items(), key=lambda kv: kv[1]):
        if q in hidden:
            continue
        grouped: dict[int, list[str]] = {}
        for x, r in enumerate(a.delta[q]):
            if r in hidden:
                continue
            grouped.setdefault(order[r], []).append(a.alphabet[x])
        for target in sorted(grouped):
            label = ",".join(grouped[target])
            lines.append(f'  q{num} -> q{target} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
