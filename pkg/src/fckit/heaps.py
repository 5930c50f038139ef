"""Words, commutation classes and heaps of pieces over a Coxeter graph.

Everything here works straight from the definitions (labelled posets built
from words, convex chains, linear extensions) and serves as ground truth for
the automata built elsewhere in the package.

Words are tuples of generator indices.  A heap element is identified with its
position in the word that produced it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .coxeter import INF, CoxeterGraph

DEFAULT_CLASS_CAP = 10**6


class CapExceeded(RuntimeError):
    """A configurable enumeration cap was hit."""


def parse_word(g: CoxeterGraph, text: str | Sequence) -> tuple[int, ...]:
    """Turn ``"stsu"`` or ``["s", "t"]`` into index tuples.

    A plain string is split into single characters unless it contains spaces
    or commas, in which case those act as separators (for multi-character
    generator names such as ``s1``).
    """
    if isinstance(text, str):
        if " " in text or "," in text:
            parts = [p for p in text.replace(",", " ").split() if p]
        else:
            parts = list(text)
    else:
        parts = list(text)
    out = []
    for p in parts:
        out.append(p if isinstance(p, int) else g.index(p))
    return tuple(out)


def word_str(g: CoxeterGraph, w: Sequence[int], sep: str | None = None) -> str:
    names = [g.generators[i] for i in w]
    if sep is None:
        sep = "" if all(len(n) == 1 for n in g.generators) else " "
    return sep.join(names)


def alternating(a: int, b: int, length: int) -> tuple[int, ...]:
    """``a b a b ...`` of the given length."""
    return tuple(a if k % 2 == 0 else b for k in range(length))


@dataclass(frozen=True, eq=False)
class Heap:
    """The heap of a word.

    ``down[j]`` is the bitmask of elements strictly below ``j``.  ``chains``
    maps every pair ``(s, t)`` with ``s < t`` adjacent in the graph, and every
    ``(s, s)``, to the increasing tuple of elements carrying those labels.
    """

    graph: CoxeterGraph
    labels: tuple[int, ...]
    down: tuple[int, ...]
    chains: dict

    def __len__(self):
        return len(self.labels)

    def below(self, i: int, j: int) -> bool:
        """Strict order ``i < j`` in the heap."""
        return bool(self.down[j] >> i & 1)

    @cached_property
    def up(self) -> tuple[int, ...]:
        n = len(self.labels)
        up = [0] * n
        for j in range(n):
            d = self.down[j]
            while d:
                low = d & -d
                up[low.bit_length() - 1] |= 1 << j
                d ^= low
        return tuple(up)

    def covers(self, i: int, j: int) -> bool:
        """``j`` covers ``i``."""
        if not self.below(i, j):
            return False
        between = self.down[j] & self.up[i]
        return between == 0

    def chain_word(self, s: int, t: int) -> tuple[int, ...]:
        key = (min(s, t), max(s, t))
        return tuple(self.labels[x] for x in self.chains.get(key, ()))

    def is_convex(self, elements: Sequence[int]) -> bool:
        """No element outside the set lies between two of its elements."""
        mask = 0
        for x in elements:
            mask |= 1 << x
        for h in elements:
            for h2 in elements:
                if self.up[h] & self.down[h2] & ~mask:
                    return False
        return True

    def maximal_elements(self) -> list[int]:
        return [i for i in range(len(self.labels)) if self.up[i] == 0]

    def minimal_elements(self) -> list[int]:
        return [i for i in range(len(self.labels)) if self.down[i] == 0]

    def levels(self) -> tuple[tuple[int, ...], ...]:
        """Cartier-Foata style levels: sorted label tuples of successive minimal layers."""
        n = len(self.labels)
        height = [0] * n
        for j in range(n):
            d = self.down[j]
            h = 0
            while d:
                low = d & -d
                i = low.bit_length() - 1
                h = max(h, height[i] + 1)
                d ^= low
            height[j] = h
        if not n:
            return ()
        out = [[] for _ in range(max(height) + 1)]
        for j in range(n):
            out[height[j]].append(self.labels[j])
        return tuple(tuple(sorted(level)) for level in out)

    def debug_text(self) -> str:
        names = self.graph.generators
        lines = []
        for k, level in enumerate(self.levels()):
            lines.append(f"{k}: " + " ".join(names[x] for x in level))
        return "\n".join(lines) if lines else "(empty heap)"


def heap_of_word(g: CoxeterGraph, w: Sequence[int]) -> Heap:
    w = tuple(w)
    n = len(w)
    down = []
    for j in range(n):
        d = 0
        for i in range(j):
            if w[i] == w[j] or g.m[w[i]][w[j]] >= 3:
                d |= down[i] | (1 << i)
        down.append(d)
    chains: dict = {}
    for s in range(g.rank):
        chains[(s, s)] = tuple(i for i in range(n) if w[i] == s)
    for s, t in g.edges():
        chains[(s, t)] = tuple(i for i in range(n) if w[i] in (s, t))
    return Heap(g, w, tuple(down), chains)


def heaps_isomorphic(h1: Heap, h2: Heap) -> bool:
    """Label-preserving isomorphism, decided through the level decomposition."""
    return len(h1) == len(h2) and h1.levels() == h2.levels()


def _violates_h1(h: Heap) -> bool:
    for s in range(h.graph.rank):
        ch = h.chains[(s, s)]
        for a, b in zip(ch, ch[1:]):
            if h.covers(a, b):
                return True
    return False


def _alternating_windows(h: Heap, s: int, t: int):
    m = h.graph.m[s][t]
    ch = h.chains[(min(s, t), max(s, t))]
    for k in range(len(ch) - m + 1):
        window = ch[k:k + m]
        labs = [h.labels[x] for x in window]
        if all(labs[p] != labs[p + 1] for p in range(m - 1)):
            yield window


def _violates_h2(h: Heap) -> bool:
    for s, t in h.graph.finite_edges():
        for window in _alternating_windows(h, s, t):
            if h.is_convex(window):
                return True
    return False


def is_fc_heap(g: CoxeterGraph, h: Heap) -> bool:
    """Check both FC heap conditions: no equal-label covering, no convex braid chain."""
    return not _violates_h1(h) and not _violates_h2(h)


def is_fc_word(g: CoxeterGraph, w: Sequence[int]) -> bool:
    return is_fc_heap(g, heap_of_word(g, w))


def max_labels(h: Heap) -> frozenset[int]:
    return frozenset(h.labels[i] for i in h.maximal_elements())


def q_suffix(g: CoxeterGraph, h: Heap, s: int, t: int) -> tuple[int, ...]:
    """Longest alternating suffix ``q`` of the ``{s,t}`` chain such that
    appending the complementary alternating word creates a convex braid chain.

    Returns the suffix as a word (possibly empty).
    """
    m = g.m[s][t]
    if not (3 <= m < INF):
        raise ValueError("q_suffix needs an edge with finite label >= 3")
    if not is_fc_heap(g, h):
        raise ValueError("q_suffix is only defined on FC heaps")
    chain = h.chain_word(s, t)
    longest = 0
    for k in range(len(chain) - 1, -1, -1):
        if k < len(chain) - 1 and chain[k] == chain[k + 1]:
            break
        longest += 1
    for r in range(min(longest, m - 1), 0, -1):
        suffix = chain[len(chain) - r:]
        last = suffix[-1]
        other = t if last == s else s
        extended = heap_of_word(g, h.labels + alternating(other, last, m - r))
        if any(extended.is_convex(win) for win in _alternating_windows(extended, s, t)):
            return suffix
    return ()


def commutation_class(g: CoxeterGraph, w: Sequence[int], cap: int = DEFAULT_CLASS_CAP) -> set:
    """All words reachable from ``w`` by swapping adjacent commuting letters."""
    w = tuple(w)
    seen = {w}
    queue = deque([w])
    while queue:
        u = queue.popleft()
        for k in range(len(u) - 1):
            a, b = u[k], u[k + 1]
            if a != b and g.m[a][b] == 2:
                v = u[:k] + (b, a) + u[k + 2:]
                if v not in seen:
                    seen.add(v)
                    if len(seen) > cap:
                        raise CapExceeded(f"commutation class larger than {cap}")
                    queue.append(v)
    return seen


def lex_min_rep(g: CoxeterGraph, w: Sequence[int], order: Sequence[str] | None = None) -> tuple[int, ...]:
    """Lexicographically least word of the commutation class.

    ``order`` lists the generators from smallest to largest; the default is
    document order.
    """
    key = list(range(g.rank)) if order is None else [list(order).index(x) for x in g.generators]
    h = heap_of_word(g, w)
    n = len(h)
    remaining = (1 << n) - 1
    out = []
    while remaining:
        best = None
        for i in range(n):
            if remaining >> i & 1 and not (h.down[i] & remaining):
                if best is None or key[h.labels[i]] < key[h.labels[best]]:
                    best = i
        out.append(h.labels[best])
        remaining &= ~(1 << best)
    return tuple(out)


def count_linear_extensions(h: Heap) -> int:
    """Number of linear extensions, by dynamic programming over order ideals."""
    n = len(h)
    full = (1 << n) - 1
    counts = {0: 1}
    for _ in range(n):
        nxt: dict = {}
        for ideal, c in counts.items():
            for i in range(n):
                if not ideal >> i & 1 and (h.down[i] & ~ideal) == 0:
                    key = ideal | (1 << i)
                    nxt[key] = nxt.get(key, 0) + c
        counts = nxt
    return counts.get(full, 1 if n == 0 else 0)
