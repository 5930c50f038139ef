"""Coxeter graphs: validation, JSON (de)serialization, components, domination.

A Coxeter graph is stored as an ordered tuple of generator names together with
its full symmetric Coxeter matrix.  ``math.inf`` is used in memory for an
infinite label; the JSON document format writes it as ``0``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import networkx as nx
from networkx.algorithms import isomorphism

INF = math.inf


class GraphError(ValueError):
    """Raised when a Coxeter matrix or graph document is malformed."""


def _label_from_json(value, where: str):
    if isinstance(value, bool) or not isinstance(value, int):
        raise GraphError(f"entry {where} must be an integer, got {value!r}")
    if value == 0:
        return INF
    return value


@dataclass(frozen=True)
class CoxeterGraph:
    generators: tuple[str, ...]
    m: tuple[tuple, ...]

    def __post_init__(self):
        gens = tuple(self.generators)
        rows = tuple(tuple(row) for row in self.m)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "m", rows)
        n = len(gens)
        if len(set(gens)) != n:
            raise GraphError("generator names must be distinct")
        if len(rows) != n or any(len(row) != n for row in rows):
            raise GraphError(f"matrix must be {n}x{n}")
        for i in range(n):
            if rows[i][i] != 1:
                raise GraphError(f"diagonal entry m[{gens[i]}][{gens[i]}] must be 1, got {rows[i][i]!r}")
            for j in range(n):
                if i == j:
                    continue
                v = rows[i][j]
                if v != rows[j][i]:
                    raise GraphError(
                        f"matrix not symmetric at m[{gens[i]}][{gens[j]}]={v!r} vs m[{gens[j]}][{gens[i]}]={rows[j][i]!r}"
                    )
                if not (v == INF or (isinstance(v, int) and v >= 2)):
                    raise GraphError(f"off-diagonal entry m[{gens[i]}][{gens[j]}] must be >= 2 or infinite, got {v!r}")

    @classmethod
    def from_edges(cls, generators: Sequence[str], edges: Iterable[tuple]) -> "CoxeterGraph":
        """Build from ``(s, t)`` (label 3) or ``(s, t, m)`` triples; unlisted pairs commute."""
        gens = tuple(generators)
        index = {g: i for i, g in enumerate(gens)}
        n = len(gens)
        m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
        for e in edges:
            s, t = e[0], e[1]
            label = e[2] if len(e) > 2 else 3
            i, j = index[s], index[t]
            if i == j:
                raise GraphError(f"loop at {s}")
            m[i][j] = m[j][i] = label
        return cls(gens, tuple(map(tuple, m)))

    @property
    def rank(self) -> int:
        return len(self.generators)

    def index(self, name: str) -> int:
        try:
            return self.generators.index(name)
        except ValueError:
            raise GraphError(f"unknown generator {name!r}") from None

    def adjacent(self, i: int, j: int) -> bool:
        """True when ``i != j`` and the two generators do not commute."""
        return i != j and self.m[i][j] >= 3

    def commute(self, i: int, j: int) -> bool:
        return i != j and self.m[i][j] == 2

    def edges(self) -> list[tuple[int, int]]:
        n = self.rank
        return [(i, j) for i in range(n) for j in range(i + 1, n) if self.m[i][j] >= 3]

    def finite_edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in self.edges() if self.m[i][j] != INF]

    def neighbors(self, i: int) -> list[int]:
        return [j for j in range(self.rank) if self.adjacent(i, j)]

    def subgraph(self, indices: Sequence[int]) -> "CoxeterGraph":
        idx = list(indices)
        return CoxeterGraph(
            tuple(self.generators[i] for i in idx),
            tuple(tuple(self.m[i][j] for j in idx) for i in idx),
        )

    def relabel(self, names: Sequence[str]) -> "CoxeterGraph":
        return CoxeterGraph(tuple(names), self.m)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.rank))
        for i, j in self.edges():
            g.add_edge(i, j, label=self.m[i][j])
        return g

    def to_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "m": [[0 if v == INF else v for v in row] for row in self.m],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    def __str__(self) -> str:
        parts = []
        for i, j in self.edges():
            label = self.m[i][j]
            mark = "inf" if label == INF else str(label)
            parts.append(f"{self.generators[i]}-{mark}-{self.generators[j]}")
        isolated = [self.generators[i] for i in range(self.rank) if not self.neighbors(i)]
        return "CoxeterGraph(" + ", ".join(parts + isolated) + ")"


def parse_graph(text) -> CoxeterGraph:
    """Parse a graph document (JSON text or an already-decoded dict)."""
    if isinstance(text, (str, bytes)):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphError(f"invalid JSON: {exc}") from exc
    else:
        doc = text
    if not isinstance(doc, dict) or "generators" not in doc or "m" not in doc:
        raise GraphError('graph document needs keys "generators" and "m"')
    gens = doc["generators"]
    if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
        raise GraphError('"generators" must be a list of strings')
    rows = doc["m"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise GraphError('"m" must be a list of lists')
    m = []
    for i, row in enumerate(rows):
        m.append(tuple(_label_from_json(v, f"m[{i}][{j}]") for j, v in enumerate(row)))
    return CoxeterGraph(tuple(gens), tuple(m))


def serialize_graph(g: CoxeterGraph) -> str:
    return g.to_json()


def irreducible_components(g: CoxeterGraph) -> list[CoxeterGraph]:
    """Connected components of the Coxeter graph, each in generator order."""
    seen = set()
    comps = []
    for start in range(g.rank):
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(g.subgraph(sorted(comp)))
    return comps


def is_irreducible(g: CoxeterGraph) -> bool:
    return g.rank > 0 and len(irreducible_components(g)) == 1


def dominating_embedding(small: CoxeterGraph, big: CoxeterGraph) -> dict[int, int] | None:
    """An injective vertex map sending each edge of ``small`` onto an edge of
    ``big`` whose label is at least as large, or ``None``."""
    if small.rank > big.rank:
        return None
    matcher = isomorphism.GraphMatcher(
        big.to_networkx(),
        small.to_networkx(),
        edge_match=lambda big_attr, small_attr: small_attr["label"] <= big_attr["label"],
    )
    for mapping in matcher.subgraph_monomorphisms_iter():
        # mapping: big vertex -> small vertex; isolated vertices of small are
        # covered because monomorphisms are total on the pattern's nodes.
        return {v: k for k, v in mapping.items()}
    return None


def graph_dominates(small: CoxeterGraph, big: CoxeterGraph) -> bool:
    """``small <= big``: unlabelled subgraph embedding with label domination."""
    return dominating_embedding(small, big) is not None


def isomorphic(g1: CoxeterGraph, g2: CoxeterGraph) -> bool:
    """Labelled graph isomorphism (labels must match exactly)."""
    if g1.rank != g2.rank or len(g1.edges()) != len(g2.edges()):
        return False
    return nx.is_isomorphic(
        g1.to_networkx(), g2.to_networkx(), edge_match=lambda a, b: a["label"] == b["label"]
    )
