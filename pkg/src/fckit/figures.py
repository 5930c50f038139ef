"""Coxeter graphs that are only given as drawings.

This file collects every family whose diagram had to be read off a figure:
the two exceptional FC-periodic types Z3 and Z6, and the minimal
exponential-growth types GC, GC', X and Y1..Y9.  Each diagram was pinned down
by the case analysis that introduces it and then cross-checked by computing
its FC generating function (see the README's reproduction notes):

    Z3   [7,3] path                        series P(t)/(1 - t^5)
    Z6   [3,3,4,3,3] path                  series P(t)/(1 - t), eventually 108
    Y1   [8,3] path                        1 - t^5 - t^7
    Y2   [6,3,3] path                      1 - t^5 - t^9 - t^11
    Y3   [3,5,3] path                      1 - t^4 - t^6
    Y4   star K_{1,4}, one 4-edge          1 - 2t^3 - 3t^5 - 2t^6 - t^7 + 6t^8 + 2t^9 + 4t^12 + t^13
    Y5   star K_{1,3}, two 4-edges         1 - t^2 - t^3 - 2t^6 - t^7 + 3t^8 + t^9 + t^12
    Y6   [3,3,4,3,3,3] path                1 - t^12 - t^17 - t^25
    Y7   star K_{1,5}                      1 - 3t^3 - t^7
    Y8   tree T(2,2,3)                     1 - t^12 - t^17 - t^25
    Y9   tree T(1,3,4)                     1 - t^18 - t^37

The X types are affine B/C/D-like strings whose two ends are chosen among
``B`` (``t =4= x1``) or ``D`` (fork ``t1, t2 - x1``) on the left and
``a`` (``xn =5= u``), ``b`` (``xn =4= u1 - u2``) or ``c`` (``xn`` forked into
``v`` and ``u1 - u2``) on the right.
"""

from __future__ import annotations

from .coxeter import CoxeterGraph, GraphError


class CatalogError(GraphError):
    """Unknown family name or parameter out of range."""


def path_graph(labels, names=None) -> CoxeterGraph:
    """Path whose consecutive edges carry ``labels``."""
    n = len(labels) + 1
    names = names or [f"s{i}" for i in range(1, n + 1)]
    return CoxeterGraph.from_edges(names, [(names[i], names[i + 1], m) for i, m in enumerate(labels)])


def tree_T(p: int, q: int, r: int) -> CoxeterGraph:
    """Simply laced star with arms of ``p``, ``q``, ``r`` vertices around a center ``c``."""
    return _star([p, q, r], {})


def _star(arms, first_labels) -> CoxeterGraph:
    gens, edges = ["c"], []
    for a, length in enumerate(arms):
        prev = "c"
        for k in range(length):
            v = f"{chr(ord('a') + a)}{k + 1}"
            gens.append(v)
            edges.append((prev, v, first_labels.get(a, 3) if k == 0 else 3))
            prev = v
    return CoxeterGraph.from_edges(gens, edges)


def z3() -> CoxeterGraph:
    return path_graph([7, 3])


def z6() -> CoxeterGraph:
    return path_graph([3, 3, 4, 3, 3])


def gc(n: int) -> CoxeterGraph:
    """n-cycle with the edge s1 - s2 labelled 4."""
    _need(n >= 3, "GC_n requires n >= 3")
    names = [f"s{i}" for i in range(1, n + 1)]
    edges = [(names[i], names[(i + 1) % n], 4 if i == 0 else 3) for i in range(n)]
    return CoxeterGraph.from_edges(names, edges)


def gc_prime(n: int) -> CoxeterGraph:
    """Simply laced n-cycle with a pendant vertex s0 attached to s1."""
    _need(n >= 3, "GC'_n requires n >= 3")
    names = ["s0"] + [f"s{i}" for i in range(1, n + 1)]
    edges = [(names[i], names[i % n + 1]) for i in range(1, n + 1)]
    edges.append(("s0", "s1"))
    return CoxeterGraph.from_edges(names, edges)


def x_family(left: str, right: str, n: int) -> CoxeterGraph:
    _need(n >= 1, "X_n types require n >= 1")
    _need(left in ("B", "D") and right in ("a", "b", "c"), f"unknown X type {left},{right}")
    xs = [f"x{i}" for i in range(1, n + 1)]
    gens, edges = [], []
    if left == "B":
        gens.append("t")
        edges.append(("t", xs[0], 4))
    else:
        gens += ["t1", "t2"]
        edges += [("t1", xs[0]), ("t2", xs[0])]
    gens += xs
    edges += [(xs[i], xs[i + 1]) for i in range(n - 1)]
    end = xs[-1]
    if right == "a":
        gens.append("u")
        edges.append((end, "u", 5))
    elif right == "b":
        gens += ["u1", "u2"]
        edges += [(end, "u1", 4), ("u1", "u2")]
    else:
        gens += ["v", "u1", "u2"]
        edges += [(end, "v"), (end, "u1"), ("u1", "u2")]
    return CoxeterGraph.from_edges(gens, edges)


def y(i: int) -> CoxeterGraph:
    builders = {
        1: lambda: path_graph([8, 3]),
        2: lambda: path_graph([6, 3, 3]),
        3: lambda: path_graph([3, 5, 3]),
        4: lambda: _star([1, 1, 1, 1], {0: 4}),
        5: lambda: _star([1, 1, 1], {0: 4, 1: 4}),
        6: lambda: path_graph([3, 3, 4, 3, 3, 3]),
        7: lambda: _star([1, 1, 1, 1, 1], {}),
        8: lambda: tree_T(2, 2, 3),
        9: lambda: tree_T(1, 3, 4),
    }
    _need(i in builders, "Y types are numbered 1..9")
    return builders[i]()


def _need(cond: bool, message: str):
    if not cond:
        raise CatalogError(message)
