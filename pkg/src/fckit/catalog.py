"""Named Coxeter graphs: classical finite and affine types plus the figure families.

Parameter conventions: for finite types and the X/GC families the index is
the number of generators as drawn (``A_n`` has ``n`` generators); for affine
types it is the number of generators minus one (``affine-A 3`` has four).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import figures
from .coxeter import INF, CoxeterGraph
from .figures import CatalogError, path_graph, tree_T

__all__ = ["CatalogError", "FamilyId", "catalog", "parse_family", "FAMILIES", "W0"]


@dataclass(frozen=True)
class FamilyId:
    name: str
    param: int | None = None

    def __str__(self):
        return self.name if self.param is None else f"{self.name}:{self.param}"

    def to_dict(self) -> dict:
        out = {"family": self.name}
        if self.param is not None:
            out["parameter"] = self.param
        return out


def _need(cond, msg):
    if not cond:
        raise CatalogError(msg)


def type_a(n):
    _need(n >= 1, "A_n requires n >= 1")
    return path_graph([3] * (n - 1))


def type_b(n):
    _need(n >= 2, "B_n requires n >= 2")
    return path_graph([4] + [3] * (n - 2))


def type_d(n):
    _need(n >= 4, "D_n requires n >= 4")
    names = [f"s{i}" for i in range(1, n + 1)]
    edges = [("s1", "s3"), ("s2", "s3")] + [(names[i], names[i + 1]) for i in range(2, n - 1)]
    return CoxeterGraph.from_edges(names, edges)


def type_e(n):
    _need(n >= 6, "E_n requires n >= 6")
    names = [f"s{i}" for i in range(1, n + 1)]
    edges = [("s1", "s3"), ("s2", "s4")] + [(names[i], names[i + 1]) for i in range(2, n - 1)]
    return CoxeterGraph.from_edges(names, edges)


def type_f(n):
    _need(n >= 4, "F_n requires n >= 4")
    return path_graph([3, 4] + [3] * (n - 3))


def type_h(n):
    _need(n >= 3, "H_n requires n >= 3")
    return path_graph([5] + [3] * (n - 2))


def type_i2(m):
    _need(m is not None and m >= 3, "I2(m) requires m >= 3")
    return path_graph([m])


def affine_a(n):
    _need(n >= 1, "affine A_n requires n >= 1")
    names = [f"s{i}" for i in range(n + 1)]
    if n == 1:
        return CoxeterGraph.from_edges(names, [("s0", "s1", INF)])
    return CoxeterGraph.from_edges(names, [(names[i], names[(i + 1) % (n + 1)]) for i in range(n + 1)])


def affine_b(n):
    _need(n >= 3, "affine B_n requires n >= 3")
    names = [f"s{i}" for i in range(n + 1)]
    edges = [("s0", "s2")] + [(names[i], names[i + 1]) for i in range(1, n - 1)]
    edges.append((names[n - 1], names[n], 4))
    return CoxeterGraph.from_edges(names, edges)


def affine_c(n):
    _need(n >= 2, "affine C_n requires n >= 2")
    return path_graph([4] + [3] * (n - 2) + [4], [f"s{i}" for i in range(n + 1)])


def affine_d(n):
    _need(n >= 4, "affine D_n requires n >= 4")
    names = [f"s{i}" for i in range(n + 1)]
    edges = [("s0", "s2"), ("s1", "s2")] + [(names[i], names[i + 1]) for i in range(2, n - 2)]
    edges += [(names[n - 2], names[n - 1]), (names[n - 2], names[n])]
    return CoxeterGraph.from_edges(names, edges)


def affine_e(n):
    arms = {6: (2, 2, 2), 7: (1, 3, 3), 8: (1, 2, 5)}
    _need(n in arms, "affine E_n requires n in {6, 7, 8}")
    return tree_T(*arms[n])


def affine_f(n):
    _need(n == 4, "affine F_n requires n = 4")
    return path_graph([3, 3, 4, 3], [f"s{i}" for i in range(5)])


def affine_g(n):
    _need(n == 2, "affine G_n requires n = 2")
    return path_graph([3, 6], ["s0", "s1", "s2"])


def w0():
    return CoxeterGraph.from_edges(["s", "t", "u"], [("s", "t", 4), ("t", "u", 5)])


W0 = w0()

# name -> (builder, parameter description or None when the family is a single graph)
FAMILIES = {
    "A": (type_a, "n >= 1"),
    "B": (type_b, "n >= 2"),
    "D": (type_d, "n >= 4"),
    "E": (type_e, "n >= 6"),
    "F": (type_f, "n >= 4"),
    "H": (type_h, "n >= 3"),
    "I2": (type_i2, "m >= 3"),
    "affine-A": (affine_a, "n >= 1"),
    "affine-B": (affine_b, "n >= 3"),
    "affine-C": (affine_c, "n >= 2"),
    "affine-D": (affine_d, "n >= 4"),
    "affine-E": (affine_e, "n in {6,7,8}"),
    "affine-F": (affine_f, "n = 4"),
    "affine-G": (affine_g, "n = 2"),
    "Z3": (figures.z3, None),
    "Z6": (figures.z6, None),
    "GC": (figures.gc, "n >= 3"),
    "GCprime": (figures.gc_prime, "n >= 3"),
    "XBa": (lambda n: figures.x_family("B", "a", n), "n >= 1"),
    "XBb": (lambda n: figures.x_family("B", "b", n), "n >= 1"),
    "XBc": (lambda n: figures.x_family("B", "c", n), "n >= 1"),
    "XDa": (lambda n: figures.x_family("D", "a", n), "n >= 1"),
    "XDb": (lambda n: figures.x_family("D", "b", n), "n >= 1"),
    "XDc": (lambda n: figures.x_family("D", "c", n), "n >= 1"),
    **{f"Y{i}": ((lambda i=i: figures.y(i)), None) for i in range(1, 10)},
    "W0": (w0, None),
}


def catalog(family, param: int | None = None) -> CoxeterGraph:
    """Graph of a named family, e.g. ``catalog("A", 5)`` or ``catalog(FamilyId("Y", 7))``."""
    if isinstance(family, FamilyId):
        family, param = family.name, family.param
    if family == "Y" and param is not None:
        family, param = f"Y{param}", None
    if family not in FAMILIES:
        raise CatalogError(f"unknown family {family!r}")
    builder, params = FAMILIES[family]
    if params is None:
        if param is not None:
            raise CatalogError(f"family {family} takes no parameter")
        return builder()
    if param is None:
        raise CatalogError(f"family {family} needs a parameter ({params})")
    return builder(int(param))


_REF = re.compile(r"^([A-Za-z0-9-]+?)(?:[:_ ]?\(?(\d+)\)?)?$")


def parse_family(text: str) -> FamilyId:
    """Parse ``"A:5"``, ``"I2:7"``, ``"affine-D:4"``, ``"Y7"`` or ``"W0"``."""
    text = text.strip()
    if text in FAMILIES:
        return FamilyId(text)
    if ":" in text:
        name, _, value = text.partition(":")
        if not value.isdigit():
            raise CatalogError(f"bad parameter in {text!r}")
        return FamilyId(name, int(value))
    match = _REF.match(text)
    if match and match.group(1) in FAMILIES and match.group(2):
        return FamilyId(match.group(1), int(match.group(2)))
    raise CatalogError(f"cannot parse family reference {text!r}")


# ---------------------------------------------------------------- family sets

def pf_members(rank: int) -> list[tuple[FamilyId, CoxeterGraph]]:
    """Irreducible FC-finite types with the given number of generators (I2 excluded)."""
    out = []
    for name, lo in (("A", 1), ("B", 2), ("D", 4), ("E", 6), ("F", 4), ("H", 3)):
        if rank >= lo:
            out.append((FamilyId(name, rank), catalog(name, rank)))
    return out


def pa_members(rank: int) -> list[tuple[FamilyId, CoxeterGraph]]:
    """Irreducible affine types other than affine E8 and F4, by number of generators."""
    n = rank - 1
    out = []
    for name, ok in (
        ("affine-A", n >= 1),
        ("affine-B", n >= 3),
        ("affine-C", n >= 2),
        ("affine-D", n >= 4),
        ("affine-E", n in (6, 7)),
        ("affine-G", n == 2),
    ):
        if ok:
            out.append((FamilyId(name, n), catalog(name, n)))
    return out


def pe_members(rank: int) -> list[tuple[FamilyId, CoxeterGraph]]:
    return [(FamilyId(name), catalog(name)) for name in ("Z3", "Z6") if catalog(name).rank == rank]


def m_members(max_rank: int) -> list[tuple[FamilyId, CoxeterGraph]]:
    """Minimal exponential types with at most ``max_rank`` generators."""
    out = []
    for i in range(1, 10):
        g = figures.y(i)
        if g.rank <= max_rank:
            out.append((FamilyId(f"Y{i}"), g))
    for n in range(3, max_rank + 1):
        out.append((FamilyId("GC", n), figures.gc(n)))
        if n + 1 <= max_rank:
            out.append((FamilyId("GCprime", n), figures.gc_prime(n)))
    extra = {"XBa": 2, "XBb": 3, "XBc": 4, "XDa": 3, "XDb": 4, "XDc": 5}
    for name, offset in extra.items():
        for n in range(1, max_rank - offset + 1):
            out.append((FamilyId(name, n), catalog(name, n)))
    return out
