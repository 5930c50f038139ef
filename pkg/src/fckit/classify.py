"""Growth classification of FC elements with explicit certificates.

An irreducible graph is FC-finite or FC-periodic exactly when it is
isomorphic to a member of the periodic catalog; otherwise it dominates one of
the minimal exponential patterns.  A reducible group grows like the product of
its factors.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .catalog import FamilyId, m_members, pa_members, pe_members, pf_members
from .coxeter import INF, CoxeterGraph, dominating_embedding, irreducible_components, isomorphic
from .series import growth_verdict, series_coefficients, wfc_series

# verdict -> the growth kind reported by growth_verdict
GROWTH_KIND = {
    "FC-finite": "finite",
    "FC-periodic": "ultimately-periodic",
    "exponential": "exponential",
    "polynomial": "other-subexponential",
}


@dataclass(frozen=True)
class ComponentVerdict:
    generators: tuple[str, ...]
    verdict: str
    family: FamilyId | None
    catalog_set: str | None  # PF, PA, PE or M
    embedding: dict[str, str] | None = None

    def to_dict(self) -> dict:
        cert = {"family": None if self.family is None else str(self.family),
                "parameters": None if self.family is None else self.family.param,
                "set": self.catalog_set}
        if self.embedding is not None:
            cert["embedding"] = self.embedding
        return {"generators": list(self.generators), "verdict": self.verdict, "certificate": cert}


@dataclass(frozen=True)
class Classification:
    verdict: str
    components: tuple[ComponentVerdict, ...]
    discrepancy: str | None = None
    notes: tuple[str, ...] = field(default=())

    @property
    def growth_kind(self) -> str:
        return GROWTH_KIND[self.verdict]

    @property
    def certificate(self) -> dict:
        """Certificate of the component that decides the verdict."""
        decisive = {"FC-finite": "FC-finite", "FC-periodic": "FC-periodic",
                    "exponential": "exponential", "polynomial": "FC-periodic"}[self.verdict]
        for c in self.components:
            if c.verdict == decisive:
                return c.to_dict()["certificate"]
        return {"family": None, "parameters": None}

    def to_dict(self) -> dict:
        out = {"verdict": self.verdict, "certificate": self.certificate,
               "components": [c.to_dict() for c in self.components]}
        if self.discrepancy:
            out["discrepancy"] = self.discrepancy
        return out


def _i2_member(g: CoxeterGraph):
    if g.rank != 2:
        return None
    m = g.m[0][1]
    if m == INF:
        return FamilyId("affine-A", 1), "PA", "FC-periodic"
    if m >= 3:
        return FamilyId("I2", int(m)), "PF", "FC-finite"
    return None


def classify_component(g: CoxeterGraph) -> ComponentVerdict:
    gens = g.generators
    if g.rank == 1:
        return ComponentVerdict(gens, "FC-finite", FamilyId("A", 1), "PF")
    hit = _i2_member(g)
    if hit:
        return ComponentVerdict(gens, hit[2], hit[0], hit[1])
    for members, label, verdict in (
        (pf_members(g.rank), "PF", "FC-finite"),
        (pa_members(g.rank), "PA", "FC-periodic"),
        (pe_members(g.rank), "PE", "FC-periodic"),
    ):
        for fam, h in members:
            if isomorphic(h, g):
                return ComponentVerdict(gens, verdict, fam, label)
    for fam, h in m_members(g.rank + 1):
        emb = dominating_embedding(h, g)
        if emb is not None:
            named = {h.generators[i]: g.generators[j] for i, j in sorted(emb.items())}
            return ComponentVerdict(gens, "exponential", fam, "M", named)
    return ComponentVerdict(gens, "unknown", None, None)


def _combine(parts: list[ComponentVerdict]) -> str:
    kinds = [p.verdict for p in parts]
    if "exponential" in kinds:
        return "exponential"
    periodic = kinds.count("FC-periodic")
    if periodic == 0:
        return "FC-finite"
    return "FC-periodic" if periodic == 1 else "polynomial"


def classify_group(g: CoxeterGraph) -> Classification:
    parts = [classify_component(c) for c in irreducible_components(g)]
    if all(p.verdict != "unknown" for p in parts):
        return Classification(_combine(parts), tuple(parts))
    # no catalog match: decide by computing the series instead
    kind = growth_verdict(wfc_series(g)).kind
    verdict = {v: k for k, v in GROWTH_KIND.items()}[kind]
    unmatched = [",".join(p.generators) for p in parts if p.verdict == "unknown"]
    return Classification(verdict, tuple(parts),
                          discrepancy=f"no catalog match for component(s) {'; '.join(unmatched)}; "
                                      f"verdict taken from the generating function")


@dataclass
class Crosscheck:
    classification: Classification
    growth: object
    oracle_counts: list[int]
    series_counts: list[int]
    agree: bool

    def to_dict(self) -> dict:
        return {"verdict": self.classification.verdict, "growth": self.growth.to_dict(),
                "oracle_counts": self.oracle_counts, "series_counts": self.series_counts,
                "status": "agree" if self.agree else "disagree"}


def crosscheck_verdict(g: CoxeterGraph, length: int, cap: int | None = None) -> Crosscheck:
    from .oracle import wfc_series_bruteforce

    cls = classify_group(g)
    f = wfc_series(g, cap=cap)
    gv = growth_verdict(f)
    oracle = wfc_series_bruteforce(g, length) if cap is None else wfc_series_bruteforce(g, length, cap)
    coeffs = series_coefficients(f, length)
    agree = gv.kind == cls.growth_kind and oracle == coeffs and cls.discrepancy is None
    return Crosscheck(cls, gv, oracle, coeffs, agree)
