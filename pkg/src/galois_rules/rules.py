"""Association rule extraction driven by the concept lattice.

The extractor walks the lattice top-down, pruning any branch whose concept
support falls below minsupp (support is antitone, so nothing valid is lost).
At each visited concept it enumerates the frequent motifs belonging to that
concept — the subsets of the intent whose closure is the intent itself — and
emits one candidate rule per strict-subset premise of each motif.  Every rule
therefore carries the support of its origin concept, while its confidence
divides by the support of the premise's minimal closed superset.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .context import FormalContext, Thresholds
from .lattice import ConceptLattice

__all__ = ["AssociationRule", "RuleBase", "extract_rules", "rule_stats", "classify"]


@dataclass(frozen=True)
class AssociationRule:
    """A weighted implication premise ⇒ conclusion with exact statistics."""

    premise: frozenset[str]
    conclusion: frozenset[str]
    origin_concept: int
    support: Fraction
    confidence: Fraction

    @property
    def status(self) -> str:
        return "total" if self.confidence == 1 else "partial"

    @property
    def informative(self) -> bool:
        return not (self.premise & self.conclusion)

    @property
    def motif(self) -> frozenset[str]:
        return self.premise | self.conclusion

    def __str__(self):
        lhs = ",".join(sorted(self.premise))
        rhs = ",".join(sorted(self.conclusion))
        return f"{lhs} => {rhs}"


def classify(rule: AssociationRule) -> tuple[str, bool]:
    """(status, informative): total iff confidence is exactly 1; informative iff sides are disjoint."""
    return rule.status, rule.informative


@dataclass
class RuleBase:
    """Deterministically ordered valid rules; the list index is the rule id."""

    rules: list[AssociationRule]
    thresholds: Thresholds
    by_concept: dict[int, list[int]] = field(default_factory=dict)

    def __post_init__(self):
        if not self.by_concept:
            for idx, rule in enumerate(self.rules):
                self.by_concept.setdefault(rule.origin_concept, []).append(idx)

    def __len__(self):
        return len(self.rules)

    def counts(self) -> dict[str, int]:
        total = sum(1 for r in self.rules if r.status == "total")
        return {"total": total, "partial": len(self.rules) - total}

    def labels(self) -> list[str]:
        """Display labels: partial rules numbered P0…, total rules T0…, in id order."""
        out, p, t = [], 0, 0
        for rule in self.rules:
            if rule.status == "total":
                out.append(f"T{t}")
                t += 1
            else:
                out.append(f"P{p}")
                p += 1
        return out

    def find(self, premise: Iterable[str], conclusion: Iterable[str]) -> int | None:
        premise = frozenset(premise)
        conclusion = frozenset(conclusion)
        for idx, rule in enumerate(self.rules):
            if rule.premise == premise and rule.conclusion == conclusion:
                return idx
        return None


def extract_rules(lat: ConceptLattice, ctx: FormalContext, th: Thresholds) -> RuleBase:
    """Extract every valid rule reachable from the top of the lattice.

    A concept is expanded only if its support clears minsupp; candidates whose
    confidence falls below minconf are dropped.  Concepts reachable through
    several parents are visited once.
    """
    n = ctx.n_individuals
    minsupp = th.minsupp
    minconf = th.minconf
    support_cache: dict[int, Fraction] = {}

    def premise_support(prop_mask: int) -> Fraction:
        cached = support_cache.get(prop_mask)
        if cached is None:
            concept = lat.concepts[lat.concept_for_closure_mask(prop_mask)]
            cached = Fraction(_popcount(concept.extent_mask), n)
            support_cache[prop_mask] = cached
        return cached

    rules: list[AssociationRule] = []
    seen_pairs: set[tuple[int, int]] = set()
    visited: set[int] = set()
    stack = [lat.top_id]
    while stack:
        cid = stack.pop()
        if cid in visited:
            continue
        visited.add(cid)
        concept = lat.concepts[cid]
        supp = Fraction(_popcount(concept.extent_mask), n)
        if supp < minsupp:
            continue  # prune the whole branch; descendants only lose support
        for motif_mask in _generator_motifs(ctx, concept.intent_mask, concept.extent_mask):
            premise_mask = motif_mask
            while True:  # all strict submasks of the motif, empty premise included
                premise_mask = (premise_mask - 1) & motif_mask
                conf = _confidence(supp, premise_support(premise_mask))
                if conf >= minconf:
                    pair = (premise_mask, motif_mask)
                    if pair in seen_pairs:
                        raise AssertionError(f"duplicate rule candidate {pair}")
                    seen_pairs.add(pair)
                    rules.append(AssociationRule(
                        premise=ctx.property_names(premise_mask),
                        conclusion=ctx.property_names(motif_mask & ~premise_mask),
                        origin_concept=cid,
                        support=supp,
                        confidence=conf,
                    ))
                if premise_mask == 0:
                    break
        stack.extend(lat.neighbors(cid, "children"))

    rules.sort(key=lambda r: (r.origin_concept, len(r.motif), tuple(sorted(r.motif)),
                              len(r.premise), tuple(sorted(r.premise))))
    return RuleBase(rules=rules, thresholds=th)


def _generator_motifs(ctx: FormalContext, intent_mask: int, extent_mask: int):
    """Non-empty subsets of the intent whose closure is the intent itself.

    Every frequent motif belongs to exactly one concept this way, since a
    motif and its closure share the same image.
    """
    sub = intent_mask
    while sub:
        if ctx.extent_mask(sub) == extent_mask:
            yield sub
        sub = (sub - 1) & intent_mask


def _confidence(rule_support: Fraction, premise_support: Fraction) -> Fraction:
    # A premise no individual satisfies makes the rule vacuously exact.
    if premise_support == 0:
        return Fraction(1)
    return rule_support / premise_support


def rule_stats(ctx: FormalContext, lat: ConceptLattice,
               premise: Iterable[str], conclusion: Iterable[str]) -> tuple[Fraction, Fraction]:
    """Exact (support, confidence) of premise ⇒ conclusion on this context."""
    premise = frozenset(premise)
    conclusion = frozenset(conclusion)
    if not premise and not conclusion:
        raise ValueError("premise and conclusion cannot both be empty")
    motif_mask = ctx.property_mask(premise | conclusion)
    union_concept = lat.concepts[lat.concept_for_closure_mask(motif_mask)]
    support = Fraction(_popcount(union_concept.extent_mask), ctx.n_individuals)
    premise_concept = lat.concepts[lat.concept_for_closure_mask(ctx.property_mask(premise))]
    premise_support = Fraction(_popcount(premise_concept.extent_mask), ctx.n_individuals)
    return support, _confidence(support, premise_support)


def _popcount(mask: int) -> int:
    return bin(mask).count("1")
