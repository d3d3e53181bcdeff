"""Local generalization of a rule against the taxonomy.

Two one-step schemes grow the hierarchy around a seed rule: lifting one
conclusion term to a direct parent (always stays valid — support and
confidence can only grow), and lifting one premise term (support grows but
confidence must be re-checked: the premise now covers more individuals and may
pick up counter-examples).  Candidates whose sides become comparable in the
taxonomy are discarded as non-informative, and a premise lift that falls under
minconf is pruned and not explored further.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .context import FormalContext, Thresholds
from .rules import AssociationRule
from .taxonomy import Taxonomy, extended_support, hat_variants

__all__ = ["GeneralizedRule", "HHierarchy", "h_subsumes",
           "generalize_right", "generalize_left", "build_h_hierarchy"]

SEED = "seed"
RIGHT_GEN = "right_gen"
LEFT_GEN = "left_gen"


@dataclass
class GeneralizedRule:
    """A rule over taxonomy terms, with statistics from extended images."""

    premise: frozenset[str]
    conclusion: frozenset[str]
    support: Fraction
    confidence: Fraction
    provenance: str  # seed | right_gen | left_gen (first derivation wins)
    parent_rules: list[int] = field(default_factory=list)  # node ids this one-step-generalizes

    @property
    def key(self) -> tuple[frozenset[str], frozenset[str]]:
        return (self.premise, self.conclusion)

    def __str__(self):
        return f"{','.join(sorted(self.premise))} => {','.join(sorted(self.conclusion))}"


@dataclass
class HHierarchy:
    """Generalization DAG grown from one or more seed rules.

    ``edges`` are (specific id, general id, scheme) triples, each witnessing a
    single hat step; node ids are dense in discovery order, seeds first.
    """

    nodes: list[GeneralizedRule]
    edges: list[tuple[int, int, str]]
    seed_ids: list[int]

    def node_id(self, premise: Iterable[str], conclusion: Iterable[str]) -> int | None:
        key = (frozenset(premise), frozenset(conclusion))
        for idx, node in enumerate(self.nodes):
            if node.key == key:
                return idx
        return None


def _informative(tax: Taxonomy, premise: frozenset[str], conclusion: frozenset[str]) -> bool:
    # Comparable terms across the sides make the rule say "A implies an
    # ancestor (or descendant) of A" — excluded outright.
    return all(not tax.related(p, q) for p in premise for q in conclusion)


def _ancestor_motif(tax: Taxonomy, general: frozenset[str], specific: frozenset[str]) -> bool:
    """True iff a bijection pairs every general term with a distinct specific
    descendant (term-wise ancestor motif); differing sizes never match."""
    if len(general) != len(specific):
        return False
    gen = sorted(general)
    free = list(specific)

    def match(k: int) -> bool:
        if k == len(gen):
            return True
        for i, s in enumerate(free):
            if s is not None and gen[k] in tax.ancestors(s):
                free[i] = None
                if match(k + 1):
                    return True
                free[i] = s
        return False

    return match(0)


def h_subsumes(tax: Taxonomy, specific: GeneralizedRule, general: GeneralizedRule) -> bool:
    """True iff the general rule's sides are term-wise ancestors of the specific's."""
    return (_ancestor_motif(tax, general.premise, specific.premise)
            and _ancestor_motif(tax, general.conclusion, specific.conclusion))


def _stats(ctx: FormalContext, tax: Taxonomy,
           premise: frozenset[str], conclusion: frozenset[str]) -> tuple[Fraction, Fraction]:
    support = extended_support(ctx, tax, premise | conclusion)
    premise_support = extended_support(ctx, tax, premise)
    confidence = Fraction(1) if premise_support == 0 else support / premise_support
    return support, confidence


def generalize_right(rule: GeneralizedRule, tax: Taxonomy, ctx: FormalContext,
                     th: Thresholds) -> list[GeneralizedRule]:
    """Scheme ❶: lift one conclusion term.  Survivors are valid by construction."""
    out = []
    for variant in hat_variants(tax, rule.conclusion):
        if not _informative(tax, rule.premise, variant):
            continue
        support, confidence = _stats(ctx, tax, rule.premise, variant)
        out.append(GeneralizedRule(rule.premise, variant, support, confidence, RIGHT_GEN))
    return out


def generalize_left(rule: GeneralizedRule, tax: Taxonomy, ctx: FormalContext,
                    th: Thresholds) -> list[GeneralizedRule]:
    """Scheme ❷: lift one premise term; confidence is re-checked against minconf."""
    out = []
    for variant in hat_variants(tax, rule.premise):
        if not _informative(tax, variant, rule.conclusion):
            continue
        support, confidence = _stats(ctx, tax, variant, rule.conclusion)
        if confidence < th.minconf:
            continue  # over-generalization: the wider premise swallowed counter-examples
        out.append(GeneralizedRule(variant, rule.conclusion, support, confidence, LEFT_GEN))
    return out


def seed_rule(ctx: FormalContext, tax: Taxonomy, rule: AssociationRule | GeneralizedRule,
              th: Thresholds) -> GeneralizedRule:
    """Re-derive a seed's statistics and vet it: must be valid and informative."""
    premise = frozenset(rule.premise)
    conclusion = frozenset(rule.conclusion)
    if not conclusion:
        raise ValueError(f"seed rule {rule} has an empty conclusion")
    support, confidence = _stats(ctx, tax, premise, conclusion)
    if support < th.minsupp or confidence < th.minconf:
        raise ValueError(f"seed rule {rule} is not valid at the given thresholds")
    if not _informative(tax, premise, conclusion):
        raise ValueError(f"seed rule {rule} is not informative")
    return GeneralizedRule(premise, conclusion, support, confidence, SEED)


def build_h_hierarchy(seeds: AssociationRule | GeneralizedRule | Sequence,
                      tax: Taxonomy, ctx: FormalContext, th: Thresholds) -> HHierarchy:
    """Breadth-first closure of both generalization schemes from the seed(s).

    Nodes are deduplicated by (premise, conclusion), so several seeds share
    one DAG; each edge records the single hat step that produced it.
    """
    if isinstance(seeds, (AssociationRule, GeneralizedRule)):
        seeds = [seeds]
    if not seeds:
        raise ValueError("at least one seed rule is required")

    nodes: list[GeneralizedRule] = []
    index: dict[tuple[frozenset[str], frozenset[str]], int] = {}
    seed_ids = []
    for seed in seeds:
        vetted = seed_rule(ctx, tax, seed, th)
        if vetted.key not in index:
            index[vetted.key] = len(nodes)
            nodes.append(vetted)
        seed_ids.append(index[vetted.key])

    edges: list[tuple[int, int, str]] = []
    cursor = 0
    while cursor < len(nodes):
        node = nodes[cursor]
        candidates = ([(c, RIGHT_GEN) for c in generalize_right(node, tax, ctx, th)]
                      + [(c, LEFT_GEN) for c in generalize_left(node, tax, ctx, th)])
        for cand, scheme in candidates:
            nid = index.get(cand.key)
            if nid is None:
                nid = len(nodes)
                index[cand.key] = nid
                nodes.append(cand)
            target = nodes[nid]
            edges.append((cursor, nid, scheme))
            if cursor not in target.parent_rules:
                target.parent_rules.append(cursor)
        cursor += 1
    return HHierarchy(nodes=nodes, edges=edges, seed_ids=seed_ids)
