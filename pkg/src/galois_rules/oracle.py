"""Brute-force reference implementations used by the test suite.

Everything here recomputes from the raw incidence matrix with plain sets and
exhaustive enumeration — deliberately the simplest possible algorithms, and
deliberately sharing no closure/lattice code with the main modules.  Guards
keep the exponential enumerations on desk-scale inputs; raise them explicitly
for one-off computations.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import chain, combinations

from .context import FormalContext, Thresholds

__all__ = ["OracleGuardError", "brute_concepts", "brute_rules", "brute_h_check"]


class OracleGuardError(ValueError):
    pass


def _rows(ctx: FormalContext) -> dict[str, frozenset[str]]:
    matrix = ctx.incidence_matrix()
    return {
        ind: frozenset(prop for j, prop in enumerate(ctx.properties) if matrix[i][j])
        for i, ind in enumerate(ctx.individuals)
    }


def _subsets(items):
    items = sorted(items)
    return chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))


def _image(rows: dict[str, frozenset[str]], motif: frozenset[str]) -> frozenset[str]:
    return frozenset(ind for ind, props in rows.items() if motif <= props)


def _intent(rows: dict[str, frozenset[str]], inds: frozenset[str],
            all_props: frozenset[str]) -> frozenset[str]:
    out = set(all_props)
    for ind in inds:
        out &= rows[ind]
    return frozenset(out)


def brute_concepts(ctx: FormalContext, max_properties: int = 20) -> set[tuple[frozenset[str], frozenset[str]]]:
    """All (extent, intent) pairs from enumerating every one of the 2^|P| motifs."""
    if ctx.n_properties > max_properties:
        raise OracleGuardError(f"{ctx.n_properties} properties exceed the oracle guard {max_properties}")
    rows = _rows(ctx)
    all_props = frozenset(ctx.properties)
    out = set()
    for subset in _subsets(all_props):
        motif = frozenset(subset)
        extent = _image(rows, motif)
        out.add((extent, _intent(rows, extent, all_props)))
    return out


def brute_rules(ctx: FormalContext, th: Thresholds, max_properties: int = 12,
                ) -> set[tuple[frozenset[str], frozenset[str], Fraction, Fraction]]:
    """Every valid rule, from every frequent motif and every strict-subset premise."""
    if ctx.n_properties > max_properties:
        raise OracleGuardError(f"{ctx.n_properties} properties exceed the oracle guard {max_properties}")
    rows = _rows(ctx)
    n = ctx.n_individuals
    supports: dict[frozenset[str], Fraction] = {}
    for subset in _subsets(ctx.properties):
        motif = frozenset(subset)
        supports[motif] = Fraction(len(_image(rows, motif)), n)

    out = set()
    for motif, support in supports.items():
        if not motif or support < th.minsupp:
            continue
        for premise_tuple in _subsets(motif):
            premise = frozenset(premise_tuple)
            if premise == motif:
                continue
            denom = supports[premise]
            confidence = Fraction(1) if denom == 0 else support / denom
            if confidence >= th.minconf:
                out.add((premise, motif - premise, support, confidence))
    return out


def brute_h_check(node, ctx: FormalContext, tax, th: Thresholds) -> bool:
    """Recompute a generalized rule's statistics and flags from scratch.

    True iff the node is valid at the thresholds and informative (no premise
    term comparable to a conclusion term under the is-a order).
    """
    rows = _rows(ctx)
    n = ctx.n_individuals
    premise = frozenset(node.premise)
    conclusion = frozenset(node.conclusion)

    parent_pairs = set(tax.est_un)

    def up(term: str) -> frozenset[str]:
        seen = {term}
        frontier = [term]
        while frontier:
            current = frontier.pop()
            for child, parent in parent_pairs:
                if child == current and parent not in seen:
                    seen.add(parent)
                    frontier.append(parent)
        return frozenset(seen)

    def down(term: str) -> frozenset[str]:
        seen = {term}
        frontier = [term]
        while frontier:
            current = frontier.pop()
            for child, parent in parent_pairs:
                if parent == current and child not in seen:
                    seen.add(child)
                    frontier.append(child)
        return frozenset(seen)

    def holders(term: str) -> frozenset[str]:
        leaves = {t for t in down(term) if t in ctx.properties}
        return frozenset(ind for ind, props in rows.items() if props & leaves)

    def image_of(terms: frozenset[str]) -> frozenset[str]:
        out = frozenset(ctx.individuals)
        for term in terms:
            out &= holders(term)
        return out

    support = Fraction(len(image_of(premise | conclusion)), n)
    premise_count = len(image_of(premise))
    confidence = Fraction(1) if premise_count == 0 else support / Fraction(premise_count, n)

    if support < th.minsupp or confidence < th.minconf:
        return False
    if support != node.support or confidence != node.confidence:
        return False
    for p in premise:
        for q in conclusion:
            if q in up(p) or p in up(q):
                return False
    return True
