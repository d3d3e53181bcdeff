"""Is-a hierarchy over property terms and taxonomy-aware context queries.

Interior terms generalize the context's properties: an individual possesses an
interior term iff it possesses at least one context-property descendant of it.
The relation is a partial order (a DAG — multiple parents are allowed), whose
minimal terms must be exactly the context's properties.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .context import FormalContext

__all__ = ["Taxonomy", "TaxonomyError", "UnknownTermError", "parse_taxonomy",
           "extended_image", "extended_support", "hat_variants"]


class TaxonomyError(ValueError):
    pass


class UnknownTermError(LookupError):
    def __init__(self, term: str):
        super().__init__(f"unknown taxonomy term: {term!r}")
        self.term = term


class Taxonomy:
    """Immutable is-a partial order; ancestor/descendant sets are precomputed."""

    def __init__(self, terms: Iterable[str], est_un: Iterable[tuple[str, str]]):
        self.terms = frozenset(terms)
        self.est_un = frozenset(est_un)
        parents: dict[str, set[str]] = {t: set() for t in self.terms}
        children: dict[str, set[str]] = {t: set() for t in self.terms}
        for child, parent in self.est_un:
            for term in (child, parent):
                if term not in self.terms:
                    raise TaxonomyError(f"edge references term {term!r} missing from term set")
            parents[child].add(parent)
            children[parent].add(child)
        self._parents = {t: tuple(sorted(ps)) for t, ps in parents.items()}
        self._children = {t: tuple(sorted(cs)) for t, cs in children.items()}
        self._ancestors = _reflexive_transitive(self._parents)
        self._descendants = _reflexive_transitive(self._children)

    def ancestors(self, term: str) -> frozenset[str]:
        """Reflexive-transitive ancestors; every term is its own ancestor."""
        try:
            return self._ancestors[term]
        except KeyError:
            raise UnknownTermError(term) from None

    def descendants(self, term: str) -> frozenset[str]:
        try:
            return self._descendants[term]
        except KeyError:
            raise UnknownTermError(term) from None

    def parents(self, term: str) -> tuple[str, ...]:
        try:
            return self._parents[term]
        except KeyError:
            raise UnknownTermError(term) from None

    def is_leaf(self, term: str) -> bool:
        if term not in self.terms:
            raise UnknownTermError(term)
        return not self._children[term]

    def roots(self) -> list[str]:
        return sorted(t for t in self.terms if not self._parents[t])

    def related(self, a: str, b: str) -> bool:
        """True iff a and b are comparable (one is an ancestor of the other)."""
        return b in self.ancestors(a) or a in self.ancestors(b)


def _reflexive_transitive(step: dict[str, tuple[str, ...]]) -> dict[str, frozenset[str]]:
    closed: dict[str, frozenset[str]] = {}

    def visit(term: str, trail: tuple[str, ...]) -> frozenset[str]:
        if term in closed:
            return closed[term]
        if term in trail:
            cycle = " -> ".join(trail[trail.index(term):] + (term,))
            raise TaxonomyError(f"cycle in taxonomy: {cycle}")
        acc = {term}
        for nxt in step[term]:
            acc |= visit(nxt, trail + (term,))
        closed[term] = frozenset(acc)
        return closed[term]

    for term in step:
        visit(term, ())
    return closed


def parse_taxonomy(doc: str, ctx: FormalContext) -> Taxonomy:
    """Parse a line-oriented taxonomy ("child -> parent" pairs, '#' comments).

    Every context property must end up a leaf; properties the document never
    mentions become their own degenerate roots.  A minimal term that is not a
    context property, a property used as a parent, or a cycle all fail
    validation naming the offender.
    """
    pairs: list[tuple[str, str]] = []
    for lineno, raw in enumerate(doc.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "->" not in line:
            raise TaxonomyError(f"line {lineno}: expected 'child -> parent', got {line!r}")
        child, _, parent = line.partition("->")
        child = child.strip()
        parent = parent.strip()
        if not child or not parent:
            raise TaxonomyError(f"line {lineno}: empty term in {line!r}")
        if child == parent:
            raise TaxonomyError(f"line {lineno}: {child!r} cannot be its own parent")
        pairs.append((child, parent))

    props = set(ctx.properties)
    terms = props | {t for pair in pairs for t in pair}
    for child, parent in pairs:
        if parent in props:
            raise TaxonomyError(f"context property {parent!r} used as a parent; properties must stay leaves")
    tax = Taxonomy(terms, pairs)  # raises on cycles
    for term in sorted(terms - props):
        if tax.is_leaf(term):
            raise TaxonomyError(f"leaf term {term!r} is not a context property")
    return tax


def serialize_taxonomy(tax: Taxonomy) -> dict:
    return {"terms": sorted(tax.terms), "est_un": sorted([c, p] for c, p in tax.est_un)}


def _term_extent_mask(ctx: FormalContext, tax: Taxonomy, term: str) -> int:
    """Individuals possessing some context-property descendant of the term."""
    leaves = [t for t in tax.descendants(term) if ctx.is_property(t)]
    mask = 0
    for leaf in leaves:
        mask |= ctx.extent_mask(ctx.property_mask([leaf]))
    return mask


def extended_image(ctx: FormalContext, tax: Taxonomy, gm: Iterable[str]) -> frozenset[str]:
    """Individuals possessing every term of the generalized motif.

    Leaves behave exactly like plain context properties; the empty motif's
    image is every individual.
    """
    return ctx.individual_names(extended_extent_mask(ctx, tax, gm))


def extended_extent_mask(ctx: FormalContext, tax: Taxonomy, gm: Iterable[str]) -> int:
    out = ctx.all_individuals_mask
    for term in gm:
        out &= _term_extent_mask(ctx, tax, term)
        if not out:
            break
    return out


def extended_support(ctx: FormalContext, tax: Taxonomy, gm: Iterable[str]) -> Fraction:
    mask = extended_extent_mask(ctx, tax, gm)
    return Fraction(bin(mask).count("1"), ctx.n_individuals)


def hat_variants(tax: Taxonomy, gm: Iterable[str]) -> list[frozenset[str]]:
    """All one-step generalizations: replace exactly one term by a direct parent.

    Replacements whose parent already occurs in the motif are skipped — they
    would shrink the motif and break the term-wise pairing the rule order is
    built on.  Multi-step ancestors are reached by iterating.
    """
    gm = frozenset(gm)
    out: list[frozenset[str]] = []
    seen = set()
    for term in sorted(gm):
        for parent in tax.parents(term):
            if parent in gm:
                continue
            variant = gm - {term} | {parent}
            if variant not in seen:
                seen.add(variant)
                out.append(variant)
    return out
