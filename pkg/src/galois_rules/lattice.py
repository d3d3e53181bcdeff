"""Concept lattice: enumeration of all closed (extent, intent) pairs and the
cover-edge (Hasse) order over them.

Concepts are enumerated by closing the set of row intents under pairwise
intersection, which yields exactly the intents of the lattice.  Ids are dense
and assigned after sorting by (extent size descending, lexicographic intent),
so identical contexts always produce identical lattices.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Literal

from .context import FormalContext

__all__ = ["Concept", "ConceptLattice", "CapacityError", "UnknownConceptError", "build_lattice"]

DEFAULT_PROPERTY_GUARD = 64


class CapacityError(ValueError):
    pass


class UnknownConceptError(LookupError):
    def __init__(self, concept_id):
        super().__init__(f"unknown concept id: {concept_id!r}")


class Concept:
    """A closed pair: extent = image(intent) and intent = intent_of(extent)."""

    __slots__ = ("id", "intent", "extent", "intent_mask", "extent_mask")

    def __init__(self, id: int, intent: frozenset[str], extent: frozenset[str],
                 intent_mask: int, extent_mask: int):
        self.id = id
        self.intent = intent
        self.extent = extent
        self.intent_mask = intent_mask
        self.extent_mask = extent_mask

    def __repr__(self):
        return f"Concept(id={self.id}, intent={sorted(self.intent)}, extent={sorted(self.extent)})"


class ConceptLattice:
    """All concepts of a context plus their transitive-reduction cover edges."""

    def __init__(self, ctx: FormalContext, concepts: list[Concept],
                 parents: list[list[int]], children: list[list[int]],
                 top_id: int, bottom_id: int):
        self.ctx = ctx
        self.concepts = concepts
        self._parents = parents
        self._children = children
        self.top_id = top_id
        self.bottom_id = bottom_id
        self._intent_to_id = {c.intent_mask: c.id for c in concepts}

    def __len__(self):
        return len(self.concepts)

    @property
    def covers(self) -> set[tuple[int, int]]:
        """(child id, parent id) pairs; child extent ⊂ parent extent with nothing between."""
        return {(c, p) for c in range(len(self.concepts)) for p in self._parents[c]}

    def concept(self, concept_id: int) -> Concept:
        if not 0 <= concept_id < len(self.concepts):
            raise UnknownConceptError(concept_id)
        return self.concepts[concept_id]

    def leq(self, a: int, b: int) -> bool:
        """True iff concept a is below b: extent(a) ⊆ extent(b)."""
        ea = self.concept(a).extent_mask
        eb = self.concept(b).extent_mask
        return ea & eb == ea

    def neighbors(self, concept_id: int, direction: Literal["parents", "children"]) -> list[int]:
        self.concept(concept_id)
        if direction == "parents":
            return sorted(self._parents[concept_id])
        if direction == "children":
            return sorted(self._children[concept_id])
        raise ValueError(f"direction must be 'parents' or 'children', got {direction!r}")

    def minimal_closed_superset(self, motif: Iterable[str]) -> int:
        """Id of the unique concept whose intent is closure(motif)."""
        return self._intent_to_id[self.ctx.closure_mask(self.ctx.property_mask(motif))]

    def concept_for_closure_mask(self, prop_mask: int) -> int:
        return self._intent_to_id[self.ctx.closure_mask(prop_mask)]

    def support(self, concept_id: int) -> Fraction:
        return Fraction(_popcount(self.concept(concept_id).extent_mask), self.ctx.n_individuals)

    def __repr__(self):
        return f"ConceptLattice({len(self.concepts)} concepts)"


def build_lattice(ctx: FormalContext, max_properties: int = DEFAULT_PROPERTY_GUARD) -> ConceptLattice:
    """Enumerate every concept of the context and materialize cover edges.

    Raises CapacityError when the context has more properties than the guard
    allows; raise the guard explicitly for larger contexts.
    """
    if ctx.n_properties > max_properties:
        raise CapacityError(
            f"context has {ctx.n_properties} properties, guard allows {max_properties}; "
            "pass a larger max_properties to proceed")

    # Intents = closure under intersection of all row intents, seeded with the
    # full property set (the intent of the empty individual set).
    intents = {ctx.all_properties_mask}
    for i in range(ctx.n_individuals):
        row = ctx.row_mask(i)
        intents |= {known & row for known in intents}

    keyed = []
    for intent_mask in intents:
        extent_mask = ctx.extent_mask(intent_mask)
        intent_names = tuple(sorted(ctx.property_names(intent_mask)))
        keyed.append((-_popcount(extent_mask), intent_names, intent_mask, extent_mask))
    keyed.sort()

    concepts = []
    for cid, (_, intent_names, intent_mask, extent_mask) in enumerate(keyed):
        concepts.append(Concept(cid, frozenset(intent_names),
                                ctx.individual_names(extent_mask),
                                intent_mask, extent_mask))

    parents = _upper_covers([c.extent_mask for c in concepts])
    children: list[list[int]] = [[] for _ in concepts]
    for cid, ps in enumerate(parents):
        for p in ps:
            children[p].append(cid)

    top_id = 0  # largest extent sorts first and equals I
    bottom_id = len(concepts) - 1
    return ConceptLattice(ctx, concepts, parents, children, top_id, bottom_id)


def _upper_covers(extents: list[int]) -> list[list[int]]:
    """For each concept, the ids of its minimal strict extent-supersets.

    Assumes ids are sorted by extent size descending, so candidate parents of
    a concept all precede it and scanning them largest-last yields minimality
    checks against already accepted covers only.
    """
    parents: list[list[int]] = [[] for _ in extents]
    for c, ec in enumerate(extents):
        chosen: list[int] = []
        # candidates in increasing extent size: the first containing extent is
        # a cover; later ones only if they do not contain a chosen cover.
        for p in reversed(range(len(extents))):
            ep = extents[p]
            if ep == ec or ec & ep != ec:
                continue
            if any(extents[q] & ep == extents[q] for q in chosen):
                continue
            chosen.append(p)
        parents[c] = sorted(chosen)
    return parents


def _popcount(mask: int) -> int:
    return bin(mask).count("1")
