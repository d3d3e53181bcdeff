"""Grouping of rules into R-ensembles and the global M-subsumption hierarchy.

All rules attached to one concept share that concept's support and form one
R-ensemble; the hierarchy orders the ensembles by the extent inclusion of
their concepts.  "X subsumes Y" throughout means X's concept covers the larger
population (X is the more general node).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from .lattice import ConceptLattice
from .rules import RuleBase

__all__ = ["REnsemble", "MHierarchy", "group_rensembles", "m_subsumes",
           "build_m_hierarchy", "navigate"]


class UnknownNodeError(LookupError):
    def __init__(self, node_id):
        super().__init__(f"unknown hierarchy node: {node_id!r}")


@dataclass(frozen=True)
class REnsemble:
    """The valid rules extracted from one concept; they all share its support."""

    concept_id: int
    motif: frozenset[str]
    rules: tuple[int, ...]  # rule ids in the owning RuleBase
    support: Fraction


@dataclass
class MHierarchy:
    """R-ensembles ordered by concept subsumption, edges transitively reduced.

    Node identity is the concept id; ``edges`` holds (general, specific)
    pairs, ``roots`` the nodes without a more general node.
    """

    nodes: dict[int, REnsemble]
    edges: list[tuple[int, int]]
    roots: list[int]
    _parents: dict[int, list[int]] = field(default_factory=dict, repr=False)
    _children: dict[int, list[int]] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self._parents:
            self._parents = {nid: [] for nid in self.nodes}
            self._children = {nid: [] for nid in self.nodes}
            for general, specific in self.edges:
                self._parents[specific].append(general)
                self._children[general].append(specific)
            for seq in self._parents.values():
                seq.sort()
            for seq in self._children.values():
                seq.sort()

    def node(self, node_id: int) -> REnsemble:
        try:
            return self.nodes[node_id]
        except KeyError:
            raise UnknownNodeError(node_id) from None


def group_rensembles(rb: RuleBase, lat: ConceptLattice) -> list[REnsemble]:
    """One ensemble per concept that produced at least one valid rule."""
    out = []
    for cid in sorted(rb.by_concept):
        rule_ids = rb.by_concept[cid]
        out.append(REnsemble(
            concept_id=cid,
            motif=lat.concepts[cid].intent,
            rules=tuple(rule_ids),
            support=rb.rules[rule_ids[0]].support,
        ))
    return out


def m_subsumes(lat: ConceptLattice, general: REnsemble, specific: REnsemble) -> bool:
    """True iff the general ensemble's concept covers the specific one's population."""
    return lat.leq(specific.concept_id, general.concept_id)


def build_m_hierarchy(lat: ConceptLattice, ensembles: list[REnsemble]) -> MHierarchy:
    """Order the ensembles by concept subsumption and keep only cover edges.

    Concepts without valid rules are not nodes; their ordering contribution
    collapses into direct edges between the surviving concepts.
    """
    nodes = {e.concept_id: e for e in ensembles}
    ids = sorted(nodes)
    extents = {cid: lat.concepts[cid].extent_mask for cid in ids}

    edges: list[tuple[int, int]] = []
    roots: list[int] = []
    for cid in ids:
        ec = extents[cid]
        chosen: list[int] = []
        # minimal strict supersets among owning concepts, smallest first
        for other in sorted(ids, key=lambda i: _popcount(extents[i])):
            eo = extents[other]
            if eo == ec or ec & eo != ec:
                continue
            if any(extents[q] & eo == extents[q] for q in chosen):
                continue
            chosen.append(other)
        if not chosen:
            roots.append(cid)
        edges.extend((general, cid) for general in sorted(chosen))
    edges.sort()
    return MHierarchy(nodes=nodes, edges=edges, roots=roots)


def navigate(h: MHierarchy, node_id: int,
             direction: Literal["generalize", "specialize"]) -> list[int]:
    """Adjacent node ids in the requested direction."""
    h.node(node_id)
    if direction == "generalize":
        return list(h._parents[node_id])
    if direction == "specialize":
        return list(h._children[node_id])
    raise ValueError(f"direction must be 'generalize' or 'specialize', got {direction!r}")


def _popcount(mask: int) -> int:
    return bin(mask).count("1")
