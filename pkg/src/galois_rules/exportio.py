"""Serialization of every pipeline artifact to JSON / DOT / CSV.

All exports are pure functions of the workspace and byte-identical across
runs.  Rationals are serialized as authoritative "p/q" strings next to a
4-place decimal convenience field; the two-digit truncated rendering (2/3 →
"0.66") is used only in the table-style CSV, which is a presentation surface.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .context import FormalContext, Thresholds, serialize_context
from .hsub import HHierarchy
from .lattice import ConceptLattice, build_lattice
from .msub import MHierarchy, REnsemble, build_m_hierarchy, group_rensembles
from .rules import RuleBase, extract_rules
from .taxonomy import Taxonomy

__all__ = ["Workspace", "build_workspace", "export", "load_m_hierarchy",
           "MissingComponentError", "UnsupportedExportError",
           "frac_str", "frac_decimal", "decimal2"]


class MissingComponentError(ValueError):
    pass


class UnsupportedExportError(ValueError):
    pass


def frac_str(value: Fraction) -> str:
    return str(value)


def frac_decimal(value: Fraction) -> float:
    return round(float(value), 4)


def decimal2(value: Fraction) -> str:
    """Truncate to two decimals and drop trailing zeros: 2/3 → '0.66', 1 → '1'."""
    hundredths = value.numerator * 100 // value.denominator
    text = f"{hundredths // 100}.{hundredths % 100:02d}"
    return text.rstrip("0").rstrip(".")


@dataclass
class Workspace:
    """Mutually consistent artifacts of one mining run."""

    context: FormalContext
    lattice: ConceptLattice
    rule_base: RuleBase
    ensembles: list[REnsemble]
    m_hierarchy: MHierarchy
    taxonomy: Taxonomy | None = None
    h_hierarchies: dict[str, HHierarchy] = field(default_factory=dict)

    @property
    def thresholds(self) -> Thresholds:
        return self.rule_base.thresholds


def build_workspace(ctx: FormalContext, th: Thresholds, taxonomy: Taxonomy | None = None,
                    max_properties: int = 64) -> Workspace:
    """Run the full pipeline: lattice, rules, R-ensembles, M-hierarchy."""
    lat = build_lattice(ctx, max_properties=max_properties)
    rb = extract_rules(lat, ctx, th)
    ensembles = group_rensembles(rb, lat)
    mh = build_m_hierarchy(lat, ensembles)
    return Workspace(context=ctx, lattice=lat, rule_base=rb,
                     ensembles=ensembles, m_hierarchy=mh, taxonomy=taxonomy)


def export(ws: Workspace, what: str, format: str) -> str:
    """Render one workspace component; unsupported pairs are rejected."""
    renderers = {
        ("context", "csv"): lambda: serialize_context(ws.context, "csv"),
        ("context", "cxt"): lambda: serialize_context(ws.context, "cxt"),
        ("lattice", "json"): lambda: _lattice_json(ws.lattice),
        ("lattice", "dot"): lambda: _lattice_dot(ws.lattice),
        ("rules", "json"): lambda: _rules_json(ws.rule_base),
        ("rules", "csv"): lambda: _rules_csv(ws.rule_base),
        ("mhier", "json"): lambda: _mhier_json(ws.m_hierarchy),
        ("mhier", "dot"): lambda: _mhier_dot(ws.m_hierarchy),
        ("hhier", "json"): lambda: _hhier_json(_require_hhier(ws)),
        ("hhier", "dot"): lambda: _hhier_dot(_require_hhier(ws)),
    }
    known_components = {c for c, _ in renderers}
    if what not in known_components:
        raise MissingComponentError(f"unknown component {what!r}")
    renderer = renderers.get((what, format))
    if renderer is None:
        raise UnsupportedExportError(f"component {what!r} has no {format!r} export")
    return renderer()


def _require_hhier(ws: Workspace) -> dict[str, HHierarchy]:
    if not ws.h_hierarchies:
        raise MissingComponentError("workspace has no generalization hierarchies; run generalize first")
    return ws.h_hierarchies


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2) + "\n"


# -- lattice ----------------------------------------------------------------


def _lattice_json(lat: ConceptLattice) -> str:
    entries = []
    for c in lat.concepts:
        entries.append({
            "id": c.id,
            "intent": sorted(c.intent),
            "extent": sorted(c.extent),
            "parents": lat.neighbors(c.id, "parents"),
            "children": lat.neighbors(c.id, "children"),
        })
    return _dump(entries)


def _dot_label(parts) -> str:
    text = ", ".join(parts) if parts else "∅"
    return text.replace("\\", "\\\\").replace('"', '\\"')


def _lattice_dot(lat: ConceptLattice) -> str:
    lines = ["digraph lattice {", "  rankdir=BT;", "  node [shape=box];"]
    for c in lat.concepts:
        lines.append(f'  c{c.id} [label="{_dot_label(sorted(c.intent))}"];')
    for child, parent in sorted(lat.covers):
        lines.append(f"  c{child} -> c{parent};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- rules ------------------------------------------------------------------


def rule_payload(rb: RuleBase, idx: int, labels: list[str] | None = None) -> dict:
    rule = rb.rules[idx]
    labels = labels if labels is not None else rb.labels()
    return {
        "id": idx,
        "label": labels[idx],
        "premise": sorted(rule.premise),
        "conclusion": sorted(rule.conclusion),
        "support": frac_str(rule.support),
        "support_decimal": frac_decimal(rule.support),
        "confidence": frac_str(rule.confidence),
        "confidence_decimal": frac_decimal(rule.confidence),
        "status": rule.status,
        "informative": rule.informative,
        "concept": rule.origin_concept,
    }


def _rules_json(rb: RuleBase) -> str:
    labels = rb.labels()
    return _dump({
        "minsupp": frac_str(rb.thresholds.minsupp),
        "minconf": frac_str(rb.thresholds.minconf),
        "rules": [rule_payload(rb, idx, labels) for idx in range(len(rb.rules))],
    })


def _rules_csv(rb: RuleBase) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["label", "premise", "conclusion", "support", "confidence", "status"])
    for label, rule in zip(rb.labels(), rb.rules):
        writer.writerow([
            label,
            " ".join(sorted(rule.premise)),
            " ".join(sorted(rule.conclusion)),
            decimal2(rule.support),
            decimal2(rule.confidence),
            rule.status,
        ])
    return buf.getvalue()


# -- M-hierarchy -------------------------------------------------------------


def _mhier_json(mh: MHierarchy) -> str:
    nodes = []
    for cid in sorted(mh.nodes):
        e = mh.nodes[cid]
        nodes.append({
            "id": cid,
            "motif": sorted(e.motif),
            "support": frac_str(e.support),
            "support_decimal": frac_decimal(e.support),
            "rules": list(e.rules),
        })
    return _dump({
        "nodes": nodes,
        "edges": [list(edge) for edge in mh.edges],
        "roots": list(mh.roots),
    })


def _mhier_dot(mh: MHierarchy) -> str:
    lines = ["digraph mhierarchy {", "  rankdir=TB;", "  node [shape=box];"]
    for cid in sorted(mh.nodes):
        e = mh.nodes[cid]
        label = f"{_dot_label(sorted(e.motif))}\\nsupport {decimal2(e.support)}"
        lines.append(f'  n{cid} [label="{label}"];')
    for general, specific in mh.edges:
        lines.append(f"  n{general} -> n{specific};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_m_hierarchy(doc: str) -> MHierarchy:
    """Rebuild an MHierarchy from its JSON export (round-trip counterpart)."""
    data = json.loads(doc)
    nodes = {}
    for entry in data["nodes"]:
        nodes[entry["id"]] = REnsemble(
            concept_id=entry["id"],
            motif=frozenset(entry["motif"]),
            rules=tuple(entry["rules"]),
            support=Fraction(entry["support"]),
        )
    edges = [tuple(edge) for edge in data["edges"]]
    return MHierarchy(nodes=nodes, edges=edges, roots=list(data["roots"]))


# -- H-hierarchy -------------------------------------------------------------


def hhier_payload(hh: HHierarchy) -> dict:
    return {
        "nodes": [{
            "id": idx,
            "premise": sorted(node.premise),
            "conclusion": sorted(node.conclusion),
            "support": frac_str(node.support),
            "support_decimal": frac_decimal(node.support),
            "confidence": frac_str(node.confidence),
            "confidence_decimal": frac_decimal(node.confidence),
            "provenance": node.provenance,
            "parent_rules": list(node.parent_rules),
        } for idx, node in enumerate(hh.nodes)],
        "edges": [[s, g, scheme] for s, g, scheme in hh.edges],
        "seed_ids": list(hh.seed_ids),
    }


def _hhier_json(hierarchies: dict[str, HHierarchy]) -> str:
    return _dump({key: hhier_payload(hierarchies[key]) for key in sorted(hierarchies)})


def _hhier_dot(hierarchies: dict[str, HHierarchy]) -> str:
    lines = ["digraph hhierarchy {", "  rankdir=BT;", "  node [shape=box];"]
    for h_index, key in enumerate(sorted(hierarchies)):
        hh = hierarchies[key]
        lines.append(f"  subgraph cluster_{h_index} {{")
        lines.append(f'    label="seeds {key}";')
        for idx, node in enumerate(hh.nodes):
            shape = ' peripheries=2' if idx in hh.seed_ids else ""
            label = (f"{_dot_label(sorted(node.premise))} ⇒ {_dot_label(sorted(node.conclusion))}"
                     f"\\nconf {decimal2(node.confidence)}")
            lines.append(f'    h{h_index}_{idx} [label="{label}"{shape}];')
        for s, g, scheme in hh.edges:
            style = "solid" if scheme == "right_gen" else "dashed"
            mark = "1" if scheme == "right_gen" else "2"
            lines.append(f'    h{h_index}_{s} -> h{h_index}_{g} [style={style} label="{mark}"];')
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def seed_key(rule_ids) -> str:
    return ",".join(str(i) for i in sorted(set(rule_ids)))
