/** Payload shapes served by the galois-rules API. Statistics arrive as exact
 *  "p/q" strings plus decimal conveniences; the UI never recomputes them. */

export interface Summary {
  individuals: number;
  properties: number;
  concepts: number;
  rules: number;
  partial: number;
  total: number;
  ensembles: number;
  minsupp: string;
  minconf: string;
  taxonomy: boolean;
}

export interface NodeSummary {
  id: number;
  motif: string[];
  support: string;
  support_decimal: number;
  rule_count: number;
}

export interface RulePayload {
  id: number;
  label: string;
  premise: string[];
  conclusion: string[];
  support: string;
  support_decimal: number;
  confidence: string;
  confidence_decimal: number;
  status: 'total' | 'partial';
  informative: boolean;
  concept: number;
}

export interface NodePayload extends NodeSummary {
  rules: RulePayload[];
  parents: NodeSummary[];
  children: NodeSummary[];
}

export interface HNode {
  id: number;
  premise: string[];
  conclusion: string[];
  support: string;
  support_decimal: number;
  confidence: string;
  confidence_decimal: number;
  provenance: 'seed' | 'right_gen' | 'left_gen';
  parent_rules: number[];
}

/** [specific node id, general node id, scheme] */
export type HEdge = [number, number, 'right_gen' | 'left_gen'];

export interface HHierarchyPayload {
  nodes: HNode[];
  edges: HEdge[];
  seed_ids: number[];
}
