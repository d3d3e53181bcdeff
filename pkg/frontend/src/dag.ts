import type { HEdge, HNode } from './types.js';

export interface DagLayout {
  /** node id → layer (0 = seeds, growing with generalization depth) */
  depth: Map<number, number>;
  /** layers[k] = node ids at depth k, in id order */
  layers: number[][];
  /** node id → row inside its layer */
  row: Map<number, number>;
}

/** Layer the generalization DAG by depth: a node sits one layer above the
 *  deepest rule it one-step-generalizes.  Edges always point from specific to
 *  general, so a longest-path sweep over the acyclic edge list terminates. */
export function layoutDag(nodes: HNode[], edges: HEdge[]): DagLayout {
  const depth = new Map<number, number>(nodes.map((n) => [n.id, 0]));
  let changed = true;
  while (changed) {
    changed = false;
    for (const [specific, general] of edges) {
      const candidate = (depth.get(specific) ?? 0) + 1;
      if (candidate > (depth.get(general) ?? 0)) {
        depth.set(general, candidate);
        changed = true;
      }
    }
  }
  const maxDepth = Math.max(0, ...depth.values());
  const layers: number[][] = Array.from({ length: maxDepth + 1 }, () => []);
  for (const node of nodes) {
    layers[depth.get(node.id) ?? 0].push(node.id);
  }
  const row = new Map<number, number>();
  for (const layer of layers) {
    layer.sort((a, b) => a - b);
    layer.forEach((id, index) => row.set(id, index));
  }
  return { depth, layers, row };
}
