import type { HHierarchyPayload, NodePayload, NodeSummary } from './types.js';

/** Client-side view state.  The breadcrumb is the ancestor chain actually
 *  walked (current node last); it never contains nodes the API did not
 *  report as neighbors along the way. */
export interface ViewState {
  current: NodePayload | null;
  breadcrumb: NodeSummary[];
  selectedRule: number | null;
  hgen: HHierarchyPayload | null;
  hgenSeeds: number[];
}

export function initialState(): ViewState {
  return { current: null, breadcrumb: [], selectedRule: null, hgen: null, hgenSeeds: [] };
}

function summaryOf(node: NodePayload): NodeSummary {
  return {
    id: node.id,
    motif: node.motif,
    support: node.support,
    support_decimal: node.support_decimal,
    rule_count: node.rule_count,
  };
}

/** Enter a node from the roots listing: the chain restarts. */
export function enterRoot(state: ViewState, node: NodePayload): ViewState {
  return { ...state, current: node, breadcrumb: [summaryOf(node)], selectedRule: null, hgen: null, hgenSeeds: [] };
}

/** Stack discipline: specializing pushes; generalizing back to the previous
 *  crumb pops; generalizing to any other parent restarts the chain there. */
export function drillTo(state: ViewState, direction: 'specialize' | 'generalize',
                        node: NodePayload): ViewState {
  let breadcrumb: NodeSummary[];
  if (direction === 'specialize') {
    breadcrumb = [...state.breadcrumb, summaryOf(node)];
  } else {
    const previous = state.breadcrumb[state.breadcrumb.length - 2];
    breadcrumb = previous && previous.id === node.id
      ? state.breadcrumb.slice(0, -1)
      : [summaryOf(node)];
  }
  return { ...state, current: node, breadcrumb, selectedRule: null, hgen: null, hgenSeeds: [] };
}

/** Jump back to a node already on the breadcrumb (truncates the chain). */
export function jumpTo(state: ViewState, index: number, node: NodePayload): ViewState {
  return {
    ...state,
    current: node,
    breadcrumb: state.breadcrumb.slice(0, index + 1),
    selectedRule: null,
    hgen: null,
    hgenSeeds: [],
  };
}

/** Support of the crumb the analyst came from, for the trend display. */
export function previousSupport(state: ViewState): NodeSummary | null {
  return state.breadcrumb.length >= 2 ? state.breadcrumb[state.breadcrumb.length - 2] : null;
}
