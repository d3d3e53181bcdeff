import { describe, expect, it } from 'vitest';

import { drillTo, enterRoot, initialState, jumpTo, previousSupport } from '../src/state.js';
import type { NodePayload } from '../src/types.js';

function node(id: number, motif: string[], supportDecimal = 0.5): NodePayload {
  return {
    id,
    motif,
    support: `${supportDecimal}`,
    support_decimal: supportDecimal,
    rule_count: 1,
    rules: [],
    parents: [],
    children: [],
  };
}

describe('breadcrumb stack discipline', () => {
  it('entering a root restarts the chain', () => {
    let state = enterRoot(initialState(), node(1, ['a']));
    state = drillTo(state, 'specialize', node(2, ['a', 'b']));
    state = enterRoot(state, node(9, ['z']));
    expect(state.breadcrumb.map((c) => c.id)).toEqual([9]);
  });

  it('specialize pushes, generalize back pops', () => {
    let state = enterRoot(initialState(), node(1, ['a'], 0.9));
    state = drillTo(state, 'specialize', node(2, ['a', 'b'], 0.6));
    state = drillTo(state, 'specialize', node(3, ['a', 'b', 'c'], 0.4));
    expect(state.breadcrumb.map((c) => c.id)).toEqual([1, 2, 3]);
    state = drillTo(state, 'generalize', node(2, ['a', 'b'], 0.6));
    expect(state.breadcrumb.map((c) => c.id)).toEqual([1, 2]);
    expect(state.current?.id).toBe(2);
  });

  it('generalizing to a different parent restarts the chain there', () => {
    let state = enterRoot(initialState(), node(1, ['a']));
    state = drillTo(state, 'specialize', node(3, ['a', 'c']));
    state = drillTo(state, 'generalize', node(7, ['c']));
    expect(state.breadcrumb.map((c) => c.id)).toEqual([7]);
  });

  it('jumping truncates to the clicked crumb', () => {
    let state = enterRoot(initialState(), node(1, ['a']));
    state = drillTo(state, 'specialize', node(2, ['a', 'b']));
    state = drillTo(state, 'specialize', node(3, ['a', 'b', 'c']));
    state = jumpTo(state, 0, node(1, ['a']));
    expect(state.breadcrumb.map((c) => c.id)).toEqual([1]);
  });

  it('drilling clears rule selection and the generalization panel', () => {
    let state = enterRoot(initialState(), node(1, ['a']));
    state = { ...state, selectedRule: 4, hgen: { nodes: [], edges: [], seed_ids: [] }, hgenSeeds: [4] };
    state = drillTo(state, 'specialize', node(2, ['a', 'b']));
    expect(state.selectedRule).toBeNull();
    expect(state.hgen).toBeNull();
  });

  it('previousSupport reports the crumb the analyst came from', () => {
    let state = enterRoot(initialState(), node(1, ['a'], 0.9));
    expect(previousSupport(state)).toBeNull();
    state = drillTo(state, 'specialize', node(2, ['a', 'b'], 0.5));
    expect(previousSupport(state)?.support_decimal).toBe(0.9);
  });
});
