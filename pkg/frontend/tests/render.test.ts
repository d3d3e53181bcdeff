import { beforeEach, describe, expect, it } from 'vitest';

import { renderError, renderHgenPanel, renderNodePanel, renderRoots } from '../src/render.js';
import { drillTo, enterRoot, initialState } from '../src/state.js';
import type { HHierarchyPayload, NodePayload, RulePayload } from '../src/types.js';

function rule(id: number, label: string, premise: string[], conclusion: string[],
              status: 'total' | 'partial'): RulePayload {
  return {
    id, label, premise, conclusion,
    support: '1/2', support_decimal: 0.5,
    confidence: status === 'total' ? '1' : '3/4',
    confidence_decimal: status === 'total' ? 1 : 0.75,
    status, informative: true, concept: 3,
  };
}

const NODE: NodePayload = {
  id: 3,
  motif: ['Algorithmique', 'Algèbre'],
  support: '1/2',
  support_decimal: 0.5,
  rule_count: 4,
  rules: [
    rule(2, 'P2', [], ['Algèbre'], 'partial'),
    rule(3, 'P3', [], ['Algorithmique', 'Algèbre'], 'partial'),
    rule(4, 'P4', ['Algorithmique'], ['Algèbre'], 'partial'),
    rule(5, 'T0', ['Algèbre'], ['Algorithmique'], 'total'),
  ],
  parents: [{ id: 1, motif: ['Algorithmique'], support: '2/3', support_decimal: 0.6667, rule_count: 1 }],
  children: [],
};

const PARENT: NodePayload = {
  id: 1,
  motif: ['Algorithmique'],
  support: '2/3',
  support_decimal: 0.6667,
  rule_count: 1,
  rules: [rule(0, 'P0', [], ['Algorithmique'], 'partial')],
  parents: [],
  children: [{ id: 3, motif: ['Algorithmique', 'Algèbre'], support: '1/2', support_decimal: 0.5, rule_count: 4 }],
};

let container: HTMLElement;

beforeEach(() => {
  container = document.createElement('div');
  document.body.replaceChildren(container);
});

describe('node panel', () => {
  it('lists every rule of the ensemble with status badges', () => {
    const state = drillTo(enterRoot(initialState(), PARENT), 'specialize', NODE);
    renderNodePanel(container, state, true);
    const rows = container.querySelectorAll('[data-testid="rule-row"]');
    expect(rows.length).toBe(4);
    const totals = container.querySelectorAll('.badge-total');
    expect(totals.length).toBe(1);
    const labels = [...rows].map((r) => r.querySelector('.rule-label')?.textContent);
    expect(labels).toContain('T0');
  });

  it('shows numbers verbatim from the payload', () => {
    const state = enterRoot(initialState(), NODE);
    renderNodePanel(container, state, true);
    const support = container.querySelector('[data-testid="node-support"]');
    expect(support?.textContent).toContain('1/2');
    const confidences = [...container.querySelectorAll('.rule-confidence')].map((c) => c.textContent);
    expect(confidences).toContain('3/4');
    expect(confidences).toContain('1');
  });

  it('surfaces the support trend when drilling down', () => {
    const state = drillTo(enterRoot(initialState(), PARENT), 'specialize', NODE);
    renderNodePanel(container, state, true);
    const trend = container.querySelector('[data-testid="support-trend"]');
    expect(trend?.classList.contains('trend-down')).toBe(true);
    expect(trend?.textContent).toContain('2/3');
  });

  it('marks leaves and roots explicitly', () => {
    const leafState = drillTo(enterRoot(initialState(), PARENT), 'specialize', NODE);
    renderNodePanel(container, leafState, true);
    expect(container.querySelector('[data-testid="no-children"]')?.textContent)
      .toMatch(/no more specific/i);

    const rootState = enterRoot(initialState(), PARENT);
    renderNodePanel(container, rootState, true);
    expect(container.querySelector('[data-testid="no-parents"]')).not.toBeNull();
  });

  it('disables generalization without a taxonomy', () => {
    renderNodePanel(container, enterRoot(initialState(), NODE), false);
    const buttons = container.querySelectorAll<HTMLButtonElement>('.generalize-btn');
    expect([...buttons].every((b) => b.disabled)).toBe(true);
    expect(buttons[0].title).toMatch(/taxonomy/i);
  });
});

describe('error and roots panes', () => {
  it('renderError shows a visible error state', () => {
    renderError(container, 'connection refused');
    expect(container.querySelector('[data-testid="error"]')?.textContent)
      .toContain('connection refused');
  });

  it('renderRoots lists one navigation target per root', () => {
    renderRoots(container, PARENT.children);
    const buttons = container.querySelectorAll('button.nav-target');
    expect(buttons.length).toBe(1);
    expect(buttons[0].textContent).toContain('support 1/2');
  });
});

describe('generalization DAG panel', () => {
  const payload: HHierarchyPayload = {
    nodes: [
      { id: 0, premise: ['Algorithmique'], conclusion: ['Algèbre'], support: '1/2',
        support_decimal: 0.5, confidence: '3/4', confidence_decimal: 0.75,
        provenance: 'seed', parent_rules: [] },
      { id: 1, premise: ['Algorithmique'], conclusion: ['Mathématique'], support: '2/3',
        support_decimal: 0.6667, confidence: '1', confidence_decimal: 1,
        provenance: 'right_gen', parent_rules: [0] },
      { id: 2, premise: ['Informatique'], conclusion: ['Algèbre'], support: '1/2',
        support_decimal: 0.5, confidence: '3/5', confidence_decimal: 0.6,
        provenance: 'left_gen', parent_rules: [0] },
      { id: 3, premise: ['Informatique'], conclusion: ['Mathématique'], support: '2/3',
        support_decimal: 0.6667, confidence: '4/5', confidence_decimal: 0.8,
        provenance: 'left_gen', parent_rules: [1, 2] },
    ],
    edges: [[0, 1, 'right_gen'], [0, 2, 'left_gen'], [1, 3, 'left_gen'], [2, 3, 'right_gen']],
    seed_ids: [0],
  };

  it('renders every node with the seed highlighted', () => {
    renderHgenPanel(container, payload);
    const boxes = container.querySelectorAll('[data-testid="dag-node"]');
    expect(boxes.length).toBe(4);
    const seeds = container.querySelectorAll('.dag-node.seed');
    expect(seeds.length).toBe(1);
    expect((seeds[0] as HTMLElement).dataset.conclusion).toBe('Algèbre');
  });

  it('labels each edge with its scheme', () => {
    renderHgenPanel(container, payload);
    const labels = [...container.querySelectorAll('[data-testid="dag-edge-label"]')]
      .map((l) => l.textContent);
    expect(labels.filter((l) => l === '❶').length).toBe(2);
    expect(labels.filter((l) => l === '❷').length).toBe(2);
  });

  it('places more general rules on later layers', () => {
    renderHgenPanel(container, payload);
    const boxes = [...container.querySelectorAll<HTMLElement>('[data-testid="dag-node"]')];
    const left = (premise: string, conclusion: string) =>
      parseFloat(boxes.find((b) => b.dataset.premise === premise
        && b.dataset.conclusion === conclusion)!.style.left);
    expect(left('Algorithmique', 'Algèbre')).toBeLessThan(left('Algorithmique', 'Mathématique'));
    expect(left('Algorithmique', 'Mathématique')).toBeLessThan(left('Informatique', 'Mathématique'));
  });
});
