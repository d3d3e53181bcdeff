import { layoutDag } from './dag.js';
import { previousSupport, ViewState } from './state.js';
import type { HHierarchyPayload, HNode, NodeSummary, RulePayload } from './types.js';

const BOX_W = 220;
const BOX_H = 58;
const GAP_X = 90;
const GAP_Y = 26;

export function motifText(motif: string[]): string {
  return motif.length ? motif.join(', ') : '∅';
}

export function ruleText(premise: string[], conclusion: string[]): string {
  return `${premise.join(', ')} ⇒ ${conclusion.join(', ')}`;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K, className?: string, text?: string): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function renderError(container: HTMLElement, message: string): void {
  container.replaceChildren();
  const box = el('div', 'error-state');
  box.setAttribute('data-testid', 'error');
  box.append(el('strong', undefined, 'Request failed. '), el('span', undefined, message));
  container.append(box);
}

export function renderRoots(container: HTMLElement, roots: NodeSummary[]): void {
  container.replaceChildren();
  const heading = el('h2', undefined, 'Most general rule sets');
  const list = el('ul', 'roots-list');
  list.setAttribute('data-testid', 'roots');
  for (const root of roots) {
    const item = el('li');
    const button = el('button', 'nav-target', `${motifText(root.motif)} · support ${root.support}`);
    button.dataset.nodeId = String(root.id);
    item.append(button);
    list.append(item);
  }
  container.replaceChildren(heading, list);
}

export function renderBreadcrumb(container: HTMLElement, state: ViewState): void {
  container.replaceChildren();
  const trail = el('nav', 'breadcrumb');
  trail.setAttribute('data-testid', 'breadcrumb');
  state.breadcrumb.forEach((crumb, index) => {
    if (index > 0) trail.append(el('span', 'crumb-sep', ' › '));
    const button = el('button', 'crumb', motifText(crumb.motif));
    button.dataset.crumbIndex = String(index);
    button.dataset.nodeId = String(crumb.id);
    if (index === state.breadcrumb.length - 1) button.disabled = true;
    trail.append(button);
  });
  container.append(trail);
}

function renderRuleRow(rule: RulePayload, selected: boolean, taxonomyLoaded: boolean): HTMLTableRowElement {
  const row = el('tr', selected ? 'rule-row selected' : 'rule-row');
  row.setAttribute('data-testid', 'rule-row');
  row.dataset.ruleId = String(rule.id);
  row.append(el('td', 'rule-label', rule.label));
  row.append(el('td', 'rule-text', ruleText(rule.premise, rule.conclusion)));
  row.append(el('td', 'rule-support', rule.support));
  row.append(el('td', 'rule-confidence', rule.confidence));
  const badge = el('td');
  badge.append(el('span', `badge badge-${rule.status}`, rule.status));
  row.append(badge);
  const actions = el('td');
  const generalizeButton = el('button', 'generalize-btn', 'generalize');
  generalizeButton.dataset.ruleId = String(rule.id);
  if (!taxonomyLoaded) {
    generalizeButton.disabled = true;
    generalizeButton.title = 'No taxonomy loaded on the server; generalization unavailable.';
  }
  actions.append(generalizeButton);
  row.append(actions);
  return row;
}

export function renderNodePanel(container: HTMLElement, state: ViewState,
                                taxonomyLoaded: boolean): void {
  container.replaceChildren();
  const node = state.current;
  if (!node) return;

  const head = el('div', 'node-head');
  head.append(el('h2', 'node-motif', motifText(node.motif)));
  const supportLine = el('p', 'node-support', `support ${node.support}`);
  supportLine.setAttribute('data-testid', 'node-support');
  const previous = previousSupport(state);
  if (previous) {
    const direction = node.support_decimal < previous.support_decimal ? 'down'
      : node.support_decimal > previous.support_decimal ? 'up' : 'flat';
    const trend = el('span', `trend trend-${direction}`,
      ` (${direction === 'down' ? '↓' : direction === 'up' ? '↑' : '→'} from ${previous.support})`);
    trend.setAttribute('data-testid', 'support-trend');
    supportLine.append(trend);
  }
  head.append(supportLine);
  container.append(head);

  const table = el('table', 'rules-table');
  table.setAttribute('data-testid', 'rules-table');
  const headerRow = el('tr');
  for (const title of ['', 'rule', 'sup.', 'conf.', 'status', '']) {
    headerRow.append(el('th', undefined, title));
  }
  table.append(headerRow);
  for (const rule of node.rules) {
    table.append(renderRuleRow(rule, rule.id === state.selectedRule, taxonomyLoaded));
  }
  container.append(table);

  const nav = el('div', 'node-nav');
  const parents = el('div', 'nav-parents');
  parents.append(el('h3', undefined, 'More general'));
  if (node.parents.length === 0) {
    const none = el('p', 'nav-disabled', 'This is a most general rule set.');
    none.setAttribute('data-testid', 'no-parents');
    parents.append(none);
  } else {
    for (const parent of node.parents) {
      const button = el('button', 'nav-target nav-parent',
        `${motifText(parent.motif)} · support ${parent.support}`);
      button.dataset.nodeId = String(parent.id);
      button.dataset.direction = 'generalize';
      parents.append(button);
    }
  }
  const children = el('div', 'nav-children');
  children.append(el('h3', undefined, 'More specific'));
  if (node.children.length === 0) {
    const none = el('p', 'nav-disabled', 'No more specific rules.');
    none.setAttribute('data-testid', 'no-children');
    children.append(none);
  } else {
    for (const child of node.children) {
      const button = el('button', 'nav-target nav-child',
        `${motifText(child.motif)} · support ${child.support}`);
      button.dataset.nodeId = String(child.id);
      button.dataset.direction = 'specialize';
      children.append(button);
    }
  }
  nav.append(parents, children);
  container.append(nav);
}

function dagNodeBox(node: HNode, x: number, y: number, isSeed: boolean): HTMLElement {
  const box = el('div', isSeed ? 'dag-node seed' : 'dag-node');
  box.setAttribute('data-testid', 'dag-node');
  box.dataset.premise = node.premise.join(',');
  box.dataset.conclusion = node.conclusion.join(',');
  box.dataset.provenance = node.provenance;
  box.style.left = `${x}px`;
  box.style.top = `${y}px`;
  box.style.width = `${BOX_W}px`;
  box.append(el('div', 'dag-rule', ruleText(node.premise, node.conclusion)));
  box.append(el('div', 'dag-stats', `sup ${node.support} · conf ${node.confidence}`));
  return box;
}

/** Layered drawing of the generalization DAG: seeds in the left column,
 *  each hat step one column to the right, edges labeled ❶ (conclusion lift)
 *  or ❷ (premise lift). */
export function renderHgenPanel(container: HTMLElement, payload: HHierarchyPayload): void {
  container.replaceChildren();
  container.append(el('h2', undefined, 'Generalization hierarchy'));
  const layout = layoutDag(payload.nodes, payload.edges);
  const byId = new Map(payload.nodes.map((n) => [n.id, n]));
  const seeds = new Set(payload.seed_ids);

  const width = layout.layers.length * (BOX_W + GAP_X);
  const tallest = Math.max(...layout.layers.map((layer) => layer.length));
  const height = tallest * (BOX_H + GAP_Y);
  const canvas = el('div', 'dag-canvas');
  canvas.setAttribute('data-testid', 'dag');
  canvas.style.position = 'relative';
  canvas.style.width = `${width}px`;
  canvas.style.height = `${height}px`;

  const position = (id: number) => ({
    x: (layout.depth.get(id) ?? 0) * (BOX_W + GAP_X),
    y: (layout.row.get(id) ?? 0) * (BOX_H + GAP_Y),
  });

  const svgNS = 'http://www.w3.org/2000/svg';
  const svg = document.createElementNS(svgNS, 'svg');
  svg.setAttribute('width', String(width));
  svg.setAttribute('height', String(height));
  svg.setAttribute('class', 'dag-edges');
  for (const [specific, general, scheme] of payload.edges) {
    const from = position(specific);
    const to = position(general);
    const line = document.createElementNS(svgNS, 'line');
    line.setAttribute('x1', String(from.x + BOX_W));
    line.setAttribute('y1', String(from.y + BOX_H / 2));
    line.setAttribute('x2', String(to.x));
    line.setAttribute('y2', String(to.y + BOX_H / 2));
    line.setAttribute('class', `dag-edge ${scheme}`);
    svg.append(line);
    const label = document.createElementNS(svgNS, 'text');
    label.setAttribute('x', String((from.x + BOX_W + to.x) / 2));
    label.setAttribute('y', String((from.y + to.y + BOX_H) / 2 - 4));
    label.setAttribute('class', 'dag-edge-label');
    label.setAttribute('data-testid', 'dag-edge-label');
    label.textContent = scheme === 'right_gen' ? '❶' : '❷';
    svg.append(label);
  }
  canvas.append(svg);

  for (const layer of layout.layers) {
    for (const id of layer) {
      const node = byId.get(id);
      if (!node) continue;
      const { x, y } = position(id);
      canvas.append(dagNodeBox(node, x, y, seeds.has(id)));
    }
  }
  container.append(canvas);
}

export function renderHgenDisabled(container: HTMLElement, reason: string): void {
  container.replaceChildren();
  const note = el('p', 'hgen-disabled', reason);
  note.setAttribute('data-testid', 'hgen-disabled');
  container.append(note);
}
