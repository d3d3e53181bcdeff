import { ApiClient, ApiError } from './api.js';
import { drillTo, enterRoot, initialState, jumpTo, ViewState } from './state.js';
import { renderBreadcrumb, renderError, renderHgenDisabled, renderHgenPanel,
         renderNodePanel, renderRoots } from './render.js';

export interface ExplorerOptions {
  base?: string;
  fetchFn?: (input: string, init?: RequestInit) => Promise<Response>;
  /** update location.hash for deep links (off in tests) */
  deepLink?: boolean;
}

/** Wires the API client, view state and renderers onto a root element.
 *  All mutations go through async actions that resolve when the DOM is
 *  up to date, so a scripted test can drive the UI and await each step. */
export class Explorer {
  readonly client: ApiClient;
  state: ViewState = initialState();
  taxonomyLoaded = false;

  private rootsPane: HTMLElement;
  private breadcrumbPane: HTMLElement;
  private nodePane: HTMLElement;
  private hgenPane: HTMLElement;
  private requestSeq = 0;
  private deepLink: boolean;

  constructor(private mount: HTMLElement, options: ExplorerOptions = {}) {
    this.client = new ApiClient(options.base ?? '', options.fetchFn);
    this.deepLink = options.deepLink ?? true;
    this.mount.innerHTML = `
      <header class="app-header">
        <h1>Rule hierarchy explorer</h1>
        <span class="thresholds" data-testid="thresholds"></span>
      </header>
      <section class="pane pane-roots"></section>
      <section class="pane pane-breadcrumb"></section>
      <section class="pane pane-node"></section>
      <section class="pane pane-hgen"></section>`;
    this.rootsPane = this.mount.querySelector('.pane-roots') as HTMLElement;
    this.breadcrumbPane = this.mount.querySelector('.pane-breadcrumb') as HTMLElement;
    this.nodePane = this.mount.querySelector('.pane-node') as HTMLElement;
    this.hgenPane = this.mount.querySelector('.pane-hgen') as HTMLElement;
    this.mount.addEventListener('click', (event) => this.onClick(event));
  }

  async init(): Promise<void> {
    try {
      const summary = await this.client.summary();
      this.taxonomyLoaded = summary.taxonomy;
      const thresholds = this.mount.querySelector('[data-testid="thresholds"]') as HTMLElement;
      thresholds.textContent =
        `minsupp ${summary.minsupp} · minconf ${summary.minconf} · ` +
        `${summary.partial} partial + ${summary.total} total rules`;
      const roots = await this.client.roots();
      renderRoots(this.rootsPane, roots);
      const fromHash = this.deepLink ? this.nodeIdFromHash() : null;
      if (fromHash !== null) {
        await this.openRoot(fromHash);
      } else if (roots.length > 0) {
        await this.openRoot(roots[0].id);
      }
    } catch (error) {
      renderError(this.nodePane, String(error));
    }
  }

  private nodeIdFromHash(): number | null {
    const match = /^#node\/(\d+)$/.exec(window.location.hash);
    return match ? Number(match[1]) : null;
  }

  private syncHash(): void {
    if (this.deepLink && this.state.current) {
      window.location.hash = `node/${this.state.current.id}`;
    }
  }

  private repaint(): void {
    renderBreadcrumb(this.breadcrumbPane, this.state);
    renderNodePanel(this.nodePane, this.state, this.taxonomyLoaded);
    if (this.state.hgen) {
      renderHgenPanel(this.hgenPane, this.state.hgen);
    } else {
      this.hgenPane.replaceChildren();
    }
  }

  /** Open a node as the start of a fresh navigation chain. */
  async openRoot(nodeId: number): Promise<void> {
    const seq = ++this.requestSeq;
    try {
      const node = await this.client.node(nodeId);
      if (seq !== this.requestSeq) return; // a newer navigation superseded this one
      this.state = enterRoot(this.state, node);
      this.syncHash();
      this.repaint();
    } catch (error) {
      renderError(this.nodePane, String(error));
    }
  }

  /** Navigate to an adjacent node reported by the API. */
  async drill(direction: 'specialize' | 'generalize', nodeId: number): Promise<void> {
    const current = this.state.current;
    if (!current) return;
    const neighbors = direction === 'specialize' ? current.children : current.parents;
    if (!neighbors.some((n) => n.id === nodeId)) return; // only API-reported edges
    const seq = ++this.requestSeq;
    try {
      const node = await this.client.node(nodeId);
      if (seq !== this.requestSeq) return;
      this.state = drillTo(this.state, direction, node);
      this.syncHash();
      this.repaint();
    } catch (error) {
      if (error instanceof ApiError && error.status === 404) {
        // stale id: the workspace changed under us, start over from the roots
        const roots = await this.client.roots();
        renderRoots(this.rootsPane, roots);
        return;
      }
      renderError(this.nodePane, String(error));
    }
  }

  /** Jump to an earlier breadcrumb entry. */
  async jump(index: number): Promise<void> {
    const crumb = this.state.breadcrumb[index];
    if (!crumb) return;
    const seq = ++this.requestSeq;
    const node = await this.client.node(crumb.id);
    if (seq !== this.requestSeq) return;
    this.state = jumpTo(this.state, index, node);
    this.syncHash();
    this.repaint();
  }

  /** Grow and show the generalization DAG around one rule of the current node. */
  async openGeneralization(ruleId: number): Promise<void> {
    this.state = { ...this.state, selectedRule: ruleId };
    try {
      const payload = await this.client.hgen([ruleId]);
      this.state = { ...this.state, hgen: payload, hgenSeeds: [ruleId] };
      this.repaint();
    } catch (error) {
      if (error instanceof ApiError && error.status === 409) {
        this.repaint();
        renderHgenDisabled(this.hgenPane,
          'Generalization needs a taxonomy; the server was started without one.');
        return;
      }
      renderError(this.hgenPane, String(error));
    }
  }

  private onClick(event: Event): void {
    const target = event.target as HTMLElement;
    if (!(target instanceof HTMLButtonElement) || target.disabled) return;
    if (target.classList.contains('generalize-btn')) {
      void this.openGeneralization(Number(target.dataset.ruleId));
    } else if (target.classList.contains('crumb')) {
      void this.jump(Number(target.dataset.crumbIndex));
    } else if (target.classList.contains('nav-target')) {
      const nodeId = Number(target.dataset.nodeId);
      const direction = target.dataset.direction;
      if (direction === 'specialize' || direction === 'generalize') {
        void this.drill(direction, nodeId);
      } else {
        void this.openRoot(nodeId);
      }
    }
  }
}

export function bootstrap(): void {
  const mount = document.getElementById('app');
  if (mount) {
    void new Explorer(mount).init();
  }
}

if (typeof document !== 'undefined' && document.getElementById('app')) {
  bootstrap();
}
