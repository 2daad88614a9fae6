// Page wiring: search box, entry view, layer toggles, feedback form.
// All dictionary data comes from the service; this file only moves it
// between the network, the view state and the DOM.

import { ApiError, Client, type EntryPayload, type SearchHit } from './api.js';
import { renderBanner, renderEntry, renderSuggestions } from './render.js';
import {
  ALL_LAYERS,
  decodeFragment,
  encodeFragment,
  initialState,
  pruneExpanded,
  requiredProfile,
  type Layer,
  type ViewState,
} from './state.js';
import { buildTree, needsDeeperFetch, type UiNode, type UiTree } from './tree.js';

export function debounce<A extends unknown[]>(fn: (...args: A) => void, ms: number) {
  let timer: ReturnType<typeof setTimeout> | undefined;
  return (...args: A) => {
    clearTimeout(timer);
    timer = setTimeout(() => fn(...args), ms);
  };
}

export interface AppElements {
  search: HTMLInputElement;
  suggestions: HTMLElement;
  entry: HTMLElement;
  banner: HTMLElement;
  controls: HTMLElement;
  feedback: HTMLFormElement;
  feedbackNote: HTMLElement;
}

export class App {
  state: ViewState = initialState();
  entryData: EntryPayload | null = null;
  tree: UiTree | null = null;
  // stale-response guard: only the latest request may touch the view
  private fetchSeq = 0;
  private inFlight = false;
  // last fragment this app wrote itself; a change event carrying it is
  // an echo of our own replaceState (some DOM hosts fire those), not
  // reader navigation
  private wroteHash: string | null = null;

  constructor(
    readonly api: Client,
    readonly ui: AppElements,
    readonly searchLang: string,
  ) {}

  private onHashChange = (): void => {
    const raw = window.location.hash;
    if (raw === this.wroteHash) return;
    const next = decodeFragment(raw);
    if (encodeFragment(next) !== encodeFragment(this.state)) {
      this.state = next;
      void this.refetch();
    }
  };

  start(): void {
    this.state = decodeFragment(window.location.hash);
    window.addEventListener('hashchange', this.onHashChange);

    const lookup = debounce((q: string) => void this.runSearch(q), 200);
    this.ui.search.addEventListener('input', () => {
      const q = this.ui.search.value.trim();
      if (!q) {
        renderSuggestions(this.ui.suggestions, [], () => undefined);
        return; // empty box sends no request
      }
      lookup(q);
    });

    this.buildControls();
    this.wireFeedbackForm();
    if (this.state.head) void this.refetch();
  }

  stop(): void {
    window.removeEventListener('hashchange', this.onHashChange);
  }

  private syncHash(): void {
    const fragment = encodeFragment(this.state);
    if (window.location.hash !== fragment) {
      history.replaceState(null, '', fragment || '#');
      this.wroteHash = window.location.hash; // as the browser reads it back
    }
  }

  async runSearch(q: string): Promise<void> {
    try {
      const hits = await this.api.search(this.searchLang, q, 12);
      renderBanner(this.ui.banner, '');
      renderSuggestions(this.ui.suggestions, hits, (hit) => void this.openEntry(hit.id));
    } catch (error) {
      renderBanner(this.ui.banner, describe(error), () => void this.runSearch(q));
    }
  }

  async openEntry(head: string): Promise<void> {
    this.state.head = head;
    this.state.expanded = new Set();
    this.state.depth = initialState().depth;
    await this.refetch();
  }

  async refetch(): Promise<void> {
    if (!this.state.head) return;
    const seq = ++this.fetchSeq;
    if (this.inFlight) return; // one request per node; the seq guard drops stragglers
    this.inFlight = true;
    try {
      const entry = await this.api.fetchEntry(this.state.head, {
        depth: this.state.depth,
        branch: this.state.branch,
        profile: this.state.profile,
      });
      if (seq !== this.fetchSeq) return;
      this.entryData = entry;
      this.tree = buildTree(entry);
      pruneExpanded(this.state, this.tree);
      renderBanner(this.ui.banner, '');
      this.redraw();
    } catch (error) {
      if (error instanceof ApiError && error.status === 404) {
        this.ui.entry.textContent = '';
        renderBanner(this.ui.banner, `not in dictionary: ${this.state.head}`);
      } else {
        renderBanner(this.ui.banner, describe(error), () => void this.refetch());
      }
    } finally {
      this.inFlight = false;
      if (seq !== this.fetchSeq) void this.refetch();
    }
  }

  redraw(): void {
    if (!this.entryData || !this.tree) return;
    renderEntry(this.ui.entry, this.entryData, this.tree, this.state, {
      onToggleNode: (path, node) => void this.toggleNode(path, node),
      onLacunaClick: (target) => this.prefillLacunaReport(target),
    });
    this.syncHash();
  }

  async toggleNode(path: string, node: UiNode): Promise<void> {
    if (this.state.expanded.has(path)) {
      this.state.expanded.delete(path);
      this.redraw();
      return;
    }
    this.state.expanded.add(path);
    if (needsDeeperFetch(node)) {
      // children were cut off at the fetch horizon; fetch further out
      this.state.depth = Math.max(this.state.depth, node.pair.depth + 2);
      await this.refetch();
      return;
    }
    this.redraw();
  }

  prefillLacunaReport(target: string): void {
    this.state.draft = { kind: 'lacuna', target, body: '' };
    const kind = this.ui.feedback.elements.namedItem('kind') as HTMLSelectElement;
    const targetField = this.ui.feedback.elements.namedItem('target') as HTMLInputElement;
    kind.value = 'lacuna';
    targetField.value = target;
  }

  private buildControls(): void {
    this.ui.controls.textContent = '';
    for (const layer of ALL_LAYERS) {
      const label = document.createElement('label');
      const box = document.createElement('input');
      box.type = 'checkbox';
      box.dataset.layer = layer;
      box.checked = this.state.layers.has(layer);
      box.addEventListener('change', () => void this.setLayer(layer, box.checked));
      label.append(box, ` ${layer}`);
      this.ui.controls.appendChild(label);
    }
  }

  async setLayer(layer: Layer, on: boolean): Promise<void> {
    if (on) this.state.layers.add(layer);
    else this.state.layers.delete(layer);
    const needed = requiredProfile(this.state.layers);
    const ranks = { minimal: 0, standard: 1, full: 2 } as const;
    if (ranks[needed] > ranks[this.state.profile]) {
      // fetched data is never discarded on profile moves, only hidden;
      // an upgrade refetches, a downgrade just re-renders
      this.state.profile = needed;
      await this.refetch();
      return;
    }
    this.redraw();
  }

  private wireFeedbackForm(): void {
    this.ui.feedback.addEventListener('submit', (event) => {
      event.preventDefault();
      void this.submitFeedback();
    });
  }

  async submitFeedback(): Promise<void> {
    const form = this.ui.feedback;
    const kind = (form.elements.namedItem('kind') as HTMLSelectElement).value;
    const target = (form.elements.namedItem('target') as HTMLInputElement).value.trim();
    const bodyField = form.elements.namedItem('body') as HTMLTextAreaElement;
    const body = bodyField.value.trim();
    if (!body) {
      this.ui.feedbackNote.textContent = 'a report needs a body';
      return;
    }
    try {
      const id = await this.api.postFeedback(
        kind as 'error' | 'lacuna' | 'suggestion',
        body,
        target || undefined,
      );
      this.ui.feedbackNote.textContent = `received, id ${id}`;
      bodyField.value = '';
      this.state.draft = null;
    } catch (error) {
      this.ui.feedbackNote.textContent = describe(error);
    }
  }
}

function describe(error: unknown): string {
  if (error instanceof ApiError) return error.detail;
  return 'service unreachable';
}

export function bootstrap(): void {
  const need = (id: string) => {
    const node = document.getElementById(id);
    if (!node) throw new Error(`missing #${id}`);
    return node;
  };
  const base = (document.body.dataset.api ?? window.location.origin).replace(/\/$/, '');
  const lang = document.body.dataset.searchLang ?? 'bg';
  const app = new App(new Client(base), {
    search: need('search') as HTMLInputElement,
    suggestions: need('suggestions'),
    entry: need('entry'),
    banner: need('banner'),
    controls: need('controls'),
    feedback: need('feedback') as HTMLFormElement,
    feedbackNote: need('feedback-note'),
  }, lang);
  app.start();
}

if (typeof document !== 'undefined' && document.getElementById('entry')) {
  bootstrap();
}
