// DOM rendering: the entry as an indented vertical list, head at the
// top, each depth one step further in. Every rendered pair row carries
// the wire pair's fields as data attributes, so tests (and curious
// readers) can compare the view against the service response directly.

import type { EntryPayload, EntrySense, SearchHit } from './api.js';
import { layerVisible, type ViewState } from './state.js';
import { lemmaOf, visibleNodes, type UiNode, type UiTree } from './tree.js';

export const PAIR_GLYPH = '≡'; // ≡
export const CLOSURE_GLYPH = '↩'; // ↩
export const LACUNA_GLYPH = '∅'; // ∅

export interface Handlers {
  onToggleNode(path: string, node: UiNode): void;
  onLacunaClick(target: string): void;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function attachmentList(parent: HTMLElement, state: ViewState, source: {
  synonyms?: string[];
  phrases?: Array<{ text: string; gloss?: string }>;
  citations?: Array<{ quote: string; source: string }>;
}): void {
  if (layerVisible(state, 'synonyms') && source.synonyms?.length) {
    for (const id of source.synonyms) {
      parent.appendChild(el('div', 'syn', `syn: ${lemmaOf(id)}`));
    }
  }
  if (layerVisible(state, 'phrases') && source.phrases?.length) {
    for (const phrase of source.phrases) {
      const text = phrase.gloss ? `phr: ${phrase.text} (${phrase.gloss})` : `phr: ${phrase.text}`;
      parent.appendChild(el('div', 'phr', text));
    }
  }
  if (layerVisible(state, 'citations') && source.citations?.length) {
    for (const citation of source.citations) {
      parent.appendChild(el('div', 'cit', `cit: ${citation.quote} [${citation.source}]`));
    }
  }
}

function renderPairRow(
  node: UiNode,
  state: ViewState,
  handlers: Handlers,
  anchors: ReadonlyMap<string, string>,
): HTMLElement {
  const { pair } = node;
  const row = el('div', 'pair');
  row.id = `pair-${node.path}`;
  row.dataset.source = pair.source;
  row.dataset.target = pair.target;
  row.dataset.rank = String(pair.rank);
  row.dataset.depth = String(pair.depth);
  row.dataset.closure = String(pair.closure);
  row.dataset.path = node.path;
  row.style.marginLeft = `${pair.depth}em`;

  const line = el('div', 'pair-line');
  if (!pair.closure && (node.children.length > 0 || node.truncatedHere)) {
    const toggle = el('button', 'toggle', state.expanded.has(node.path) ? '−' : '+');
    toggle.addEventListener('click', () => handlers.onToggleNode(node.path, node));
    line.appendChild(toggle);
  }
  line.appendChild(el('span', 'lemma', `${lemmaOf(pair.source)} ${PAIR_GLYPH} ${lemmaOf(pair.target)}`));
  line.appendChild(el('span', 'depth-badge', String(pair.depth)));
  if (pair.closure) {
    // loop back to where the target already sits further up the page;
    // a plain href would clobber the fragment that encodes the view
    const back = el('button', 'closure', CLOSURE_GLYPH);
    back.title = `chain closes on ${lemmaOf(pair.target)}`;
    back.addEventListener('click', () => {
      const anchor = anchors.get(pair.target);
      if (anchor) document.getElementById(anchor)?.scrollIntoView();
    });
    line.appendChild(back);
  }
  if (node.lacuna) {
    const badge = el('button', 'lacuna', LACUNA_GLYPH);
    badge.title = 'no equivalents; report this lacuna';
    badge.addEventListener('click', () => handlers.onLacunaClick(pair.target));
    line.appendChild(badge);
  }
  if (layerVisible(state, 'classes') && pair.class) {
    line.appendChild(el('span', 'class', `[${pair.class}]`));
  }
  row.appendChild(line);

  if (layerVisible(state, 'glosses') && !pair.closure) {
    if (pair.gloss_source) row.appendChild(el('div', 'gloss gloss-source', pair.gloss_source));
    if (pair.gloss_target) row.appendChild(el('div', 'gloss gloss-target', pair.gloss_target));
  }
  if (!pair.closure) attachmentList(row, state, pair);
  return row;
}

function renderSenseHeader(
  sense: EntrySense,
  index: number,
  state: ViewState,
  handlers: Handlers,
): HTMLElement {
  const header = el('div', 'sense');
  header.id = `sense-${index}`;
  header.dataset.sense = sense.id;
  const no = sense.id.split('#')[1] ?? '?';
  let label = `#${no}`;
  if (layerVisible(state, 'glosses') && sense.gloss) label += ` · ${sense.gloss}`;
  header.appendChild(el('span', 'sense-label', label));
  if (sense.lacuna) {
    const badge = el('button', 'lacuna', LACUNA_GLYPH);
    badge.title = 'no equivalents; report this lacuna';
    badge.addEventListener('click', () => handlers.onLacunaClick(sense.id));
    header.appendChild(badge);
  }
  attachmentList(header, state, sense);
  return header;
}

export function renderEntry(
  container: HTMLElement,
  entry: EntryPayload,
  tree: UiTree,
  state: ViewState,
  handlers: Handlers,
): void {
  container.textContent = '';
  const heading = el('h2', 'head', lemmaOf(entry.head));
  heading.dataset.head = entry.head;
  container.appendChild(heading);

  const visible = new Set(visibleNodes(tree, state.expanded).map((n) => n.path));
  // where each sense already appears on the page, for closure loop-backs;
  // ancestors render before their closures, so the anchor always exists
  // (with a diamond it may be an equal-sense row from an earlier branch)
  const anchors = new Map<string, string>();
  entry.senses.forEach((sense, index) => {
    const header = renderSenseHeader(sense, index, state, handlers);
    anchors.set(sense.id, header.id);
    container.appendChild(header);
    const descend = (nodes: UiNode[]) => {
      for (const node of nodes) {
        if (!visible.has(node.path)) continue;
        const row = renderPairRow(node, state, handlers, anchors);
        if (!node.pair.closure && !anchors.has(node.pair.target)) {
          anchors.set(node.pair.target, row.id);
        }
        container.appendChild(row);
        descend(node.children);
      }
    };
    descend(tree.senseOf.get(sense.id) ?? []);
  });

  if (layerVisible(state, 'classes') && Object.keys(entry.catalog_excerpt).length) {
    const footer = el('div', 'excerpt');
    footer.textContent = 'classes: ' + Object.entries(entry.catalog_excerpt)
      .map(([label, count]) => `${label}×${count}`)
      .join(' ');
    container.appendChild(footer);
  }
}

export function renderSuggestions(
  container: HTMLElement,
  hits: SearchHit[],
  onPick: (hit: SearchHit) => void,
): void {
  container.textContent = '';
  for (const hit of hits) {
    const item = el('button', 'suggestion', `${hit.lemma} (${hit.pos})`);
    item.dataset.id = hit.id;
    item.addEventListener('click', () => onPick(hit));
    container.appendChild(item);
  }
}

export function renderBanner(container: HTMLElement, message: string, onRetry?: () => void): void {
  container.textContent = '';
  if (!message) return;
  const banner = el('div', 'banner', message);
  if (onRetry) {
    const retry = el('button', 'retry', 'retry');
    retry.addEventListener('click', onRetry);
    banner.appendChild(retry);
  }
  container.appendChild(banner);
}
