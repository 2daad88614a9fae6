// View state and its URL-fragment encoding. The whole view is
// reconstructible from (head, expansion set, profile) plus the depth and
// branch controls, so entries are shareable links.

import type { FeedbackKind, ProfileName } from './api.js';
import { isExpandable, nodeByPath, type UiTree } from './tree.js';

export type Layer = 'glosses' | 'synonyms' | 'phrases' | 'citations' | 'classes';

export const ALL_LAYERS: Layer[] = ['glosses', 'synonyms', 'phrases', 'citations', 'classes'];

export interface FeedbackDraft {
  kind: FeedbackKind;
  target?: string;
  body: string;
}

export interface ViewState {
  head: string | null;
  profile: ProfileName;
  depth: number;
  branch: number;
  expanded: Set<string>; // node paths the reader has opened
  layers: Set<Layer>;
  draft: FeedbackDraft | null; // pending, not part of the sharable view
}

export const INITIAL_DEPTH = 2;
export const DEFAULT_BRANCH = 8;

export function initialState(): ViewState {
  return {
    head: null,
    profile: 'standard',
    depth: INITIAL_DEPTH,
    branch: DEFAULT_BRANCH,
    expanded: new Set(),
    layers: new Set<Layer>(['glosses', 'classes']),
    draft: null,
  };
}

const PROFILE_RANK: Record<ProfileName, number> = { minimal: 0, standard: 1, full: 2 };

// the smallest profile whose payload carries a given layer's data
const LAYER_PROFILE: Record<Layer, ProfileName> = {
  glosses: 'standard',
  classes: 'standard',
  synonyms: 'full',
  phrases: 'full',
  citations: 'full',
};

export function profileCovers(have: ProfileName, want: ProfileName): boolean {
  return PROFILE_RANK[have] >= PROFILE_RANK[want];
}

export function requiredProfile(layers: ReadonlySet<Layer>): ProfileName {
  let needed: ProfileName = 'minimal';
  for (const layer of layers) {
    if (!profileCovers(needed, LAYER_PROFILE[layer])) needed = LAYER_PROFILE[layer];
  }
  return needed;
}

export function layerVisible(state: ViewState, layer: Layer): boolean {
  return state.layers.has(layer) && profileCovers(state.profile, LAYER_PROFILE[layer]);
}

// keeps the invariant that the expansion set only names pairs that are
// present in the fetched entry; call after every refetch
export function pruneExpanded(state: ViewState, tree: UiTree): void {
  for (const path of [...state.expanded]) {
    const node = nodeByPath(tree, path);
    if (!node || !isExpandable(node)) state.expanded.delete(path);
  }
}

const LAYER_CODE: Array<[Layer, string]> = [
  ['glosses', 'g'],
  ['synonyms', 's'],
  ['phrases', 'p'],
  ['citations', 'c'],
  ['classes', 'k'],
];

export function encodeFragment(state: ViewState): string {
  if (!state.head) return '';
  const parts = [`h=${encodeURIComponent(state.head)}`];
  if (state.profile !== 'standard') parts.push(`pr=${state.profile}`);
  if (state.depth !== INITIAL_DEPTH) parts.push(`d=${state.depth}`);
  if (state.branch !== DEFAULT_BRANCH) parts.push(`b=${state.branch}`);
  if (state.expanded.size) {
    parts.push(`x=${[...state.expanded].sort().join(',')}`);
  }
  const letters = LAYER_CODE.filter(([layer]) => state.layers.has(layer))
    .map(([, code]) => code)
    .join('');
  parts.push(`l=${letters}`);
  return '#' + parts.join('&');
}

export function decodeFragment(hash: string): ViewState {
  const state = initialState();
  const raw = hash.startsWith('#') ? hash.slice(1) : hash;
  if (!raw) return state;
  const fields = new Map<string, string>();
  for (const piece of raw.split('&')) {
    const eq = piece.indexOf('=');
    if (eq > 0) fields.set(piece.slice(0, eq), piece.slice(eq + 1));
  }
  const head = fields.get('h');
  if (head) state.head = decodeURIComponent(head);
  const profile = fields.get('pr');
  if (profile === 'minimal' || profile === 'standard' || profile === 'full') {
    state.profile = profile;
  }
  const depth = Number(fields.get('d'));
  if (Number.isInteger(depth) && depth >= 0) state.depth = depth;
  const branch = Number(fields.get('b'));
  if (Number.isInteger(branch) && branch >= 1) state.branch = branch;
  const expanded = fields.get('x');
  if (expanded) {
    state.expanded = new Set(expanded.split(',').filter((p) => /^\d+(\.\d+)*$/.test(p)));
  }
  const letters = fields.get('l');
  if (letters !== undefined) {
    state.layers = new Set(
      LAYER_CODE.filter(([, code]) => letters.includes(code)).map(([layer]) => layer),
    );
  }
  return state;
}
