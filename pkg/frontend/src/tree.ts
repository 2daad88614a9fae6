// Rebuilds the entry's chain tree from the flat pair list the service
// sends. Pairs arrive level by level (all depth-1 pairs, then depth-2,
// and so on) with each parent's children contiguous and rank-ascending,
// so a single forward scan per level recovers the tree. Nothing is
// invented here: a pair that cannot be attached to a parent is an error,
// not a guess.

import type { EntryPair, EntryPayload } from './api.js';

export interface UiNode {
  pair: EntryPair;
  // position key like "0.2.1"; stable when the same entry is refetched
  // at a greater depth, which is what expansion-triggered fetches do
  path: string;
  children: UiNode[];
  truncatedHere: boolean;
  lacuna: boolean;
}

export interface UiTree {
  head: string;
  senseOf: Map<string, UiNode[]>; // head sense id -> its root pairs
  roots: UiNode[];
  truncated: Set<string>;
}

export function lemmaOf(senseOrLexemeId: string): string {
  // lang:lemma:pos:homonym[#sense]; the lemma itself may contain colons
  const lexeme = senseOrLexemeId.split('#', 1)[0]!;
  const parts = lexeme.split(':');
  if (parts.length < 4) return senseOrLexemeId;
  return parts.slice(1, -2).join(':');
}

export function langOf(senseOrLexemeId: string): string {
  return senseOrLexemeId.split(':', 1)[0]!;
}

export function buildTree(entry: EntryPayload): UiTree {
  const truncated = new Set(entry.truncated);
  const byDepth: EntryPair[][] = [];
  for (const pair of entry.pairs) {
    (byDepth[pair.depth - 1] ??= []).push(pair);
  }

  const makeNode = (pair: EntryPair, path: string): UiNode => ({
    pair,
    path,
    children: [],
    truncatedHere: truncated.has(pair.target),
    lacuna: false,
  });

  const roots = (byDepth[0] ?? []).map((pair, i) => makeNode(pair, String(i)));
  let level = roots;
  for (let depth = 2; depth - 1 < byDepth.length; depth++) {
    const rows = byDepth[depth - 1] ?? [];
    const next: UiNode[] = [];
    let at = 0;
    for (const parent of level) {
      if (parent.pair.closure) continue;
      let lastRank = 0;
      while (at < rows.length) {
        const row = rows[at]!;
        // a rank that does not ascend starts the next parent's group
        if (row.source !== parent.pair.target || row.rank <= lastRank) break;
        const child = makeNode(row, `${parent.path}.${parent.children.length}`);
        parent.children.push(child);
        next.push(child);
        lastRank = row.rank;
        at++;
      }
    }
    if (at !== rows.length) {
      throw new Error(`unattachable pair at depth ${depth}: ${JSON.stringify(rows[at])}`);
    }
    level = next;
  }

  for (const node of walk(roots)) {
    node.lacuna = !node.pair.closure && node.children.length === 0 && !node.truncatedHere;
  }

  // group roots under their head sense (a lexeme head has several)
  const senseOf = new Map<string, UiNode[]>();
  for (const sense of entry.senses) senseOf.set(sense.id, []);
  for (const root of roots) senseOf.get(root.pair.source)?.push(root);

  return { head: entry.head, senseOf, roots, truncated };
}

export function* walk(nodes: UiNode[]): Generator<UiNode> {
  for (const node of nodes) {
    yield node;
    yield* walk(node.children);
  }
}

export function nodeByPath(tree: UiTree, path: string): UiNode | undefined {
  let nodes = tree.roots;
  let found: UiNode | undefined;
  for (const step of path.split('.')) {
    found = nodes[Number(step)];
    if (!found) return undefined;
    nodes = found.children;
  }
  return found;
}

export function isExpandable(node: UiNode): boolean {
  return !node.pair.closure && (node.children.length > 0 || node.truncatedHere);
}

// expanding a node whose children were cut off needs a deeper fetch
export function needsDeeperFetch(node: UiNode): boolean {
  return node.children.length === 0 && node.truncatedHere;
}

// roots are always shown; a node's children only once it is expanded
export function visibleNodes(tree: UiTree, expanded: ReadonlySet<string>): UiNode[] {
  const out: UiNode[] = [];
  const descend = (nodes: UiNode[]) => {
    for (const node of nodes) {
      out.push(node);
      if (expanded.has(node.path)) descend(node.children);
    }
  };
  descend(tree.roots);
  return out;
}

export function pairKey(pair: EntryPair): string {
  return `${pair.source} ${pair.target} ${pair.rank} ${pair.depth} ${pair.closure}`;
}
