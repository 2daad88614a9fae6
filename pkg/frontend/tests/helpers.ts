import { readFileSync } from 'node:fs';
import { dirname, join } from 'node:path';
import { fileURLToPath } from 'node:url';

import type { EntryPair } from '../src/api.js';
import { pairKey } from '../src/tree.js';

export function serverBase(): string {
  const info = join(dirname(fileURLToPath(import.meta.url)), '.server.json');
  return JSON.parse(readFileSync(info, 'utf-8')).base as string;
}

export function pair(
  source: string,
  target: string,
  rank: number,
  depth: number,
  closure = false,
): EntryPair {
  return { source, target, rank, depth, closure };
}

// what the DOM actually shows, keyed the same way as wire pairs
export function domPairSignatures(root: HTMLElement): string[] {
  return [...root.querySelectorAll<HTMLElement>('.pair')].map((row) =>
    pairKey({
      source: row.dataset.source!,
      target: row.dataset.target!,
      rank: Number(row.dataset.rank),
      depth: Number(row.dataset.depth),
      closure: row.dataset.closure === 'true',
    }),
  );
}
