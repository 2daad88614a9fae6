// Runs against the real dictionary service started by the global setup;
// nothing here is mocked.

import { describe, expect, it } from 'vitest';

import { ApiError, Client } from '../src/api.js';
import { serverBase } from './helpers.js';

const base = serverBase();
const client = new Client(base);

const HEAD = 'bg:заблуждавам:verb:1';

async function failureOf(promise: Promise<unknown>): Promise<ApiError> {
  try {
    await promise;
  } catch (error) {
    expect(error).toBeInstanceOf(ApiError);
    return error as ApiError;
  }
  throw new Error('expected the call to fail');
}

describe('health and catalog', () => {
  it('reports the seed graph dimensions', async () => {
    expect(await client.health()).toEqual({
      status: 'ok',
      lexemes: 6,
      senses: 7,
      edges: 7,
    });
  });

  it('serves a catalog whose class counts sum to the pair total', async () => {
    const catalog = await client.catalog();
    const sum = Object.values(catalog.counts).reduce((a, b) => a + b, 0);
    expect(sum).toBe(catalog.total_pairs);
    expect(catalog.total_pairs).toBe(7);
    expect(catalog.lacunae).toEqual({
      bg: ['bg:вкарвам в заблуда:phrase:1#1'],
      ru: ['ru:лгать:verb:1#2'],
    });
  });
});

describe('search', () => {
  it('finds lemmas by prefix', async () => {
    expect(await client.search('bg', 'заблу')).toEqual([
      { id: HEAD, lemma: 'заблуждавам', pos: 'verb' },
    ]);
    const hits = await client.search('ru', 'обма');
    expect(hits.map((h) => h.id)).toEqual(['ru:обманывать:verb:1']);
  });

  it('honours the limit parameter', async () => {
    const all = await client.search('ru', 'л');
    const one = await client.search('ru', 'л', 1);
    expect(one).toEqual(all.slice(0, 1));
  });

  it('rejects a language the lexicon does not hold', async () => {
    const failure = await failureOf(client.search('de', 'x'));
    expect(failure.status).toBe(400);
    expect(failure.detail.length).toBeGreaterThan(0);
  });
});

describe('entry', () => {
  it('returns exactly what a raw request returns', async () => {
    const viaClient = await client.fetchEntry(HEAD, {
      depth: 3,
      branch: 8,
      profile: 'full',
    });
    const url = new URL('/entry', base);
    url.searchParams.set('head', HEAD);
    url.searchParams.set('depth', '3');
    url.searchParams.set('branch', '8');
    url.searchParams.set('profile', 'full');
    const raw = await (await fetch(url)).json();
    expect(viaClient).toEqual(raw);
  });

  it('applies the documented defaults when the query is bare', async () => {
    const bare = await client.fetchEntry(HEAD);
    const spelled = await client.fetchEntry(HEAD, {
      depth: 4,
      branch: 8,
      profile: 'standard',
    });
    expect(bare).toEqual(spelled);
  });

  it('404s on a head that is not in the dictionary', async () => {
    const failure = await failureOf(client.fetchEntry('bg:никакъв:noun:1'));
    expect(failure.status).toBe(404);
    expect(failure.detail).toContain('bg:никакъв:noun:1');
  });

  it('400s on out-of-range knobs', async () => {
    expect((await failureOf(client.fetchEntry(HEAD, { depth: -1 }))).status).toBe(400);
    expect((await failureOf(client.fetchEntry(HEAD, { branch: 0 }))).status).toBe(400);
  });
});

describe('feedback', () => {
  it('acknowledges consecutive posts with consecutive ids', async () => {
    const first = await client.postFeedback('suggestion', 'пример за предложение');
    expect(Number.isInteger(first)).toBe(true);
    expect(first).toBeGreaterThanOrEqual(1);
    const second = await client.postFeedback('error', 'грешка в примера', HEAD);
    expect(second).toBe(first + 1);
  });

  it('refuses an empty body and an unresolvable target', async () => {
    expect((await failureOf(client.postFeedback('error', ''))).status).toBe(400);
    const missing = await failureOf(
      client.postFeedback('lacuna', 'няма такава дума', 'bg:никаква:noun:9'),
    );
    expect(missing.status).toBe(404);
  });
});
