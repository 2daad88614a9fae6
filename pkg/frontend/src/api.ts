// Typed client for the dictionary service. Field presence follows the
// requested profile: minimal payloads carry only the skeleton keys,
// standard adds glosses and classes, full adds the attachment arrays.

export interface PhraseUnit {
  text: string;
  gloss?: string;
}

export interface CitationRef {
  quote: string;
  source: string;
}

export interface EntrySense {
  id: string;
  gloss?: string;
  lacuna?: boolean;
  synonyms?: string[];
  phrases?: PhraseUnit[];
  citations?: CitationRef[];
}

export interface EntryPair {
  source: string;
  target: string;
  rank: number;
  depth: number;
  closure: boolean;
  class?: string;
  gloss_source?: string;
  gloss_target?: string;
  synonyms?: string[];
  phrases?: PhraseUnit[];
  citations?: CitationRef[];
}

export interface EntryPayload {
  head: string;
  senses: EntrySense[];
  pairs: EntryPair[];
  truncated: string[];
  catalog_excerpt: Record<string, number>;
}

export interface SearchHit {
  id: string;
  lemma: string;
  pos: string;
}

export interface CatalogPayload {
  counts: Record<string, number>;
  total_pairs: number;
  lacunae: Record<string, string[]>;
  exemplars: Record<string, Array<{ from: string; to: string }>>;
}

export type FeedbackKind = 'error' | 'lacuna' | 'suggestion';

export type ProfileName = 'minimal' | 'standard' | 'full';

export interface EntryQuery {
  depth?: number;
  branch?: number;
  profile?: ProfileName;
}

export class ApiError extends Error {
  constructor(public readonly status: number, public readonly detail: string) {
    super(`${status}: ${detail}`);
  }
}

async function throwApiError(response: Response): Promise<never> {
  let detail = response.statusText;
  try {
    const body = await response.json();
    if (body && typeof body.detail === 'string') detail = body.detail;
  } catch {
    // non-JSON error body; keep the status text
  }
  throw new ApiError(response.status, detail);
}

export class Client {
  constructor(public readonly base: string) {}

  private async get<T>(path: string, params: Record<string, string>): Promise<T> {
    const url = new URL(path, this.base);
    for (const [key, value] of Object.entries(params)) {
      url.searchParams.set(key, value);
    }
    const response = await fetch(url);
    if (!response.ok) await throwApiError(response);
    return response.json() as Promise<T>;
  }

  fetchEntry(head: string, query: EntryQuery = {}): Promise<EntryPayload> {
    const params: Record<string, string> = { head };
    if (query.depth !== undefined) params.depth = String(query.depth);
    if (query.branch !== undefined) params.branch = String(query.branch);
    if (query.profile !== undefined) params.profile = query.profile;
    return this.get('/entry', params);
  }

  search(lang: string, q: string, limit?: number): Promise<SearchHit[]> {
    const params: Record<string, string> = { lang, q };
    if (limit !== undefined) params.limit = String(limit);
    return this.get('/search', params);
  }

  catalog(): Promise<CatalogPayload> {
    return this.get('/catalog', {});
  }

  health(): Promise<{ status: string; lexemes: number; senses: number; edges: number }> {
    return this.get('/health', {});
  }

  async postFeedback(kind: FeedbackKind, body: string, target?: string): Promise<number> {
    const payload: Record<string, string> = { kind, body };
    if (target !== undefined) payload.target = target;
    const response = await fetch(new URL('/feedback', this.base), {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(payload),
    });
    if (!response.ok) await throwApiError(response);
    const ack = await response.json();
    return ack.id as number;
  }
}
