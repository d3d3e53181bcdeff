import type { HHierarchyPayload, NodePayload, NodeSummary, RulePayload, Summary } from './types.js';

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** Thin typed client over the read-only exploration API. */
export class ApiClient {
  private fetchFn: FetchLike;

  constructor(private base: string = '', fetchFn?: FetchLike) {
    this.fetchFn = fetchFn ?? ((input, init) => fetch(input, init));
  }

  private async get<T>(path: string): Promise<T> {
    const response = await this.fetchFn(`${this.base}${path}`);
    if (!response.ok) {
      throw new ApiError(response.status, `GET ${path} failed: ${response.status}`);
    }
    return response.json() as Promise<T>;
  }

  summary(): Promise<Summary> {
    return this.get('/api/summary');
  }

  roots(): Promise<NodeSummary[]> {
    return this.get('/api/mhier/roots');
  }

  node(id: number): Promise<NodePayload> {
    return this.get(`/api/mhier/node/${id}`);
  }

  rule(id: number): Promise<RulePayload> {
    return this.get(`/api/rule/${id}`);
  }

  async hgen(seedIds: number[]): Promise<HHierarchyPayload> {
    const response = await this.fetchFn(`${this.base}/api/hgen`, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify({ seed_ids: seedIds }),
    });
    if (!response.ok) {
      throw new ApiError(response.status, `POST /api/hgen failed: ${response.status}`);
    }
    return response.json() as Promise<HHierarchyPayload>;
  }
}
