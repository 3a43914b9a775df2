// Thin typed client for the session API. Every number the UI shows comes
// from these responses; nothing is recomputed client-side.

import type {
  AnalysisDoc,
  ApiErrorDoc,
  HierarchyDoc,
  Judgment,
  SessionDoc,
  TrisectParams,
  TrisectionDoc,
  WeightsDoc,
} from './types';

export class ApiError extends Error {
  constructor(
    public status: number,
    public doc: ApiErrorDoc,
  ) {
    super(doc.message);
  }

  get code(): string {
    return this.doc.code;
  }
}

type Fetch = typeof fetch;

export class ApiClient {
  constructor(
    private baseUrl: string,
    private fetchImpl: Fetch = fetch,
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const resp = await this.fetchImpl(`${this.baseUrl}${path}`, {
      method,
      headers: { 'Content-Type': 'application/json' },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const payload = await resp.json();
    if (!resp.ok) {
      throw new ApiError(resp.status, payload.error as ApiErrorDoc);
    }
    return payload as T;
  }

  health(): Promise<{ status: string; version: string }> {
    return this.request('GET', '/healthz');
  }

  createSession(disorders: string[]): Promise<SessionDoc> {
    return this.request('POST', '/sessions', { disorders });
  }

  getSession(id: string): Promise<SessionDoc> {
    return this.request('GET', `/sessions/${id}`);
  }

  putJudgments(id: string, expectedRevision: number, judgments: Judgment[]): Promise<SessionDoc> {
    return this.request('PUT', `/sessions/${id}/judgments`, {
      expected_revision: expectedRevision,
      judgments,
    });
  }

  getAnalysis(id: string): Promise<AnalysisDoc> {
    return this.request('GET', `/sessions/${id}/analysis`);
  }

  putHierarchy(id: string, expectedRevision: number, hierarchy: HierarchyDoc): Promise<SessionDoc> {
    return this.request('PUT', `/sessions/${id}/hierarchy`, {
      expected_revision: expectedRevision,
      hierarchy,
    });
  }

  getWeights(id: string): Promise<WeightsDoc> {
    return this.request('GET', `/sessions/${id}/weights`);
  }

  trisect(id: string, params: TrisectParams): Promise<TrisectionDoc> {
    return this.request('POST', `/sessions/${id}/trisect`, params);
  }

  saveTrisectionParams(id: string, expectedRevision: number, params: TrisectParams): Promise<SessionDoc> {
    return this.request('PUT', `/sessions/${id}/trisection-params`, {
      expected_revision: expectedRevision,
      params,
    });
  }
}
