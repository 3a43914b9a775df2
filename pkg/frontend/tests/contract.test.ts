// Contract tests against recorded service responses. Every number the UI
// renders must come verbatim from these documents.

import { describe, expect, it } from 'vitest';
import fixture from '../fixtures/table3.json';
import { ApiClient, ApiError } from '../src/api';
import { MatrixEditor, consistencyGauge } from '../src/matrixEditor';
import type { SessionDoc, WeightsDoc } from '../src/types';

const weights = fixture.weights as WeightsDoc;
const session = fixture.session as SessionDoc;

function fetchFromFixtures(routes: Record<string, { status: number; body: unknown }>) {
  return async (input: RequestInfo | URL, init?: RequestInit): Promise<Response> => {
    const url = String(input);
    const key = `${init?.method ?? 'GET'} ${new URL(url).pathname}`;
    const route = routes[key];
    if (!route) throw new Error(`no recorded response for ${key}`);
    return new Response(JSON.stringify(route.body), {
      status: route.status,
      headers: { 'Content-Type': 'application/json' },
    });
  };
}

describe('consistency gauge contract', () => {
  it('shows exactly the recorded service ratio', () => {
    const gauge = consistencyGauge(weights.consistency['clusters']);
    expect(gauge.ratio).toBe(0.00770905644322);
    expect(gauge.acceptable).toBe(true);
    expect(gauge.color).toBe('green');
    expect(gauge.lambdaMax).toBe(6.04818160277);
  });

  it('never recomputes the ratio from lambda_max client-side', () => {
    // A deliberately skewed report: if the gauge derived the ratio itself
    // the two fields would disagree with what it displays.
    const gauge = consistencyGauge({
      lambda_max: 6.04818160277,
      consistency_index: 0.00963632055402,
      random_index: 1.25,
      consistency_ratio: 0.5,
      acceptable: false,
    });
    expect(gauge.ratio).toBe(0.5);
    expect(gauge.color).toBe('red');
  });
});

describe('ApiClient against recorded responses', () => {
  it('returns the weights document untouched', async () => {
    const api = new ApiClient(
      'http://service',
      fetchFromFixtures({
        [`GET /sessions/${session.id}/weights`]: { status: 200, body: weights },
      }),
    );
    const doc = await api.getWeights(session.id);
    expect(doc).toEqual(weights);
    expect(doc.global['D6']).toBe(0.421592942545);
    expect(doc.global['D3']).toBe(0.290538632912);
  });

  it('returns the trisection documents untouched', async () => {
    const api = new ApiClient(
      'http://service',
      fetchFromFixtures({
        [`POST /sessions/${session.id}/trisect`]: {
          status: 200,
          body: fixture.trisect_k1_1_k2_1,
        },
      }),
    );
    const doc = await api.trisect(session.id, {
      method: 'statistical',
      source: 'weights',
      k1: 1,
      k2: 1,
    });
    expect(doc.high).toEqual(['D6']);
    expect(doc.h).toBe(0.309726595959);
    expect(doc.mu).toBe(0.166666666667);
  });

  it('raises a typed error carrying the service error document', async () => {
    const api = new ApiClient(
      'http://service',
      fetchFromFixtures({
        'GET /sessions/missing': {
          status: 404,
          body: { error: { code: 'NOT_FOUND', message: 'no such session', details: {} } },
        },
      }),
    );
    await expect(api.getSession('missing')).rejects.toSatisfy((err: unknown) => {
      return err instanceof ApiError && err.status === 404 && err.code === 'NOT_FOUND';
    });
  });

  it('reports the recorded service version', async () => {
    const api = new ApiClient(
      'http://service',
      fetchFromFixtures({ 'GET /healthz': { status: 200, body: fixture.healthz } }),
    );
    const health = await api.health();
    expect(health).toEqual({ status: 'ok', version: '0.1.0' });
  });
});

describe('matrix editor round trip to the recorded hierarchy', () => {
  it('reproduces the recorded cluster matrix cell for cell', () => {
    const recorded = fixture.hierarchy.cluster_matrix;
    const editor = new MatrixEditor(recorded.labels);
    for (let i = 0; i < recorded.labels.length; i++) {
      for (let j = i + 1; j < recorded.labels.length; j++) {
        const raw = recorded.rows[i][j] as string;
        const [num, den] = raw.includes('/')
          ? raw.split('/').map(Number)
          : [Number(raw), 1];
        editor.setCell(i, j, { num, den });
      }
    }
    expect(editor.isReciprocal()).toBe(true);
    expect(editor.toDoc()).toEqual(recorded);
  });
});
