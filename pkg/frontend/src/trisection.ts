// Trisection explorer: slider-driven what-if parameters, validated
// client-side with the same ranges the service enforces; the rendered
// regions come verbatim from the service response.

import type { TrisectParams, TrisectionDoc } from './types';

export interface SliderState {
  method: 'percentile' | 'statistical';
  source: string;
  alpha: number;
  beta: number;
  k1: number;
  k2: number;
}

export function defaultSliders(source = 'esv'): SliderState {
  return { method: 'statistical', source, alpha: 80, beta: 40, k1: 1, k2: 1 };
}

/** Mirror of the server-side parameter checks; blocks bad requests early. */
export function validateSliders(s: SliderState): string | null {
  if (s.method === 'percentile') {
    if (!(0 < s.beta && s.beta < s.alpha && s.alpha < 100)) {
      return 'need 0 < beta < alpha < 100';
    }
  } else {
    if (s.k1 < 0 || s.k2 < 0) {
      return 'k1 and k2 must be non-negative';
    }
  }
  return null;
}

export function toParams(s: SliderState): TrisectParams {
  const error = validateSliders(s);
  if (error) {
    throw new Error(error);
  }
  return s.method === 'percentile'
    ? { method: 'percentile', source: s.source, alpha: s.alpha, beta: s.beta }
    : { method: 'statistical', source: s.source, k1: s.k1, k2: s.k2 };
}

export interface RegionColumn {
  name: 'H' | 'M' | 'L';
  members: { id: string; value: number }[];
}

export interface TrisectionView {
  columns: RegionColumn[];
  h: number;
  l: number;
  mu?: number;
  sigma?: number;
}

/**
 * Render model for the three-column view. Throws if the response is not a
 * partition of the value universe - the UI must never display one that
 * is not.
 */
export function buildView(doc: TrisectionDoc): TrisectionView {
  const regions: [RegionColumn['name'], string[]][] = [
    ['H', doc.high],
    ['M', doc.medium],
    ['L', doc.low],
  ];
  const seen = new Set<string>();
  for (const [, members] of regions) {
    for (const id of members) {
      if (seen.has(id)) {
        throw new Error(`disorder ${id} appears in two regions`);
      }
      seen.add(id);
    }
  }
  const universe = Object.keys(doc.values);
  if (seen.size !== universe.length || !universe.every((id) => seen.has(id))) {
    throw new Error('regions do not cover the disorder set');
  }
  return {
    columns: regions.map(([name, members]) => ({
      name,
      members: members.map((id) => ({ id, value: doc.values[id] })),
    })),
    h: doc.h,
    l: doc.l,
    mu: doc.mu,
    sigma: doc.sigma,
  };
}
