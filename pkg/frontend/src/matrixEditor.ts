// Staged comparison-matrix editor. Cells hold exact rationals from the
// 9-point scale, so editing (i, j) auto-fills (j, i) with the exact
// reciprocal; the diagonal is locked to 1. The consistency gauge only ever
// shows the service-computed ratio.

import type { ConsistencyDoc, MatrixDoc } from './types';

export interface Rational {
  num: number;
  den: number;
}

/** The admissible judgment values: 1..9 and their reciprocals. */
export const SAATY_VALUES: Rational[] = [
  ...Array.from({ length: 9 }, (_, k) => ({ num: k + 1, den: 1 })),
  ...Array.from({ length: 8 }, (_, k) => ({ num: 1, den: k + 2 })),
];

export function reciprocal(r: Rational): Rational {
  return { num: r.den, den: r.num };
}

function sameRational(a: Rational, b: Rational): boolean {
  return a.num * b.den === b.num * a.den;
}

export class MatrixEditor {
  private cells: Rational[][];

  constructor(public readonly labels: string[]) {
    const n = labels.length;
    this.cells = Array.from({ length: n }, () =>
      Array.from({ length: n }, () => ({ num: 1, den: 1 })),
    );
  }

  get n(): number {
    return this.labels.length;
  }

  cell(i: number, j: number): Rational {
    return this.cells[i][j];
  }

  /**
   * Stage a judgment. Rejects diagonal edits and values outside the
   * 9-point scale; fills the mirror cell with the exact reciprocal.
   */
  setCell(i: number, j: number, value: Rational): void {
    if (i === j) {
      throw new Error('diagonal is locked to 1');
    }
    if (!SAATY_VALUES.some((v) => sameRational(v, value))) {
      throw new Error(`value ${value.num}/${value.den} is not on the 9-point scale`);
    }
    this.cells[i][j] = value;
    this.cells[j][i] = reciprocal(value);
  }

  /** Exact reciprocity check: cells[i][j] * cells[j][i] === 1, integer math. */
  isReciprocal(): boolean {
    for (let i = 0; i < this.n; i++) {
      for (let j = 0; j < this.n; j++) {
        const a = this.cells[i][j];
        const b = this.cells[j][i];
        if (a.num * b.num !== a.den * b.den) return false;
      }
    }
    return true;
  }

  /** Exchange document; rationals become exact fraction strings. */
  toDoc(): MatrixDoc {
    return {
      labels: [...this.labels],
      rows: this.cells.map((row) =>
        row.map((r) => (r.den === 1 ? String(r.num) : `${r.num}/${r.den}`)),
      ),
    };
  }
}

export interface GaugeView {
  /** The service-computed consistency ratio, verbatim. */
  ratio: number;
  acceptable: boolean;
  color: 'green' | 'red';
  lambdaMax: number;
}

/** Render model for the C.R. gauge; input must be a service response. */
export function consistencyGauge(report: ConsistencyDoc): GaugeView {
  return {
    ratio: report.consistency_ratio,
    acceptable: report.acceptable,
    color: report.acceptable ? 'green' : 'red',
    lambdaMax: report.lambda_max,
  };
}

export interface CellDeviation {
  i: number;
  j: number;
  entry: number;
  ideal: number;
  deviation: number;
}

/**
 * Inconsistency coaching: rank off-diagonal cells by how far the staged
 * entry sits from the ideal ratio w_i / w_j of the service weights.
 */
export function worstCells(
  editor: MatrixEditor,
  weights: Record<string, number>,
  top = 3,
): CellDeviation[] {
  const out: CellDeviation[] = [];
  for (let i = 0; i < editor.n; i++) {
    for (let j = 0; j < editor.n; j++) {
      if (i === j) continue;
      const entry = editor.cell(i, j).num / editor.cell(i, j).den;
      const ideal = weights[editor.labels[i]] / weights[editor.labels[j]];
      out.push({ i, j, entry, ideal, deviation: Math.abs(Math.log(entry / ideal)) });
    }
  }
  out.sort((a, b) => b.deviation - a.deviation);
  return out.slice(0, top);
}
