import { describe, expect, it } from 'vitest';
import {
  MatrixEditor,
  SAATY_VALUES,
  consistencyGauge,
  reciprocal,
  worstCells,
} from '../src/matrixEditor';

// Deterministic generator so the random edit sequences are reproducible.
function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

describe('MatrixEditor', () => {
  it('starts as the identity-consistent matrix', () => {
    const editor = new MatrixEditor(['a', 'b', 'c']);
    for (let i = 0; i < 3; i++) {
      for (let j = 0; j < 3; j++) {
        expect(editor.cell(i, j)).toEqual({ num: 1, den: 1 });
      }
    }
    expect(editor.isReciprocal()).toBe(true);
  });

  it('fills the mirror cell with the exact reciprocal', () => {
    const editor = new MatrixEditor(['a', 'b']);
    editor.setCell(0, 1, { num: 7, den: 1 });
    expect(editor.cell(1, 0)).toEqual({ num: 1, den: 7 });
    editor.setCell(1, 0, { num: 1, den: 3 });
    expect(editor.cell(0, 1)).toEqual({ num: 3, den: 1 });
  });

  it('rejects diagonal edits', () => {
    const editor = new MatrixEditor(['a', 'b']);
    expect(() => editor.setCell(1, 1, { num: 2, den: 1 })).toThrow(/diagonal/);
  });

  it('rejects values outside the 9-point scale', () => {
    const editor = new MatrixEditor(['a', 'b']);
    expect(() => editor.setCell(0, 1, { num: 10, den: 1 })).toThrow(/scale/);
    expect(() => editor.setCell(0, 1, { num: 3, den: 2 })).toThrow(/scale/);
    expect(() => editor.setCell(0, 1, { num: 0, den: 1 })).toThrow(/scale/);
  });

  it('stays exactly reciprocal under arbitrary edit sequences', () => {
    const rand = mulberry32(99);
    for (let trial = 0; trial < 200; trial++) {
      const n = 2 + Math.floor(rand() * 7);
      const labels = Array.from({ length: n }, (_, k) => `d${k + 1}`);
      const editor = new MatrixEditor(labels);
      const edits = 1 + Math.floor(rand() * 30);
      for (let e = 0; e < edits; e++) {
        const i = Math.floor(rand() * n);
        let j = Math.floor(rand() * n);
        if (j === i) j = (j + 1) % n;
        const value = SAATY_VALUES[Math.floor(rand() * SAATY_VALUES.length)];
        editor.setCell(i, j, value);
        expect(editor.isReciprocal()).toBe(true);
      }
      for (let i = 0; i < n; i++) {
        expect(editor.cell(i, i)).toEqual({ num: 1, den: 1 });
      }
    }
  });

  it('emits exact fraction strings in the exchange document', () => {
    const editor = new MatrixEditor(['a', 'b', 'c']);
    editor.setCell(0, 1, { num: 1, den: 7 });
    editor.setCell(0, 2, { num: 5, den: 1 });
    const doc = editor.toDoc();
    expect(doc.labels).toEqual(['a', 'b', 'c']);
    expect(doc.rows[0]).toEqual(['1', '1/7', '5']);
    expect(doc.rows[1][0]).toBe('7');
    expect(doc.rows[2][0]).toBe('1/5');
  });
});

describe('reciprocal and scale', () => {
  it('reciprocal flips numerator and denominator', () => {
    expect(reciprocal({ num: 4, den: 1 })).toEqual({ num: 1, den: 4 });
  });

  it('the scale has 1..9 and 1/2..1/9 with no duplicates', () => {
    expect(SAATY_VALUES).toHaveLength(17);
    const keys = new Set(SAATY_VALUES.map((v) => v.num / v.den));
    expect(keys.size).toBe(17);
  });
});

describe('consistencyGauge', () => {
  it('passes the service ratio through untouched', () => {
    const report = {
      lambda_max: 6.0482,
      consistency_index: 0.009647,
      random_index: 1.25,
      consistency_ratio: 0.00770905644322,
      acceptable: true,
    };
    const gauge = consistencyGauge(report);
    expect(gauge.ratio).toBe(report.consistency_ratio);
    expect(gauge.lambdaMax).toBe(report.lambda_max);
    expect(gauge.color).toBe('green');
  });

  it('turns red when the service marks the matrix unacceptable', () => {
    const gauge = consistencyGauge({
      lambda_max: 4.9,
      consistency_index: 0.3,
      random_index: 0.89,
      consistency_ratio: 0.337,
      acceptable: false,
    });
    expect(gauge.acceptable).toBe(false);
    expect(gauge.color).toBe('red');
  });
});

describe('worstCells', () => {
  it('ranks the cell farthest from the weight ratio first', () => {
    const editor = new MatrixEditor(['a', 'b', 'c']);
    editor.setCell(0, 1, { num: 9, den: 1 });
    editor.setCell(0, 2, { num: 2, den: 1 });
    editor.setCell(1, 2, { num: 2, den: 1 });
    const weights = { a: 0.5, b: 0.25, c: 0.25 };
    const worst = worstCells(editor, weights, 2);
    expect(worst[0].i).toBe(0);
    expect(worst[0].j).toBe(1);
    expect(worst[0].ideal).toBeCloseTo(2, 12);
  });
});
