import { describe, expect, it } from 'vitest';
import { PairwiseWizard, violationHints } from '../src/wizard';
import type { AnalysisDoc, SessionDoc } from '../src/types';

function session(ids: string[], revision = 1): SessionDoc {
  return {
    schema_version: 1,
    id: 'abc123',
    created_at: '2026-08-23T00:00:00Z',
    updated_at: '2026-08-23T00:00:00Z',
    revision,
    disorders: ids.map((id) => ({ id, label: '' })),
    judgments: [],
    hierarchy: null,
    scale: null,
    trisection_params: null,
    notes: '',
  };
}

describe('PairwiseWizard', () => {
  it('lists all unordered pairs in insertion order', () => {
    const wizard = new PairwiseWizard(session(['a', 'b', 'c']));
    expect(wizard.pendingPairs()).toEqual([
      { first: 'a', second: 'b' },
      { first: 'a', second: 'c' },
      { first: 'b', second: 'c' },
    ]);
  });

  it('a second verdict for the same pair replaces the first', () => {
    const wizard = new PairwiseWizard(session(['a', 'b']));
    wizard.answer('a', 'b', 'PREFERRED');
    wizard.answer('b', 'a', 'INDIFFERENT');
    const staged = wizard.stagedJudgments();
    expect(staged).toHaveLength(1);
    expect(staged[0]).toEqual({ first: 'b', second: 'a', verdict: 'INDIFFERENT' });
    expect(wizard.pendingPairs()).toEqual([]);
  });

  it('rejects self-comparison and unknown ids', () => {
    const wizard = new PairwiseWizard(session(['a', 'b']));
    expect(() => wizard.answer('a', 'a', 'PREFERRED')).toThrow(/itself/);
    expect(() => wizard.answer('a', 'z', 'PREFERRED')).toThrow(/unknown/);
  });

  it('commits against the snapshot revision', () => {
    const wizard = new PairwiseWizard(session(['a', 'b'], 7));
    wizard.answer('a', 'b', 'PREFERRED');
    const payload = wizard.commitPayload();
    expect(payload.expected_revision).toBe(7);
    expect(payload.judgments).toEqual([{ first: 'a', second: 'b', verdict: 'PREFERRED' }]);
  });

  it('adopts the committed document as the new baseline', () => {
    const wizard = new PairwiseWizard(session(['a', 'b', 'c']));
    wizard.answer('a', 'b', 'PREFERRED');
    const committed = {
      ...session(['a', 'b', 'c'], 2),
      judgments: [{ first: 'a', second: 'b', verdict: 'PREFERRED' as const }],
    };
    wizard.refresh(committed);
    expect(wizard.pendingPairs()).toEqual([
      { first: 'a', second: 'c' },
      { first: 'b', second: 'c' },
    ]);
    expect(wizard.commitPayload().expected_revision).toBe(2);
  });
});

describe('violationHints', () => {
  const analysis = (axioms: AnalysisDoc['axioms']): AnalysisDoc => ({
    classification: 'UNCLASSIFIED',
    axioms,
    ranking: null,
    indifferent_pairs: [],
    unjudged_pairs: [],
  });

  it('says nothing when every axiom holds', () => {
    expect(
      violationHints(analysis([{ property: 'TRANSITIVE', holds: true, counterexamples: [] }])),
    ).toEqual([]);
  });

  it('renders a transitivity witness as plain language', () => {
    const hints = violationHints(
      analysis([{ property: 'TRANSITIVE', holds: false, counterexamples: [['a', 'b', 'c']] }]),
    );
    expect(hints).toHaveLength(1);
    expect(hints[0].text).toBe(
      'you ranked a over b and b over c, but not a over c',
    );
  });

  it('renders missing comparisons and falls back for other axioms', () => {
    const hints = violationHints(
      analysis([
        { property: 'WEAKLY_COMPLETE', holds: false, counterexamples: [['a', 'b']] },
        { property: 'FERRERS', holds: false, counterexamples: [['a', 'b', 'c', 'd']] },
      ]),
    );
    expect(hints[0].text).toBe('a and b are not compared');
    expect(hints[1].text).toBe('FERRERS fails for (a, b, c, d)');
  });
});
