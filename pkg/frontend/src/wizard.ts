// Pairwise judgment wizard: walks the unjudged pairs, stages one verdict
// per pair, and commits against the session's expected revision. After a
// commit the caller re-fetches analysis so axiom violations surface
// immediately.

import type { AnalysisDoc, Judgment, SessionDoc, Verdict } from './types';

export interface PendingPair {
  first: string;
  second: string;
}

function pairKey(a: string, b: string): string {
  return a < b ? `${a}|${b}` : `${b}|${a}`;
}

export class PairwiseWizard {
  private staged = new Map<string, Judgment>();

  constructor(private session: SessionDoc) {
    for (const j of session.judgments) {
      this.staged.set(pairKey(j.first, j.second), j);
    }
  }

  /** Pairs without a verdict, in disorder insertion order. */
  pendingPairs(): PendingPair[] {
    const ids = this.session.disorders.map((d) => d.id);
    const out: PendingPair[] = [];
    for (let i = 0; i < ids.length; i++) {
      for (let j = i + 1; j < ids.length; j++) {
        if (!this.staged.has(pairKey(ids[i], ids[j]))) {
          out.push({ first: ids[i], second: ids[j] });
        }
      }
    }
    return out;
  }

  /**
   * Stage a verdict; a second verdict for the same unordered pair replaces
   * the first, so the wizard can never submit two verdicts for one pair.
   */
  answer(first: string, second: string, verdict: Verdict): void {
    if (first === second) {
      throw new Error('cannot compare a disorder with itself');
    }
    const known = this.session.disorders.map((d) => d.id);
    if (!known.includes(first) || !known.includes(second)) {
      throw new Error('unknown disorder id');
    }
    this.staged.set(pairKey(first, second), { first, second, verdict });
  }

  stagedJudgments(): Judgment[] {
    return [...this.staged.values()];
  }

  /** Body for PUT /sessions/{id}/judgments at the snapshot's revision. */
  commitPayload(): { expected_revision: number; judgments: Judgment[] } {
    return {
      expected_revision: this.session.revision,
      judgments: this.stagedJudgments(),
    };
  }

  /** Adopt the committed session document as the new baseline. */
  refresh(session: SessionDoc): void {
    this.session = session;
    this.staged.clear();
    for (const j of session.judgments) {
      this.staged.set(pairKey(j.first, j.second), j);
    }
  }
}

export interface ViolationHint {
  axiom: string;
  witness: string[];
  text: string;
}

/** Human-readable coaching lines for failed axioms. */
export function violationHints(analysis: AnalysisDoc): ViolationHint[] {
  const hints: ViolationHint[] = [];
  for (const report of analysis.axioms) {
    if (report.holds) continue;
    for (const witness of report.counterexamples) {
      hints.push({
        axiom: report.property,
        witness,
        text: describeViolation(report.property, witness),
      });
    }
  }
  return hints;
}

function describeViolation(axiom: string, w: string[]): string {
  switch (axiom) {
    case 'TRANSITIVE':
      return `you ranked ${w[0]} over ${w[1]} and ${w[1]} over ${w[2]}, but not ${w[0]} over ${w[2]}`;
    case 'ASYMMETRIC':
      return `${w[0]} and ${w[1]} are each ranked over the other`;
    case 'WEAKLY_COMPLETE':
      return `${w[0]} and ${w[1]} are not compared`;
    default:
      return `${axiom} fails for (${w.join(', ')})`;
  }
}
