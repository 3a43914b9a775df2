// Elicitation state: the latest fetched session snapshot plus staged
// edits. Commits carry expected_revision; a conflict means someone else
// (or another tab) moved the session forward and we prompt a reload.

import { ApiClient, ApiError } from './api';
import { PairwiseWizard } from './wizard';
import type { AnalysisDoc, SessionDoc } from './types';

export class ElicitationState {
  session: SessionDoc | null = null;
  analysis: AnalysisDoc | null = null;
  wizard: PairwiseWizard | null = null;
  conflict = false;

  constructor(private api: ApiClient) {}

  async open(sessionId: string): Promise<void> {
    this.session = await this.api.getSession(sessionId);
    this.analysis = await this.api.getAnalysis(sessionId);
    this.wizard = new PairwiseWizard(this.session);
    this.conflict = false;
  }

  async create(disorders: string[]): Promise<void> {
    this.session = await this.api.createSession(disorders);
    this.analysis = await this.api.getAnalysis(this.session.id);
    this.wizard = new PairwiseWizard(this.session);
    this.conflict = false;
  }

  /** Commit staged judgments, then re-fetch analysis for live feedback. */
  async commitJudgments(): Promise<void> {
    if (!this.session || !this.wizard) {
      throw new Error('no session open');
    }
    const payload = this.wizard.commitPayload();
    try {
      this.session = await this.api.putJudgments(
        this.session.id,
        payload.expected_revision,
        payload.judgments,
      );
    } catch (err) {
      if (err instanceof ApiError && err.code === 'REVISION_CONFLICT') {
        this.conflict = true;
        return;
      }
      throw err;
    }
    this.wizard.refresh(this.session);
    this.analysis = await this.api.getAnalysis(this.session.id);
  }

  async reload(): Promise<void> {
    if (!this.session) return;
    await this.open(this.session.id);
  }
}
