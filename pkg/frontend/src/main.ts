// DOM wiring for the single-page client. The API base URL is the only
// configuration (?api=... or same origin).

import { ApiClient } from './api';
import { ElicitationState } from './state';
import { MatrixEditor, consistencyGauge, worstCells } from './matrixEditor';
import { buildView, defaultSliders, toParams, validateSliders } from './trisection';
import { violationHints } from './wizard';
import type { SliderState } from './trisection';
import type { Verdict } from './types';

const apiBase =
  new URLSearchParams(window.location.search).get('api') ?? window.location.origin;
const api = new ApiClient(apiBase);
const state = new ElicitationState(api);

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  text?: string,
  className?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (text !== undefined) node.textContent = text;
  if (className) node.className = className;
  return node;
}

function renderWizard(root: HTMLElement): void {
  root.replaceChildren();
  if (!state.session || !state.wizard) return;
  if (state.conflict) {
    const banner = el('div', 'Session changed elsewhere.', 'banner conflict');
    const btn = el('button', 'Reload');
    btn.onclick = () => state.reload().then(() => renderAll());
    banner.append(btn);
    root.append(banner);
    return;
  }
  const pending = state.wizard.pendingPairs();
  if (pending.length === 0) {
    root.append(el('p', 'All pairs judged.'));
  } else {
    const { first, second } = pending[0];
    root.append(el('p', `${first} vs ${second} (${pending.length} pairs left)`));
    const verdicts: [Verdict, string][] = [
      ['PREFERRED', `${first} preferred`],
      ['INDIFFERENT', 'comorbid / indifferent'],
      ['LESS_PREFERRED', `${second} preferred`],
    ];
    for (const [verdict, label] of verdicts) {
      const btn = el('button', label);
      btn.onclick = async () => {
        state.wizard!.answer(first, second, verdict);
        await state.commitJudgments();
        renderAll();
      };
      root.append(btn);
    }
  }
  if (state.analysis) {
    root.append(el('h3', `Class: ${state.analysis.classification}`));
    for (const hint of violationHints(state.analysis)) {
      root.append(el('p', hint.text, 'violation'));
    }
    const ranking = state.analysis.ranking;
    if (ranking?.kind === 'CHAIN' && ranking.chain) {
      root.append(el('p', ranking.chain.join(' > '), 'ranking'));
    } else if (ranking?.kind === 'RANKED_PARTITION' && ranking.blocks) {
      root.append(
        el(
          'p',
          ranking.blocks
            .map((b) => (b.length > 1 ? `{${b.join(', ')}}` : b[0]))
            .join(' > '),
          'ranking',
        ),
      );
    } else if (ranking?.kind === 'CHAIN_SET' && ranking.chains) {
      for (const chain of ranking.chains) {
        let text = chain.elements[0];
        chain.links.forEach((link, idx) => {
          text += link === 'STRICT' ? ' > ' : ' ~ ';
          text += chain.elements[idx + 1];
        });
        root.append(el('p', text, 'ranking chain'));
      }
    }
  }
}

async function renderMatrixPanel(root: HTMLElement, editor: MatrixEditor): Promise<void> {
  root.replaceChildren();
  if (!state.session) return;
  const doc = editor.toDoc();
  const hierarchy = {
    clusters: doc.labels.map((label) => ({
      id: label,
      members: [label],
      matrix: { labels: [label], rows: [[1]] },
    })),
    cluster_matrix: doc,
  };
  try {
    const session = await api.putHierarchy(state.session.id, state.session.revision, hierarchy);
    state.session = session;
    const weights = await api.getWeights(session.id);
    const gauge = consistencyGauge(weights.consistency['clusters']);
    const badge = el(
      'span',
      `C.R. ${(gauge.ratio * 100).toFixed(2)}%`,
      `gauge ${gauge.color}`,
    );
    root.append(badge);
    if (gauge.acceptable) {
      for (const [id, w] of Object.entries(weights.global)) {
        root.append(el('p', `${id}: ${w.toFixed(3)}`));
      }
    } else {
      root.append(el('p', 'Weights withheld until C.R. < 10%.', 'violation'));
      for (const cell of worstCells(editor, weights.global)) {
        root.append(
          el(
            'p',
            `check ${editor.labels[cell.i]} vs ${editor.labels[cell.j]}: ` +
              `entered ${cell.entry.toFixed(2)}, weights suggest ${cell.ideal.toFixed(2)}`,
            'coaching',
          ),
        );
      }
    }
  } catch (err) {
    root.append(el('p', String(err), 'error'));
  }
}

function renderTrisection(root: HTMLElement, sliders: SliderState): void {
  root.replaceChildren();
  if (!state.session) return;
  const error = validateSliders(sliders);
  if (error) {
    root.append(el('p', error, 'error'));
    return;
  }
  api
    .trisect(state.session.id, toParams(sliders))
    .then((doc) => {
      const view = buildView(doc);
      root.append(el('p', `h = ${view.h.toFixed(4)}, l = ${view.l.toFixed(4)}`));
      for (const column of view.columns) {
        const box = el('div', undefined, `region region-${column.name}`);
        box.append(el('h4', column.name));
        for (const member of column.members) {
          box.append(el('p', `${member.id} (${member.value.toFixed(3)})`));
        }
        root.append(box);
      }
    })
    .catch((err) => root.append(el('p', String(err), 'error')));
}

function renderAll(): void {
  const wizardRoot = document.getElementById('wizard');
  if (wizardRoot) renderWizard(wizardRoot);
  const triRoot = document.getElementById('trisection');
  if (triRoot) renderTrisection(triRoot, defaultSliders());
}

export { renderAll, renderMatrixPanel, state, api };

document.addEventListener('DOMContentLoaded', () => {
  const form = document.getElementById('new-session') as HTMLFormElement | null;
  form?.addEventListener('submit', async (event) => {
    event.preventDefault();
    const input = form.querySelector('input') as HTMLInputElement;
    const ids = input.value
      .split(',')
      .map((s) => s.trim())
      .filter(Boolean);
    await state.create(ids);
    renderAll();
  });
});
