// Wire types mirroring the API documents.

export type Verdict = 'PREFERRED' | 'LESS_PREFERRED' | 'INDIFFERENT';

export interface Disorder {
  id: string;
  label: string;
}

export interface Judgment {
  first: string;
  second: string;
  verdict: Verdict;
}

export interface MatrixDoc {
  labels: string[];
  rows: (number | string)[][];
}

export interface ClusterDoc {
  id: string;
  members: string[];
  matrix: MatrixDoc;
}

export interface HierarchyDoc {
  clusters: ClusterDoc[];
  cluster_matrix: MatrixDoc;
}

export interface SessionDoc {
  schema_version: number;
  id: string;
  created_at: string;
  updated_at: string;
  revision: number;
  disorders: Disorder[];
  judgments: Judgment[];
  hierarchy: HierarchyDoc | null;
  scale: unknown | null;
  trisection_params: unknown | null;
  notes: string;
}

export interface AxiomReport {
  property: string;
  holds: boolean;
  counterexamples: string[][];
}

export interface PresentationChain {
  elements: string[];
  links: ('STRICT' | 'TIE')[];
}

export interface RankingDoc {
  kind: 'CHAIN' | 'RANKED_PARTITION' | 'CHAIN_SET';
  chain?: string[];
  blocks?: string[][];
  chains?: PresentationChain[];
}

export interface AnalysisDoc {
  classification: 'LINEAR' | 'WEAK' | 'SEMIORDER' | 'UNCLASSIFIED';
  axioms: AxiomReport[];
  ranking: RankingDoc | null;
  indifferent_pairs: string[][];
  unjudged_pairs: string[][];
}

export interface ConsistencyDoc {
  lambda_max: number;
  consistency_index: number;
  random_index: number;
  consistency_ratio: number;
  acceptable: boolean;
}

export interface WeightsDoc {
  global: Record<string, number>;
  per_cluster: Record<string, Record<string, number>>;
  consistency: Record<string, ConsistencyDoc>;
}

export interface TrisectionDoc {
  method: string;
  h: number;
  l: number;
  mu?: number;
  sigma?: number;
  high: string[];
  medium: string[];
  low: string[];
  source: string;
  values: Record<string, number>;
}

export interface ApiErrorDoc {
  code: string;
  message: string;
  details: Record<string, unknown>;
}

export type TrisectParams =
  | { method: 'percentile'; source: string; alpha: number; beta: number }
  | { method: 'statistical'; source: string; k1: number; k2: number };
