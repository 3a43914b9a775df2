"""Pairwise-comparison weighting: principal eigenvector of positive
reciprocal matrices, consistency ratio, three-level hierarchy composition
and importance-scale weighting."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    InconsistentMatrix,
    InvalidMatrix,
    NotConverged,
    PartitionError,
    UnassignedDisorder,
    UnknownLevel,
)

MAX_ORDER = 9
RECIPROCITY_RTOL = 1e-9
CONSISTENCY_LIMIT = 0.10
POWER_TOL = 1e-10
POWER_MAX_ITER = 10_000

# Average random consistency index by matrix order (1..10).
RANDOM_INDEX = (0.0, 0.0, 0.52, 0.89, 1.11, 1.25, 1.35, 1.40, 1.45, 1.49)

# Admissible judgment values: integers 1..9 and their reciprocals.
SAATY_SCALE = tuple(float(k) for k in range(1, 10)) + tuple(
    1.0 / k for k in range(2, 10)
)


@dataclass(frozen=True)
class ComparisonMatrix:
    labels: tuple[str, ...]
    entries: np.ndarray  # shape (n, n), float64

    def __post_init__(self):
        object.__setattr__(self, "entries",
                           np.asarray(self.entries, dtype=float))
        if self.entries.shape != (len(self.labels), len(self.labels)):
            raise InvalidMatrix("entries shape does not match labels")

    @property
    def n(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class MatrixValidation:
    errors: tuple[dict, ...]
    warnings: tuple[dict, ...]

    @property
    def ok(self) -> bool:
        return not self.errors


@dataclass(frozen=True)
class EigenResult:
    weights: dict[str, float]
    lambda_max: float
    iterations: int
    converged: bool


@dataclass(frozen=True)
class ConsistencyReport:
    lambda_max: float
    consistency_index: float
    random_index: float
    consistency_ratio: float
    acceptable: bool


@dataclass(frozen=True)
class Hierarchy:
    """Three levels: root -> clusters -> disorders."""

    clusters: tuple[tuple[str, tuple[str, ...]], ...]  # (cluster id, member ids)
    cluster_matrix: ComparisonMatrix
    member_matrices: dict[str, ComparisonMatrix]


@dataclass(frozen=True)
class ImportanceScale:
    levels: tuple[str, ...]
    level_matrix: ComparisonMatrix
    level_weights: dict[str, float]


def validate_matrix(m: ComparisonMatrix) -> MatrixValidation:
    """Report every violated invariant; off-Saaty-scale entries are
    warnings only, the computation accepts any positive reciprocal matrix."""
    errors: list[dict] = []
    warnings: list[dict] = []
    n = m.n
    if len(set(m.labels)) != n:
        errors.append({"kind": "duplicate_labels"})
    if n < 1 or n > MAX_ORDER:
        errors.append({"kind": "order_bound", "n": n, "max": MAX_ORDER})
    a = m.entries
    for i in range(n):
        for j in range(n):
            v = a[i, j]
            if not np.isfinite(v) or v <= 0:
                errors.append({"kind": "nonpositive", "cell": [i, j], "value": float(v)})
    if errors and any(e["kind"] == "nonpositive" for e in errors):
        return MatrixValidation(tuple(errors), tuple(warnings))
    for i in range(n):
        if a[i, i] != 1.0:
            errors.append({"kind": "diagonal", "cell": [i, i], "value": float(a[i, i])})
    for i in range(n):
        for j in range(i + 1, n):
            prod = a[i, j] * a[j, i]
            if abs(prod - 1.0) > RECIPROCITY_RTOL:
                errors.append({"kind": "reciprocity", "cell": [j, i],
                               "value": float(a[j, i]),
                               "expected": float(1.0 / a[i, j])})
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            v = a[i, j]
            if not any(abs(v - s) <= 1e-9 * max(1.0, s) for s in SAATY_SCALE):
                warnings.append({"kind": "off_scale", "cell": [i, j], "value": float(v)})
    return MatrixValidation(tuple(errors), tuple(warnings))


def principal_eigen(m: ComparisonMatrix, tol: float = POWER_TOL,
                    max_iter: int = POWER_MAX_ITER) -> EigenResult:
    """Power iteration from the uniform vector; weights normalized to sum 1,
    lambda_max as the mean Rayleigh-style quotient (Mw)_i / w_i."""
    report = validate_matrix(m)
    if not report.ok:
        raise InvalidMatrix("matrix fails validation",
                            details={"errors": list(report.errors)})
    a = m.entries
    n = m.n
    w = np.full(n, 1.0 / n)
    converged = False
    iterations = 0
    for iterations in range(1, max_iter + 1):
        nxt = a @ w
        nxt /= nxt.sum()
        if np.max(np.abs(nxt - w)) < tol:
            w = nxt
            converged = True
            break
        w = nxt
    lambda_max = float(np.mean((a @ w) / w))
    residual = float(np.max(np.abs(a @ w - lambda_max * w)))
    if not converged or residual >= 1e-8:
        raise NotConverged(
            f"power iteration did not converge in {max_iter} iterations",
            details={"residual": residual})
    weights = {lab: float(w[i]) for i, lab in enumerate(m.labels)}
    return EigenResult(weights=weights, lambda_max=lambda_max,
                       iterations=iterations, converged=converged)


def consistency(m: ComparisonMatrix, e: EigenResult) -> ConsistencyReport:
    """Consistency ratio (lambda_max - n) / ((n - 1) * R.I.); matrices of
    order <= 2 are perfectly consistent by construction."""
    n = m.n
    ri = RANDOM_INDEX[n - 1] if n <= len(RANDOM_INDEX) else RANDOM_INDEX[-1]
    if n <= 2:
        ci = 0.0
        ratio = 0.0
    else:
        ci = (e.lambda_max - n) / (n - 1)
        ratio = (e.lambda_max - n) / ((n - 1) * ri)
    return ConsistencyReport(lambda_max=e.lambda_max, consistency_index=ci,
                             random_index=ri, consistency_ratio=ratio,
                             acceptable=ratio < CONSISTENCY_LIMIT)


def solve_matrix(m: ComparisonMatrix) -> tuple[EigenResult, ConsistencyReport]:
    e = principal_eigen(m)
    return e, consistency(m, e)


def _require_consistent(name: str, m: ComparisonMatrix) -> tuple[EigenResult, ConsistencyReport]:
    e, rep = solve_matrix(m)
    if not rep.acceptable:
        raise InconsistentMatrix(
            f"matrix {name!r} has C.R. {rep.consistency_ratio:.3%} >= 10%",
            details={"matrix": name,
                     "consistency_ratio": rep.consistency_ratio,
                     "lambda_max": rep.lambda_max})
    return e, rep


def weigh_hierarchy(h: Hierarchy, universe_ids=None):
    """Top-down composition: global weight of a disorder is its cluster's
    weight times its local weight within the cluster.

    Returns (global weights, per-cluster local weights, consistency reports
    keyed by matrix name).
    """
    cluster_ids = tuple(cid for cid, _ in h.clusters)
    if tuple(h.cluster_matrix.labels) != cluster_ids:
        raise PartitionError("cluster matrix labels do not match cluster ids")
    members_all: list[str] = []
    for cid, members in h.clusters:
        if cid not in h.member_matrices:
            raise PartitionError(f"no member matrix for cluster {cid!r}")
        if tuple(h.member_matrices[cid].labels) != tuple(members):
            raise PartitionError(f"member matrix labels mismatch in cluster {cid!r}")
        members_all.extend(members)
    if len(set(members_all)) != len(members_all):
        raise PartitionError("clusters overlap: a disorder appears twice")
    if universe_ids is not None and set(members_all) != set(universe_ids):
        raise PartitionError("clusters do not partition the disorder set")
    if len(h.clusters) > MAX_ORDER:
        raise PartitionError(f"more than {MAX_ORDER} clusters")

    reports: dict[str, ConsistencyReport] = {}
    top, reports["clusters"] = _require_consistent("clusters", h.cluster_matrix)
    per_cluster: dict[str, dict[str, float]] = {}
    global_weights: dict[str, float] = {}
    for cid, members in h.clusters:
        local, reports[cid] = _require_consistent(cid, h.member_matrices[cid])
        per_cluster[cid] = local.weights
        for d in members:
            global_weights[d] = top.weights[cid] * local.weights[d]
    return global_weights, per_cluster, reports


def build_importance_scale(levels, level_matrix: ComparisonMatrix) -> ImportanceScale:
    levels = tuple(levels)
    if not 2 <= len(levels) <= MAX_ORDER:
        raise InvalidMatrix(f"importance scale needs 2..{MAX_ORDER} levels")
    if tuple(level_matrix.labels) != levels:
        raise InvalidMatrix("level matrix labels do not match levels")
    e, _ = _require_consistent("levels", level_matrix)
    return ImportanceScale(levels=levels, level_matrix=level_matrix,
                           level_weights=e.weights)


def assign_scale_weights(scale: ImportanceScale, assignment: dict[str, str],
                         universe_ids=None):
    """Map each disorder to its assigned level's weight.

    Returns (raw, normalized): raw is the level weight as-is, normalized
    divides by the sum so the result is a weight vector.
    """
    if universe_ids is not None:
        missing = [d for d in universe_ids if d not in assignment]
        if missing:
            raise UnassignedDisorder(f"disorders without a level: {missing}")
    raw: dict[str, float] = {}
    for d, level in assignment.items():
        if level not in scale.level_weights:
            raise UnknownLevel(f"unknown intensity level {level!r}")
        raw[d] = scale.level_weights[level]
    if not raw:
        raise UnassignedDisorder("no disorders assigned")
    total = sum(raw.values())
    normalized = {d: v / total for d, v in raw.items()}
    return raw, normalized


def parse_entry(value) -> float:
    """Accept a number or an exact fraction string like '1/7'."""
    if isinstance(value, str):
        return float(Fraction(value))
    return float(value)
