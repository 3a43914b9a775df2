"""Three-region classification of a disorder set: evaluation status values,
topological ranking, percentile and statistical thresholds, and the H/M/L
split itself."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import BadPercentiles, CycleDetected, ThresholdOrder, ValidationFailure
from .orders import StrictRelation


@dataclass(frozen=True)
class EsvList:
    values: dict[str, float]
    descending: tuple[tuple[str, float], ...]


@dataclass(frozen=True)
class Trisection:
    high: tuple[str, ...]
    medium: tuple[str, ...]
    low: tuple[str, ...]
    h: float
    l: float
    method: str
    mu: float | None = None
    sigma: float | None = None


def esv(rel: StrictRelation) -> EsvList:
    """Evaluation status value: fraction of the universe each disorder
    strictly dominates.  Ties in the descending list break by insertion
    order."""
    ids = rel.universe.ids
    n = len(ids)
    counts = {d: sum(rel.holds(d, x) for x in ids) for d in ids}
    values = {d: float(Fraction(counts[d], n)) for d in ids}
    order = sorted(ids, key=lambda d: (-counts[d], rel.universe.index(d)))
    return EsvList(values=values,
                   descending=tuple((d, values[d]) for d in order))


def topo_rank(rel: StrictRelation) -> tuple[str, ...]:
    """Kahn's algorithm over the strict relation; among simultaneously
    available disorders, insertion order decides."""
    ids = rel.universe.ids
    indeg = {d: 0 for d in ids}
    for _, y in rel.pairs:
        indeg[y] += 1
    out: list[str] = []
    remaining = list(ids)
    while remaining:
        ready = [d for d in remaining if indeg[d] == 0]
        if not ready:
            raise CycleDetected("strict relation contains a cycle",
                                details={"cycle": _find_cycle(rel, remaining)})
        d = ready[0]
        remaining.remove(d)
        out.append(d)
        for x, y in rel.pairs:
            if x == d:
                indeg[y] -= 1
    return tuple(out)


def _find_cycle(rel: StrictRelation, nodes) -> list[str]:
    # walk successors until a node repeats; guaranteed to close a cycle
    # because every remaining node has positive in-degree
    node = nodes[0]
    seen: list[str] = []
    while node not in seen:
        seen.append(node)
        node = next(y for x, y in sorted(rel.pairs) if x == node and y in nodes)
    return seen[seen.index(node):] + [node]


def percentile_thresholds(descending_values, alpha: float, beta: float) -> tuple[float, float]:
    """Thresholds from a descending value list: h from the beta percentile
    position, l from the alpha position, so h >= l always holds.  Indices
    are clamped to the list."""
    if not (0 < beta < alpha < 100):
        raise BadPercentiles(f"need 0 < beta < alpha < 100, got alpha={alpha}, beta={beta}")
    v = list(descending_values)
    n = len(v)
    if n < 1:
        raise BadPercentiles("empty value list")
    hi_idx = min(max(1, math.floor(beta * n / 100)), n)
    lo_idx = min(max(1, math.ceil(alpha * n / 100)), n)
    return v[hi_idx - 1], v[lo_idx - 1]


def statistical_thresholds(weights: dict[str, float], k1: float, k2: float):
    """h = mu + k1*sigma, l = mu - k2*sigma with the population standard
    deviation (divisor n)."""
    if k1 < 0 or k2 < 0:
        raise ValidationFailure("k1 and k2 must be non-negative")
    vals = list(weights.values())
    n = len(vals)
    mu = sum(vals) / n
    sigma = math.sqrt(sum((v - mu) ** 2 for v in vals) / n)
    return mu + k1 * sigma, mu - k2 * sigma, mu, sigma


def trisect(values: dict[str, float], h: float, l: float, method: str = "custom",
            mu: float | None = None, sigma: float | None = None,
            order=None) -> Trisection:
    """Split into H (value >= h), L (value <= l, minus H) and M (the rest).
    H takes precedence at h = l so the regions stay a partition.  Region
    lists are sorted by descending value, then by the given id order."""
    if h < l:
        raise ThresholdOrder(f"h ({h}) must be >= l ({l})")
    ids = list(order) if order is not None else list(values)
    pos = {d: i for i, d in enumerate(ids)}
    ranked = sorted(values, key=lambda d: (-values[d], pos[d]))
    high = tuple(d for d in ranked if values[d] >= h)
    low = tuple(d for d in ranked if values[d] <= l and d not in high)
    medium = tuple(d for d in ranked if d not in high and d not in low)
    return Trisection(high=high, medium=medium, low=low, h=h, l=l,
                      method=method, mu=mu, sigma=sigma)
