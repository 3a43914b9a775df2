"""Strict preference relations over a disorder set: axiom checking, order
classification (linear / weak / semiorder) and ranking induction.

All functions are pure; relations are immutable once built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import (
    DuplicatePair,
    NotLinear,
    NotSemiorder,
    NotWeak,
    SelfPair,
    UnknownDisorder,
    UnknownProperty,
)

# Axiom reports carry at most this many witnesses, in deterministic order.
COUNTEREXAMPLE_CAP = 20


class Verdict(str, Enum):
    PREFERRED = "PREFERRED"
    LESS_PREFERRED = "LESS_PREFERRED"
    INDIFFERENT = "INDIFFERENT"


class Axiom(str, Enum):
    ASYMMETRIC = "ASYMMETRIC"
    TRANSITIVE = "TRANSITIVE"
    WEAKLY_COMPLETE = "WEAKLY_COMPLETE"
    NEGATIVE_TRANSITIVE = "NEGATIVE_TRANSITIVE"
    FERRERS = "FERRERS"
    SEMITRANSITIVE = "SEMITRANSITIVE"


class OrderClass(str, Enum):
    LINEAR = "LINEAR"
    WEAK = "WEAK"
    SEMIORDER = "SEMIORDER"
    UNCLASSIFIED = "UNCLASSIFIED"


LINEAR_AXIOMS = (Axiom.ASYMMETRIC, Axiom.TRANSITIVE, Axiom.WEAKLY_COMPLETE)
WEAK_AXIOMS = (Axiom.ASYMMETRIC, Axiom.NEGATIVE_TRANSITIVE)
SEMIORDER_AXIOMS = (Axiom.ASYMMETRIC, Axiom.FERRERS, Axiom.SEMITRANSITIVE)


@dataclass(frozen=True)
class Disorder:
    id: str
    label: str = ""

    def __post_init__(self):
        if not self.id:
            raise ValueError("disorder id must be non-empty")


@dataclass(frozen=True)
class DisorderSet:
    """Ordered universe of candidate disorders; insertion order is the
    canonical tie-break order everywhere downstream."""

    disorders: tuple[Disorder, ...]

    def __post_init__(self):
        if not self.disorders:
            raise ValueError("disorder set must be non-empty")
        ids = [d.id for d in self.disorders]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate disorder ids")

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(d.id for d in self.disorders)

    def index(self, disorder_id: str) -> int:
        return self.ids.index(disorder_id)

    def __contains__(self, disorder_id: str) -> bool:
        return disorder_id in self.ids

    def __len__(self) -> int:
        return len(self.disorders)


@dataclass(frozen=True)
class PairJudgment:
    first: str
    second: str
    verdict: Verdict


@dataclass(frozen=True)
class StrictRelation:
    """The strict relation ``x > y`` over a universe; irreflexive by
    construction."""

    universe: DisorderSet
    pairs: frozenset[tuple[str, str]]

    def __post_init__(self):
        for x, y in self.pairs:
            if x == y:
                raise SelfPair(f"reflexive pair ({x}, {x})")
            if x not in self.universe or y not in self.universe:
                raise UnknownDisorder(f"pair ({x}, {y}) not in universe")

    def holds(self, x: str, y: str) -> bool:
        return (x, y) in self.pairs


@dataclass(frozen=True)
class IndifferenceRelation:
    pairs: frozenset[frozenset[str]]

    def holds(self, x: str, y: str) -> bool:
        return x == y or frozenset((x, y)) in self.pairs


@dataclass(frozen=True)
class AxiomReport:
    property: Axiom
    holds: bool
    counterexamples: tuple[tuple[str, ...], ...]


class LinkKind(str, Enum):
    STRICT = "STRICT"
    TIE = "TIE"


@dataclass(frozen=True)
class PresentationChain:
    """One displayable chain: elements joined by > or ~ links."""

    elements: tuple[str, ...]
    links: tuple[LinkKind, ...]


@dataclass(frozen=True)
class Ranking:
    kind: str  # CHAIN | RANKED_PARTITION | CHAIN_SET
    chain: tuple[str, ...] = ()
    blocks: tuple[tuple[str, ...], ...] = ()
    chains: tuple[PresentationChain, ...] = ()


def build_relation(universe: DisorderSet, judgments) -> StrictRelation:
    """Turn per-pair verdicts into the strict relation.

    PREFERRED(x, y) yields x > y, LESS_PREFERRED(x, y) yields y > x, and
    INDIFFERENT contributes nothing: indifference is the absence of both
    strict directions, as are unjudged pairs.
    """
    seen: set[frozenset[str]] = set()
    pairs: set[tuple[str, str]] = set()
    for j in judgments:
        if j.first == j.second:
            raise SelfPair(f"judgment compares {j.first} with itself")
        for d in (j.first, j.second):
            if d not in universe:
                raise UnknownDisorder(f"unknown disorder id {d!r}")
        key = frozenset((j.first, j.second))
        if key in seen:
            raise DuplicatePair(f"duplicate judgment for pair {sorted(key)}")
        seen.add(key)
        if j.verdict == Verdict.PREFERRED:
            pairs.add((j.first, j.second))
        elif j.verdict == Verdict.LESS_PREFERRED:
            pairs.add((j.second, j.first))
        # INDIFFERENT: no strict pair either way
    return StrictRelation(universe=universe, pairs=frozenset(pairs))


def judged_pairs(judgments) -> frozenset[frozenset[str]]:
    """Unordered pairs that carry an explicit verdict (display bookkeeping;
    the mathematics only sees the strict relation)."""
    return frozenset(frozenset((j.first, j.second)) for j in judgments)


def derive_indifference(rel: StrictRelation) -> IndifferenceRelation:
    ids = rel.universe.ids
    pairs = set()
    for i, x in enumerate(ids):
        for y in ids[i + 1:]:
            if not rel.holds(x, y) and not rel.holds(y, x):
                pairs.add(frozenset((x, y)))
    return IndifferenceRelation(pairs=frozenset(pairs))


def _witnesses_asymmetric(rel, ids):
    for x in ids:
        for y in ids:
            if rel.holds(x, y) and rel.holds(y, x):
                yield (x, y)


def _witnesses_transitive(rel, ids):
    for x in ids:
        for y in ids:
            for z in ids:
                if rel.holds(x, y) and rel.holds(y, z) and not rel.holds(x, z):
                    yield (x, y, z)


def _witnesses_weakly_complete(rel, ids):
    for i, x in enumerate(ids):
        for y in ids[i + 1:]:
            if not rel.holds(x, y) and not rel.holds(y, x):
                yield (x, y)


def _witnesses_negative_transitive(rel, ids):
    for x in ids:
        for y in ids:
            for z in ids:
                if not rel.holds(x, y) and not rel.holds(y, z) and rel.holds(x, z):
                    yield (x, y, z)


def _witnesses_ferrers(rel, ids):
    for x in ids:
        for xp in ids:
            if not rel.holds(x, xp):
                continue
            for y in ids:
                for yp in ids:
                    if rel.holds(y, yp) and not rel.holds(x, yp) and not rel.holds(y, xp):
                        yield (x, xp, y, yp)


def _witnesses_semitransitive(rel, ids):
    # middle chain x > x' > x'', free y universally quantified
    for x in ids:
        for xp in ids:
            if not rel.holds(x, xp):
                continue
            for xpp in ids:
                if not rel.holds(xp, xpp):
                    continue
                for y in ids:
                    if not rel.holds(x, y) and not rel.holds(y, xpp):
                        yield (x, xp, xpp, y)


_AXIOM_WITNESSES = {
    Axiom.ASYMMETRIC: _witnesses_asymmetric,
    Axiom.TRANSITIVE: _witnesses_transitive,
    Axiom.WEAKLY_COMPLETE: _witnesses_weakly_complete,
    Axiom.NEGATIVE_TRANSITIVE: _witnesses_negative_transitive,
    Axiom.FERRERS: _witnesses_ferrers,
    Axiom.SEMITRANSITIVE: _witnesses_semitransitive,
}


def check_axiom(rel: StrictRelation, prop: Axiom | str) -> AxiomReport:
    """Exhaustively check one axiom; witnesses come back in universe
    insertion order, truncated at COUNTEREXAMPLE_CAP."""
    try:
        prop = Axiom(prop)
    except ValueError:
        raise UnknownProperty(f"unknown axiom {prop!r}")
    ids = rel.universe.ids
    witnesses = []
    for w in _AXIOM_WITNESSES[prop](rel, ids):
        witnesses.append(w)
        if len(witnesses) >= COUNTEREXAMPLE_CAP:
            break
    return AxiomReport(property=prop, holds=not witnesses,
                       counterexamples=tuple(witnesses))


def _all_hold(rel, axioms) -> bool:
    return all(check_axiom(rel, a).holds for a in axioms)


def classify(rel: StrictRelation) -> OrderClass:
    """Most specific class first: LINEAR, then WEAK, then SEMIORDER."""
    if _all_hold(rel, LINEAR_AXIOMS):
        return OrderClass.LINEAR
    if _all_hold(rel, WEAK_AXIOMS):
        return OrderClass.WEAK
    if _all_hold(rel, SEMIORDER_AXIOMS):
        return OrderClass.SEMIORDER
    return OrderClass.UNCLASSIFIED


def axiom_reports(rel: StrictRelation) -> tuple[AxiomReport, ...]:
    return tuple(check_axiom(rel, a) for a in Axiom)


def rank_linear(rel: StrictRelation) -> Ranking:
    """The unique chain of a linear order (out-degrees are all distinct)."""
    if classify(rel) != OrderClass.LINEAR:
        raise NotLinear("relation is not a linear order")
    ids = rel.universe.ids
    chain = sorted(ids, key=lambda d: (-sum(rel.holds(d, x) for x in ids),
                                       rel.universe.index(d)))
    return Ranking(kind="CHAIN", chain=tuple(chain))


def rank_weak(rel: StrictRelation) -> Ranking:
    """Ranked partition of a weak order: blocks are indifference classes
    (comorbidity groups when size >= 2), best block first."""
    if classify(rel) not in (OrderClass.LINEAR, OrderClass.WEAK):
        raise NotWeak("relation is not a weak order")
    ids = rel.universe.ids
    ind = derive_indifference(rel)
    blocks: list[list[str]] = []
    for d in ids:
        for block in blocks:
            if ind.holds(block[0], d):
                block.append(d)
                break
        else:
            blocks.append([d])
    # every member of a block dominates the same elements in a weak order
    blocks.sort(key=lambda b: (-sum(rel.holds(b[0], x) for x in ids),
                               rel.universe.index(b[0])))
    return Ranking(kind="RANKED_PARTITION", blocks=tuple(tuple(b) for b in blocks))


def _chain_links(rel: StrictRelation, ind: IndifferenceRelation,
                 elements: tuple[str, ...]) -> tuple[LinkKind, ...] | None:
    """Links for a candidate chain, or None if the sequence is not a valid
    presentation chain."""
    links: list[LinkKind] = []
    for i in range(len(elements) - 1):
        a, b = elements[i], elements[i + 1]
        if rel.holds(a, b):
            links.append(LinkKind.STRICT)
        elif ind.holds(a, b):
            if links and links[-1] == LinkKind.TIE:
                return None  # no two consecutive ties
            links.append(LinkKind.TIE)
        else:
            return None
    # every non-adjacent forward pair must be strict
    for i in range(len(elements)):
        for j in range(i + 2, len(elements)):
            if not rel.holds(elements[i], elements[j]):
                return None
    return tuple(links)


def enumerate_semiorder_chains(rel: StrictRelation) -> Ranking:
    """All maximal presentation chains of a semiorder.

    A valid chain joins elements with > or ~ links, never two ~ in a row,
    and keeps every non-adjacent pair strictly ordered.  Maximality is by
    element-set inclusion; chains sharing an element set collapse to the
    insertion-order-least sequence.  Results are sorted lexicographically
    by insertion order.
    """
    if not _all_hold(rel, SEMIORDER_AXIOMS):
        raise NotSemiorder("relation does not satisfy the semiorder axioms")
    ids = rel.universe.ids
    idx = {d: i for i, d in enumerate(ids)}
    ind = derive_indifference(rel)

    all_chains: list[tuple[str, ...]] = []

    def extend(seq: list[str], last_tie: bool):
        all_chains.append(tuple(seq))
        for d in ids:
            if d in seq:
                continue
            last = seq[-1]
            if rel.holds(last, d):
                tie = False
            elif ind.holds(last, d) and not last_tie:
                tie = True
            else:
                continue
            # non-adjacent predecessors must strictly dominate d
            if all(rel.holds(e, d) for e in seq[:-1]):
                seq.append(d)
                extend(seq, tie)
                seq.pop()

    for d in ids:
        extend([d], False)

    sets = [frozenset(c) for c in all_chains]
    best: dict[frozenset[str], tuple[str, ...]] = {}
    for c, s in zip(all_chains, sets):
        if any(s < other for other in sets):
            continue  # strictly contained in some valid chain
        key = tuple(idx[e] for e in c)
        if s not in best or key < tuple(idx[e] for e in best[s]):
            best[s] = c
    chains = sorted(best.values(), key=lambda c: tuple(idx[e] for e in c))
    out = []
    for c in chains:
        links = _chain_links(rel, ind, c)
        assert links is not None
        out.append(PresentationChain(elements=c, links=links))
    return Ranking(kind="CHAIN_SET", chains=tuple(out))


def rank(rel: StrictRelation) -> Ranking:
    """Dispatch to the canonical ranking for the relation's class."""
    cls = classify(rel)
    if cls == OrderClass.LINEAR:
        return rank_linear(rel)
    if cls == OrderClass.WEAK:
        return rank_weak(rel)
    if cls == OrderClass.SEMIORDER:
        return enumerate_semiorder_chains(rel)
    raise NotWeak("relation is unclassified; no canonical ranking")
