"""Document exchange formats shared by the CLI, the HTTP API and the
session store.  Parsers validate; serializers produce canonical key order
and 12-significant-digit decimals so identical inputs give byte-identical
output on both surfaces."""

from __future__ import annotations

from .errors import FormatError
from .orders import (
    Disorder,
    DisorderSet,
    OrderClass,
    PairJudgment,
    Ranking,
    StrictRelation,
    Verdict,
    axiom_reports,
    build_relation,
    classify,
    derive_indifference,
    enumerate_semiorder_chains,
    judged_pairs,
    rank_linear,
    rank_weak,
)
from .trisection import Trisection
from .weighting import (
    ComparisonMatrix,
    ConsistencyReport,
    Hierarchy,
    parse_entry,
)


def sig12(x: float) -> float:
    """Round to 12 significant digits (canonical decimal emission)."""
    return float(f"{x:.12g}")


def _require(doc, key, kind, where):
    if not isinstance(doc, dict) or key not in doc:
        raise FormatError(f"{where}: missing key {key!r}")
    value = doc[key]
    if kind is not None and not isinstance(value, kind):
        raise FormatError(f"{where}: key {key!r} has wrong type")
    return value


# --- disorders & relations ---

def parse_disorders(items) -> DisorderSet:
    disorders = []
    for item in items:
        if isinstance(item, str):
            disorders.append(Disorder(id=item))
        elif isinstance(item, dict):
            disorders.append(Disorder(id=_require(item, "id", str, "disorder"),
                                      label=item.get("label", "")))
        else:
            raise FormatError("disorders must be ids or {id, label} objects")
    try:
        return DisorderSet(disorders=tuple(disorders))
    except ValueError as exc:
        raise FormatError(str(exc))


def disorders_doc(universe: DisorderSet) -> list[dict]:
    return [{"id": d.id, "label": d.label} for d in universe.disorders]


def parse_judgments(items) -> list[PairJudgment]:
    out = []
    for item in items:
        verdict = _require(item, "verdict", str, "judgment")
        try:
            verdict = Verdict(verdict)
        except ValueError:
            raise FormatError(f"unknown verdict {verdict!r}")
        out.append(PairJudgment(first=_require(item, "first", str, "judgment"),
                                second=_require(item, "second", str, "judgment"),
                                verdict=verdict))
    return out


def judgments_doc(judgments) -> list[dict]:
    ordered = sorted(judgments, key=lambda j: (j.first, j.second))
    return [{"first": j.first, "second": j.second, "verdict": j.verdict.value}
            for j in ordered]


def parse_relation_doc(doc) -> tuple[DisorderSet, list[PairJudgment]]:
    universe = parse_disorders(_require(doc, "disorders", list, "relation document"))
    judgments = parse_judgments(_require(doc, "judgments", list, "relation document"))
    return universe, judgments


def relation_doc(universe: DisorderSet, judgments) -> dict:
    return {"disorders": disorders_doc(universe),
            "judgments": judgments_doc(judgments)}


def ranking_doc(r: Ranking) -> dict:
    if r.kind == "CHAIN":
        return {"kind": "CHAIN", "chain": list(r.chain)}
    if r.kind == "RANKED_PARTITION":
        return {"kind": "RANKED_PARTITION", "blocks": [list(b) for b in r.blocks]}
    return {"kind": "CHAIN_SET",
            "chains": [{"elements": list(c.elements),
                        "links": [k.value for k in c.links]}
                       for c in r.chains]}


def analysis_doc(universe: DisorderSet, judgments) -> dict:
    """Axiom reports, classification, canonical ranking and unjudged pairs
    for one judgment set."""
    rel = build_relation(universe, judgments)
    reports = axiom_reports(rel)
    cls = classify(rel)
    if cls == OrderClass.LINEAR:
        ranking = ranking_doc(rank_linear(rel))
    elif cls == OrderClass.WEAK:
        ranking = ranking_doc(rank_weak(rel))
    elif cls == OrderClass.SEMIORDER:
        ranking = ranking_doc(enumerate_semiorder_chains(rel))
    else:
        ranking = None
    judged = judged_pairs(judgments)
    ids = universe.ids
    unjudged = []
    for i, x in enumerate(ids):
        for y in ids[i + 1:]:
            if frozenset((x, y)) not in judged:
                unjudged.append([x, y])
    ind = derive_indifference(rel)
    comorbid = sorted(sorted(p) for p in ind.pairs)
    return {
        "classification": cls.value,
        "axioms": [{"property": rep.property.value,
                    "holds": rep.holds,
                    "counterexamples": [list(w) for w in rep.counterexamples]}
                   for rep in reports],
        "ranking": ranking,
        "indifferent_pairs": [list(p) for p in comorbid],
        "unjudged_pairs": unjudged,
    }


# --- matrices & hierarchies ---

def parse_matrix_doc(doc) -> ComparisonMatrix:
    labels = _require(doc, "labels", list, "matrix document")
    rows = _require(doc, "rows", list, "matrix document")
    if len(rows) != len(labels) or any(len(r) != len(labels) for r in rows):
        raise FormatError("matrix rows must be square and match labels")
    try:
        entries = [[parse_entry(v) for v in row] for row in rows]
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise FormatError(f"bad matrix entry: {exc}")
    return ComparisonMatrix(labels=tuple(str(l) for l in labels), entries=entries)


def matrix_doc(m: ComparisonMatrix) -> dict:
    return {"labels": list(m.labels),
            "rows": [[sig12(float(v)) for v in row] for row in m.entries]}


def parse_hierarchy_doc(doc) -> Hierarchy:
    clusters_raw = _require(doc, "clusters", list, "hierarchy document")
    cluster_matrix = parse_matrix_doc(_require(doc, "cluster_matrix", dict,
                                               "hierarchy document"))
    clusters = []
    member_matrices = {}
    for c in clusters_raw:
        cid = _require(c, "id", str, "cluster")
        members = tuple(str(d) for d in _require(c, "members", list, "cluster"))
        clusters.append((cid, members))
        member_matrices[cid] = parse_matrix_doc(_require(c, "matrix", dict, "cluster"))
    return Hierarchy(clusters=tuple(clusters), cluster_matrix=cluster_matrix,
                     member_matrices=member_matrices)


def hierarchy_doc(h: Hierarchy) -> dict:
    return {"clusters": [{"id": cid, "members": list(members),
                          "matrix": matrix_doc(h.member_matrices[cid])}
                         for cid, members in h.clusters],
            "cluster_matrix": matrix_doc(h.cluster_matrix)}


def consistency_doc(rep: ConsistencyReport) -> dict:
    return {"lambda_max": sig12(rep.lambda_max),
            "consistency_index": sig12(rep.consistency_index),
            "random_index": rep.random_index,
            "consistency_ratio": sig12(rep.consistency_ratio),
            "acceptable": rep.acceptable}


def weights_doc(global_weights, per_cluster, reports) -> dict:
    return {"global": {d: sig12(w) for d, w in global_weights.items()},
            "per_cluster": {cid: {d: sig12(w) for d, w in local.items()}
                            for cid, local in per_cluster.items()},
            "consistency": {name: consistency_doc(rep)
                            for name, rep in reports.items()}}


# --- trisection ---

def trisection_doc(t: Trisection) -> dict:
    doc = {"method": t.method, "h": sig12(t.h), "l": sig12(t.l)}
    if t.mu is not None:
        doc["mu"] = sig12(t.mu)
        doc["sigma"] = sig12(t.sigma)
    doc.update({"high": list(t.high), "medium": list(t.medium),
                "low": list(t.low)})
    return doc
