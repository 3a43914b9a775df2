"""The ``csa`` command line: run each pipeline stage on files, or serve the
HTTP API.  Exit codes: 0 success, 1 validation failure, 2 usage error."""

from __future__ import annotations

import json
import os
import sys

import click

from . import __version__, formats
from .errors import CsaError, FormatError, ValidationFailure
from .orders import OrderClass, build_relation
from .trisection import esv, percentile_thresholds, statistical_thresholds, trisect
from .weighting import (
    ComparisonMatrix,
    Hierarchy,
    assign_scale_weights,
    build_importance_scale,
    weigh_hierarchy,
)


def _load_doc(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as f:
            return json.load(f)
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path} is not valid JSON: {exc}")


def _emit(doc: dict, fmt: str, plain_renderer=None) -> None:
    if fmt == "json" or plain_renderer is None:
        click.echo(json.dumps(doc, indent=2))
    else:
        click.echo(plain_renderer(doc))


def _die(exc: CsaError) -> None:
    click.echo(json.dumps({"error": exc.to_doc()}, indent=2), err=True)
    sys.exit(1)


format_option = click.option("--format", "fmt", type=click.Choice(["json", "plain"]),
                             default="json", show_default=True,
                             help="Output as JSON or human-readable tables.")


@click.group()
@click.version_option(__version__, prog_name="csa")
def main():
    """Decision-support toolkit: rank, weigh and trisect candidate
    disorders from clinician judgments."""


@main.command()
@click.argument("relation_file", type=click.Path(exists=True, dir_okay=False))
@format_option
def validate(relation_file, fmt):
    """Check order axioms and classify a relation file."""
    try:
        universe, judgments = formats.parse_relation_doc(_load_doc(relation_file))
        doc = formats.analysis_doc(universe, judgments)
    except CsaError as exc:
        _die(exc)
    _emit(doc, fmt, _render_analysis)
    if doc["classification"] == OrderClass.UNCLASSIFIED.value:
        sys.exit(1)


@main.command()
@click.argument("relation_file", type=click.Path(exists=True, dir_okay=False))
@format_option
def rank(relation_file, fmt):
    """Rank a relation file: chain, ranked partition or chain set."""
    try:
        universe, judgments = formats.parse_relation_doc(_load_doc(relation_file))
        doc = formats.analysis_doc(universe, judgments)
        if doc["ranking"] is None:
            raise ValidationFailure(
                "relation is not a linear, weak or semi order",
                details={"axioms": doc["axioms"]})
    except CsaError as exc:
        _die(exc)
    out = {"classification": doc["classification"], "ranking": doc["ranking"]}
    _emit(out, fmt, _render_ranking)


@main.command()
@click.argument("hierarchy_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--report", "report_dir", type=click.Path(file_okay=False),
              help="Also write weights.csv and figures to this directory.")
@format_option
def weigh(hierarchy_file, report_dir, fmt):
    """Compute hierarchy weights with consistency reports.

    Accepts a hierarchy document, or a bare comparison-matrix document
    which is treated as a single level (each label its own cluster).
    """
    try:
        doc_in = _load_doc(hierarchy_file)
        h = _as_hierarchy(doc_in)
        global_w, per_cluster, reports = weigh_hierarchy(h)
        doc = formats.weights_doc(global_w, per_cluster, reports)
    except CsaError as exc:
        _die(exc)
    if report_dir:
        from .figures import write_weights_report
        written = write_weights_report(report_dir, global_w, per_cluster)
        doc["report_files"] = [str(p) for p in written]
    _emit(doc, fmt, _render_weights)


def _as_hierarchy(doc: dict) -> Hierarchy:
    if "clusters" in doc:
        return formats.parse_hierarchy_doc(doc)
    # bare matrix: one singleton cluster per label
    m = formats.parse_matrix_doc(doc)
    return Hierarchy(
        clusters=tuple((lab, (lab,)) for lab in m.labels),
        cluster_matrix=m,
        member_matrices={lab: ComparisonMatrix(labels=(lab,), entries=[[1.0]])
                         for lab in m.labels})


@main.command()
@click.argument("scale_file", type=click.Path(exists=True, dir_okay=False))
@format_option
def scale(scale_file, fmt):
    """Importance-scale weights; with an assignment, per-disorder weights."""
    try:
        doc_in = _load_doc(scale_file)
        matrix = formats.parse_matrix_doc(doc_in["level_matrix"])
        sc = build_importance_scale(doc_in["levels"], matrix)
        doc = {"level_weights": {k: formats.sig12(v)
                                 for k, v in sc.level_weights.items()}}
        if doc_in.get("assignment"):
            raw, normalized = assign_scale_weights(sc, doc_in["assignment"])
            doc["raw"] = {k: formats.sig12(v) for k, v in raw.items()}
            doc["normalized"] = {k: formats.sig12(v) for k, v in normalized.items()}
    except (CsaError, KeyError) as exc:
        if isinstance(exc, KeyError):
            exc = FormatError(f"scale document missing key {exc}")
        _die(exc)
    _emit(doc, fmt, _render_scale)


@main.command()
@click.argument("input_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--method", type=click.Choice(["percentile", "statistical"]),
              required=True)
@click.option("--alpha", type=float, help="Upper percentile (percentile method).")
@click.option("--beta", type=float, help="Lower percentile (percentile method).")
@click.option("--k1", type=float, help="High-threshold offset (statistical method).")
@click.option("--k2", type=float, help="Low-threshold offset (statistical method).")
@click.option("--report", "report_dir", type=click.Path(file_okay=False),
              help="Also write trisection.csv and a figure to this directory.")
@format_option
def trisect_cmd(input_file, method, alpha, beta, k1, k2, report_dir, fmt):
    """Split disorders into H/M/L regions.

    INPUT_FILE may be a relation document (values are ESVs), a hierarchy
    or matrix document (values are eigenvector weights), a `weigh` output,
    or a plain {"values": {id: number}} document.
    """
    try:
        values, order = _trisect_values(_load_doc(input_file))
        if method == "percentile":
            if alpha is None or beta is None:
                raise ValidationFailure("percentile method needs --alpha and --beta")
            ranked = sorted(values, key=lambda d: (-values[d], order.index(d)))
            h, l = percentile_thresholds([values[d] for d in ranked], alpha, beta)
            result = trisect(values, h, l, method="percentile", order=order)
        else:
            if k1 is None or k2 is None:
                raise ValidationFailure("statistical method needs --k1 and --k2")
            h, l, mu, sigma = statistical_thresholds(values, k1, k2)
            result = trisect(values, h, l, method="statistical",
                             mu=mu, sigma=sigma, order=order)
        doc = formats.trisection_doc(result)
        doc["values"] = {d: formats.sig12(v) for d, v in values.items()}
    except CsaError as exc:
        _die(exc)
    if report_dir:
        from .figures import write_trisection_report
        written = write_trisection_report(
            report_dir, values, result.h, result.l,
            {"high": list(result.high), "medium": list(result.medium),
             "low": list(result.low)})
        doc["report_files"] = [str(p) for p in written]
    _emit(doc, fmt, _render_trisection)


def _trisect_values(doc: dict):
    """Extract (values, id order) from any supported input document."""
    if "judgments" in doc:
        universe, judgments = formats.parse_relation_doc(doc)
        rel = build_relation(universe, judgments)
        return esv(rel).values, list(universe.ids)
    if "clusters" in doc or ("labels" in doc and "rows" in doc):
        h = _as_hierarchy(doc)
        global_w, _, _ = weigh_hierarchy(h)
        return global_w, list(global_w)
    if "global" in doc:
        values = {d: float(v) for d, v in doc["global"].items()}
        return values, list(values)
    if "values" in doc:
        values = {d: float(v) for d, v in doc["values"].items()}
        return values, list(values)
    raise FormatError("input is not a relation, hierarchy, matrix, "
                      "weights or values document")


@main.command()
@click.option("--port", type=int, default=None, help="Port (default 8080).")
@click.option("--data-dir", type=click.Path(file_okay=False), default=None,
              help="Session data directory (default ./data).")
@click.option("--allow-origin", multiple=True,
              help="Origin allowed for cross-origin requests (repeatable).")
def serve(port, data_dir, allow_origin):
    """Run the HTTP API."""
    import uvicorn

    from .api import create_app

    if port is None:
        port = int(os.environ.get("CSA_PORT", "8080"))
    app = create_app(data_dir=data_dir, allow_origins=list(allow_origin) or None)
    uvicorn.run(app, host="127.0.0.1", port=port)


main.add_command(trisect_cmd, name="trisect")


# --- plain renderers ---

def _render_analysis(doc: dict) -> str:
    lines = [f"classification: {doc['classification']}", "", "axioms:"]
    for rep in doc["axioms"]:
        mark = "ok " if rep["holds"] else "FAIL"
        lines.append(f"  [{mark}] {rep['property']}")
        for w in rep["counterexamples"]:
            lines.append(f"         witness: {', '.join(w)}")
    if doc["ranking"] is not None:
        lines += ["", _render_ranking(doc)]
    if doc["unjudged_pairs"]:
        pairs = ", ".join(f"{a}?{b}" for a, b in doc["unjudged_pairs"])
        lines += ["", f"unjudged pairs: {pairs}"]
    return "\n".join(lines)


def _render_ranking(doc: dict) -> str:
    r = doc["ranking"]
    if r["kind"] == "CHAIN":
        return "ranking: " + " > ".join(r["chain"])
    if r["kind"] == "RANKED_PARTITION":
        return "ranking: " + " > ".join(
            "{" + ", ".join(b) + "}" if len(b) > 1 else b[0]
            for b in r["blocks"])
    lines = ["ranking (chain set):"]
    for c in r["chains"]:
        parts = [c["elements"][0]]
        for el, link in zip(c["elements"][1:], c["links"]):
            parts.append(" > " if link == "STRICT" else " ~ ")
            parts.append(el)
        lines.append("  " + "".join(parts))
    return "\n".join(lines)


def _render_weights(doc: dict) -> str:
    lines = ["global weights:"]
    for d, w in sorted(doc["global"].items(), key=lambda kv: -kv[1]):
        lines.append(f"  {d:<12} {w:.4f}")
    lines.append("")
    lines.append("consistency:")
    for name, rep in doc["consistency"].items():
        status = "ok" if rep["acceptable"] else "INCONSISTENT"
        lines.append(f"  {name:<12} lambda_max={rep['lambda_max']:.3f}  "
                     f"C.R.={rep['consistency_ratio']:.3%}  {status}")
    return "\n".join(lines)


def _render_scale(doc: dict) -> str:
    lines = ["level weights:"]
    for level, w in doc["level_weights"].items():
        lines.append(f"  {level:<12} {w:.4f}")
    if "normalized" in doc:
        lines += ["", "disorder weights (raw / normalized):"]
        for d in doc["raw"]:
            lines.append(f"  {d:<12} {doc['raw'][d]:.4f} / {doc['normalized'][d]:.4f}")
    return "\n".join(lines)


def _render_trisection(doc: dict) -> str:
    lines = [f"method: {doc['method']}   h={doc['h']:.4f}  l={doc['l']:.4f}"]
    if "mu" in doc:
        lines.append(f"mu={doc['mu']:.4f}  sigma={doc['sigma']:.4f}")
    for region in ("high", "medium", "low"):
        members = ", ".join(doc[region]) or "(empty)"
        lines.append(f"{region.upper():<6} {members}")
    return "\n".join(lines)


if __name__ == "__main__":
    main()
