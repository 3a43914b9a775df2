"""Session-oriented HTTP/JSON API over the engine and the session store."""

from __future__ import annotations

from fastapi import Body, FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import __version__, formats
from .errors import CsaError, ValidationFailure
from .store import SessionStore
from .trisection import esv, percentile_thresholds, statistical_thresholds, trisect
from .weighting import assign_scale_weights, build_importance_scale, weigh_hierarchy

# HTTP status per error code: 400 validation, 404 missing, 409 conflict,
# 422 unmet method preconditions, 500 storage.
STATUS_BY_CODE = {
    "UNKNOWN_DISORDER": 400,
    "DUPLICATE_PAIR": 400,
    "SELF_PAIR": 400,
    "UNKNOWN_PROPERTY": 400,
    "INVALID_MATRIX": 400,
    "PARTITION_ERROR": 400,
    "UNASSIGNED_DISORDER": 400,
    "UNKNOWN_LEVEL": 400,
    "BAD_PERCENTILES": 400,
    "THRESHOLD_ORDER": 400,
    "VALIDATION_FAILURE": 400,
    "FORMAT_ERROR": 400,
    "INVALID_DISORDER_SET": 400,
    "NOT_FOUND": 404,
    "REVISION_CONFLICT": 409,
    "NOT_LINEAR": 422,
    "NOT_WEAK": 422,
    "NOT_SEMIORDER": 422,
    "INCONSISTENT_MATRIX": 422,
    "CYCLE_DETECTED": 422,
    "NOT_CONVERGED": 422,
    "CORRUPT_DOCUMENT": 500,
    "STORAGE_FAILURE": 500,
    "INTERNAL": 500,
}


def _session_universe(doc):
    return formats.parse_disorders(doc["disorders"])


def _session_judgments(doc):
    return formats.parse_judgments(doc.get("judgments") or [])


def session_weights(doc) -> dict:
    """Shared by GET /sessions/{id}/weights and `csa weigh` (parity)."""
    if not doc.get("hierarchy"):
        raise ValidationFailure("session has no hierarchy")
    h = formats.parse_hierarchy_doc(doc["hierarchy"])
    universe = _session_universe(doc)
    global_w, per_cluster, reports = weigh_hierarchy(h, universe_ids=universe.ids)
    return formats.weights_doc(global_w, per_cluster, reports)


def session_scale_weights(doc) -> dict:
    if not doc.get("scale"):
        raise ValidationFailure("session has no importance scale")
    scale_doc = doc["scale"]
    matrix = formats.parse_matrix_doc(scale_doc["level_matrix"])
    scale = build_importance_scale(scale_doc["levels"], matrix)
    assignment = scale_doc.get("assignment") or {}
    universe = _session_universe(doc)
    raw, normalized = assign_scale_weights(scale, assignment,
                                           universe_ids=universe.ids)
    return {
        "level_weights": {k: formats.sig12(v) for k, v in scale.level_weights.items()},
        "raw": {k: formats.sig12(v) for k, v in raw.items()},
        "normalized": {k: formats.sig12(v) for k, v in normalized.items()},
    }


def session_trisect(doc, params: dict) -> dict:
    """What-if trisection over ESVs, hierarchy weights or scale weights."""
    universe = _session_universe(doc)
    source = params.get("source", "esv")
    if source == "esv":
        from .orders import build_relation
        rel = build_relation(universe, _session_judgments(doc))
        values = esv(rel).values
    elif source == "weights":
        values = session_weights(doc)["global"]
    elif source == "scale":
        values = session_scale_weights(doc)["normalized"]
    else:
        raise ValidationFailure(f"unknown trisection source {source!r}")

    method = params.get("method")
    order = [d for d in universe.ids if d in values]
    if method == "percentile":
        try:
            alpha = float(params["alpha"])
            beta = float(params["beta"])
        except (KeyError, TypeError, ValueError):
            raise ValidationFailure("percentile method needs numeric alpha and beta")
        ranked = sorted(values, key=lambda d: (-values[d], order.index(d)))
        h, l = percentile_thresholds([values[d] for d in ranked], alpha, beta)
        result = trisect(values, h, l, method="percentile", order=order)
    elif method == "statistical":
        try:
            k1 = float(params["k1"])
            k2 = float(params["k2"])
        except (KeyError, TypeError, ValueError):
            raise ValidationFailure("statistical method needs numeric k1 and k2")
        h, l, mu, sigma = statistical_thresholds(values, k1, k2)
        result = trisect(values, h, l, method="statistical", mu=mu, sigma=sigma,
                         order=order)
    else:
        raise ValidationFailure("method must be 'percentile' or 'statistical'")
    doc_out = formats.trisection_doc(result)
    doc_out["source"] = source
    doc_out["values"] = {d: formats.sig12(v) for d, v in values.items()}
    return doc_out


def create_app(data_dir: str | None = None,
               allow_origins: list[str] | None = None) -> FastAPI:
    app = FastAPI(title="csa", version=__version__)
    store = SessionStore(data_dir)
    app.state.store = store

    if allow_origins:
        app.add_middleware(CORSMiddleware, allow_origins=allow_origins,
                           allow_methods=["*"], allow_headers=["*"])

    @app.exception_handler(CsaError)
    async def csa_error_handler(request: Request, exc: CsaError):
        status = STATUS_BY_CODE.get(exc.code, 500)
        return JSONResponse(status_code=status, content={"error": exc.to_doc()})

    @app.get("/healthz")
    def healthz():
        return {"status": "ok", "version": __version__}

    @app.post("/sessions", status_code=201)
    def create_session(payload: dict = Body(...)):
        return store.create_session(payload.get("disorders") or [])

    @app.get("/sessions")
    def list_sessions():
        return store.list_sessions()

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        return store.load_session(session_id)

    @app.put("/sessions/{session_id}/judgments")
    def put_judgments(session_id: str, payload: dict = Body(...)):
        _expect_revision(payload)
        judgments = payload.get("judgments")
        if not isinstance(judgments, list):
            raise ValidationFailure("body needs a judgments list")
        return store.set_judgments(session_id, payload["expected_revision"],
                                   judgments)

    @app.get("/sessions/{session_id}/analysis")
    def get_analysis(session_id: str):
        doc = store.load_session(session_id)
        return formats.analysis_doc(_session_universe(doc), _session_judgments(doc))

    @app.put("/sessions/{session_id}/hierarchy")
    def put_hierarchy(session_id: str, payload: dict = Body(...)):
        _expect_revision(payload)
        if "hierarchy" not in payload:
            raise ValidationFailure("body needs a hierarchy document")
        return store.set_hierarchy(session_id, payload["expected_revision"],
                                   payload["hierarchy"])

    @app.get("/sessions/{session_id}/weights")
    def get_weights(session_id: str):
        return session_weights(store.load_session(session_id))

    @app.put("/sessions/{session_id}/scale")
    def put_scale(session_id: str, payload: dict = Body(...)):
        _expect_revision(payload)
        if "scale" not in payload:
            raise ValidationFailure("body needs a scale document")
        return store.set_scale(session_id, payload["expected_revision"],
                               payload["scale"])

    @app.get("/sessions/{session_id}/scale-weights")
    def get_scale_weights(session_id: str):
        return session_scale_weights(store.load_session(session_id))

    @app.post("/sessions/{session_id}/trisect")
    def post_trisect(session_id: str, payload: dict = Body(...)):
        # what-if semantics: computed from the session, never stored
        return session_trisect(store.load_session(session_id), payload)

    @app.put("/sessions/{session_id}/trisection-params")
    def put_trisection_params(session_id: str, payload: dict = Body(...)):
        _expect_revision(payload)
        return store.set_trisection_params(session_id,
                                           payload["expected_revision"],
                                           payload.get("params"))

    return app


def _expect_revision(payload: dict) -> None:
    if not isinstance(payload.get("expected_revision"), int):
        raise ValidationFailure("body needs an integer expected_revision")
