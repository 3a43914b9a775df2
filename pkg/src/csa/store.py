"""File-backed session store: one JSON document per session, atomic
temp-then-rename writes, optimistic concurrency via a revision counter."""

from __future__ import annotations

import json
import os
import secrets
import tempfile
import threading
from datetime import datetime, timezone
from pathlib import Path

from .errors import (
    CorruptDocument,
    InvalidDisorderSet,
    NotFound,
    RevisionConflict,
    StorageFailure,
    ValidationFailure,
)
from . import formats
from .weighting import validate_matrix

SCHEMA_VERSION = 1
DEFAULT_DATA_DIR = "./data"


def _utcnow() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def _canonical(doc: dict) -> dict:
    """Fixed key order for diff-friendly files."""
    keys = ("schema_version", "id", "created_at", "updated_at", "revision",
            "disorders", "judgments", "hierarchy", "scale",
            "trisection_params", "notes")
    out = {k: doc.get(k) for k in keys}
    out.update({k: v for k, v in doc.items() if k not in keys})
    return out


def validate_session_doc(doc: dict) -> None:
    """Referential and structural checks applied before every commit."""
    universe = formats.parse_disorders(doc["disorders"])
    judgments = formats.parse_judgments(doc.get("judgments") or [])
    # build_relation re-validates ids, self-pairs and duplicates
    from .orders import build_relation
    build_relation(universe, judgments)
    hierarchy = doc.get("hierarchy")
    if hierarchy is not None:
        h = formats.parse_hierarchy_doc(hierarchy)
        for name, m in [("cluster_matrix", h.cluster_matrix),
                        *((cid, mm) for cid, mm in h.member_matrices.items())]:
            report = validate_matrix(m)
            if not report.ok:
                raise ValidationFailure(
                    f"matrix {name!r} is invalid",
                    details={"matrix": name, "errors": list(report.errors)})
        members = [d for _, ms in h.clusters for d in ms]
        unknown = [d for d in members if d not in universe.ids]
        if unknown:
            raise ValidationFailure(f"hierarchy references unknown disorders {unknown}")
    scale = doc.get("scale")
    if scale is not None:
        m = formats.parse_matrix_doc(scale["level_matrix"])
        report = validate_matrix(m)
        if not report.ok:
            raise ValidationFailure("level matrix is invalid",
                                    details={"errors": list(report.errors)})
        for d, level in (scale.get("assignment") or {}).items():
            if d not in universe.ids:
                raise ValidationFailure(f"assignment references unknown disorder {d!r}")
            if level not in scale["levels"]:
                raise ValidationFailure(f"assignment uses unknown level {level!r}")


class SessionStore:
    """Single-writer-per-session: a process-wide lock serializes mutations;
    reads always see the latest committed document."""

    def __init__(self, data_dir: str | Path | None = None):
        if data_dir is None:
            data_dir = os.environ.get("CSA_DATA_DIR", DEFAULT_DATA_DIR)
        self.data_dir = Path(data_dir)
        self.sessions_dir = self.data_dir / "sessions"
        self._lock = threading.Lock()
        try:
            self.sessions_dir.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise StorageFailure(f"cannot create data directory: {exc}")

    def _path(self, session_id: str) -> Path:
        if not session_id or any(c in session_id for c in "/\\."):
            raise NotFound(f"no session {session_id!r}")
        return self.sessions_dir / f"{session_id}.json"

    def _write(self, doc: dict) -> None:
        path = self._path(doc["id"])
        data = json.dumps(_canonical(doc), indent=2, ensure_ascii=False)
        try:
            fd, tmp = tempfile.mkstemp(dir=self.sessions_dir, suffix=".tmp")
            try:
                with os.fdopen(fd, "w", encoding="utf-8") as f:
                    f.write(data)
                os.replace(tmp, path)
            finally:
                if os.path.exists(tmp):
                    os.unlink(tmp)
        except OSError as exc:
            raise StorageFailure(f"cannot persist session: {exc}")

    def create_session(self, disorders: list) -> dict:
        if not disorders:
            raise InvalidDisorderSet("disorder set must be non-empty")
        try:
            formats.parse_disorders(disorders)
        except Exception as exc:
            raise InvalidDisorderSet(str(exc))
        now = _utcnow()
        doc = {
            "schema_version": SCHEMA_VERSION,
            "id": secrets.token_hex(8),
            "created_at": now,
            "updated_at": now,
            "revision": 1,
            "disorders": [d if isinstance(d, dict) else {"id": d, "label": ""}
                          for d in disorders],
            "judgments": [],
            "hierarchy": None,
            "scale": None,
            "trisection_params": None,
            "notes": "",
        }
        validate_session_doc(doc)
        with self._lock:
            self._write(doc)
        return doc

    def load_session(self, session_id: str) -> dict:
        path = self._path(session_id)
        if not path.exists():
            raise NotFound(f"no session {session_id!r}")
        try:
            with open(path, encoding="utf-8") as f:
                return json.load(f)
        except (json.JSONDecodeError, UnicodeDecodeError) as exc:
            raise CorruptDocument(f"cannot parse {path}: {exc}",
                                  details={"path": str(path)})

    def list_sessions(self) -> list[dict]:
        out = []
        for path in sorted(self.sessions_dir.glob("*.json")):
            doc = self.load_session(path.stem)
            out.append({"id": doc["id"],
                        "created_at": doc["created_at"],
                        "updated_at": doc["updated_at"],
                        "disorder_count": len(doc["disorders"]),
                        "revision": doc["revision"]})
        return out

    def update_session(self, session_id: str, expected_revision: int, mutate) -> dict:
        """Apply ``mutate(doc)`` atomically; the previous revision survives
        any failure.  ``mutate`` edits the document in place."""
        with self._lock:
            doc = self.load_session(session_id)
            if doc["revision"] != expected_revision:
                raise RevisionConflict(
                    f"expected revision {expected_revision}, "
                    f"store has {doc['revision']}",
                    details={"expected": expected_revision,
                             "actual": doc["revision"]})
            mutate(doc)
            validate_session_doc(doc)
            doc["revision"] = expected_revision + 1
            doc["updated_at"] = _utcnow()
            self._write(doc)
            return doc

    # convenience mutations used by the API

    def set_judgments(self, session_id, expected_revision, judgments):
        def mutate(doc):
            doc["judgments"] = judgments
        return self.update_session(session_id, expected_revision, mutate)

    def set_hierarchy(self, session_id, expected_revision, hierarchy):
        def mutate(doc):
            doc["hierarchy"] = hierarchy
        return self.update_session(session_id, expected_revision, mutate)

    def set_scale(self, session_id, expected_revision, scale):
        def mutate(doc):
            doc["scale"] = scale
        return self.update_session(session_id, expected_revision, mutate)

    def set_trisection_params(self, session_id, expected_revision, params):
        def mutate(doc):
            doc["trisection_params"] = params
        return self.update_session(session_id, expected_revision, mutate)
