"""Read-only HTTP access to one lexicon, plus a feedback drop box.

The service owns no state besides the loaded graph and the append-only
feedback log, so every GET is pure and two identical requests return
identical bytes.  Responses are serialized by the same code paths the
library uses, which keeps the wire format and the in-process API from
drifting apart.

CORS defaults are read-open: any origin may GET, only same-origin may
POST.  A UI served from another port during development needs the
permissive switch.
"""

from __future__ import annotations

import json
import os
import socket
import sys
import threading
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from fastapi import FastAPI, HTTPException, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import Response

from . import ingest
from .chains import ExpansionConfig
from .classify import catalog, catalog_payload
from .entry import Profile, assemble, entry_json
from .model import LexicalGraph, UnknownHead, nfc

FEEDBACK_KINDS = ("error", "lacuna", "suggestion")
MAX_FEEDBACK_BODY = 4096


@dataclass(frozen=True)
class FeedbackReport:
    """One acknowledged reader report."""
    id: int                 # assigned by the server, monotonically increasing
    kind: str               # error | lacuna | suggestion
    body: str
    target: str | None      # SenseId or LexemeId, if the report points somewhere
    received_at: str        # UTC, ISO 8601


class FeedbackLog:
    """Durable append-only feedback store.

    The log file is .sedl-style: one JSON object per line with kind
    "feedback".  Ids continue across restarts; nothing is ever rewritten
    or truncated.  The report's own kind is stored under "category"
    since "kind" names the record type.
    """

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._lock = threading.Lock()
        self._next_id = 1
        for report in self.reports():
            self._next_id = max(self._next_id, report.id + 1)

    def reports(self) -> list[FeedbackReport]:
        if not self.path.exists():
            return []
        out = []
        # split on LF only: report bodies may legally contain U+0085 etc.
        for line in self.path.read_text(encoding="utf-8").split("\n"):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                data = json.loads(line)
            except json.JSONDecodeError:
                continue
            if not isinstance(data, dict) or data.get("kind") != "feedback":
                continue
            if not isinstance(data.get("id"), int):
                continue
            out.append(FeedbackReport(data["id"], data.get("category", ""),
                                      data.get("body", ""), data.get("target"),
                                      data.get("received_at", "")))
        return out

    def append(self, kind: str, body: str, target: str | None = None) -> FeedbackReport:
        with self._lock:
            report = FeedbackReport(
                self._next_id, kind, body, target,
                datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ"))
            record: dict = {"kind": "feedback", "id": report.id, "category": kind}
            if target is not None:
                record["target"] = target
            record["body"] = body
            record["received_at"] = report.received_at
            line = json.dumps(record, ensure_ascii=False, separators=(",", ":"))
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.path, "a", encoding="utf-8", newline="\n") as handle:
                handle.write(line + "\n")
                handle.flush()
                os.fsync(handle.fileno())
            self._next_id += 1
            return report


def _json_bytes(payload) -> Response:
    text = json.dumps(payload, ensure_ascii=False, separators=(",", ":"))
    return Response(content=text.encode("utf-8"), media_type="application/json")


def _int_param(value: str | None, name: str, default: int, minimum: int) -> int:
    if value is None:
        return default
    try:
        parsed = int(value)
    except ValueError:
        raise HTTPException(400, f"{name} must be an integer") from None
    if parsed < minimum:
        raise HTTPException(400, f"{name} must be >= {minimum}")
    return parsed


def create_app(graph: LexicalGraph,
               feedback: FeedbackLog,
               cors_permissive: bool = False) -> FastAPI:
    """Wire one graph and one feedback log into an application."""
    app = FastAPI(title="sedgraph", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET", "POST"] if cors_permissive else ["GET"],
        allow_headers=["*"],
    )

    catalog_bytes = json.dumps(catalog_payload(catalog(graph)),
                               ensure_ascii=False, separators=(",", ":")).encode("utf-8")

    @app.get("/entry")
    def get_entry(head: str | None = None, depth: str | None = None,
                  branch: str | None = None, profile: str | None = None) -> Response:
        if not head:
            raise HTTPException(400, "missing query parameter: head")
        config = ExpansionConfig(
            max_depth=_int_param(depth, "depth", default=4, minimum=0),
            max_branch=_int_param(branch, "branch", default=8, minimum=1))
        try:
            prof = Profile(profile) if profile is not None else Profile.STANDARD
        except ValueError:
            raise HTTPException(400, f"unknown profile: {profile!r}") from None
        try:
            entry = assemble(graph, head, config, prof)
        except UnknownHead:
            raise HTTPException(404, f"unknown head: {head}") from None
        return Response(content=entry_json(entry).encode("utf-8"),
                        media_type="application/json")

    @app.get("/search")
    def search(lang: str | None = None, q: str | None = None,
               limit: str | None = None) -> Response:
        if lang not in graph.langs:
            raise HTTPException(400, f"unknown language: {lang!r}")
        prefix = nfc(q or "")
        if not prefix:
            raise HTTPException(400, "q must be a non-empty prefix")
        cap = _int_param(limit, "limit", default=20, minimum=1)
        hits = []
        index = graph.lemma_index.get(lang, {})
        for lemma in sorted(index):
            if not lemma.startswith(prefix):
                continue
            for lexeme_id in index[lemma]:
                lexeme = graph.lexemes[lexeme_id]
                hits.append({"id": lexeme.id, "lemma": lexeme.lemma,
                             "pos": lexeme.pos})
                if len(hits) >= cap:
                    return _json_bytes(hits)
        return _json_bytes(hits)

    @app.get("/catalog")
    def get_catalog() -> Response:
        return Response(content=catalog_bytes, media_type="application/json")

    @app.get("/health")
    def health() -> Response:
        return _json_bytes({"status": "ok", "lexemes": graph.lexeme_count,
                            "senses": graph.sense_count, "edges": graph.edge_count})

    @app.post("/feedback", status_code=201)
    async def post_feedback(request: Request) -> Response:
        try:
            data = await request.json()
        except Exception:
            raise HTTPException(400, "request body must be a JSON object") from None
        if not isinstance(data, dict):
            raise HTTPException(400, "request body must be a JSON object")
        kind = data.get("kind")
        if kind not in FEEDBACK_KINDS:
            raise HTTPException(400, "kind must be one of: " + ", ".join(FEEDBACK_KINDS))
        body = data.get("body")
        if not isinstance(body, str) or not body:
            raise HTTPException(400, "body must be a non-empty string")
        if len(body) > MAX_FEEDBACK_BODY:
            raise HTTPException(400, f"body exceeds {MAX_FEEDBACK_BODY} characters")
        target = data.get("target")
        if target is not None:
            if not isinstance(target, str):
                raise HTTPException(400, "target must be a sense or lexeme id")
            target = nfc(target)
            if target not in graph.senses and target not in graph.lexemes:
                raise HTTPException(404, f"target does not resolve: {target}")
        report = feedback.append(kind, body, target)
        text = json.dumps({"id": report.id}, separators=(",", ":"))
        return Response(content=text.encode("utf-8"), status_code=201,
                        media_type="application/json")

    return app


def default_feedback_path(lexicon_path: str | Path) -> Path:
    path = Path(lexicon_path)
    return path.with_name(path.stem + ".feedback.sedl")


def run_server(lexicon_path: str | Path | None,
               port: int = 8080,
               bind: str = "127.0.0.1",
               feedback_path: str | Path | None = None,
               cors_permissive: bool = False) -> int:
    """Load a lexicon and serve it.  Returns a process exit code.

    SEDGRAPH_LEXICON overrides the path argument when set.  A lexicon
    that cannot be loaded, or a port already in use, aborts with exit
    code 2 before anything listens.
    """
    lexicon_path = os.environ.get("SEDGRAPH_LEXICON") or lexicon_path
    if not lexicon_path:
        print("no lexicon given (argument or SEDGRAPH_LEXICON)", file=sys.stderr)
        return 2
    try:
        graph, report = ingest.load_lexicon(lexicon_path)
    except (OSError, ingest.FatalFormat) as exc:
        print(f"cannot load lexicon: {exc}", file=sys.stderr)
        return 2
    for issue in report:
        print(f"warning: {issue}", file=sys.stderr)

    try:
        probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
        probe.bind((bind, port))
        probe.close()
    except OSError as exc:
        print(f"cannot bind {bind}:{port}: {exc}", file=sys.stderr)
        return 2

    feedback = FeedbackLog(feedback_path or default_feedback_path(lexicon_path))
    app = create_app(graph, feedback, cors_permissive=cors_permissive)

    import uvicorn
    uvicorn.run(app, host=bind, port=port, log_level="warning")
    return 0
