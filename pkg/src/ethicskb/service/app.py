"""FastAPI application for the walkthrough service.

Endpoints::

    GET  /trees                      list available trees
    GET  /trees/{tree_id}            full tree document
    POST /sessions                   {tree_id, filter} -> session view
    GET  /sessions/{id}              session view
    POST /sessions/{id}/answer       {branch_index} -> session view
    POST /sessions/{id}/back         -> session view
    POST /sessions/{id}/findings     optional {note} -> session view
    GET  /sessions/{id}/export       observation dataset document

Static UI assets, when a directory is provided, are served at ``/``.
Domain errors surface as JSON ``{"detail": ...}`` with a 4xx status.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from ethicskb.errors import (
    AtLeaf,
    AtRoot,
    EmptyResult,
    EthicsKbError,
    InvalidBranch,
    NotAtLeaf,
    UnknownSession,
    UnknownTree,
)
from ethicskb.kb.loader import load_tree, tree_to_document
from ethicskb.kb.model import KbTree
from ethicskb.service.schemas import (
    AnswerRequest,
    CreateSessionRequest,
    RecordFindingRequest,
    SessionView,
    TreeList,
    session_view,
    tree_summary,
)
from ethicskb.service.sessions import SessionStore, export_session

_ERROR_STATUS = {
    UnknownTree: 404,
    UnknownSession: 404,
    InvalidBranch: 400,
    EmptyResult: 400,
    AtLeaf: 409,
    AtRoot: 409,
    NotAtLeaf: 409,
}


def load_tree_registry(trees_dir: str | Path) -> dict[str, KbTree]:
    """Load every ``*.json`` tree document in a directory, keyed by name."""
    registry: dict[str, KbTree] = {}
    for path in sorted(Path(trees_dir).glob("*.json")):
        tree = load_tree(path)
        tree_id = tree.name or path.stem
        if tree_id in registry:
            raise ValueError(f"duplicate tree id {tree_id!r} in {trees_dir}")
        registry[tree_id] = tree
    return registry


def create_app(
    trees_dir: str | Path,
    data_dir: str | Path,
    ui_dir: str | Path | None = None,
) -> FastAPI:
    registry = load_tree_registry(trees_dir)

    def tree_provider(tree_id: str) -> KbTree:
        tree = registry.get(tree_id)
        if tree is None:
            raise UnknownTree(f"no tree {tree_id!r}")
        return tree

    store = SessionStore(data_dir, tree_provider)
    app = FastAPI(title="ethicskb walkthrough service", version="0.1.0")

    @app.exception_handler(EthicsKbError)
    async def domain_error_handler(request: Request, exc: EthicsKbError):
        status = _ERROR_STATUS.get(type(exc), 422)
        return JSONResponse(status_code=status, content={"detail": str(exc)})

    @app.get("/trees", response_model=TreeList)
    def list_trees() -> TreeList:
        return TreeList(
            trees=[tree_summary(tree_id, tree) for tree_id, tree in registry.items()]
        )

    @app.get("/trees/{tree_id}")
    def get_tree(tree_id: str) -> dict:
        return tree_to_document(tree_provider(tree_id))

    @app.post("/sessions", response_model=SessionView)
    def create_session(request: CreateSessionRequest) -> SessionView:
        session = store.create(request.tree_id, request.filter)
        return session_view(session)

    @app.get("/sessions/{session_id}", response_model=SessionView)
    def get_session(session_id: str) -> SessionView:
        return session_view(store.get(session_id))

    @app.post("/sessions/{session_id}/answer", response_model=SessionView)
    def answer(session_id: str, request: AnswerRequest) -> SessionView:
        return session_view(store.answer(session_id, request.branch_index))

    @app.post("/sessions/{session_id}/back", response_model=SessionView)
    def back(session_id: str) -> SessionView:
        return session_view(store.step_back(session_id))

    @app.post("/sessions/{session_id}/findings", response_model=SessionView)
    def record(
        session_id: str, request: RecordFindingRequest | None = None
    ) -> SessionView:
        note = request.note if request is not None else None
        return session_view(store.record_finding(session_id, note))

    @app.get("/sessions/{session_id}/export")
    def export(session_id: str) -> dict:
        return export_session(store.get(session_id))

    if ui_dir is not None and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
