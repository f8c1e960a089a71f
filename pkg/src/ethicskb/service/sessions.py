"""Walkthrough sessions: state machine, event-log persistence, export.

A session walks one (optionally provenance-filtered) tree. Its state is
fully determined by replaying its event log from the root, which is also
how sessions are persisted: one append-only JSONL file per session id
under the data directory, no database. Mutations are serialized per
session id; trees are shared read-only.
"""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable

from ethicskb.errors import (
    AtLeaf,
    AtRoot,
    EmptyResult,
    InvalidBranch,
    NotAtLeaf,
    UnknownSession,
)
from ethicskb.kb.engine import filter_by_provenance, render_path
from ethicskb.kb.model import KbTree
from ethicskb.observations.io import dataset_to_document
from ethicskb.observations.model import Dataset, ObservationItem, SourceSet


@dataclass
class Finding:
    leaf_id: str
    note: str | None = None


@dataclass
class Session:
    """One live walkthrough. ``tree`` is the already-filtered tree."""

    id: str
    tree_id: str
    provenance_filter: list[str] | None
    tree: KbTree
    cursor: str
    trail: list[tuple[str, int]] = field(default_factory=list)
    findings: list[Finding] = field(default_factory=list)
    created_at: str = ""
    updated_at: str = ""

    @property
    def at_leaf(self) -> bool:
        return self.tree.is_leaf(self.cursor)

    def replay_cursor(self) -> str:
        """Recompute the cursor by walking the trail from the root."""
        current = self.tree.root
        for node_id, branch_index in self.trail:
            current = self.tree.nodes[node_id].branches[branch_index].child
        return current


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def answer(session: Session, branch_index: int) -> None:
    if session.at_leaf:
        raise AtLeaf(f"session {session.id}: already at leaf {session.cursor}")
    node = session.tree.nodes[session.cursor]
    if not 0 <= branch_index < len(node.branches):
        raise InvalidBranch(
            f"branch index {branch_index} out of range 0..{len(node.branches) - 1} "
            f"for node {node.id}"
        )
    session.trail.append((node.id, branch_index))
    session.cursor = node.branches[branch_index].child


def step_back(session: Session) -> None:
    if not session.trail:
        raise AtRoot(f"session {session.id}: already at the root")
    session.trail.pop()
    session.cursor = session.replay_cursor()


def record_finding(session: Session, note: str | None = None) -> None:
    """Record the current leaf; findings are deduplicated by leaf id."""
    if not session.at_leaf:
        raise NotAtLeaf(f"session {session.id}: cursor {session.cursor} is a question")
    if any(f.leaf_id == session.cursor for f in session.findings):
        return
    session.findings.append(Finding(leaf_id=session.cursor, note=note))


def export_session(session: Session) -> dict:
    """Export findings as an observation dataset document (source set T)."""
    items = []
    for index, finding in enumerate(session.findings, start=1):
        statement = render_path(session.tree, finding.leaf_id)
        items.append(
            ObservationItem(
                id=f"t-{index:02d}-{finding.leaf_id}",
                source_set=SourceSet.TOOL,
                text=statement.rendered_text,
                kb_leaf_ref=finding.leaf_id,
                note=finding.note,
            )
        )
    dataset = Dataset(
        name=f"walkthrough-{session.id}",
        source_set=SourceSet.TOOL,
        subject_paper=session.tree_id,
        items=items,
    )
    return dataset_to_document(dataset)


class SessionStore:
    """Creates, mutates, replays and persists sessions.

    ``tree_provider`` maps a tree id to its loaded KbTree and raises
    UnknownTree otherwise; the store applies the per-session provenance
    filter on top of it.
    """

    def __init__(self, data_dir: str | Path, tree_provider: Callable[[str], KbTree]):
        self.data_dir = Path(data_dir)
        self.data_dir.mkdir(parents=True, exist_ok=True)
        self._tree_provider = tree_provider
        self._sessions: dict[str, Session] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()

    def _lock_for(self, session_id: str) -> threading.Lock:
        with self._registry_lock:
            return self._locks.setdefault(session_id, threading.Lock())

    def _log_path(self, session_id: str) -> Path:
        return self.data_dir / f"{session_id}.jsonl"

    def _append_event(self, session_id: str, event: dict) -> None:
        event = {"at": _now(), **event}
        with self._log_path(session_id).open("a", encoding="utf-8") as handle:
            handle.write(json.dumps(event, ensure_ascii=False) + "\n")

    def _filtered_tree(self, tree_id: str, provenance_filter: list[str] | None) -> KbTree:
        tree = self._tree_provider(tree_id)
        if provenance_filter is None:
            return tree
        filtered = filter_by_provenance(tree, set(provenance_filter), require_nonempty=False)
        if filtered is None:
            raise EmptyResult(
                f"filter {sorted(provenance_filter)} leaves no reachable leaf "
                f"in tree {tree_id!r}"
            )
        return filtered

    def create(self, tree_id: str, provenance_filter: list[str] | None = None) -> Session:
        tree = self._filtered_tree(tree_id, provenance_filter)
        session_id = uuid.uuid4().hex[:12]
        now = _now()
        session = Session(
            id=session_id,
            tree_id=tree_id,
            provenance_filter=list(provenance_filter) if provenance_filter else None,
            tree=tree,
            cursor=tree.root,
            created_at=now,
            updated_at=now,
        )
        with self._lock_for(session_id):
            self._sessions[session_id] = session
            self._append_event(
                session_id,
                {"event": "created", "tree_id": tree_id, "filter": session.provenance_filter},
            )
        return session

    def get(self, session_id: str) -> Session:
        session = self._sessions.get(session_id)
        if session is not None:
            return session
        return self._load_from_log(session_id)

    def _load_from_log(self, session_id: str) -> Session:
        path = self._log_path(session_id)
        if not path.is_file():
            raise UnknownSession(f"no session {session_id!r}")
        events = [
            json.loads(line)
            for line in path.read_text(encoding="utf-8").splitlines()
            if line.strip()
        ]
        if not events or events[0].get("event") != "created":
            raise UnknownSession(f"session log {session_id!r} is unreadable")

        created = events[0]
        tree = self._filtered_tree(created["tree_id"], created.get("filter"))
        session = Session(
            id=session_id,
            tree_id=created["tree_id"],
            provenance_filter=created.get("filter"),
            tree=tree,
            cursor=tree.root,
            created_at=created.get("at", ""),
            updated_at=created.get("at", ""),
        )
        for event in events[1:]:
            kind = event.get("event")
            if kind == "answered":
                answer(session, event["branch_index"])
            elif kind == "stepped_back":
                step_back(session)
            elif kind == "recorded":
                record_finding(session, event.get("note"))
            session.updated_at = event.get("at", session.updated_at)
        self._sessions[session_id] = session
        return session

    def answer(self, session_id: str, branch_index: int) -> Session:
        with self._lock_for(session_id):
            session = self.get(session_id)
            answer(session, branch_index)
            session.updated_at = _now()
            self._append_event(session_id, {"event": "answered", "branch_index": branch_index})
            return session

    def step_back(self, session_id: str) -> Session:
        with self._lock_for(session_id):
            session = self.get(session_id)
            step_back(session)
            session.updated_at = _now()
            self._append_event(session_id, {"event": "stepped_back"})
            return session

    def record_finding(self, session_id: str, note: str | None = None) -> Session:
        with self._lock_for(session_id):
            session = self.get(session_id)
            record_finding(session, note)
            session.updated_at = _now()
            self._append_event(session_id, {"event": "recorded", "note": note})
            return session


def create_session(
    store: SessionStore, tree_id: str, provenance_filter: list[str] | None = None
) -> Session:
    """Convenience wrapper mirroring the service endpoint."""
    return store.create(tree_id, provenance_filter)
