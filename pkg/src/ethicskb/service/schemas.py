"""Pydantic request/response models for the walkthrough API."""

from __future__ import annotations

from pydantic import BaseModel, Field

from ethicskb.kb.engine import render_path
from ethicskb.kb.model import KbTree, resolve_verdict
from ethicskb.service.sessions import Session


class TreeSummary(BaseModel):
    id: str
    name: str
    version: str
    node_count: int
    leaf_count: int


class TreeList(BaseModel):
    trees: list[TreeSummary]


class CreateSessionRequest(BaseModel):
    tree_id: str
    filter: list[str] | None = None


class AnswerRequest(BaseModel):
    branch_index: int


class RecordFindingRequest(BaseModel):
    note: str | None = None


class BranchView(BaseModel):
    index: int
    answer: str


class QuestionView(BaseModel):
    node_id: str
    text: str
    branches: list[BranchView]


class LeafForm(BaseModel):
    leaf_id: str
    verdict: str
    resolved: list[str] = Field(
        description="Settled verdicts the leaf verdict may stand for"
    )
    statement: str
    refs: list[str]


class BreadcrumbEntry(BaseModel):
    question: str
    answer: str


class FindingView(BaseModel):
    leaf_id: str
    verdict: str
    statement: str
    note: str | None = None


class SessionView(BaseModel):
    session_id: str
    tree_id: str
    filter: list[str] | None
    at_leaf: bool
    question: QuestionView | None
    leaf: LeafForm | None
    breadcrumb: list[BreadcrumbEntry]
    findings: list[FindingView]
    can_step_back: bool
    created_at: str
    updated_at: str


def tree_summary(tree_id: str, tree: KbTree) -> TreeSummary:
    return TreeSummary(
        id=tree_id,
        name=tree.name,
        version=tree.version,
        node_count=len(tree.nodes),
        leaf_count=len(tree.leaves),
    )


def _leaf_view(tree: KbTree, leaf_id: str) -> LeafForm:
    leaf = tree.leaves[leaf_id]
    statement = render_path(tree, leaf_id)
    resolved = sorted(v.display_name for v in resolve_verdict(leaf.verdict))
    return LeafForm(
        leaf_id=leaf_id,
        verdict=leaf.verdict.display_name,
        resolved=resolved,
        statement=statement.rendered_text,
        refs=list(leaf.refs),
    )


def session_view(session: Session) -> SessionView:
    tree = session.tree
    question = None
    leaf = None
    if session.at_leaf:
        leaf = _leaf_view(tree, session.cursor)
    else:
        node = tree.nodes[session.cursor]
        question = QuestionView(
            node_id=node.id,
            text=node.question,
            branches=[
                BranchView(index=i, answer=branch.answer)
                for i, branch in enumerate(node.branches)
            ],
        )
    breadcrumb = [
        BreadcrumbEntry(
            question=tree.nodes[node_id].question,
            answer=tree.nodes[node_id].branches[branch_index].answer,
        )
        for node_id, branch_index in session.trail
    ]
    findings = []
    for finding in session.findings:
        view = _leaf_view(tree, finding.leaf_id)
        findings.append(
            FindingView(
                leaf_id=finding.leaf_id,
                verdict=view.verdict,
                statement=view.statement,
                note=finding.note,
            )
        )
    return SessionView(
        session_id=session.id,
        tree_id=session.tree_id,
        filter=session.provenance_filter,
        at_leaf=session.at_leaf,
        question=question,
        leaf=leaf,
        breadcrumb=breadcrumb,
        findings=findings,
        can_step_back=bool(session.trail),
        created_at=session.created_at,
        updated_at=session.updated_at,
    )
