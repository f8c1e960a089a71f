"""Deontic decision-tree knowledge base: model, loading, querying."""

from ethicskb.kb.model import (
    Branch,
    DeonticVerdict,
    KbLeaf,
    KbNode,
    KbTree,
    PathStatement,
    Provenance,
    resolve_verdict,
)
from ethicskb.kb.loader import (
    Violation,
    load_tree,
    save_tree,
    serialize_tree,
    tree_from_document,
    tree_to_document,
    validate_tree,
)
from ethicskb.kb.engine import (
    enumerate_leaves,
    filter_by_provenance,
    render_path,
)

__all__ = [
    "Branch",
    "DeonticVerdict",
    "KbLeaf",
    "KbNode",
    "KbTree",
    "PathStatement",
    "Provenance",
    "Violation",
    "enumerate_leaves",
    "filter_by_provenance",
    "load_tree",
    "render_path",
    "resolve_verdict",
    "save_tree",
    "serialize_tree",
    "tree_from_document",
    "tree_to_document",
    "validate_tree",
]
