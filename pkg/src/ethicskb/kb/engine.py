"""Query operations over validated trees: paths, rendering, filtering."""

from __future__ import annotations

from ethicskb.errors import EmptyResult, UnknownLeaf
from ethicskb.kb.model import (
    DeonticVerdict,
    KbLeaf,
    KbNode,
    KbTree,
    PathStatement,
    Provenance,
)

# Statement fragments may embed these placeholders; when present, the
# fragment acts as a template and no default verdict suffix is appended.
_PLACEHOLDERS = ("{answers}", "{answer}", "{verdict}")


def _parent_map(tree: KbTree) -> dict[str, tuple[str, int]]:
    """child id -> (parent node id, branch index). Unique in a valid tree."""
    parents: dict[str, tuple[str, int]] = {}
    for node in tree.nodes.values():
        for i, branch in enumerate(node.branches):
            parents[branch.child] = (node.id, i)
    return parents


def _segments_for(
    tree: KbTree, leaf_id: str, parents: dict[str, tuple[str, int]]
) -> tuple[tuple[str, str], ...]:
    segments: list[tuple[str, str]] = []
    current = leaf_id
    while current != tree.root:
        parent_id, branch_index = parents[current]
        node = tree.nodes[parent_id]
        segments.append((node.question, node.branches[branch_index].answer))
        current = parent_id
    segments.reverse()
    return tuple(segments)


def _render_text(answers: list[str], leaf: KbLeaf) -> str:
    if any(token in leaf.statement for token in _PLACEHOLDERS):
        text = leaf.statement
        text = text.replace("{answers}", ", ".join(answers))
        text = text.replace("{answer}", answers[-1] if answers else "")
        text = text.replace("{verdict}", leaf.verdict.display_name)
        return text
    joined = ", ".join(answers)
    core = f"{joined}, {leaf.statement}" if joined else leaf.statement
    return f"{core} — {leaf.verdict.display_name}"


def render_path(tree: KbTree, leaf_id: str) -> PathStatement:
    """Render the unique root-to-leaf path as a single statement."""
    leaf = tree.leaves.get(leaf_id)
    if leaf is None:
        raise UnknownLeaf(f"no leaf {leaf_id!r} in tree {tree.name!r}")
    segments = _segments_for(tree, leaf_id, _parent_map(tree))
    answers = [answer for _, answer in segments]
    return PathStatement(
        leaf_id=leaf_id,
        segments=segments,
        verdict=leaf.verdict,
        rendered_text=_render_text(answers, leaf),
    )


def enumerate_leaves(
    tree: KbTree, verdict_filter: DeonticVerdict | None = None
) -> list[PathStatement]:
    """One PathStatement per (matching) leaf, in document order."""
    parents = _parent_map(tree)
    statements = []
    for leaf in tree.leaves.values():
        if verdict_filter is not None and leaf.verdict is not verdict_filter:
            continue
        segments = _segments_for(tree, leaf.id, parents)
        answers = [answer for _, answer in segments]
        statements.append(
            PathStatement(
                leaf_id=leaf.id,
                segments=segments,
                verdict=leaf.verdict,
                rendered_text=_render_text(answers, leaf),
            )
        )
    return statements


def filter_by_provenance(
    tree: KbTree,
    allowed: set[Provenance | str],
    *,
    require_nonempty: bool = True,
) -> KbTree | None:
    """Keep exactly the leaves whose provenance is in ``allowed``.

    Internal nodes left without surviving descendants are pruned. When no
    leaf survives, raises EmptyResult (or returns None with
    ``require_nonempty=False``).
    """
    allowed_set = {Provenance(p) if isinstance(p, str) else p for p in allowed}
    surviving = {
        leaf_id: leaf
        for leaf_id, leaf in tree.leaves.items()
        if leaf.provenance in allowed_set
    }

    alive: dict[str, bool] = {leaf_id: True for leaf_id in surviving}

    def survives(node_id: str) -> bool:
        if node_id in alive:
            return alive[node_id]
        node = tree.nodes.get(node_id)
        if node is None:  # pruned leaf
            alive[node_id] = False
            return False
        result = any(survives(branch.child) for branch in node.branches)
        alive[node_id] = result
        return result

    if not survives(tree.root):
        if require_nonempty:
            raise EmptyResult(
                f"provenance filter {sorted(p.value for p in allowed_set)} "
                f"removed every leaf of tree {tree.name!r}"
            )
        return None

    nodes: dict[str, KbNode] = {}
    for node_id, node in tree.nodes.items():
        if not survives(node_id):
            continue
        kept = tuple(b for b in node.branches if survives(b.child))
        nodes[node_id] = KbNode(id=node_id, question=node.question, branches=kept)
    leaves = {
        leaf_id: leaf for leaf_id, leaf in tree.leaves.items() if leaf_id in surviving
    }
    return KbTree(
        name=tree.name,
        version=tree.version,
        root=tree.root,
        nodes=nodes,
        leaves=leaves,
    )
