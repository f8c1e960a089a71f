"""Loading, validation and serialization of tree documents.

The document format is JSON with top-level fields::

    {
      "name": "...", "version": "...", "root": "<id>",
      "nodes":  [{"id", "question", "branches": [{"answer", "child"}]}],
      "leaves": [{"id", "verdict", "statement", "provenance", "refs": []}]
    }

Verdict strings are lowercase ("permitted", "prohibited", "demanded",
"gray", "recommended"); provenance is "literature" or "standards".

Structurally unreadable input raises ParseError. Input that parses but
breaks a tree invariant raises ValidationError carrying the full list of
violations, each naming the offending id and rule.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from ethicskb.errors import ParseError, ValidationError
from ethicskb.kb.model import (
    Branch,
    DeonticVerdict,
    KbLeaf,
    KbNode,
    KbTree,
    Provenance,
)

# Violation rule names, used by tests and error reporting.
RULE_UNKNOWN_ROOT = "unknown-root"
RULE_DUPLICATE_ID = "duplicate-id"
RULE_DANGLING_CHILD = "dangling-child"
RULE_SHARED_CHILD = "shared-child"
RULE_CYCLE = "cycle"
RULE_UNREACHABLE = "unreachable"
RULE_EMPTY_BRANCHES = "empty-branches"
RULE_DUPLICATE_BRANCH = "duplicate-branch"
RULE_MISSING_QUESTION = "missing-question"
RULE_MISSING_VERDICT = "missing-verdict"
RULE_MISSING_PROVENANCE = "missing-provenance"


@dataclass(frozen=True)
class Violation:
    """One invariant breach: the rule that failed and the offending id."""

    rule: str
    subject: str
    detail: str = ""

    def __str__(self) -> str:
        text = f"{self.rule}({self.subject})"
        return f"{text}: {self.detail}" if self.detail else text


def _require(doc: dict, key: str, kind: type, where: str):
    value = doc.get(key)
    if not isinstance(value, kind):
        raise ParseError(f"{where}: field '{key}' must be {kind.__name__}")
    return value


def tree_from_document(doc: dict) -> KbTree:
    """Build a validated KbTree from a parsed document.

    Raises ParseError for structural problems and ValidationError (with the
    violation list) for invariant breaches.
    """
    if not isinstance(doc, dict):
        raise ParseError("tree document must be a JSON object")

    name = doc.get("name", "")
    version = doc.get("version", "")
    root = doc.get("root")
    if not isinstance(root, str) or not root:
        raise ParseError("tree document: field 'root' must be a non-empty string")

    raw_nodes = _require(doc, "nodes", list, "tree document") if "nodes" in doc else []
    raw_leaves = _require(doc, "leaves", list, "tree document")

    violations: list[Violation] = []
    seen: set[str] = set()
    nodes: dict[str, KbNode] = {}
    leaves: dict[str, KbLeaf] = {}

    for entry in raw_nodes:
        if not isinstance(entry, dict) or not isinstance(entry.get("id"), str):
            raise ParseError("tree document: every node needs a string 'id'")
        node_id = entry["id"]
        if node_id in seen:
            violations.append(
                Violation(RULE_DUPLICATE_ID, node_id, "id used more than once")
            )
            continue
        seen.add(node_id)

        question = entry.get("question")
        if not isinstance(question, str) or not question:
            violations.append(Violation(RULE_MISSING_QUESTION, node_id))
            question = ""

        branches = []
        for raw_branch in entry.get("branches", []):
            if not isinstance(raw_branch, dict):
                raise ParseError(f"node {node_id}: branches must be objects")
            answer = raw_branch.get("answer")
            child = raw_branch.get("child")
            if not isinstance(answer, str) or not isinstance(child, str):
                raise ParseError(
                    f"node {node_id}: every branch needs string 'answer' and 'child'"
                )
            branches.append(Branch(answer=answer, child=child))
        nodes[node_id] = KbNode(id=node_id, question=question, branches=tuple(branches))

    for entry in raw_leaves:
        if not isinstance(entry, dict) or not isinstance(entry.get("id"), str):
            raise ParseError("tree document: every leaf needs a string 'id'")
        leaf_id = entry["id"]
        if leaf_id in seen:
            violations.append(
                Violation(RULE_DUPLICATE_ID, leaf_id, "id used more than once")
            )
            continue
        seen.add(leaf_id)

        verdict = _parse_enum(entry.get("verdict"), DeonticVerdict)
        if verdict is None:
            violations.append(Violation(RULE_MISSING_VERDICT, leaf_id))
        provenance = _parse_enum(entry.get("provenance"), Provenance)
        if provenance is None:
            violations.append(Violation(RULE_MISSING_PROVENANCE, leaf_id))
        refs = entry.get("refs", [])
        if not isinstance(refs, list) or any(not isinstance(r, str) for r in refs):
            raise ParseError(f"leaf {leaf_id}: 'refs' must be a list of strings")
        leaves[leaf_id] = KbLeaf(
            id=leaf_id,
            verdict=verdict,
            statement=entry.get("statement", "") or "",
            provenance=provenance,
            refs=tuple(refs),
        )

    tree = KbTree(name=name, version=version, root=root, nodes=nodes, leaves=leaves)
    violations.extend(_structural_violations(tree))
    if violations:
        raise ValidationError(violations)
    return tree


def _parse_enum(value, enum_cls):
    if isinstance(value, enum_cls):
        return value
    if isinstance(value, str):
        try:
            return enum_cls(value)
        except ValueError:
            return None
    return None


def validate_tree(tree: KbTree) -> list[Violation]:
    """Check every tree invariant; empty list means the tree is valid.

    Total function: never raises, reports all violations it finds.
    """
    violations = []
    for leaf in tree.leaves.values():
        if not isinstance(leaf.verdict, DeonticVerdict):
            violations.append(Violation(RULE_MISSING_VERDICT, leaf.id))
        if not isinstance(leaf.provenance, Provenance):
            violations.append(Violation(RULE_MISSING_PROVENANCE, leaf.id))
    overlap = tree.nodes.keys() & tree.leaves.keys()
    for shared_id in sorted(overlap):
        violations.append(
            Violation(RULE_DUPLICATE_ID, shared_id, "id is both a node and a leaf")
        )
    violations.extend(_structural_violations(tree))
    return violations


def _structural_violations(tree: KbTree) -> list[Violation]:
    """Graph-level checks: root, references, sharing, cycles, reachability."""
    violations: list[Violation] = []
    node_ids = set(tree.nodes)
    all_ids = node_ids | set(tree.leaves)

    if tree.root not in all_ids:
        violations.append(
            Violation(RULE_UNKNOWN_ROOT, tree.root, "root id not defined")
        )

    referenced: dict[str, int] = {}
    for node in tree.nodes.values():
        if not node.branches:
            violations.append(
                Violation(RULE_EMPTY_BRANCHES, node.id, "internal node has no branches")
            )
        answers = [b.answer for b in node.branches]
        for answer in sorted({a for a in answers if answers.count(a) > 1}):
            violations.append(
                Violation(
                    RULE_DUPLICATE_BRANCH,
                    node.id,
                    f"answer {answer!r} used by more than one branch",
                )
            )
        for branch in node.branches:
            if branch.child not in all_ids:
                violations.append(
                    Violation(
                        RULE_DANGLING_CHILD,
                        node.id,
                        f"branch {branch.answer!r} points at unknown id "
                        f"{branch.child!r}",
                    )
                )
            else:
                referenced[branch.child] = referenced.get(branch.child, 0) + 1

    for child_id in sorted(referenced):
        if referenced[child_id] > 1:
            violations.append(
                Violation(
                    RULE_SHARED_CHILD,
                    child_id,
                    f"referenced by {referenced[child_id]} branches",
                )
            )
    if tree.root in referenced:
        violations.append(
            Violation(RULE_SHARED_CHILD, tree.root, "root is a branch target")
        )

    violations.extend(_cycle_violations(tree))

    # Reachability: anything not on a root path is an extra component
    # (equivalently, the document declares more than one root).
    if tree.root in all_ids:
        reachable = {tree.root}
        frontier = [tree.root]
        while frontier:
            current = frontier.pop()
            node = tree.nodes.get(current)
            if node is None:
                continue
            for branch in node.branches:
                if branch.child in all_ids and branch.child not in reachable:
                    reachable.add(branch.child)
                    frontier.append(branch.child)
        for orphan in sorted(all_ids - reachable):
            violations.append(
                Violation(RULE_UNREACHABLE, orphan, "not reachable from the root")
            )
    return violations


def _cycle_violations(tree: KbTree) -> list[Violation]:
    """Detect reference cycles among nodes (leaves cannot participate)."""
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {node_id: WHITE for node_id in tree.nodes}
    offenders: set[str] = set()

    for start in tree.nodes:
        if color[start] != WHITE:
            continue
        stack: list[tuple[str, int]] = [(start, 0)]
        color[start] = GRAY
        while stack:
            current, idx = stack[-1]
            branches = tree.nodes[current].branches
            advanced = False
            for i in range(idx, len(branches)):
                child = branches[i].child
                stack[-1] = (current, i + 1)
                if child not in tree.nodes:
                    continue
                if color[child] == GRAY:
                    offenders.add(child)
                elif color[child] == WHITE:
                    color[child] = GRAY
                    stack.append((child, 0))
                    advanced = True
                    break
            if not advanced and stack and stack[-1][0] == current:
                if stack[-1][1] >= len(branches):
                    color[current] = BLACK
                    stack.pop()
    return [
        Violation(RULE_CYCLE, node_id, "node is part of a reference cycle")
        for node_id in sorted(offenders)
    ]


def tree_to_document(tree: KbTree) -> dict:
    """Serialize a tree back to its document form (load round-trips)."""
    return {
        "name": tree.name,
        "version": tree.version,
        "root": tree.root,
        "nodes": [
            {
                "id": node.id,
                "question": node.question,
                "branches": [
                    {"answer": b.answer, "child": b.child} for b in node.branches
                ],
            }
            for node in tree.nodes.values()
        ],
        "leaves": [
            {
                "id": leaf.id,
                "verdict": leaf.verdict.value,
                "statement": leaf.statement,
                "provenance": leaf.provenance.value,
                "refs": list(leaf.refs),
            }
            for leaf in tree.leaves.values()
        ],
    }


def serialize_tree(tree: KbTree) -> str:
    return json.dumps(tree_to_document(tree), indent=2, ensure_ascii=False) + "\n"


def load_tree(path: str | Path) -> KbTree:
    """Read and validate a tree document from a JSON file."""
    raw = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: not valid JSON ({exc})") from exc
    return tree_from_document(doc)


def save_tree(tree: KbTree, path: str | Path) -> None:
    Path(path).write_text(serialize_tree(tree), encoding="utf-8")
