"""Domain types for deontic decision trees.

A tree is a strict tree (single root, no sharing, no cycles) of question
nodes whose branches eventually terminate in leaves. Every leaf carries one
of five deontic verdicts and a provenance tag saying whether the practice
came from surveying the literature or from an ethics standard.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class DeonticVerdict(Enum):
    """The five leaf verdict kinds.

    Permitted, Prohibited and Demanded are settled verdicts. Gray and
    Recommended are placeholders standing for a lack of consensus; they
    resolve to a pair of settled verdicts (see :func:`resolve_verdict`).
    """

    PERMITTED = "permitted"
    PROHIBITED = "prohibited"
    DEMANDED = "demanded"
    GRAY = "gray"
    RECOMMENDED = "recommended"

    @property
    def is_placeholder(self) -> bool:
        return self in (DeonticVerdict.GRAY, DeonticVerdict.RECOMMENDED)

    @property
    def is_settled(self) -> bool:
        return not self.is_placeholder

    @property
    def display_name(self) -> str:
        return self.value.capitalize()


_RESOLUTION = {
    DeonticVerdict.GRAY: frozenset(
        {DeonticVerdict.PERMITTED, DeonticVerdict.PROHIBITED}
    ),
    DeonticVerdict.RECOMMENDED: frozenset(
        {DeonticVerdict.PERMITTED, DeonticVerdict.DEMANDED}
    ),
}


def resolve_verdict(verdict: DeonticVerdict) -> frozenset[DeonticVerdict]:
    """Resolve a verdict to the set of settled verdicts it may stand for.

    Settled verdicts resolve to themselves; Gray means Permitted or
    Prohibited, Recommended means Permitted or Demanded.
    """
    if verdict in _RESOLUTION:
        return _RESOLUTION[verdict]
    return frozenset({verdict})


class Provenance(Enum):
    """Where a leaf's practice was sourced from.

    A practice supported by both the literature and a standard is tagged
    literature: only leaves derived solely from standards carry standards.
    """

    LITERATURE = "literature"
    STANDARDS = "standards"


@dataclass(frozen=True)
class Branch:
    """One answer option of a question node, pointing at a child id."""

    answer: str
    child: str


@dataclass(frozen=True)
class KbNode:
    """An internal question node with one or more answer branches."""

    id: str
    question: str
    branches: tuple[Branch, ...]


@dataclass(frozen=True)
class KbLeaf:
    """A terminal node: a practice fragment plus its deontic verdict."""

    id: str
    verdict: DeonticVerdict
    statement: str
    provenance: Provenance
    refs: tuple[str, ...] = ()


@dataclass(frozen=True)
class KbTree:
    """A validated decision tree. Immutable after load; safe to share."""

    name: str
    version: str
    root: str
    nodes: dict[str, KbNode] = field(default_factory=dict)
    leaves: dict[str, KbLeaf] = field(default_factory=dict)

    def is_leaf(self, node_id: str) -> bool:
        return node_id in self.leaves

    def leaf_count(self) -> int:
        return len(self.leaves)


@dataclass(frozen=True)
class PathStatement:
    """A root-to-leaf path rendered as one human-readable statement.

    ``segments`` holds (question, chosen answer) pairs in traversal order;
    ``rendered_text`` is deterministic given the tree.
    """

    leaf_id: str
    segments: tuple[tuple[str, str], ...]
    verdict: DeonticVerdict
    rendered_text: str
