"""Merge algebra versus a hand-derived rule-table oracle.

The final label of a multiset depends only on which kinds are present, so
the oracle is the full table over all 15 nonempty presence sets, written
out by hand from the merge rules. The implementation must agree with it on
every label multiset of size 1 through 5 (125 distinct multisets).
"""

from itertools import combinations_with_replacement

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ethicskb.errors import EmptyGroupLabels
from ethicskb.observations.model import MappingLabel as L
from ethicskb.pipeline.labels import group_label

# Hand-derived from the merge rules: plus_alpha dominates; a unique/shared
# mix still scores but is the weaker plus_alpha; shared beats out_of_scope
# (it proves a secondary link exists); out_of_scope beats unique (noise
# safety); unique only when alone.
ORACLE = {
    frozenset({L.UNIQUE}): L.UNIQUE,
    frozenset({L.PLUS_ALPHA}): L.PLUS_ALPHA,
    frozenset({L.SHARED}): L.SHARED,
    frozenset({L.OUT_OF_SCOPE}): L.OUT_OF_SCOPE,
    frozenset({L.UNIQUE, L.PLUS_ALPHA}): L.PLUS_ALPHA,
    frozenset({L.UNIQUE, L.SHARED}): L.PLUS_ALPHA,
    frozenset({L.UNIQUE, L.OUT_OF_SCOPE}): L.OUT_OF_SCOPE,
    frozenset({L.PLUS_ALPHA, L.SHARED}): L.PLUS_ALPHA,
    frozenset({L.PLUS_ALPHA, L.OUT_OF_SCOPE}): L.PLUS_ALPHA,
    frozenset({L.SHARED, L.OUT_OF_SCOPE}): L.SHARED,
    frozenset({L.UNIQUE, L.PLUS_ALPHA, L.SHARED}): L.PLUS_ALPHA,
    frozenset({L.UNIQUE, L.PLUS_ALPHA, L.OUT_OF_SCOPE}): L.PLUS_ALPHA,
    frozenset({L.UNIQUE, L.SHARED, L.OUT_OF_SCOPE}): L.PLUS_ALPHA,
    frozenset({L.PLUS_ALPHA, L.SHARED, L.OUT_OF_SCOPE}): L.PLUS_ALPHA,
    frozenset({L.UNIQUE, L.PLUS_ALPHA, L.SHARED, L.OUT_OF_SCOPE}): L.PLUS_ALPHA,
}


def all_multisets(max_size: int):
    for size in range(1, max_size + 1):
        yield from combinations_with_replacement(list(L), size)


def test_exhaustive_agreement_with_oracle():
    multisets = list(all_multisets(5))
    assert len(multisets) == 125
    for multiset in multisets:
        assert group_label(multiset) is ORACLE[frozenset(multiset)], multiset


@pytest.mark.parametrize(
    "labels,expected",
    [
        ([L.SHARED, L.SHARED, L.PLUS_ALPHA], L.PLUS_ALPHA),
        ([L.UNIQUE, L.SHARED], L.PLUS_ALPHA),
        ([L.UNIQUE, L.OUT_OF_SCOPE], L.OUT_OF_SCOPE),
        ([L.UNIQUE], L.UNIQUE),
        ([L.UNIQUE, L.SHARED, L.OUT_OF_SCOPE], L.PLUS_ALPHA),
    ],
)
def test_known_cases(labels, expected):
    assert group_label(labels) is expected


def test_empty_multiset_raises():
    with pytest.raises(EmptyGroupLabels):
        group_label([])


@given(st.lists(st.sampled_from(list(L)), min_size=1, max_size=8))
def test_permutation_invariant(labels):
    assert group_label(labels) is group_label(list(reversed(labels)))
    assert group_label(labels) is group_label(sorted(labels, key=lambda l: l.value))


@given(st.sampled_from(list(L)))
def test_idempotent_on_singletons(label):
    assert group_label([label]) is label
    assert group_label([label, label, label]) is label


def test_whole_multiset_not_a_fold():
    # the pairwise algebra is non-associative; these orders would disagree
    # under a fold but group_label sees the whole multiset
    labels = [L.UNIQUE, L.OUT_OF_SCOPE, L.SHARED]
    assert group_label(labels) is L.PLUS_ALPHA
    assert group_label(reversed(labels)) is L.PLUS_ALPHA
