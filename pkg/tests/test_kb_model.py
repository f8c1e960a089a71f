"""Verdict semantics and resolution."""

import pytest

from ethicskb.kb.model import DeonticVerdict, resolve_verdict

SETTLED = (DeonticVerdict.PERMITTED, DeonticVerdict.PROHIBITED, DeonticVerdict.DEMANDED)
PLACEHOLDERS = (DeonticVerdict.GRAY, DeonticVerdict.RECOMMENDED)


def test_exactly_five_kinds():
    assert len(DeonticVerdict) == 5


@pytest.mark.parametrize("verdict", SETTLED)
def test_settled_resolve_to_themselves(verdict):
    assert resolve_verdict(verdict) == {verdict}


def test_gray_resolves_to_permitted_or_prohibited():
    assert resolve_verdict(DeonticVerdict.GRAY) == {
        DeonticVerdict.PERMITTED,
        DeonticVerdict.PROHIBITED,
    }


def test_recommended_resolves_to_permitted_or_demanded():
    assert resolve_verdict(DeonticVerdict.RECOMMENDED) == {
        DeonticVerdict.PERMITTED,
        DeonticVerdict.DEMANDED,
    }


@pytest.mark.parametrize("verdict", DeonticVerdict)
def test_resolution_shape(verdict):
    resolved = resolve_verdict(verdict)
    assert resolved
    if verdict.is_placeholder:
        assert len(resolved) == 2
    else:
        assert len(resolved) == 1
    assert all(v.is_settled for v in resolved)


def test_placeholder_partition():
    assert all(v.is_placeholder for v in PLACEHOLDERS)
    assert all(not v.is_placeholder for v in SETTLED)
