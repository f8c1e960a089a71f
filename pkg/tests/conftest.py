"""Shared fixtures: repo paths, loaded trees and bundles."""

from pathlib import Path

import pytest

from ethicskb.kb.loader import load_tree
from ethicskb.pipeline.run import load_bundle

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURES = REPO_ROOT / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def kb_dir() -> Path:
    return FIXTURES / "kb"


@pytest.fixture(scope="session")
def census_mini():
    return load_tree(FIXTURES / "kb" / "census-mini.json")


@pytest.fixture(scope="session")
def ethics_tree():
    return load_tree(FIXTURES / "kb" / "ethics-practices.json")


@pytest.fixture(scope="session")
def census_bundle():
    return load_bundle(FIXTURES / "census")


@pytest.fixture(scope="session")
def encore_bundle():
    return load_bundle(FIXTURES / "encore")


@pytest.fixture()
def malformed_dir() -> Path:
    return Path(__file__).resolve().parent / "data" / "kb_malformed"
