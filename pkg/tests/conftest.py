"""Shared test setup: strict scope checking on, fixture-path helper."""

from pathlib import Path

import pytest

import bindcat.terms

# The scope invariant checks are off by default (they cost a constant
# factor on every cell allocation); the whole test suite runs with them on.
bindcat.terms.CHECK_SCOPES = True

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures() -> Path:
    return FIXTURES
