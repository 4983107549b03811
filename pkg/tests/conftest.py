import functools

import pytest

from iwasawa.chevalley import build_chevalley_basis
from iwasawa.presentation import build_presentation
from iwasawa.roots import build_root_system
from iwasawa.straighten import Rewriter


@functools.lru_cache(maxsize=None)
def root_system(t):
    return build_root_system(t)


@functools.lru_cache(maxsize=None)
def chevalley(t):
    return build_chevalley_basis(root_system(t))


@functools.lru_cache(maxsize=None)
def presentation(t, p):
    return build_presentation(t, p)


@functools.lru_cache(maxsize=None)
def rewriter(t, p):
    pres = presentation(t, p)
    return Rewriter(pres.table, pres.primed, p)


@pytest.fixture
def rs():
    return root_system


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
