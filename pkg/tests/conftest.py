import sys

import pytest
from hypothesis import strategies as st

from unionclosure.setcore import SetFamily, full_mask


def family_masks(n):
    full = full_mask(n)
    return st.sets(st.integers(1, full), max_size=min(full, 24)).map(
        lambda s: tuple(sorted(s | {full}))
    )


@st.composite
def families(draw, min_n=1, max_n=5):
    n = draw(st.integers(min_n, max_n))
    return SetFamily(n, draw(family_masks(n)))


@st.composite
def union_closed_families(draw, min_n=1, max_n=6):
    """Random families closed under union by construction."""
    n = draw(st.integers(min_n, max_n))
    full = full_mask(n)
    seeds = draw(st.sets(st.integers(1, full), max_size=6))
    fam = {full} | seeds
    changed = True
    while changed:
        new = {a | b for a in fam for b in fam} - fam
        changed = bool(new)
        fam |= new
    return SetFamily(n, tuple(sorted(fam)))


@pytest.fixture
def chain3():
    return SetFamily(3, (0b001, 0b011, 0b111))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
