import os
import sys
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from pencilstrat import INF, GaussianRational, Partition, PencilStructure, Symbolic  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

_CRITERIA: list[tuple[int, str, bool, str]] = []


@pytest.fixture
def criterion():
    """Record one acceptance criterion outcome; printed in the terminal summary."""
    def record(number: int, title: str, passed: bool, detail: str = "") -> None:
        _CRITERIA.append((number, title, passed, detail))
        print(f"CRITERION {number} {'PASS' if passed else 'FAIL'}: {title} {detail}".rstrip())
    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(_CRITERIA):
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {number}. {title} {detail}".rstrip())


# -- strategies -------------------------------------------------------------------

partitions = st.lists(st.integers(1, 8), max_size=6).map(Partition.from_multiset)

finite_eigs = st.builds(
    GaussianRational,
    st.fractions(min_value=-3, max_value=3, max_denominator=4),
    st.sampled_from([Fraction(0), Fraction(0), Fraction(1), Fraction(-1, 2)]),
)
eigenvalues = st.one_of(finite_eigs, st.just(INF), st.sampled_from([Symbolic("a"), Symbolic("b"), Symbolic("x1")]))


@st.composite
def structures(draw, eig=eigenvalues, max_eigs=3, max_index=3, max_singular=2):
    mus = draw(st.lists(eig, unique=True, max_size=max_eigs))
    segres = [draw(st.lists(st.integers(1, 3), min_size=1, max_size=3).map(Partition.from_multiset)) for _ in mus]
    right = draw(st.lists(st.integers(0, max_index), max_size=max_singular))
    left = draw(st.lists(st.integers(0, max_index), max_size=max_singular))
    reg = sum(s.weight for s in segres)
    cols = reg + sum(e + 1 for e in right) + sum(left)
    rows = reg + sum(right) + sum(e + 1 for e in left)
    return PencilStructure(rows, cols, list(zip(mus, segres)), right, left)


concrete_structures = structures(eig=st.one_of(finite_eigs, st.just(INF)))
