from itertools import product

import pytest
from hypothesis import strategies as st

from genomic_schur.combinatorics import two_row_partitions, valid_degrees
from genomic_schur.tableaux import Tableau


def all_cases(n_max, n_min=2):
    return [(lam, m) for n in range(n_min, n_max + 1)
            for lam in two_row_partitions(n) for m in valid_degrees(lam)]


def brute_force_fillings(shape, m):
    """Every function from the boxes of ``shape`` to ``[1, m]`` as a Tableau."""
    n = sum(shape)
    for word in product(range(1, m + 1), repeat=n):
        rows, k = [], 0
        for length in shape:
            rows.append(word[k:k + length])
            k += length
        yield Tableau(rows)


@st.composite
def two_row_shapes(draw, max_n=10):
    n = draw(st.integers(2, max_n))
    l2 = draw(st.integers(1, n // 2))
    return (n - l2, l2)


_acceptance = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" and item.module.__name__.endswith("test_acceptance"):
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _acceptance.append((rep.outcome, doc))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for outcome, doc in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {doc}")
