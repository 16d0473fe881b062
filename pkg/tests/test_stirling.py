from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest

from dsort import (
    OutOfTableRange,
    harmonic,
    rds_expectation,
    record_count_pmf,
    stirling_table,
)
from dsort.core import record_indices


def records_of(p):
    return len(record_indices(p))


def test_triangle_against_direct_enumeration():
    # group S_n by record count and compare cell by cell
    table = stirling_table(6)
    for n in range(7):
        counts = [0] * (n + 1)
        for p in permutations(range(1, n + 1)):
            counts[records_of(p)] += 1
        assert table.rows[n] == counts


def test_known_cells():
    table = stirling_table(6)
    assert table.rows[3] == [0, 2, 3, 1]
    assert table.count(4, 1) == 6          # (n-1)! single-record permutations
    assert all(table.count(n, n) == 1 for n in range(7))
    assert all(table.count(n, 0) == 0 for n in range(1, 7))
    assert table.count(0, 0) == 1


def test_row_sums_are_factorials():
    table = stirling_table(200)
    for n in range(201):
        assert sum(table.rows[n]) == factorial(n)


def test_count_range_errors():
    table = stirling_table(5)
    with pytest.raises(OutOfTableRange):
        table.count(6, 1)
    assert table.count(4, 9) == 0


def test_pmf_small_values():
    table = stirling_table(5)
    assert record_count_pmf(2, table)[1:] == [Fraction(1, 2), Fraction(1, 2)]
    assert record_count_pmf(0, table) == [Fraction(1)]


def test_pmf_normalizes_and_mean_is_harmonic():
    table = stirling_table(200)
    for n in (0, 1, 2, 3, 10, 50, 200):
        pmf = record_count_pmf(n, table)
        assert sum(pmf) == 1
        assert sum(r * q for r, q in enumerate(pmf)) == harmonic(n)


def test_pmf_out_of_range():
    with pytest.raises(OutOfTableRange):
        record_count_pmf(11, stirling_table(10))


def test_harmonic_values():
    assert harmonic(0) == 0
    assert harmonic(1) == 1
    assert harmonic(2) == Fraction(3, 2)
    assert harmonic(3) == Fraction(11, 6)


def test_rds_expectation_known_values():
    table = stirling_table(10)
    d = rds_expectation(10, table)
    assert d[0] == 0
    assert d[1] == 1
    assert d[2] == Fraction(3, 2)
    assert d[3] == 2
    # computed by unrolling the recurrence by hand
    assert d[4] == Fraction(39, 16)
    assert d[5] == Fraction(341, 120)


def test_rds_expectation_matches_literal_recurrence():
    table = stirling_table(40)
    d = rds_expectation(40, table)
    for n in range(2, 41):
        fn = factorial(n)
        literal = 1 + sum(
            d[n - r] * Fraction(table.rows[n][r], fn) for r in range(1, n + 1)
        )
        assert d[n] == literal


def test_rds_expectation_monotone_and_bounded():
    table = stirling_table(60)
    d = rds_expectation(60, table)
    for n in range(1, 60):
        assert d[n] < d[n + 1]
        assert 1 <= d[n] <= n
    assert len(d) == 61


def test_rds_expectation_out_of_range():
    with pytest.raises(OutOfTableRange):
        rds_expectation(11, stirling_table(10))
