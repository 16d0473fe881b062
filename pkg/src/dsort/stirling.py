"""Unsigned Stirling numbers of the first kind, the exact record-count
distribution, and the resampling-DS expectation recurrence.

The number of permutations of n elements with exactly r left-to-right
records is the unsigned Stirling number c(n, r), filled by

    c(n, r) = c(n-1, r-1) + (n-1) * c(n-1, r),   c(0, 0) = 1.

Everything downstream stays in exact arithmetic: probabilities and
expectations are Fractions over arbitrary-precision integers, because n!
blows past 64 bits already at n = 21 and float intermediates would hide
recurrence bugs.  Decimal strings are produced only at output time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import OutOfTableRange


@dataclass
class StirlingTable:
    """Triangle of unsigned Stirling numbers c(n, r), 0 <= r <= n <= n_max."""

    n_max: int
    rows: list[list[int]]

    def count(self, n: int, r: int) -> int:
        """c(n, r): permutations of n elements with exactly r records."""
        if not 0 <= n <= self.n_max:
            raise OutOfTableRange(f"n={n} outside table (n_max={self.n_max})")
        if not 0 <= r <= n:
            return 0
        return self.rows[n][r]


def stirling_table(n_max: int) -> StirlingTable:
    """Fill the c(n, r) triangle up to n_max.

    Memory is quadratic in n_max (one big integer per cell); intended for
    n_max up to a few hundred.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    rows = [[1]]
    for n in range(1, n_max + 1):
        prev = rows[n - 1]
        row = [0] * (n + 1)
        for r in range(1, n + 1):
            above = prev[r] if r < n else 0
            row[r] = prev[r - 1] + (n - 1) * above
        rows.append(row)
    return StirlingTable(n_max, rows)


def record_count_pmf(n: int, table: StirlingTable) -> list[Fraction]:
    """Exact distribution of the record count of a random length-n sequence.

    Entry r is c(n, r)/n! for r = 0..n; entry 0 is zero for n >= 1.
    """
    if n > table.n_max or n < 0:
        raise OutOfTableRange(f"n={n} outside table (n_max={table.n_max})")
    fn = factorial(n)
    return [Fraction(table.rows[n][r], fn) for r in range(n + 1)]


def harmonic(n: int) -> Fraction:
    """n-th harmonic number 1 + 1/2 + ... + 1/n, exactly; harmonic(0) = 0.

    This is the expected number of records in a random length-n sequence.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    return sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))


@dataclass
class RdsExpectationTable:
    """Exact expected pass counts d_0..d_n of the resampling DS procedure."""

    values: list[Fraction]

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


def rds_expectation(n: int, table: StirlingTable) -> RdsExpectationTable:
    """Expected RDS pass counts via the exact record-count recurrence.

    Each pass of the resampling variant removes the records of a fresh
    uniform sample, so conditioning on the record count r gives

        d_m = 1 + sum_{r=1}^{m} d_{m-r} * c(m, r)/m!,   d_0 = 0, d_1 = 1,

    evaluated bottom-up in exact rational arithmetic.
    """
    if n > table.n_max or n < 0:
        raise OutOfTableRange(f"n={n} outside table (n_max={table.n_max})")
    d: list[Fraction] = [Fraction(0)]
    if n >= 1:
        d.append(Fraction(1))
    for m in range(2, n + 1):
        fm = factorial(m)
        row = table.rows[m]
        acc = Fraction(0)
        for r in range(1, m + 1):
            acc += d[m - r] * Fraction(row[r], fm)
        d.append(1 + acc)
    return RdsExpectationTable(d)
