"""Exact expected DS pass count as a sum over partitions.

A uniform random permutation maps under Robinson-Schensted to a random
partition shape with probability (f_shape)^2 / n!, where f_shape counts the
standard tableaux of that shape.  The DS score of the permutation is the
first-column length of the shape, so its expectation is the weighted sum of
part counts over all partitions of n -- a sum with p(n) terms instead of n!.

All sums here are exact: tableau counts are integers and only one final
division by n! produces a Fraction.  The per-partition tableau count uses a
product formula over the distinct "shifted parts" b_i = part_i + k - i (the
short side of the diagram is chosen first), which agrees with the hook
formula but does O(min(rows, cols)^2) work instead of O(n); the test suite
pins the two against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .errors import SizeLimitExceeded
from .tableaux import _partition_lists, _validate_partition, syt_count

PARTITION_SUM_BOUND = 80

_FACT: list[int] = [1]


def _fact_table(m: int) -> list[int]:
    """Factorials 0!..m! (possibly more), grown copy-on-write for thread safety."""
    global _FACT
    table = _FACT
    if len(table) <= m:
        ext = table[:]
        while len(ext) <= m:
            ext.append(ext[-1] * len(ext))
        _FACT = ext
        table = ext
    return table


def _fact(m: int) -> int:
    return _fact_table(m)[m]


def _tableau_count_fast(parts: Sequence[int], fn: int) -> int:
    """f for one partition of n, with fn = n! supplied by the caller."""
    if not parts:
        return 1
    if len(parts) > parts[0]:
        # transpose: same tableau count, fewer rows
        side: list[int] = []
        prev = 0
        for i in range(len(parts) - 1, -1, -1):
            a = parts[i]
            if a > prev:
                side += [i + 1] * (a - prev)
                prev = a
    else:
        side = list(parts)
    k = len(side)
    beta = [a + k - i for i, a in enumerate(side, 1)]
    num = 1
    i = 0
    for bi in beta:
        i += 1
        for bj in beta[i:]:
            num *= bi - bj
    den = _fact(beta[0])
    for b in beta[1:]:
        den *= _fact(b)
    return fn * num // den


def plancherel_pmf(parts: Sequence[int]) -> Fraction:
    """Probability of the given shape under the Plancherel measure: f^2/n!."""
    parts = _validate_partition(parts)
    n = sum(parts)
    f = syt_count(parts)
    return Fraction(f * f, factorial(n))


@dataclass(frozen=True)
class PlancherelExpectation:
    """Exact expected DS pass count with optional per-partition terms."""

    n: int
    value: Fraction
    terms: tuple[tuple[tuple[int, ...], Fraction], ...] | None = None


def exact_ds_expectation(
    n: int, max_n: int = PARTITION_SUM_BOUND, keep_terms: bool = False
) -> PlancherelExpectation:
    """Expected DS pass count of a uniform random permutation of size n.

    Sums first-column length times (tableau count)^2 over all partitions
    of n and divides by n! once at the end.  Equals the brute-force average
    of the DS score over all n! permutations.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > max_n:
        raise SizeLimitExceeded(f"n={n} above partition-sum bound {max_n}")
    fn = factorial(n)
    acc = 0
    terms = [] if keep_terms else None
    for parts in _partition_lists(n):
        f = _tableau_count_fast(parts, fn)
        contrib = len(parts) * f * f
        acc += contrib
        if terms is not None:
            terms.append((tuple(parts), Fraction(contrib, fn)))
    return PlancherelExpectation(
        n, Fraction(acc, fn), tuple(terms) if terms is not None else None
    )


def plancherel_conjugation_check(n: int, max_n: int = PARTITION_SUM_BOUND) -> bool:
    """Exact check that first row and first column have equal expectation.

    Both sums are accumulated independently (no symmetry shortcut), so this
    really exercises the conjugation invariance of the measure.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > max_n:
        raise SizeLimitExceeded(f"n={n} above partition-sum bound {max_n}")
    fn = factorial(n)
    first_row = 0
    first_col = 0
    for parts in _partition_lists(n):
        f = _tableau_count_fast(parts, fn)
        ff = f * f
        if parts:
            first_row += parts[0] * ff
            first_col += len(parts) * ff
    return first_row == first_col


def syt_square_sum(n: int, max_n: int = PARTITION_SUM_BOUND) -> int:
    """Sum of squared tableau counts over all partitions of n.

    Equals n! exactly (each permutation corresponds to one same-shape
    tableau pair); the acceptance suite asserts this for every n up to 60.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > max_n:
        raise SizeLimitExceeded(f"n={n} above partition-sum bound {max_n}")
    if n == 0:
        return 1
    fact = _fact_table(2 * n)
    fn = fact[n]
    acc = 0
    # inlined partition scan + tableau count: this sweep visits close to a
    # million shapes at n = 60, so per-shape overhead matters
    parts = [n]
    while True:
        if len(parts) > parts[0]:
            side: list[int] = []
            prev = 0
            for i in range(len(parts) - 1, -1, -1):
                a = parts[i]
                if a > prev:
                    side += [i + 1] * (a - prev)
                    prev = a
        else:
            side = parts
        k = len(side)
        beta = [a + k - i for i, a in enumerate(side, 1)]
        num = 1
        i = 0
        for bi in beta:
            i += 1
            for bj in beta[i:]:
                num *= bi - bj
        den = fact[beta[0]]
        for b in beta[1:]:
            den *= fact[b]
        f = fn * num // den
        acc += f * f

        k2 = len(parts) - 1
        while k2 >= 0 and parts[k2] == 1:
            k2 -= 1
        if k2 < 0:
            return acc
        freed = len(parts) - k2
        parts[k2] -= 1
        m = parts[k2]
        del parts[k2 + 1:]
        q, r = divmod(freed, m)
        parts += [m] * q
        if r:
            parts.append(r)


def plancherel_total(n: int, max_n: int = PARTITION_SUM_BOUND) -> Fraction:
    """Exact total Plancherel mass over all partitions of n (should be 1)."""
    return Fraction(syt_square_sum(n, max_n), factorial(n))
