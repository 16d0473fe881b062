"""Integer partitions, hook lengths, standard Young tableaux, and
Robinson-Schensted insertion.

Partitions are plain tuples of weakly decreasing positive parts.  The
first-column length of a partition (its number of parts) is the quantity
the DS score maps onto under Robinson-Schensted, which is why this module
doubles as the independent oracle for the fast LDS computation.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from math import factorial, prod
from typing import Iterator, Sequence

from .errors import BoxOutsideShape, NotAPermutation, SizeLimitExceeded

SYT_ENUMERATION_BOUND = 12


def _validate_partition(parts: Sequence[int]) -> tuple[int, ...]:
    parts = tuple(parts)
    for i, a in enumerate(parts):
        if a < 1:
            raise ValueError(f"parts must be positive, got {a}")
        if i and parts[i - 1] < a:
            raise ValueError(f"parts must be weakly decreasing, got {parts}")
    return parts


def partitions(n: int) -> Iterator[tuple[int, ...]]:
    """All partitions of n, each exactly once, in reverse-lexicographic order.

    >>> list(partitions(4))
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    for parts in _partition_lists(n):
        yield tuple(parts)


def _partition_lists(n: int) -> Iterator[list[int]]:
    """Reverse-lex partition scan yielding a reused work list (do not keep)."""
    if n == 0:
        yield []
        return
    parts = [n]
    while True:
        yield parts
        # decrement the rightmost part > 1, then re-pack the freed units
        # greedily under the new value to stay in reverse-lex order
        k = len(parts) - 1
        while k >= 0 and parts[k] == 1:
            k -= 1
        if k < 0:
            return
        freed = len(parts) - k - 1 + 1
        parts[k] -= 1
        m = parts[k]
        del parts[k + 1:]
        q, r = divmod(freed, m)
        parts += [m] * q
        if r:
            parts.append(r)


def conjugate(parts: Sequence[int]) -> tuple[int, ...]:
    """Transpose of the partition diagram (column lengths).

    >>> conjugate((3, 1))
    (2, 1, 1)
    """
    parts = _validate_partition(parts)
    out: list[int] = []
    prev = 0
    # scan parts from smallest up; column j is as tall as the number of
    # parts of size >= j, which the running index i+1 provides directly
    for i in range(len(parts) - 1, -1, -1):
        a = parts[i]
        if a > prev:
            out += [i + 1] * (a - prev)
            prev = a
    return tuple(out)


def hook_length(parts: Sequence[int], row: int, col: int) -> int:
    """Hook length of the box at (row, col), both 1-based: arm + leg + 1."""
    parts = _validate_partition(parts)
    if not (1 <= row <= len(parts) and 1 <= col <= parts[row - 1]):
        raise BoxOutsideShape(f"box ({row}, {col}) outside shape {parts}")
    arm = parts[row - 1] - col
    leg = sum(1 for a in parts[row:] if a >= col)
    return arm + leg + 1


def syt_count(parts: Sequence[int]) -> int:
    """Number of standard Young tableaux of the given shape.

    Computed as n! divided by the product of all hook lengths; the division
    is exact.
    """
    parts = _validate_partition(parts)
    n = sum(parts)
    if n == 0:
        return 1
    conj = conjugate(parts)
    hooks = 1
    for i, a in enumerate(parts):
        hooks *= prod([a - j + conj[j - 1] - i for j in range(1, a + 1)])
    return factorial(n) // hooks


@dataclass(frozen=True)
class StandardTableau:
    """Young-diagram filling with 1..n increasing along rows and columns."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    def is_standard(self) -> bool:
        entries = sorted(v for r in self.rows for v in r)
        if entries != list(range(1, self.n + 1)):
            return False
        for r in self.rows:
            if any(r[j] >= r[j + 1] for j in range(len(r) - 1)):
                return False
        for i in range(len(self.rows) - 1):
            lower = self.rows[i + 1]
            if len(lower) > len(self.rows[i]):
                return False
            if any(self.rows[i][j] >= lower[j] for j in range(len(lower))):
                return False
        return True


def syt_enumerate(parts: Sequence[int], max_n: int = SYT_ENUMERATION_BOUND) -> list[StandardTableau]:
    """All standard tableaux of the given shape, by recursive cell filling.

    Exhaustive, so refused for shapes with more than ``max_n`` boxes; the
    count serves as the small-shape oracle for :func:`syt_count`.
    """
    shape = _validate_partition(parts)
    n = sum(shape)
    if n > max_n:
        raise SizeLimitExceeded(f"|shape|={n} above enumeration bound {max_n}")
    rows: list[list[int]] = [[] for _ in shape]
    out: list[StandardTableau] = []

    def fill(k: int) -> None:
        if k > n:
            out.append(StandardTableau(tuple(tuple(r) for r in rows)))
            return
        for i, width in enumerate(shape):
            j = len(rows[i])
            if j < width and (i == 0 or len(rows[i - 1]) > j):
                rows[i].append(k)
                fill(k + 1)
                rows[i].pop()

    fill(1)
    return out


def rsk_shape(p: Sequence[int]) -> tuple[StandardTableau, StandardTableau, tuple[int, ...]]:
    """Robinson-Schensted row insertion of a permutation of 1..n.

    Returns the insertion tableau, the recording tableau, and their common
    shape.  Row insertion bumps the smallest entry strictly greater than
    the incoming value; the first row length of the shape is the LIS length
    and the first column length the LDS length of ``p``.
    """
    p = list(p)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise NotAPermutation(f"expected a permutation of 1..{len(p)}")
    insert_rows: list[list[int]] = []
    record_rows: list[list[int]] = []
    for step, x in enumerate(p, start=1):
        r = 0
        while True:
            if r == len(insert_rows):
                insert_rows.append([x])
                record_rows.append([step])
                break
            row = insert_rows[r]
            i = bisect_right(row, x)
            if i == len(row):
                row.append(x)
                record_rows[r].append(step)
                break
            x, row[i] = row[i], x
            r += 1
    shape = tuple(len(r) for r in insert_rows)
    return (
        StandardTableau(tuple(tuple(r) for r in insert_rows)),
        StandardTableau(tuple(tuple(r) for r in record_rows)),
        shape,
    )
