"""O(n log n) DS score via the patience-style tails scan.

The DS score of a distinct-valued sequence equals the length of its longest
strictly decreasing subsequence, which in turn is the longest strictly
increasing subsequence of the negated sequence.  One left-to-right scan
maintains ``tails``, where ``tails[k]`` is the smallest possible final value
of an increasing subsequence of length k+1; each element replaces the first
tail >= itself (lower bound) or extends the list.
"""

from __future__ import annotations

from bisect import bisect_left
from typing import Sequence

from .errors import DuplicateValues


def _tails_scan(values) -> int:
    tails: list = []
    size = 0
    lower_bound = bisect_left
    for x in values:
        i = lower_bound(tails, x, 0, size)
        if i == size:
            tails.append(x)
            size += 1
        else:
            tails[i] = x
    return size


def _tails_scan_checked(values) -> int:
    """Same scan, asserting the tails invariant after every insertion.

    Test/debug aid only; the production scan keeps the loop bare for speed.
    """
    tails: list = []
    for x in values:
        i = bisect_left(tails, x)
        if i == len(tails):
            tails.append(x)
        else:
            tails[i] = x
        assert all(tails[k] < tails[k + 1] for k in range(len(tails) - 1)), tails
    return len(tails)


def lds_fast(seq: Sequence, strict: bool = True) -> int:
    """Longest strictly decreasing subsequence length of ``seq``.

    Equals the DS pass count of the sequence.  Runs the tails scan on the
    negated values in O(n log n).

    >>> lds_fast([2, 5, 3, 9, 6, 4])
    3
    """
    if strict and len(set(seq)) != len(seq):
        raise DuplicateValues("values must be pairwise distinct")
    return _tails_scan([-v for v in seq])


def lis_fast(seq: Sequence, strict: bool = True) -> int:
    """Longest strictly increasing subsequence length of ``seq``.

    >>> lis_fast([1, 4, 2, 6, 5, 3])
    3
    """
    if strict and len(set(seq)) != len(seq):
        raise DuplicateValues("values must be pairwise distinct")
    return _tails_scan(list(seq))
