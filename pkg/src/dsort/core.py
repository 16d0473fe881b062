"""Record detection, Disappear-Sort passes, layer decomposition, and the
position poset.

A single Disappear-Sort (DS) pass scans a sequence left to right, keeps the
strict upper records, and discards everything else in original order.  The
full (non-resampling) DS procedure repeats passes on the discard list until
nothing is left; the number of passes is the DS score of the sequence.

Positions carry a natural partial order: i comes before j in the poset iff
i < j and the value at i is larger than the value at j.  Chains of this
order are exactly the strictly decreasing subsequences, which is what ties
the DS score to longest-decreasing-subsequence length.

All positions reported by this module are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DuplicateValues, IndexOutOfRange, SizeLimitExceeded

# O(n^2) dynamic programs below are meant as oracles; refuse sizes where
# quadratic work stops being a few seconds.  The antichain-partition search
# is exponential and capped much earlier.
BRUTEFORCE_CHAIN_BOUND = 2000
ANTICHAIN_SEARCH_BOUND = 8


def record_indices(seq: Sequence) -> list[int]:
    """1-based positions of the strict upper records of ``seq``.

    Position 1 is always a record of a nonempty sequence; later positions
    are records iff their value strictly exceeds every earlier value.
    Ties are not records.

    >>> record_indices([2, 5, 3, 9, 6, 4])
    [1, 2, 4]
    >>> record_indices([])
    []
    """
    out = []
    running_max = None
    for pos, v in enumerate(seq, start=1):
        if running_max is None or v > running_max:
            out.append(pos)
            running_max = v
    return out


@dataclass(frozen=True)
class PassResult:
    """Split produced by one DS pass: retained records and ordered discards."""

    records: tuple
    discards: tuple


def ds_pass(seq: Sequence) -> PassResult:
    """Run one DS pass: keep strict records, discard the rest in order.

    >>> ds_pass([2, 5, 3, 9, 6, 4])
    PassResult(records=(2, 5, 9), discards=(3, 6, 4))
    """
    records = []
    discards = []
    running_max = None
    for v in seq:
        if running_max is None or v > running_max:
            records.append(v)
            running_max = v
        else:
            discards.append(v)
    return PassResult(tuple(records), tuple(discards))


@dataclass(frozen=True)
class LayerDecomposition:
    """Index layers peeled off by the recursive DS procedure.

    ``layers[t]`` holds the original 1-based positions retained in pass
    t+1; the layers are disjoint and cover 1..n, and ``depth`` equals the
    number of passes.
    """

    layers: tuple[tuple[int, ...], ...]
    depth: int

    def layer_values(self, seq: Sequence) -> list[list]:
        """Values of each layer, read back from the original sequence."""
        return [[seq[i - 1] for i in layer] for layer in self.layers]


def _require_distinct(seq: Sequence) -> None:
    if len(set(seq)) != len(seq):
        raise DuplicateValues("values must be pairwise distinct")


def ds_layers(seq: Sequence, strict: bool = True) -> LayerDecomposition:
    """Full recursive DS decomposition of ``seq`` into record layers.

    Each pass is applied to the previous pass's discard list; the returned
    layers are the original positions kept in each pass.  With ``strict``
    (the default) tied values raise DuplicateValues, since the DS theory
    here is stated for distinct values only.

    >>> ds_layers([2, 5, 3, 9, 6, 4]).layers
    ((1, 2, 4), (3, 5), (6,))
    >>> ds_layers([2, 5, 3, 9, 6, 4]).depth
    3
    """
    if strict:
        _require_distinct(seq)
    layers = []
    remaining = list(enumerate(seq, start=1))
    while remaining:
        kept = []
        discarded = []
        running_max = None
        for pos, v in remaining:
            if running_max is None or v > running_max:
                kept.append(pos)
                running_max = v
            else:
                discarded.append((pos, v))
        layers.append(tuple(kept))
        remaining = discarded
    return LayerDecomposition(tuple(layers), len(layers))


def ds_passes_naive(seq: Sequence, strict: bool = True) -> int:
    """Number of DS passes needed to eliminate ``seq``, by direct simulation.

    Quadratic in the worst case; serves as the oracle for the fast
    subsequence-based computation in :mod:`dsort.lds`.
    """
    return ds_layers(seq, strict=strict).depth


class DsPoset:
    """Partial order on positions: i precedes j iff i < j and seq[i] > seq[j].

    Only the sequence is stored; comparability is computed on demand so
    that large instances never materialize an n x n relation.
    """

    def __init__(self, seq: Sequence):
        _require_distinct(seq)
        self.seq = tuple(seq)

    @property
    def n(self) -> int:
        return len(self.seq)

    def less(self, i: int, j: int) -> bool:
        """True iff position i strictly precedes position j (1-based)."""
        self._check_index(i)
        self._check_index(j)
        return i < j and self.seq[i - 1] > self.seq[j - 1]

    def comparable(self, i: int, j: int) -> bool:
        return self.less(i, j) or self.less(j, i)

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= len(self.seq):
            raise IndexOutOfRange(f"position {i} outside 1..{len(self.seq)}")


def is_antichain(poset: DsPoset, indices: Iterable[int]) -> bool:
    """True iff no two of the given positions are comparable in the poset."""
    idx = sorted(set(indices))
    for i in idx:
        poset._check_index(i)
    seq = poset.seq
    # among sorted positions, comparability reduces to an inversion
    for a in range(len(idx)):
        va = seq[idx[a] - 1]
        for b in range(a + 1, len(idx)):
            if va > seq[idx[b] - 1]:
                return False
    return True


def longest_chain_bruteforce(poset: DsPoset, max_n: int = BRUTEFORCE_CHAIN_BOUND) -> int:
    """Length of the longest chain of the poset via O(n^2) dynamic programming.

    A chain is a strictly decreasing subsequence of the underlying values,
    so this doubles as an independent longest-decreasing-subsequence oracle.
    """
    seq = poset.seq
    n = len(seq)
    if n > max_n:
        raise SizeLimitExceeded(f"n={n} above oracle bound {max_n}")
    best = [1] * n
    for j in range(n):
        vj = seq[j]
        m = 0
        for i in range(j):
            if seq[i] > vj and best[i] > m:
                m = best[i]
        best[j] = m + 1
    return max(best, default=0)


def minimal_elements(poset: DsPoset, remaining: Iterable[int]) -> set[int]:
    """Minimal elements of the subposet induced on ``remaining`` positions."""
    rem = sorted(set(remaining))
    for i in rem:
        poset._check_index(i)
    seq = poset.seq
    out = set()
    running_max = None
    for i in rem:
        v = seq[i - 1]
        if running_max is None or v > running_max:
            running_max = v
        # i is minimal iff no earlier remaining position has a larger value,
        # i.e. iff it is a record of the induced subsequence
        if v == running_max:
            out.add(i)
    return out


def antichain_partition_exists(
    poset: DsPoset, num_parts: int, max_n: int = ANTICHAIN_SEARCH_BOUND
) -> bool:
    """Can the positions be partitioned into at most ``num_parts`` antichains?

    Exhaustive backtracking (parts play the role of colors; two comparable
    positions may not share one), so the search is refused above ``max_n``.
    Used for the minimality side of the antichain-partition theorem.
    """
    seq = poset.seq
    n = len(seq)
    if n > max_n:
        raise SizeLimitExceeded(f"n={n} above antichain-search bound {max_n}")
    if num_parts >= n:
        return True
    if num_parts <= 0:
        return n == 0
    color = [0] * n

    def can_take(j: int, c: int) -> bool:
        vj = seq[j]
        for i in range(j):
            if color[i] == c and seq[i] > vj:
                return False
        return True

    def solve(j: int, used: int) -> bool:
        if j == n:
            return True
        # canonical ordering: a fresh color beyond used+1 is symmetric
        for c in range(1, min(used + 1, num_parts) + 1):
            if can_take(j, c):
                color[j] = c
                if solve(j + 1, max(used, c)):
                    return True
                color[j] = 0
        return False

    return solve(0, 0)
