"""Seeded, reproducible Monte Carlo estimation of DS and RDS pass counts.

Randomness comes from the counter-based Philox generator: the 128-bit key
is (stream << 64) | seed and the 256-bit counter space is carved into
fixed blocks, one per chunk of 1024 trials (block index in the top counter
bits).  Results therefore depend only on the seed/stream pair and the
trial index arithmetic, never on scheduling -- chunks could be farmed out
to any number of workers and would produce the same draws.

Pass counts and record indicators are integers, so all summaries are
computed from exact integer sums with one final float division; reruns of
the same configuration are bit-identical (wall-clock time excluded).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import IndexOutOfRange
from .lds import lds_fast

TRIALS_PER_CHUNK = 1024

_DISTRIBUTIONS = ("uniform", "exponential", "normal")


@dataclass(frozen=True)
class RngSpec:
    """64-bit seed plus a stream id selecting an independent key."""

    seed: int
    stream: int = 0

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")
        if not 0 <= self.stream < 2**64:
            raise ValueError("stream must fit in 64 bits")

    def _key(self) -> int:
        return (self.stream << 64) | self.seed

    def block_generator(self, block: int) -> np.random.Generator:
        """Generator whose draws start at a fixed 2^128-step counter block."""
        bg = np.random.Philox(key=self._key(), counter=block << 128)
        return np.random.Generator(bg)


@dataclass(frozen=True)
class RunSummary:
    """Outcome of one simulation run.

    ``std_error`` is sqrt(sample_variance / trials).  ``wall_time`` is a
    diagnostic and excluded from equality, so summaries from identical
    configurations compare equal.
    """

    n: int
    variant: str
    trials: int
    mean: float
    sample_variance: float
    std_error: float
    seed: RngSpec
    wall_time: float = field(compare=False)


@dataclass(frozen=True)
class AsymptoticRow:
    """DS mean for one n alongside its square-root scaling diagnostics."""

    n: int
    mean: float
    two_sqrt_n: float
    ratio: float
    scaled_fluct: float


def sample_permutation(n: int, rng: RngSpec, index: int = 0) -> list[int]:
    """Uniform permutation of 1..n, deterministic in (rng, index).

    Distinct indices use disjoint counter blocks, so draws are independent
    across indices without any sequential state.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    g = rng.block_generator(index)
    return (g.permutation(n) + 1).tolist()


def _summarize(variant, n, trials, total, total_sq, rng, t0) -> RunSummary:
    mean = total / trials
    if trials > 1:
        var = (trials * total_sq - total * total) / (trials * (trials - 1))
    else:
        var = 0.0
    return RunSummary(
        n=n,
        variant=variant,
        trials=trials,
        mean=mean,
        sample_variance=var,
        std_error=math.sqrt(var / trials),
        seed=rng,
        wall_time=time.perf_counter() - t0,
    )


def _sample_values(g: np.random.Generator, n: int, distribution: str) -> np.ndarray:
    if distribution == "uniform":
        return g.random(n)
    if distribution == "exponential":
        return g.exponential(size=n)
    if distribution == "normal":
        return g.normal(size=n)
    raise ValueError(f"unknown distribution {distribution!r}; expected one of {_DISTRIBUTIONS}")


def mc_ds(n: int, trials: int, rng: RngSpec, distribution: str | None = None) -> RunSummary:
    """Mean DS pass count over fresh uniform permutations of size n.

    ``distribution`` switches to i.i.d. real-valued samples (uniform,
    exponential or normal) as a distribution-freeness cross-check; record
    structure only depends on ranks, so the estimates agree.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    t0 = time.perf_counter()
    total = 0
    total_sq = 0
    done = 0
    chunk = 0
    while done < trials:
        g = rng.block_generator(chunk)
        for _ in range(min(TRIALS_PER_CHUNK, trials - done)):
            if distribution is None:
                seq = g.permutation(n).tolist()
            else:
                seq = _sample_values(g, n, distribution).tolist()
            d = lds_fast(seq, strict=False)
            total += d
            total_sq += d * d
        done += min(TRIALS_PER_CHUNK, trials - done)
        chunk += 1
    return _summarize("ds", n, trials, total, total_sq, rng, t0)


def _record_count(values: np.ndarray) -> int:
    if values.size == 0:
        return 0
    return int(np.count_nonzero(values == np.maximum.accumulate(values)))


def mc_rds(n: int, trials: int, rng: RngSpec, distribution: str | None = None) -> RunSummary:
    """Mean pass count of the resampling DS procedure at size n.

    Each pass draws a fresh uniform sample of the current size, counts its
    records, and shrinks the size by that count until nothing remains.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    t0 = time.perf_counter()
    total = 0
    total_sq = 0
    done = 0
    chunk = 0
    while done < trials:
        g = rng.block_generator(chunk)
        for _ in range(min(TRIALS_PER_CHUNK, trials - done)):
            m = n
            passes = 0
            while m:
                if distribution is None:
                    sample = g.permutation(m)
                else:
                    sample = _sample_values(g, m, distribution)
                m -= _record_count(sample)
                passes += 1
            total += passes
            total_sq += passes * passes
        done += min(TRIALS_PER_CHUNK, trials - done)
        chunk += 1
    return _summarize("rds", n, trials, total, total_sq, rng, t0)


@dataclass(frozen=True)
class RecordFrequencies:
    """Per-position empirical record frequencies from one sweep."""

    n: int
    trials: int
    frequencies: tuple[float, ...]
    mean_records: float
    seed: RngSpec


def record_frequencies(n: int, trials: int, rng: RngSpec) -> RecordFrequencies:
    """Empirical record frequency at every position of a length-n sample.

    One simulation sweep serves all positions; frequency at position i
    converges to 1/i and the mean record count to the n-th harmonic number.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if n < 1:
        raise ValueError("n must be >= 1")
    counts = np.zeros(n, dtype=np.int64)
    done = 0
    chunk = 0
    while done < trials:
        g = rng.block_generator(chunk)
        for _ in range(min(TRIALS_PER_CHUNK, trials - done)):
            p = g.permutation(n)
            counts += p == np.maximum.accumulate(p)
        done += min(TRIALS_PER_CHUNK, trials - done)
        chunk += 1
    total_records = int(counts.sum())
    return RecordFrequencies(
        n=n,
        trials=trials,
        frequencies=tuple((counts / trials).tolist()),
        mean_records=total_records / trials,
        seed=rng,
    )


def mc_record_probability(n: int, i: int, trials: int, rng: RngSpec) -> float:
    """Empirical probability that position i holds a record (1-based)."""
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"position {i} outside 1..{n}")
    return record_frequencies(n, trials, rng).frequencies[i - 1]


def asymptotic_scan(ns: Sequence[int], trials: int, rng: RngSpec) -> list[AsymptoticRow]:
    """DS means with square-root scaling columns, one row per n (sorted).

    ``ratio`` is mean / (2 sqrt n) and ``scaled_fluct`` is
    (mean - 2 sqrt n) / n^(1/6).
    """
    rows = []
    for n in sorted(ns):
        if n < 1:
            raise ValueError("each n must be >= 1")
        summary = mc_ds(n, trials, rng)
        two_sqrt = 2.0 * math.sqrt(n)
        rows.append(
            AsymptoticRow(
                n=n,
                mean=summary.mean,
                two_sqrt_n=two_sqrt,
                ratio=summary.mean / two_sqrt,
                scaled_fluct=(summary.mean - two_sqrt) / n ** (1.0 / 6.0),
            )
        )
    return rows
