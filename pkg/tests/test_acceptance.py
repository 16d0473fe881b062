"""Acceptance gate: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-criterion
report.  Statistical criteria use pinned seeds, so outcomes are
reproducible; time budgets are asserted with a stopwatch around the
relevant work.
"""

import math
import time
from fractions import Fraction
from itertools import permutations
from math import factorial

import numpy as np

from dsort import (
    DsPoset,
    RngSpec,
    antichain_partition_exists,
    asymptotic_scan,
    ds_layers,
    ds_passes_naive,
    exact_ds_expectation,
    harmonic,
    is_antichain,
    lds_fast,
    longest_chain_bruteforce,
    mc_rds,
    rds_expectation,
    record_count_pmf,
    record_frequencies,
    rsk_shape,
    stirling_table,
    syt_square_sum,
)
from dsort import cli

SEED = RngSpec(seed=8675309)


def report(k: int, elapsed: float, detail: str) -> None:
    print(f"ACCEPTANCE {k} PASS ({elapsed:.2f}s): {detail}")


def test_criterion_1_worked_example():
    seq = [2, 5, 3, 9, 6, 4]
    # warm up, then time the actual computations
    ds_layers(seq), lds_fast(seq)
    best = min(_timed_worked_example(seq) for _ in range(3))
    dec = ds_layers(seq)
    assert dec.layer_values(seq) == [[2, 5, 9], [3, 6], [4]]
    assert dec.depth == 3
    assert ds_passes_naive(seq) == 3
    assert lds_fast(seq) == 3
    assert best < 1e-3, f"took {best * 1e3:.3f} ms"
    report(1, best, f"layers [2,5,9],[3,6],[4], D=3 in {best * 1e6:.0f} us")


def _timed_worked_example(seq):
    t0 = time.perf_counter()
    ds_layers(seq)
    lds_fast(seq)
    return time.perf_counter() - t0


def test_criterion_2_four_way_equivalence_n8():
    t0 = time.perf_counter()
    total = 0
    for n in range(1, 9):
        for p in permutations(range(1, n + 1)):
            d = ds_passes_naive(p)
            assert d == lds_fast(p)
            assert d == longest_chain_bruteforce(DsPoset(p))
            assert d == len(rsk_shape(p)[2])
            total += 1
    elapsed = time.perf_counter() - t0
    assert total == 46233
    assert elapsed < 30.0
    report(2, elapsed, f"naive = fast = chain = RSK column on {total} permutations")


def test_criterion_3_antichain_structure_and_minimality():
    t0 = time.perf_counter()
    total = 0
    for n in range(1, 9):
        for p in permutations(range(1, n + 1)):
            dec = ds_layers(p)
            poset = DsPoset(p)
            flat = sorted(i for layer in dec.layers for i in layer)
            assert flat == list(range(1, n + 1))
            for layer in dec.layers:
                assert is_antichain(poset, layer)
            assert antichain_partition_exists(poset, dec.depth)
            assert not antichain_partition_exists(poset, dec.depth - 1)
            total += 1
    elapsed = time.perf_counter() - t0
    assert elapsed < 300.0
    report(3, elapsed, f"layers are antichain partitions, minimal, on {total} permutations")


def test_criterion_4_rds_recurrence_and_simulation():
    t0 = time.perf_counter()
    table = stirling_table(50)
    d = rds_expectation(50, table)
    assert d[2] == Fraction(3, 2)
    assert d[3] == 2
    trials = 100_000
    gaps = []
    for n in (5, 10, 20, 50):
        s = mc_rds(n, trials, SEED)
        exact = float(d[n])
        assert abs(s.mean - exact) <= 3 * s.std_error, (n, s.mean, exact)
        gaps.append(abs(s.mean - exact) / s.std_error)
    elapsed = time.perf_counter() - t0
    assert elapsed < 120.0
    report(4, elapsed, "d_2=3/2, d_3=2; MC gaps "
           + ", ".join(f"{g:.2f}sigma" for g in gaps) + f" at {trials} trials")


def test_criterion_5_plancherel_exact_formula():
    t0 = time.perf_counter()
    for n in range(1, 9):
        brute = Fraction(
            sum(ds_passes_naive(p) for p in permutations(range(1, n + 1))),
            factorial(n),
        )
        assert exact_ds_expectation(n).value == brute
    for n in range(61):
        square_sum = syt_square_sum(n)
        fn = factorial(n)
        assert square_sum == fn, n
        assert Fraction(square_sum, fn) == 1
    elapsed = time.perf_counter() - t0
    assert elapsed < 120.0
    report(5, elapsed, "partition sum = brute force (n<=8); "
           "tableau-pair mass = n!, total probability 1 (n<=60)")


def test_criterion_6_record_theory():
    t0 = time.perf_counter()
    trials = 1_000_000
    freq = record_frequencies(20, trials, SEED)
    worst = 0.0
    for i in range(1, 21):
        q = 1.0 / i
        sigma = math.sqrt(q * (1 - q) / trials)
        gap = abs(freq.frequencies[i - 1] - q)
        assert gap <= max(3 * sigma, 1e-12), i
        if sigma:
            worst = max(worst, gap / sigma)
    table = stirling_table(200)
    for n in range(201):
        pmf = record_count_pmf(n, table)
        assert sum(r * q for r, q in enumerate(pmf)) == harmonic(n)
    elapsed = time.perf_counter() - t0
    assert elapsed < 60.0
    report(6, elapsed, f"record freq worst gap {worst:.2f}sigma over i<=20; "
           "pmf mean = harmonic exactly for n<=200")


def test_criterion_7_asymptotic_scaling():
    t0 = time.perf_counter()
    ns = (100, 400, 1600, 6400)
    rows = asymptotic_scan(ns, 10_000, SEED)
    ratios = [r.ratio for r in rows]
    assert all(a < b for a, b in zip(ratios, ratios[1:])), ratios
    assert ratios[-1] > 0.88, ratios
    for r in rows:
        if r.n >= 1000:
            assert -2.2 <= r.scaled_fluct <= -1.2, (r.n, r.scaled_fluct)
    elapsed = time.perf_counter() - t0
    assert elapsed < 300.0
    report(7, elapsed, "ratios " + ", ".join(f"{x:.3f}" for x in ratios)
           + "; fluct " + ", ".join(f"{r.scaled_fluct:.2f}" for r in rows if r.n >= 1000))


def test_criterion_8_performance():
    rng = np.random.Generator(np.random.Philox(key=8))
    p1 = (rng.permutation(1_000_000) + 1).tolist()
    p2 = (rng.permutation(2_000_000) + 1).tolist()
    lds_fast(p1[:10_000])  # warm up
    t1 = min(_timed_lds(p1) for _ in range(3))
    t2 = min(_timed_lds(p2) for _ in range(3))
    assert t1 < 1.0, f"n=1e6 took {t1:.3f}s"
    assert t2 / t1 < 2.5, f"doubling ratio {t2 / t1:.2f}"
    report(8, t1 + t2, f"n=1e6 in {t1:.3f}s; doubling ratio {t2 / t1:.2f}")


def _timed_lds(p):
    t0 = time.perf_counter()
    lds_fast(p)
    return time.perf_counter() - t0


def test_criterion_9_cli_determinism(tmp_path):
    t0 = time.perf_counter()
    sim_args = ["simulate", "--variant", "ds", "--n", "2:6", "--trials", "2000",
                "--seed", "99"]
    asy_args = ["asymptotics", "--n", "16,64", "--trials", "1000", "--seed", "4"]
    outputs = []
    for tag in ("x", "y"):
        csv1 = tmp_path / f"sim_{tag}.csv"
        png1 = tmp_path / f"sim_{tag}.png"
        assert cli.main(sim_args + ["--output", str(csv1), "--plot", str(png1)]) == 0
        csv2 = tmp_path / f"asy_{tag}.csv"
        png2 = tmp_path / f"asy_{tag}.png"
        assert cli.main(asy_args + ["--output", str(csv2), "--plot", str(png2)]) == 0
        outputs.append((csv1.read_bytes(), png1.read_bytes(),
                        csv2.read_bytes(), png2.read_bytes()))
    assert outputs[0] == outputs[1]
    elapsed = time.perf_counter() - t0
    report(9, elapsed, "simulate and asymptotics reruns byte-identical (CSV and PNG)")
