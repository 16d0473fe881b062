"""Named invariant suites runnable from the command line.

Each suite re-derives one family of structural claims from scratch (small
exhaustive enumerations, cross-checks between independent engines, seeded
statistical bands) and reports pass/fail with a short detail string.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Callable

from . import core, lds, montecarlo, plancherel, stirling, tableaux


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    detail: str


def _records_suite() -> SuiteResult:
    checked = 0
    for n in range(7):
        for p in permutations(range(1, n + 1)):
            res = core.ds_pass(p)
            rec = list(res.records)
            if rec != sorted(rec) or len(set(rec)) != len(rec):
                return SuiteResult("records", False, f"records not increasing for {p}")
            merged = sorted(rec + list(res.discards))
            if merged != sorted(p):
                return SuiteResult("records", False, f"split loses values for {p}")
            # relabeling by any strictly increasing map preserves indices
            mapped = [10 * v + 3 for v in p]
            if core.record_indices(mapped) != core.record_indices(p):
                return SuiteResult("records", False, f"relabeling changed records for {p}")
            checked += 1
    return SuiteResult("records", True, f"{checked} permutations (n<=6)")


def _layers_suite() -> SuiteResult:
    checked = 0
    for n in range(1, 8):
        for p in permutations(range(1, n + 1)):
            dec = core.ds_layers(p)
            flat = sorted(i for layer in dec.layers for i in layer)
            if flat != list(range(1, n + 1)):
                return SuiteResult("layers", False, f"not a partition of positions for {p}")
            poset = core.DsPoset(p)
            remaining = set(range(1, n + 1))
            for layer in dec.layers:
                if not core.is_antichain(poset, layer):
                    return SuiteResult("layers", False, f"layer not an antichain for {p}")
                if set(layer) != core.minimal_elements(poset, remaining):
                    return SuiteResult("layers", False, f"layer is not the minimal set for {p}")
                remaining -= set(layer)
            checked += 1
    return SuiteResult("layers", True, f"{checked} permutations (n<=7)")


def _equivalence_suite() -> SuiteResult:
    checked = 0
    for n in range(1, 8):
        for p in permutations(range(1, n + 1)):
            naive = core.ds_passes_naive(p)
            fast = lds.lds_fast(p)
            chain = core.longest_chain_bruteforce(core.DsPoset(p))
            if not naive == fast == chain:
                return SuiteResult(
                    "equivalence", False, f"{p}: naive={naive} fast={fast} chain={chain}"
                )
            checked += 1
    return SuiteResult("equivalence", True, f"{checked} permutations (n<=7)")


def _mirsky_suite() -> SuiteResult:
    checked = 0
    for n in range(1, 9):
        for p in permutations(range(1, n + 1)):
            depth = core.ds_layers(p).depth
            poset = core.DsPoset(p)
            if not core.antichain_partition_exists(poset, depth):
                return SuiteResult("mirsky", False, f"{p}: depth {depth} not achievable")
            if core.antichain_partition_exists(poset, depth - 1):
                return SuiteResult("mirsky", False, f"{p}: fewer than {depth} parts suffice")
            checked += 1
    return SuiteResult("mirsky", True, f"{checked} permutations (n<=8), minimality exhaustive")


def _rsk_suite() -> SuiteResult:
    checked = 0
    for n in range(1, 8):
        seen = set()
        for p in permutations(range(1, n + 1)):
            P, Q, shape = tableaux.rsk_shape(p)
            if not (P.is_standard() and Q.is_standard()):
                return SuiteResult("rsk", False, f"non-standard tableau for {p}")
            if P.shape != shape or Q.shape != shape:
                return SuiteResult("rsk", False, f"shape mismatch for {p}")
            if len(shape) != lds.lds_fast(p) or shape[0] != lds.lis_fast(p):
                return SuiteResult("rsk", False, f"row/column law fails for {p}")
            if n <= 6:
                seen.add((P.rows, Q.rows))
            checked += 1
        if n <= 6 and len(seen) != factorial(n):
            return SuiteResult("rsk", False, f"insertion not injective on S_{n}")
    return SuiteResult("rsk", True, f"{checked} permutations (n<=7), injective n<=6")


def _stirling_suite() -> SuiteResult:
    table = stirling.stirling_table(120)
    for n in range(121):
        if sum(table.rows[n]) != factorial(n):
            return SuiteResult("stirling", False, f"row {n} does not sum to n!")
    for n in range(121):
        pmf = stirling.record_count_pmf(n, table)
        mean = sum(r * q for r, q in enumerate(pmf))
        if mean != stirling.harmonic(n):
            return SuiteResult("stirling", False, f"pmf mean != harmonic at n={n}")
    return SuiteResult("stirling", True, "row sums and harmonic means exact (n<=120)")


def _rds_suite() -> SuiteResult:
    table = stirling.stirling_table(60)
    d = stirling.rds_expectation(60, table)
    if d[0] != 0 or d[1] != 1 or d[2] != Fraction(3, 2) or d[3] != 2:
        return SuiteResult("rds", False, "base values wrong")
    for n in range(1, 60):
        if not d[n] < d[n + 1]:
            return SuiteResult("rds", False, f"not strictly increasing at n={n}")
        if d[n] > n:
            return SuiteResult("rds", False, f"d_{n} exceeds n")
    return SuiteResult("rds", True, "exact base cases, monotone, d_n <= n (n<=60)")


def _plancherel_suite() -> SuiteResult:
    for n in range(1, 7):
        brute = Fraction(
            sum(core.ds_passes_naive(p) for p in permutations(range(1, n + 1))),
            factorial(n),
        )
        if plancherel.exact_ds_expectation(n).value != brute:
            return SuiteResult("plancherel", False, f"partition sum != brute force at n={n}")
    for n in range(31):
        if plancherel.syt_square_sum(n) != factorial(n):
            return SuiteResult("plancherel", False, f"square sum != n! at n={n}")
        if not plancherel.plancherel_conjugation_check(n):
            return SuiteResult("plancherel", False, f"conjugation symmetry fails at n={n}")
    return SuiteResult("plancherel", True, "brute force n<=6, square sums and symmetry n<=30")


def _montecarlo_suite() -> SuiteResult:
    rng = montecarlo.RngSpec(seed=20260808)
    trials = 20000
    ds = montecarlo.mc_ds(6, trials, rng)
    exact_ds = float(plancherel.exact_ds_expectation(6).value)
    if abs(ds.mean - exact_ds) > 3 * ds.std_error:
        return SuiteResult("montecarlo", False, f"DS mean off: {ds.mean} vs {exact_ds}")
    table = stirling.stirling_table(10)
    rds = montecarlo.mc_rds(10, trials, rng)
    exact_rds = float(stirling.rds_expectation(10, table)[10])
    if abs(rds.mean - exact_rds) > 3 * rds.std_error:
        return SuiteResult("montecarlo", False, f"RDS mean off: {rds.mean} vs {exact_rds}")
    freq = montecarlo.record_frequencies(10, trials, rng)
    for i in (1, 4, 5):
        q = 1.0 / i
        band = 3 * math.sqrt(q * (1 - q) / trials)
        if abs(freq.frequencies[i - 1] - q) > max(band, 1e-12):
            return SuiteResult("montecarlo", False, f"record freq off at i={i}")
    return SuiteResult("montecarlo", True, f"seeded 3-sigma bands hold ({trials} trials)")


SUITES: dict[str, Callable[[], SuiteResult]] = {
    "records": _records_suite,
    "layers": _layers_suite,
    "equivalence": _equivalence_suite,
    "mirsky": _mirsky_suite,
    "rsk": _rsk_suite,
    "stirling": _stirling_suite,
    "rds": _rds_suite,
    "plancherel": _plancherel_suite,
    "montecarlo": _montecarlo_suite,
}


def run_suites(only: list[str] | None = None) -> list[SuiteResult]:
    """Run the selected suites (all by default) and return their results."""
    names = list(SUITES) if not only else only
    unknown = [x for x in names if x not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}; available: {', '.join(SUITES)}")
    return [SUITES[name]() for name in names]
