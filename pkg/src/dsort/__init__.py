"""Disappear-Sort pass counts: procedural core, exact engines, Monte Carlo.

The package computes the number of left-to-right-record passes needed to
eliminate a sequence (the DS score), both by direct simulation of the
procedure and through its equivalent characterizations: longest decreasing
subsequence, poset height, and first-column length under Robinson-Schensted.
Exact expectations come from a Stirling-number recurrence (resampling
variant) and a Plancherel partition sum (non-resampling variant); a seeded
Monte Carlo layer reproduces both curves.
"""

from .core import (
    DsPoset,
    LayerDecomposition,
    PassResult,
    antichain_partition_exists,
    ds_layers,
    ds_pass,
    ds_passes_naive,
    is_antichain,
    longest_chain_bruteforce,
    minimal_elements,
    record_indices,
)
from .errors import (
    BoxOutsideShape,
    DsortError,
    DuplicateValues,
    IndexOutOfRange,
    NotAPermutation,
    OutOfTableRange,
    ParseError,
    SizeLimitExceeded,
)
from .lds import lds_fast, lis_fast
from .montecarlo import (
    AsymptoticRow,
    RecordFrequencies,
    RngSpec,
    RunSummary,
    asymptotic_scan,
    mc_ds,
    mc_rds,
    mc_record_probability,
    record_frequencies,
    sample_permutation,
)
from .plancherel import (
    PlancherelExpectation,
    exact_ds_expectation,
    plancherel_conjugation_check,
    plancherel_pmf,
    plancherel_total,
    syt_square_sum,
)
from .stirling import (
    RdsExpectationTable,
    StirlingTable,
    harmonic,
    rds_expectation,
    record_count_pmf,
    stirling_table,
)
from .tableaux import (
    StandardTableau,
    conjugate,
    hook_length,
    partitions,
    rsk_shape,
    syt_count,
    syt_enumerate,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticRow",
    "BoxOutsideShape",
    "DsPoset",
    "DsortError",
    "DuplicateValues",
    "IndexOutOfRange",
    "LayerDecomposition",
    "NotAPermutation",
    "OutOfTableRange",
    "ParseError",
    "PassResult",
    "PlancherelExpectation",
    "RdsExpectationTable",
    "RecordFrequencies",
    "RngSpec",
    "RunSummary",
    "SizeLimitExceeded",
    "StandardTableau",
    "StirlingTable",
    "antichain_partition_exists",
    "asymptotic_scan",
    "conjugate",
    "ds_layers",
    "ds_pass",
    "ds_passes_naive",
    "exact_ds_expectation",
    "harmonic",
    "hook_length",
    "is_antichain",
    "lds_fast",
    "lis_fast",
    "longest_chain_bruteforce",
    "mc_ds",
    "mc_rds",
    "mc_record_probability",
    "minimal_elements",
    "partitions",
    "plancherel_conjugation_check",
    "plancherel_pmf",
    "plancherel_total",
    "rds_expectation",
    "record_count_pmf",
    "record_frequencies",
    "record_indices",
    "rsk_shape",
    "sample_permutation",
    "stirling_table",
    "syt_count",
    "syt_enumerate",
    "syt_square_sum",
    "__version__",
]
