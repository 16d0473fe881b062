"""Exception types shared across the package."""


class DsortError(Exception):
    """Base class for all dsort-specific errors."""


class DuplicateValues(DsortError, ValueError):
    """Input contains tied values where distinct values are required."""


class NotAPermutation(DsortError, ValueError):
    """Input is not a permutation of 1..n."""


class IndexOutOfRange(DsortError, IndexError):
    """A 1-based position lies outside the sequence."""


class SizeLimitExceeded(DsortError, ValueError):
    """Requested size is above the configured bound for this engine."""


class OutOfTableRange(DsortError, ValueError):
    """Requested n exceeds the precomputed table's n_max."""


class BoxOutsideShape(DsortError, ValueError):
    """A (row, col) box does not lie inside the partition diagram."""


class ParseError(DsortError, ValueError):
    """Malformed textual input; message names the offending token."""
