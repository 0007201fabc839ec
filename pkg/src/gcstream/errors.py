"""Shared exception types and the CLI exit-code contract.

Exit codes: 0 success, 1 usage error, 2 data/format error,
3 numerical/degenerate error.
"""


class GcstreamError(Exception):
    """Base class for all package errors."""

    exit_code = 3


class DataFormatError(GcstreamError):
    """Malformed input file or record; carries a location when known."""

    exit_code = 2

    def __init__(self, message, *, path=None, line=None, offset=None):
        loc = []
        if path is not None:
            loc.append(str(path))
        if line is not None:
            loc.append(f"line {line}")
        if offset is not None:
            loc.append(f"byte {offset}")
        if loc:
            message = f"{message} ({', '.join(loc)})"
        super().__init__(message)
        self.path = path
        self.line = line
        self.offset = offset


class SequencingError(GcstreamError):
    """Frame ids arrived out of order or a stream is structurally malformed."""

    exit_code = 2


class DegenerateGeometryError(GcstreamError):
    """Numerically degenerate input (rank-deficient alignment, zero scale, ...)."""

    exit_code = 3


class NoOverlapError(DegenerateGeometryError):
    """Point sets share no correspondences under the given cutoff."""


class CacheError(GcstreamError):
    """Cache contract violation (duplicate frame, double eviction, ...)."""

    exit_code = 3


class CacheCoherenceError(CacheError):
    """A mask requested a span the cache no longer holds: policy bug upstream."""
