"""Exception hierarchy shared by the library and the CLI.

Each category carries the process exit code the CLI uses for it.
"""


class OkzarError(Exception):
    exit_code = 1


class InputError(OkzarError):
    """Caller passed something malformed: bad dimensions, bad expressions,
    classes outside the required cone."""

    exit_code = 2


class UnboundedSliceError(InputError):
    """A slice that was required to be bounded is not."""


class DataError(OkzarError):
    """A variety document violates its invariants (non-unimodular matrix,
    incompatible restriction data, ...)."""

    exit_code = 3


class ModelViolationError(OkzarError):
    """Input data passed load-time checks but contradicts the structural
    guarantees the algorithms rely on (non-simplicial chamber, ambiguous
    facet pairing, negative part meeting the flag divisor, ...)."""

    exit_code = 4


class UnsupportedError(OkzarError):
    """Operation outside the supported scope (non-pointed cone facets,
    rational-vertex Ehrhart, ...)."""

    exit_code = 5


class InternalError(OkzarError):
    """A cross-check inside an algorithm failed; indicates a bug, not bad input."""

    exit_code = 1
