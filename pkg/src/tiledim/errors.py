"""Exception hierarchy shared by the library and the CLI."""


class TilingError(Exception):
    """Base class for every error raised by tiledim."""


class UsageError(TilingError, ValueError):
    """Bad arguments: mismatched dimensions, out-of-range axes, malformed input."""


class PreconditionError(TilingError, ValueError):
    """An operation was called on input that violates its documented precondition."""


class IntegrityError(TilingError, RuntimeError):
    """Something that a theorem guarantees did not happen.

    Seeing one of these means either the input was not what it claimed to be
    (e.g. not a tiling) or there is a bug.
    """


class GenerationError(TilingError, RuntimeError):
    """Random generation gave up after exhausting its retries."""
