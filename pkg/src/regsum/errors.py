"""Exception types shared across the package.

ValueError is used for plain API misuse (bad argument values); the types
below mark failures the CLI maps to distinct exit codes.
"""


class SummarizerError(Exception):
    """Base class for package-specific failures."""


class DataError(SummarizerError):
    """Corpus or input file is missing, malformed, or violates an invariant."""


class NumericError(SummarizerError):
    """A numeric procedure failed (singular system, diverging training)."""
