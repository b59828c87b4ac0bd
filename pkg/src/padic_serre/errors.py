"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: schema/parse problems
exit 2, mathematical inconsistencies exit 3, golden-value mismatches
exit 1.
"""


class PadicSerreError(Exception):
    """Base class for all package errors."""


class SchemaError(PadicSerreError):
    """Malformed input file or JSON payload."""


class InconsistencyError(PadicSerreError):
    """Input data that is syntactically fine but mathematically impossible."""


class EvidenceError(InconsistencyError):
    """An irreducibility evidence claim failed to validate.

    ``which`` identifies the offending input ("f" or "g").
    """

    def __init__(self, which: str, message: str):
        self.which = which
        super().__init__(f"{which}: {message}")


class GoldenMismatch(PadicSerreError):
    """A computed value disagrees with a bundled expected value."""
