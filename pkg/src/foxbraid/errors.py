"""Exception types shared across the package."""


class FoxbraidError(Exception):
    """Base class for all errors raised by this package."""


class WordError(FoxbraidError):
    """Malformed word data (bad generator index, mixed alphabets, ...)."""


class ParseError(FoxbraidError):
    """Syntax error in a textual input, with position information."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ColoringError(FoxbraidError):
    """A braid does not preserve the given strand coloring."""


class RingError(FoxbraidError):
    """Descriptor mismatch, non-unit inversion, division by zero, ..."""


class NotDivisibleError(RingError):
    """exact division failed: the divisor does not divide the dividend."""


class MatrixError(FoxbraidError):
    """Shape mismatch or unsupported matrix operation."""


class RepresentationError(FoxbraidError):
    """A representation violates required relations.

    ``violations`` lists human-readable names of the failed relations.
    """

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class HypothesisError(FoxbraidError):
    """A named theorem hypothesis fails for the given data."""

    def __init__(self, name, message):
        super().__init__(f"{name}: {message}")
        self.name = name


class GcdUnsupportedError(FoxbraidError):
    """gcd over several minors is only available for univariate rings over a
    field; carries the raw minor determinants for the caller."""

    def __init__(self, minors):
        super().__init__(
            "gcd of %d minors is not supported over this ring" % len(minors)
        )
        self.minors = minors
