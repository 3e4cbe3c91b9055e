"""Custom exceptions for braid monodromy computations."""


class BraidMonoError(Exception):
    """Base exception for all braidmono errors."""


class PolynomialError(BraidMonoError):
    """Invalid polynomial operation (zero inputs, wrong degree, non-real data)."""


class PolynomialParseError(PolynomialError):
    """Polynomial text could not be parsed."""

    def __init__(self, message: str, position: int | None = None) -> None:
        """Initialize PolynomialParseError with the offending position.

        Args:
            message: Error message
            position: 0-based character offset of the error in the input text
        """
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class NonRationalCoefficientError(PolynomialParseError):
    """A coefficient is not an exact rational number."""


class CertificationError(BraidMonoError):
    """Numerical certification failed at the precision ceiling."""

    def __init__(self, message: str, ceiling: int | None = None) -> None:
        """Initialize CertificationError with the precision ceiling reached.

        Args:
            message: Error message
            ceiling: Working precision (bits) at which certification gave up
        """
        super().__init__(message)
        self.ceiling = ceiling


class TrackingError(BraidMonoError):
    """Fiber roots could not be continued along a path."""

    def __init__(
        self,
        message: str,
        piece_index: int | None = None,
        parameter: float | None = None,
    ) -> None:
        """Initialize TrackingError with the failing location.

        Args:
            message: Error message
            piece_index: Index of the path piece being tracked
            parameter: Piece parameter in [0, 1] where tracking failed
        """
        super().__init__(message)
        self.piece_index = piece_index
        self.parameter = parameter


class TangentialCrossingError(TrackingError):
    """Crossing events could not be separated at maximal refinement."""


class LassoConstructionError(BraidMonoError):
    """The lasso system cannot be built for the given basepoint and epsilon."""


class DegenerateAlignmentError(BraidMonoError):
    """The alignment resultant vanishes identically; manual analysis needed."""


class GenericityError(BraidMonoError):
    """The vertical pencil is not generic for the curve."""


class PresentationError(BraidMonoError):
    """Invalid words, presentations or degree maps."""


class IdentificationError(BraidMonoError):
    """A group identification routine was called outside its domain."""


class PuiseuxError(BraidMonoError):
    """Local expansion failed (point off the curve, smooth point, non-isolated)."""
