"""Exception types shared across the package."""


class SubdivisionError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(SubdivisionError, ValueError):
    """A tension parameter is invalid for the requested family."""


class NormalizationError(SubdivisionError, ValueError):
    """A symbol does not satisfy the affine normalization a(1) = 2."""


class FamilyError(SubdivisionError, ValueError):
    """Unknown or inapplicable scheme family."""


class DomainError(SubdivisionError, ValueError):
    """An argument lies outside the domain of a recurrence."""


class SizeError(SubdivisionError, ValueError):
    """A polygon or mesh is too small for the requested refinement."""


class ShapeError(SubdivisionError, ValueError):
    """A tension profile does not match the polygon it is attached to."""


class ProfileError(SubdivisionError, ValueError):
    """A tension profile violates its own consistency rules."""


class StepLimitError(SubdivisionError, ValueError):
    """Requested refinement depth exceeds the configured step cap."""


class SceneError(SubdivisionError, ValueError):
    """A scene document failed validation. `path` points at the offending node."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.reason = message


class AnalysisTimeout(SubdivisionError):
    """A certification run exceeded its time budget. Carries partial results."""

    def __init__(self, message: str = "analysis timed out", partial=None):
        super().__init__(message)
        self.partial = partial
