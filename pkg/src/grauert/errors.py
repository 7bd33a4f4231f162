"""Exception types shared across the package."""

from __future__ import annotations


class GrauertError(Exception):
    """Base class for all errors raised by this package."""


class UnknownSpaceError(GrauertError):
    """Raised when a space label cannot be resolved in the catalog.

    Carries a list of close matches so callers (the CLI in particular) can
    suggest an alternative.
    """

    def __init__(self, label: str, suggestions: tuple[str, ...] = ()):
        self.label = label
        self.suggestions = suggestions
        msg = f"unknown space {label!r}"
        if suggestions:
            msg += " (did you mean: " + ", ".join(suggestions) + "?)"
        super().__init__(msg)


class ParameterError(GrauertError):
    """Parameter combination outside the valid range for a family."""


class UnsupportedRankError(GrauertError):
    """Operation requires exact vertex enumeration, available for rank <= 4."""


class SingularPointError(GrauertError):
    """Evaluation requested at (or within guard distance of) a singular point."""

    def __init__(self, z: complex, eigenvalue: float):
        self.z = z
        self.eigenvalue = eigenvalue
        super().__init__(
            f"singular point: z={z!r} with eigenvalue parameter {eigenvalue!r}"
        )


class OutsideDomainError(GrauertError):
    """Point lies outside the domain of definition (some |alpha(xi)| >= pi/2)."""


class RealizationError(GrauertError):
    """No matrix realization available, or the realization failed validation."""


class DataFormatError(GrauertError):
    """A bundled or user-supplied data file has the wrong schema or content."""
