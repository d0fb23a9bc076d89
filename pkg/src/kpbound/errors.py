"""Exception hierarchy for kpbound."""

from __future__ import annotations


class KPBoundError(Exception):
    """Base class for all library errors."""


class InputDomainError(KPBoundError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class InvalidRadiiError(InputDomainError):
    """A radii triple violates the (R_O, R_I, R_C) admissibility inequalities."""


class BoundaryDivergenceError(InputDomainError):
    """A density or distance was requested at (or past) the boundary, where it diverges."""


class ExteriorPointError(InputDomainError):
    """A point that must lie inside a domain lies outside it."""


class DomainRepresentationError(KPBoundError):
    """A domain does not have the property its representation promises."""


class ConvergenceError(KPBoundError, RuntimeError):
    """A numerical method failed to reach its tolerance.

    ``diagnostics`` carries whatever residuals the failing method recorded.
    """

    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})
