"""Exception types raised by the construction and solver layers.

Everything derives from ChordalError so callers can catch one type at the
boundary (the CLI maps any ChordalError to exit code 3). The parameter
errors additionally subclass ValueError.
"""

from __future__ import annotations


class ChordalError(Exception):
    """Base class for all library failures."""


class InvalidSpecError(ChordalError, ValueError):
    """A polygon spec, render option set, or similar input is malformed."""


class DomainError(ChordalError, ValueError):
    """A numeric parameter lies outside the operation's valid range."""


class CenterChordError(DomainError):
    """The side distance puts every chord through the center, so no
    sub-polygon exists (the ratio diverges there)."""


class ParallelLinesError(ChordalError):
    """Two carrier lines have no unique intersection point."""


class DegenerateResultError(ChordalError):
    """A clip or sub-polygon extraction collapsed: too few vertices,
    vanishing area, or a failed regularity self-check."""


class BracketError(ChordalError):
    """The solver's initial bracket does not straddle the target ratio."""


class ConvergenceError(ChordalError):
    """Bisection exhausted its interval without meeting the tolerance."""
