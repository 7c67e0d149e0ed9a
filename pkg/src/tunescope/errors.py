"""Exception types shared across the package."""

__all__ = [
    "TunescopeError",
    "NoUncensoredData",
    "TooFewUncensored",
    "AllStartsFailed",
    "EmptyRegion",
    "NumericFailure",
]


class TunescopeError(Exception):
    """Base class for errors raised by this package."""


class NoUncensoredData(TunescopeError):
    """Every observation falls on the censored side of the threshold."""


class TooFewUncensored(TunescopeError):
    """Not enough uncensored observations to attempt a fit."""


class AllStartsFailed(TunescopeError):
    """Every optimizer start ended in numeric failure."""


class EmptyRegion(TunescopeError):
    """The consonance region contains no accepted parameter tuples."""


class NumericFailure(TunescopeError):
    """A numeric routine could not reach its bracketing or accuracy goal."""
