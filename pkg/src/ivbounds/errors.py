"""Exception types raised across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """An argument lies outside the set where a formula is defined."""


class ConvergenceError(RuntimeError):
    """A solver ran out of iterations.

    The best bracket found so far is attached as ``bracket`` so callers can
    still use the partial answer.
    """

    def __init__(self, message: str, bracket=None, iterations: int = 0):
        super().__init__(message)
        self.bracket = bracket
        self.iterations = iterations
