"""Exception types shared across the package."""

from __future__ import annotations


class SlabshiftError(Exception):
    """Base class for errors raised by this package."""


class ConvergenceError(SlabshiftError):
    """An adaptive computation exhausted its budget before reaching tolerance.

    Carries the best available estimate and the error bound achieved so far,
    so callers can decide whether the partial result is still usable.
    """

    def __init__(self, message: str, estimate: float | None = None,
                 err_est: float | None = None):
        super().__init__(message)
        self.estimate = estimate
        self.err_est = err_est


class PoleError(SlabshiftError):
    """A reflection coefficient was evaluated at a trapped-mode pole.

    The offending wave numbers are attached for diagnostics.
    """

    def __init__(self, message: str, k_z: complex | None = None,
                 k_par: float | None = None):
        super().__init__(message)
        self.k_z = k_z
        self.k_par = k_par
