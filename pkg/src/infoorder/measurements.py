"""Measurements: maps into ``[0, inf)`` read with the reversed order.

A lower value means more information; all three vanish exactly on the
pointed distributions. Checking that an order actually admits one of these
as a measurement is done in :mod:`infoorder.suite`.
"""
from __future__ import annotations

import enum

import numpy as np

from .errors import BadDimension
from .simplex import DistLike, as_distribution, extrema, shannon_entropy


def mu_plus(x: DistLike) -> float:
    """``1 - max(x)``."""
    x = as_distribution(x)
    return 1.0 - float(x.values.max())


def mu_minus(x: DistLike) -> float:
    """``(2n - 3) - 2 Z(x) + min_nonzero(x)``, with ``Z`` the number of zeros.

    Zero counts dominate: one extra zero lowers the value by 2 while the
    smallest nonzero entry only moves it within ``(0, 1]``.
    """
    x = as_distribution(x)
    if x.n < 2:
        raise BadDimension("mu_minus needs n >= 2")
    e = extrema(x)
    return (2 * x.n - 3) - 2 * e.zero_count + e.min_nonzero


class Measurement(str, enum.Enum):
    MU_PLUS = "mu-plus"
    MU_MINUS = "mu-minus"
    ENTROPY = "entropy"

    def __call__(self, x: DistLike) -> float:
        if self is Measurement.MU_PLUS:
            return mu_plus(x)
        if self is Measurement.MU_MINUS:
            return mu_minus(x)
        return shannon_entropy(as_distribution(x))

    def batch(self, X: np.ndarray) -> np.ndarray:
        """Evaluate on every row of an ``(m, n)`` array."""
        X = np.asarray(X, float)
        if self is Measurement.MU_PLUS:
            return 1.0 - X.max(axis=-1)
        if self is Measurement.MU_MINUS:
            n = X.shape[-1]
            if n < 2:
                raise BadDimension("mu_minus needs n >= 2")
            zeros = np.count_nonzero(X == 0, axis=-1)
            xmin = np.where(X > 0, X, np.inf).min(axis=-1)
            return (2 * n - 3) - 2 * zeros + xmin
        with np.errstate(divide="ignore", invalid="ignore"):
            terms = np.where(X > 0, X * np.log(X), 0.0)
        return -terms.sum(axis=-1)
