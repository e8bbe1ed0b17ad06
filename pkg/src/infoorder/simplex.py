"""Finite probability distributions and the elementary geometry of the simplex.

Permutation convention
----------------------
A :class:`Permutation` stores a zero-based index array ``mapping`` and sends
position ``k`` to position ``mapping[k]``::

    permute(x, sigma).values[sigma.mapping[k]] == x.values[k]

So ``Permutation((1, 2, 0))`` is the cycle 1 -> 2 -> 3 -> 1 (one-based) and
moves ``(0.5, 0.3, 0.2)`` to ``(0.2, 0.5, 0.3)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .errors import (
    BadIndex,
    BadParameter,
    BadSum,
    DimensionMismatch,
    EmptyDistribution,
    InvalidPermutation,
    NegativeEntry,
    NotMonotone,
)

#: Default tolerance used when validating membership of the simplex.
VALIDATION_TOL = 1e-9


class Distribution:
    """A validated point of the probability simplex.

    Instances are immutable: ``values`` is a read-only float array. Build them
    with :func:`make_distribution` (or the constructor, which does the same
    validation).
    """

    __slots__ = ("_values",)

    def __init__(self, values: Iterable[float], tol: float = VALIDATION_TOL):
        self._values = _validated(values, tol)

    @classmethod
    def _trusted(cls, arr: np.ndarray) -> "Distribution":
        # skips validation; arr must already be a clean simplex point
        obj = cls.__new__(cls)
        arr = np.array(arr, dtype=float)
        arr.setflags(write=False)
        obj._values = arr
        return obj

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def n(self) -> int:
        return self._values.shape[0]

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self._values.tolist())

    def __getitem__(self, k):
        return self._values[k]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Distribution):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self._values, other._values))

    def __hash__(self) -> int:
        return hash(self._values.tobytes())

    def __repr__(self) -> str:
        inner = ", ".join(f"{v:.6g}" for v in self._values)
        return f"Distribution({inner})"

    def tolist(self) -> list:
        return self._values.tolist()


DistLike = Union[Distribution, Sequence[float], np.ndarray]


def _validated(values: Iterable[float], tol: float) -> np.ndarray:
    if tol <= 0:
        raise BadParameter(f"tolerance must be positive, got {tol}")
    arr = np.array(list(values) if not isinstance(values, np.ndarray) else values, dtype=float)
    if arr.ndim != 1:
        raise BadParameter("a distribution is a flat list of numbers")
    if arr.size == 0:
        raise EmptyDistribution("a distribution needs at least one entry")
    if not np.all(np.isfinite(arr)):
        raise BadParameter("entries must be finite")
    if np.any(arr < -tol):
        k = int(np.argmin(arr))
        raise NegativeEntry(f"entry {k} is {arr[k]!r} < -{tol}")
    total = math.fsum(arr.tolist())
    if abs(total - 1.0) > tol:
        raise BadSum(f"entries sum to {total!r}, not 1 (tol {tol})")
    # clamp before renormalising so that Z(x) and supports are exact
    arr[np.abs(arr) <= tol] = 0.0
    total = math.fsum(arr.tolist())
    arr = arr / total
    arr.setflags(write=False)
    return arr


def make_distribution(values: Iterable[float], tol: float = VALIDATION_TOL) -> Distribution:
    """Validate ``values`` as a point of the simplex.

    Entries within ``tol`` of zero are clamped to exactly zero and the result
    is renormalised with a correctly rounded sum, so equal inputs stay equal
    under any reordering.

    Raises
    ------
    EmptyDistribution, NegativeEntry, BadSum
    """
    return Distribution(values, tol)


def as_distribution(x: DistLike) -> Distribution:
    return x if isinstance(x, Distribution) else make_distribution(x)


def _check_same_dim(x: Distribution, y: Distribution) -> None:
    if x.n != y.n:
        raise DimensionMismatch(f"dimensions differ: {x.n} vs {y.n}")


def canonical(n: int, kind: str, i: Optional[int] = None) -> Distribution:
    """The uniform distribution (``kind="bottom"``) or the pointed
    distribution with mass on one-based index ``i`` (``kind="top"``)."""
    if n < 1:
        raise BadParameter(f"dimension must be >= 1, got {n}")
    if kind == "bottom":
        return Distribution._trusted(np.full(n, 1.0 / n))
    if kind == "top":
        if i is None or not 1 <= i <= n:
            raise BadIndex(f"top needs an index in 1..{n}, got {i}")
        arr = np.zeros(n)
        arr[i - 1] = 1.0
        return Distribution._trusted(arr)
    raise BadParameter(f"kind must be 'bottom' or 'top', got {kind!r}")


def bottom(n: int) -> Distribution:
    return canonical(n, "bottom")


def top(n: int, i: int) -> Distribution:
    return canonical(n, "top", i)


@dataclass(frozen=True)
class Permutation:
    """Bijection on ``range(n)``; position ``k`` goes to ``mapping[k]``."""

    mapping: tuple

    def __post_init__(self):
        m = tuple(int(v) for v in self.mapping)
        if sorted(m) != list(range(len(m))):
            raise InvalidPermutation(f"{self.mapping!r} is not a bijection on 0..{len(m) - 1}")
        object.__setattr__(self, "mapping", m)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_order(cls, order: Sequence[int]) -> "Permutation":
        """The permutation that moves ``order[0]`` to the front, ``order[1]``
        second, and so on (the inverse of an argsort)."""
        inv = [0] * len(order)
        for pos, k in enumerate(order):
            inv[int(k)] = pos
        return cls(tuple(inv))

    @property
    def n(self) -> int:
        return len(self.mapping)

    def inverse(self) -> "Permutation":
        return Permutation.from_order(self.mapping)

    def order(self) -> tuple:
        """Source index that lands on each target position."""
        return self.inverse().mapping

    def apply(self, arr: np.ndarray) -> np.ndarray:
        arr = np.asarray(arr)
        out = np.empty_like(arr)
        out[..., list(self.mapping)] = arr
        return out

    def __call__(self, x: Distribution) -> Distribution:
        return permute(x, self)


def permute(x: Distribution, sigma: Permutation) -> Distribution:
    if sigma.n != x.n:
        raise DimensionMismatch(f"permutation on {sigma.n} points applied to dimension {x.n}")
    return Distribution._trusted(sigma.apply(x.values))


@dataclass(frozen=True)
class MonotoneDistribution:
    """A distribution whose entries are non-increasing."""

    inner: Distribution

    def __post_init__(self):
        v = self.inner.values
        if np.any(v[:-1] < v[1:]):
            raise NotMonotone(f"{self.inner!r} is not monotonically decreasing")

    @property
    def values(self) -> np.ndarray:
        return self.inner.values


def monotone_retract(x: Distribution) -> tuple:
    """Sort ``x`` into the monotone sector.

    Returns ``(MonotoneDistribution, Permutation)`` with
    ``permute(x, sigma) == result``. Ties keep their original relative order.
    """
    order = np.argsort(-x.values, kind="stable")
    sigma = Permutation.from_order(order)
    return MonotoneDistribution(permute(x, sigma)), sigma


def common_sector_permutation(x: Distribution, y: Distribution) -> Optional[Permutation]:
    """A permutation that makes both ``x`` and ``y`` non-increasing, or None.

    Candidates are ordered by decreasing ``y``, then decreasing ``x``, then
    original index; this ordering succeeds whenever any common sorting exists.
    """
    _check_same_dim(x, y)
    xv, yv = x.values, y.values
    order = np.lexsort((np.arange(x.n), -xv, -yv))
    sx = xv[order]
    if np.any(sx[:-1] < sx[1:]):
        return None
    return Permutation.from_order(order)


@dataclass(frozen=True)
class Extrema:
    max_coord: float
    min_nonzero: float
    zero_count: int


def extrema(x: Distribution) -> Extrema:
    v = x.values
    nz = v[v > 0]
    return Extrema(float(v.max()), float(nz.min()), int(np.count_nonzero(v == 0)))


def mix(x: Distribution, y: Distribution, t: float) -> Distribution:
    """The convex combination ``(1 - t) x + t y``."""
    _check_same_dim(x, y)
    if not 0.0 <= t <= 1.0:
        raise BadParameter(f"mixing weight must lie in [0, 1], got {t}")
    if t == 0.0:
        return x
    if t == 1.0:
        return y
    return make_distribution((1.0 - t) * x.values + t * y.values)


def shannon_entropy(x: Distribution) -> float:
    """Entropy in nats, with ``0 log 0 = 0``."""
    v = x.values[x.values > 0]
    return float(-np.sum(v * np.log(v)))


def support_subset(y: Distribution, x: Distribution) -> bool:
    """True iff the support of ``y`` is contained in the support of ``x``."""
    _check_same_dim(x, y)
    return not bool(np.any((x.values == 0) & (y.values != 0)))
