"""Order predicates on the probability simplex.

Every inequality ``a <= b`` is evaluated as ``a <= b + eps`` with an absolute
slack ``eps`` (default :data:`EPS`). All orders are oriented so that the
uniform distribution is the global minimum and the pointed distributions are
maximal.

Each order exists twice:

* a scalar predicate (``bayesian_leq`` and friends) written directly from its
  definition, working on :class:`~infoorder.simplex.Distribution` objects;
* a vectorised ``batch`` method on the matching :class:`OrderSpec`, which
  evaluates the relation for whole arrays of pairs at once and is what the
  property suite runs on large sample pools.

The test-suite checks the two against each other.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import (
    AntisymmetryViolation,
    BadParameter,
    DimensionMismatch,
    InvalidParams,
    NotMonotone,
    UnsupportedSpec,
)
from .simplex import (
    Distribution,
    DistLike,
    _check_same_dim,
    as_distribution,
    common_sector_permutation,
    permute,
)

#: Absolute slack used by every order inequality.
EPS = 1e-12


class ComparisonResult(str, enum.Enum):
    LESS_THAN = "LessThan"
    GREATER_THAN = "GreaterThan"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"

    def __str__(self) -> str:
        return self.value


# ---------------------------------------------------------------------------
# restricted-order parameters


@dataclass(frozen=True)
class RestrictedParams:
    """Parameters ``A^i_j`` of a restricted information order on dimension ``n``.

    ``a10`` is the constant offset in the first denominator, ``a1[j - 3]`` is
    ``A^1_j`` for ``j = 3..n`` and ``a[i - 2][j - i - 2]`` is ``A^i_j`` for
    ``i = 2..n-2`` and ``j = i+2..n`` (one-based indices).
    """

    n: int
    a10: float = 0.0
    a1: tuple = ()
    a: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "a10", float(self.a10))
        object.__setattr__(self, "a1", tuple(float(v) for v in self.a1))
        object.__setattr__(self, "a", tuple(tuple(float(v) for v in row) for row in self.a))

    @classmethod
    def build(cls, n: int, a10: float = 0.0, a1: Sequence[float] = (), a: Sequence = ()) -> "RestrictedParams":
        """Like the constructor but pads missing trailing entries with zeros,
        and drops entries that do not exist at dimension ``n``."""
        a1 = list(a1)[: max(n - 2, 0)]
        a1 += [0.0] * (max(n - 2, 0) - len(a1))
        rows = []
        for i in range(2, n - 1):
            src = list(a[i - 2]) if i - 2 < len(a) else []
            want = n - i - 1
            rows.append((src + [0.0] * want)[:want])
        return cls(n, a10, tuple(a1), tuple(tuple(r) for r in rows))

    @classmethod
    def zeros(cls, n: int) -> "RestrictedParams":
        return cls.build(n)

    def coefficients(self) -> tuple:
        """``(G, c)`` with ``g_i(v) = G[i] @ v + c[i]`` for zero-based ``i``."""
        self._check_shape()
        n = self.n
        G = np.zeros((max(n - 1, 0), n))
        c = np.zeros(max(n - 1, 0))
        for i in range(n - 1):
            G[i, i + 1] = 1.0
        if n >= 2:
            c[0] = self.a10
            for j, v in enumerate(self.a1, start=2):
                G[0, j] = v
        for i, row in enumerate(self.a, start=1):
            for off, v in enumerate(row):
                G[i, i + 2 + off] = v
        return G, c

    def _check_shape(self) -> None:
        n = self.n
        if n < 1:
            raise InvalidParams(f"dimension must be >= 1, got {n}")
        if len(self.a1) != max(n - 2, 0):
            raise InvalidParams(f"a1 must hold {max(n - 2, 0)} entries for n={n}, got {len(self.a1)}")
        if len(self.a) != max(n - 3, 0):
            raise InvalidParams(f"a must hold {max(n - 3, 0)} rows for n={n}, got {len(self.a)}")
        for i, row in enumerate(self.a, start=2):
            if len(row) != n - i - 1:
                raise InvalidParams(f"row for i={i} must hold {n - i - 1} entries, got {len(row)}")

    def to_dict(self) -> dict:
        return {"n": self.n, "a10": self.a10, "a1": list(self.a1), "a": [list(r) for r in self.a]}

    @classmethod
    def from_dict(cls, d: dict) -> "RestrictedParams":
        try:
            return cls(int(d["n"]), d.get("a10", 0.0), d.get("a1", ()), d.get("a", ()))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidParams(f"malformed parameter record: {exc}") from exc


def validate_restricted_params(params: RestrictedParams) -> tuple:
    """Check every positivity constraint on the parameters.

    Returns ``(ok, violations)`` where ``violations`` is a list of readable
    descriptions of each constraint that fails.
    """
    try:
        params._check_shape()
    except InvalidParams as exc:
        return False, [str(exc)]
    n = params.n
    bad = []
    if n >= 2:
        v = 1 + 2 * params.a10
        if not v > 0:
            bad.append(f"1 + 2*A1_0 = {v:g} <= 0")
    acc = 0.0
    for k in range(3, n + 1):
        acc += params.a1[k - 3]
        v = 1 + k * params.a10 + acc
        if not v > 0:
            bad.append(f"1 + {k}*A1_0 + sum(A1_3..A1_{k}) = {v:g} <= 0")
    for i, row in enumerate(params.a, start=2):
        acc = 0.0
        for k in range(i + 2, n + 1):
            acc += row[k - i - 2]
            v = 1 + acc
            if not v > 0:
                bad.append(f"1 + sum(A{i}_{i + 2}..A{i}_{k}) = {v:g} <= 0")
    return not bad, bad


def _require_valid(params: RestrictedParams, n: int) -> None:
    if params.n != n:
        raise InvalidParams(f"parameters are for n={params.n}, distributions have n={n}")
    ok, bad = validate_restricted_params(params)
    if not ok:
        raise InvalidParams("; ".join(bad))


# ---------------------------------------------------------------------------
# scalar predicates


def lowner_plus_leq(x: DistLike, y: DistLike, eps: float = EPS) -> bool:
    """Order obtained by rescaling both points so the largest entry is 1."""
    x, y = as_distribution(x), as_distribution(y)
    _check_same_dim(x, y)
    xp, yp = x.values.max(), y.values.max()
    return bool(np.all(xp * y.values <= yp * x.values + eps))


def lowner_minus_leq(x: DistLike, y: DistLike, eps: float = EPS) -> bool:
    """Order obtained by rescaling both points so the smallest nonzero entry is 1.

    Shared zeros are dropped first (without renormalising). After that ``x``
    must have no zeros left; if ``y`` still has a zero the pair is related
    exactly when ``y`` vanishes at some position where ``x`` is minimal,
    otherwise the rescaled entries are compared coordinatewise.
    """
    x, y = as_distribution(x), as_distribution(y)
    _check_same_dim(x, y)
    return _lowner_minus_rec(list(x.values), list(y.values), eps)


def _lowner_minus_rec(xs: list, ys: list, eps: float) -> bool:
    for k in range(len(xs)):
        if xs[k] == 0 and ys[k] == 0:
            return _lowner_minus_rec(xs[:k] + xs[k + 1:], ys[:k] + ys[k + 1:], eps)
    if any(v == 0 for v in xs):
        # a zero of x that y does not share
        return False
    xmin = min(xs)
    if any(v == 0 for v in ys):
        return any(yk == 0 and xk <= xmin + eps for xk, yk in zip(xs, ys))
    ymin = min(ys)
    return all(xk * ymin <= yk * xmin + eps for xk, yk in zip(xs, ys))


def _in_common_sector(x: Distribution, y: Distribution):
    sigma = common_sector_permutation(x, y)
    if sigma is None:
        return None
    return permute(x, sigma).values, permute(y, sigma).values


def bayesian_leq(x: DistLike, y: DistLike, eps: float = EPS) -> bool:
    x, y = as_distribution(x), as_distribution(y)
    pair = _in_common_sector(x, y)
    if pair is None:
        return False
    sx, sy = pair
    return all(sx[i] * sy[i + 1] <= sy[i] * sx[i + 1] + eps for i in range(x.n - 1))


def _f(v: np.ndarray) -> np.ndarray:
    return v[..., :-1] - v[..., 1:]


def _g(v: np.ndarray, G: np.ndarray, c: np.ndarray) -> np.ndarray:
    return v @ G.T + c


def restricted_leq(params: RestrictedParams, x: DistLike, y: DistLike, eps: float = EPS) -> bool:
    """Restricted information order with parameters ``params``.

    On a common decreasing rearrangement, requires
    ``f_i(x) g_i(y) <= f_i(y) g_i(x)`` for every ``i`` where
    ``f_i(v) = v_i - v_{i+1}`` and ``g_i`` is the affine map defined by the
    parameters.
    """
    x, y = as_distribution(x), as_distribution(y)
    _check_same_dim(x, y)
    _require_valid(params, x.n)
    pair = _in_common_sector(x, y)
    if pair is None:
        return False
    sx, sy = pair
    G, c = params.coefficients()
    lhs = _f(sx) * _g(sy, G, c)
    rhs = _f(sy) * _g(sx, G, c)
    return bool(np.all(lhs <= rhs + eps))


def _ties_respected(sx: np.ndarray, sy: np.ndarray, eps: float) -> bool:
    for k in range(len(sy) - 1):
        if sy[k] == sy[k + 1] and sy[k] != 0:
            if abs(sx[k] - sx[k + 1]) > eps or sx[k + 1] == 0:
                return False
    return True


def majorization_leq(x: DistLike, y: DistLike, eps: float = EPS) -> bool:
    """Sector-restricted majorization.

    On a common decreasing rearrangement the partial sums of ``x`` must not
    exceed those of ``y``. Additionally a nonzero tie in ``y`` must be a tie in
    ``x``; without that guard the relation is not transitive across sector
    borders (see :func:`prefix_dominates` for the unguarded check).
    """
    x, y = as_distribution(x), as_distribution(y)
    pair = _in_common_sector(x, y)
    if pair is None:
        return False
    sx, sy = pair
    if not _ties_respected(sx, sy, eps):
        return False
    return bool(np.all(np.cumsum(sx) <= np.cumsum(sy) + eps))


def prefix_dominates(x: DistLike, y: DistLike, eps: float = EPS) -> bool:
    """Partial sums of ``x`` below those of ``y`` on a common sorting, with no tie guard."""
    x, y = as_distribution(x), as_distribution(y)
    pair = _in_common_sector(x, y)
    if pair is None:
        return False
    sx, sy = pair
    return bool(np.all(np.cumsum(sx) <= np.cumsum(sy) + eps))


def meet_leq(specs: Sequence["OrderSpec"], x: DistLike, y: DistLike, eps: float = EPS) -> bool:
    if not specs:
        raise BadParameter("a meet needs at least one order")
    return all(s.leq(x, y, eps) for s in specs)


# ---------------------------------------------------------------------------
# vectorised helpers; arrays have shape (..., n) and broadcast against each other


def _sorted_desc(X: np.ndarray) -> np.ndarray:
    return -np.sort(-X, axis=-1)


def _pair_index(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    if not pairs:
        return np.zeros(0, dtype=int), np.zeros(0, dtype=int)
    I, J = zip(*pairs)
    return np.array(I), np.array(J)


def pair_signs(X: np.ndarray) -> np.ndarray:
    """``sign(X_i - X_j)`` for every ``i < j``; shape ``(..., n(n-1)/2)``."""
    I, J = _pair_index(X.shape[-1])
    return np.sign(X[..., I] - X[..., J]).astype(np.int8)


def concordant(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """True where some permutation sorts both points decreasingly.

    That happens exactly when no coordinate pair is ordered strictly one way
    in ``X`` and strictly the other way in ``Y``.
    """
    SX, SY = pair_signs(X), pair_signs(Y)
    return ~np.any(SX * SY < 0, axis=-1)


def _sorted_ties_ok(SX: np.ndarray, SY: np.ndarray, eps: float) -> np.ndarray:
    tie = (SY[..., :-1] == SY[..., 1:]) & (SY[..., 1:] != 0)
    ok = (np.abs(SX[..., :-1] - SX[..., 1:]) <= eps) & (SX[..., 1:] != 0)
    return np.all(~tie | ok, axis=-1)


# ---------------------------------------------------------------------------
# order specifications


class OrderSpec:
    """Base class for the order variants.

    ``sectored`` orders only relate points that share a decreasing
    rearrangement; for those, :meth:`sorted_leq` decides the relation on
    already sorted rows and :meth:`batch` combines it with :func:`concordant`.
    """

    name = "order"
    sectored = False

    def leq(self, x: DistLike, y: DistLike, eps: float = EPS) -> bool:
        raise NotImplementedError

    def batch(self, X: np.ndarray, Y: np.ndarray, eps: float = EPS) -> np.ndarray:
        X, Y = np.broadcast_arrays(np.asarray(X, float), np.asarray(Y, float))
        if self.sectored:
            return concordant(X, Y) & self.sorted_leq(_sorted_desc(X), _sorted_desc(Y), eps)
        out = np.empty(X.shape[:-1], dtype=bool)
        for idx in np.ndindex(out.shape):
            out[idx] = self.leq(Distribution._trusted(X[idx]), Distribution._trusted(Y[idx]), eps)
        return out

    def sorted_leq(self, SX: np.ndarray, SY: np.ndarray, eps: float = EPS) -> np.ndarray:
        raise NotImplementedError

    def outer(self, A: np.ndarray, B: np.ndarray, eps: float = EPS) -> np.ndarray:
        """``out[a, b] = leq(A[a], B[b])`` for two stacks of points."""
        return self.batch(A[:, None, :], B[None, :, :], eps)

    def check_dimension(self, n: int) -> None:
        """Raise if the order cannot be used on dimension ``n``."""

    def __str__(self) -> str:
        return self.name


def _columnwise(A, B, sa, sb, eps, swap):
    """All-coordinate comparison of scaled points, one coordinate at a time.

    With ``swap`` the test is ``sa[a] * B[b, k] <= sb[b] * A[a, k]``, otherwise
    ``A[a, k] * sb[b] <= B[b, k] * sa[a]``.
    """
    out = np.ones((A.shape[0], B.shape[0]), dtype=bool)
    for k in range(A.shape[1]):
        if swap:
            lhs = np.multiply.outer(sa, B[:, k])
            rhs = np.multiply.outer(A[:, k], sb)
        else:
            lhs = np.multiply.outer(A[:, k], sb)
            rhs = np.multiply.outer(sa, B[:, k])
        out &= lhs <= rhs + eps
    return out


@dataclass(frozen=True)
class LownerPlus(OrderSpec):
    name = "lowner-plus"

    def leq(self, x, y, eps=EPS):
        return lowner_plus_leq(x, y, eps)

    def batch(self, X, Y, eps=EPS):
        X, Y = np.asarray(X, float), np.asarray(Y, float)
        xp = X.max(axis=-1, keepdims=True)
        yp = Y.max(axis=-1, keepdims=True)
        return np.all(xp * Y <= yp * X + eps, axis=-1)

    def outer(self, A, B, eps=EPS):
        A, B = np.asarray(A, float), np.asarray(B, float)
        return _columnwise(A, B, A.max(axis=1), B.max(axis=1), eps, swap=True)


@dataclass(frozen=True)
class LownerMinus(OrderSpec):
    name = "lowner-minus"

    def leq(self, x, y, eps=EPS):
        return lowner_minus_leq(x, y, eps)

    def batch(self, X, Y, eps=EPS):
        X, Y = np.broadcast_arrays(np.asarray(X, float), np.asarray(Y, float))
        xz, yz = X == 0, Y == 0
        active = ~(xz & yz)
        stray_x_zero = np.any(xz & active, axis=-1)
        y_zero = yz & active
        xmin = np.where(active, X, np.inf).min(axis=-1, keepdims=True)
        ymin = np.where(active & ~yz, Y, np.inf).min(axis=-1, keepdims=True)
        clause2 = np.any(y_zero & (X <= xmin + eps), axis=-1)
        with np.errstate(invalid="ignore"):
            scaled = X * ymin <= Y * xmin + eps
        clause3 = ~np.any(y_zero, axis=-1) & np.all(~active | scaled, axis=-1)
        return ~stray_x_zero & (clause2 | clause3)

    def outer(self, A, B, eps=EPS):
        A, B = np.asarray(A, float), np.asarray(B, float)
        if np.any(A == 0) or np.any(B == 0):
            return super().outer(A, B, eps)
        # without zeros only the scaled comparison applies
        return _columnwise(A, B, A.min(axis=1), B.min(axis=1), eps, swap=False)


@dataclass(frozen=True)
class Bayesian(OrderSpec):
    name = "bayesian"
    sectored = True

    def leq(self, x, y, eps=EPS):
        return bayesian_leq(x, y, eps)

    def sorted_leq(self, SX, SY, eps=EPS):
        return np.all(SX[..., :-1] * SY[..., 1:] <= SY[..., :-1] * SX[..., 1:] + eps, axis=-1)


@dataclass(frozen=True)
class Restricted(OrderSpec):
    params: RestrictedParams
    name = "restricted"
    sectored = True

    def check_dimension(self, n):
        _require_valid(self.params, n)

    def leq(self, x, y, eps=EPS):
        return restricted_leq(self.params, x, y, eps)

    def sorted_leq(self, SX, SY, eps=EPS):
        self.check_dimension(SX.shape[-1])
        G, c = self.params.coefficients()
        lhs = _f(SX) * _g(SY, G, c)
        rhs = _f(SY) * _g(SX, G, c)
        return np.all(lhs <= rhs + eps, axis=-1)

    def __str__(self):
        p = self.params
        return f"restricted(n={p.n}, a10={p.a10:g}, a1={list(p.a1)}, a={[list(r) for r in p.a]})"


@dataclass(frozen=True)
class Majorization(OrderSpec):
    name = "majorization"
    sectored = True

    def leq(self, x, y, eps=EPS):
        return majorization_leq(x, y, eps)

    def sorted_leq(self, SX, SY, eps=EPS):
        sums = np.all(np.cumsum(SX, axis=-1) <= np.cumsum(SY, axis=-1) + eps, axis=-1)
        return sums & _sorted_ties_ok(SX, SY, eps)


@dataclass(frozen=True)
class Meet(OrderSpec):
    """Intersection of several orders."""

    specs: tuple = ()
    name = "meet"

    def __post_init__(self):
        if not self.specs:
            raise BadParameter("a meet needs at least one order")
        object.__setattr__(self, "specs", tuple(self.specs))

    @property
    def sectored(self):
        return all(s.sectored for s in self.specs)

    def check_dimension(self, n):
        for s in self.specs:
            s.check_dimension(n)

    def leq(self, x, y, eps=EPS):
        return meet_leq(self.specs, x, y, eps)

    def batch(self, X, Y, eps=EPS):
        out = None
        for s in self.specs:
            r = s.batch(X, Y, eps)
            out = r if out is None else out & r
        return out

    def sorted_leq(self, SX, SY, eps=EPS):
        out = None
        for s in self.specs:
            r = s.sorted_leq(SX, SY, eps)
            out = r if out is None else out & r
        return out

    def __str__(self):
        return "meet(" + ", ".join(str(s) for s in self.specs) + ")"


@dataclass(frozen=True)
class PredicateOrder(OrderSpec):
    """Wrap an arbitrary ``fn(x_values, y_values) -> bool``; used for negative controls."""

    fn: object = None
    label: str = "predicate"

    @property
    def name(self):
        return self.label

    def leq(self, x, y, eps=EPS):
        x, y = as_distribution(x), as_distribution(y)
        return bool(self.fn(x.values, y.values))


ORDER_NAMES = {
    "lowner-plus": LownerPlus,
    "lowner-minus": LownerMinus,
    "bayesian": Bayesian,
    "majorization": Majorization,
}


def order_from_name(name: str, params: Optional[RestrictedParams] = None) -> OrderSpec:
    """Build a spec from its command-line name; ``restricted`` takes ``params``."""
    if name == "restricted":
        if params is None:
            raise InvalidParams("the restricted order needs parameters")
        return Restricted(params)
    try:
        return ORDER_NAMES[name]()
    except KeyError:
        raise BadParameter(f"unknown order {name!r}") from None


def leq(spec: OrderSpec, x: DistLike, y: DistLike, eps: float = EPS) -> bool:
    return spec.leq(x, y, eps)


def compare(spec: OrderSpec, x: DistLike, y: DistLike, eps: float = EPS) -> ComparisonResult:
    x, y = as_distribution(x), as_distribution(y)
    _check_same_dim(x, y)
    if np.max(np.abs(x.values - y.values)) <= eps:
        return ComparisonResult.EQUAL
    up = spec.leq(x, y, eps)
    down = spec.leq(y, x, eps)
    if up and down:
        raise AntisymmetryViolation(f"{spec}: {x!r} and {y!r} are distinct but related both ways")
    if up:
        return ComparisonResult.LESS_THAN
    if down:
        return ComparisonResult.GREATER_THAN
    return ComparisonResult.INCOMPARABLE


def results_from_relation(up: np.ndarray, down: np.ndarray, equal: np.ndarray) -> np.ndarray:
    """Vectorised :func:`compare` outcome codes (object array of ComparisonResult)."""
    out = np.full(up.shape, ComparisonResult.INCOMPARABLE, dtype=object)
    out[up & ~down] = ComparisonResult.LESS_THAN
    out[down & ~up] = ComparisonResult.GREATER_THAN
    out[equal] = ComparisonResult.EQUAL
    return out


# ---------------------------------------------------------------------------
# feature vectors and graded entailment


def _safe_div(num: np.ndarray, den: np.ndarray) -> np.ndarray:
    out = np.full(num.shape, np.inf)
    nz = den != 0
    out[nz] = num[nz] / den[nz]
    return out


def _require_monotone(x: Distribution) -> np.ndarray:
    v = x.values
    if np.any(v[:-1] < v[1:]):
        raise NotMonotone(f"{x!r} is not sorted decreasingly; retract it first")
    return v


def feature_vector(spec: OrderSpec, x: DistLike) -> np.ndarray:
    """Feature vector ``F`` with ``x <= y`` iff ``F(x) <= F(y)`` componentwise.

    Zero denominators give ``inf``. For the sector orders ``x`` must already
    be sorted decreasingly. Restricted features can be negative when the first
    denominator is (near the pointed distributions with a negative offset);
    the order itself is decided in product form and does not use these ratios.
    """
    x = as_distribution(x)
    if isinstance(spec, LownerPlus):
        return _safe_div(np.full(x.n, x.values.max()), x.values)
    if isinstance(spec, Bayesian):
        v = _require_monotone(x)
        return _safe_div(v[:-1], v[1:])
    if isinstance(spec, Restricted):
        v = _require_monotone(x)
        _require_valid(spec.params, x.n)
        G, c = spec.params.coefficients()
        return _safe_div(_f(v), _g(v, G, c))
    if isinstance(spec, Majorization):
        v = _require_monotone(x)
        return np.cumsum(v)[:-1]
    raise UnsupportedSpec(f"{spec} has no single feature vector")


def graded_leq(spec: OrderSpec, p: float, x: DistLike, y: DistLike, eps: float = EPS) -> bool:
    """Graded entailment ``p F(x) <= F(y)`` evaluated without divisions.

    ``p = 1`` coincides with ``spec.leq``.
    """
    if not 0.0 <= p <= 1.0:
        raise BadParameter(f"p must lie in [0, 1], got {p}")
    x, y = as_distribution(x), as_distribution(y)
    _check_same_dim(x, y)
    if isinstance(spec, LownerPlus):
        xp, yp = x.values.max(), y.values.max()
        return bool(np.all(p * xp * y.values <= yp * x.values + eps))
    if not isinstance(spec, (Bayesian, Restricted, Majorization)):
        raise UnsupportedSpec(f"graded entailment is not defined for {spec}")
    if isinstance(spec, Restricted):
        _require_valid(spec.params, x.n)
    pair = _in_common_sector(x, y)
    if pair is None:
        return False
    sx, sy = pair
    if isinstance(spec, Bayesian):
        return bool(np.all(p * sx[:-1] * sy[1:] <= sy[:-1] * sx[1:] + eps))
    if isinstance(spec, Restricted):
        G, c = spec.params.coefficients()
        return bool(np.all(p * _f(sx) * _g(sy, G, c) <= _f(sy) * _g(sx, G, c) + eps))
    if not _ties_respected(sx, sy, eps):
        return False
    return bool(np.all(p * np.cumsum(sx)[:-1] <= np.cumsum(sy)[:-1] + eps))


def max_graded_p(spec: OrderSpec, x: DistLike, y: DistLike, tol: float = 1e-6, eps: float = EPS) -> Optional[float]:
    """Largest ``p`` in [0, 1] with ``graded_leq(spec, p, x, y)``, by bisection.

    Returns None when the relation fails already at ``p = 0``. The returned
    value is a lower bound within ``tol`` of the supremum. Bisection assumes
    the relation is monotone in ``p``, which holds whenever the feature
    products involved are nonnegative.
    """
    if graded_leq(spec, 1.0, x, y, eps):
        return 1.0
    if not graded_leq(spec, 0.0, x, y, eps):
        return None
    lo, hi = 0.0, 1.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if graded_leq(spec, mid, x, y, eps):
            lo = mid
        else:
            hi = mid
    return lo
