"""Exact brute-force reference implementations.

Everything here works on tuples of ``Fraction`` and tries every permutation
instead of sorting, so it shares no code path with the package under test.
"""
from fractions import Fraction
from itertools import permutations


def frac(v):
    return tuple(Fraction(t).limit_denominator(10**9) if isinstance(t, float) else Fraction(t) for t in v)


def grid(n, d, boundary=True):
    """All points ``k / d`` of the simplex, by recursion."""
    def rec(left, parts):
        if parts == 1:
            yield (left,)
            return
        for k in range(left, -1, -1):
            for rest in rec(left - k, parts - 1):
                yield (k,) + rest
    return [tuple(Fraction(k, d) for k in c) for c in rec(d, n) if boundary or min(c) > 0]


def is_decreasing(v):
    return all(v[i] >= v[i + 1] for i in range(len(v) - 1))


def common_sortings(x, y):
    """Every index order that makes both vectors non-increasing."""
    n = len(x)
    return [p for p in permutations(range(n))
            if is_decreasing([x[k] for k in p]) and is_decreasing([y[k] for k in p])]


def sorted_pair(x, y):
    found = common_sortings(x, y)
    if not found:
        return None
    p = found[0]
    return [x[k] for k in p], [y[k] for k in p]


def lowner_plus(x, y):
    xp, yp = max(x), max(y)
    return all(xp * b <= yp * a for a, b in zip(x, y))


def lowner_minus(x, y):
    keep = [k for k in range(len(x)) if not (x[k] == 0 and y[k] == 0)]
    xs, ys = [x[k] for k in keep], [y[k] for k in keep]
    if any(v == 0 for v in xs):
        return False
    xm = min(xs)
    if any(v == 0 for v in ys):
        return any(b == 0 and a <= xm for a, b in zip(xs, ys))
    ym = min(ys)
    return all(a * ym <= b * xm for a, b in zip(xs, ys))


def bayesian(x, y):
    s = sorted_pair(x, y)
    if s is None:
        return False
    sx, sy = s
    return all(sx[i] * sy[i + 1] <= sy[i] * sx[i + 1] for i in range(len(x) - 1))


def restricted(a10, a1, x, y, a=()):
    """``a1[j]`` is the coefficient of the ``(j + 3)``-th coordinate (one-based)
    in the first denominator; ``a[i]`` lists the coefficients for row ``i + 2``."""
    s = sorted_pair(x, y)
    if s is None:
        return False
    sx, sy = s
    n = len(x)

    def g(v, i):
        total = v[i + 1]
        if i == 0:
            total += Fraction(a10)
            for j, c in enumerate(a1):
                total += Fraction(c) * v[j + 2]
        elif i - 1 < len(a):
            for j, c in enumerate(a[i - 1]):
                total += Fraction(c) * v[i + 2 + j]
        return total

    return all((sx[i] - sx[i + 1]) * g(sy, i) <= (sy[i] - sy[i + 1]) * g(sx, i) for i in range(n - 1))


def majorization(x, y):
    s = sorted_pair(x, y)
    if s is None:
        return False
    sx, sy = s
    n = len(x)
    for i in range(n - 1):
        if sy[i] == sy[i + 1] != 0 and not (sx[i] == sx[i + 1] != 0):
            return False
    return all(sum(sx[: k + 1]) <= sum(sy[: k + 1]) for k in range(n))


def mu_plus(x):
    return 1 - max(x)


def mu_minus(x):
    n = len(x)
    z = sum(1 for v in x if v == 0)
    return (2 * n - 3) - 2 * z + min(v for v in x if v != 0)


def relation(leq, x, y):
    if x == y:
        return "Equal"
    up, down = leq(x, y), leq(y, x)
    assert not (up and down)
    return "LessThan" if up else "GreaterThan" if down else "Incomparable"
