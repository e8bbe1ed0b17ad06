"""Property checks for orders on sampled pools of distributions.

Each ``check_*`` function evaluates an order on a pool of points and returns a
:class:`SuiteReport` listing every violated property together with replayable
witnesses. Relations are computed once per pool as a dense boolean matrix
``R[a, b] = leq(pool[a], pool[b])`` using the vectorised evaluators in
:mod:`infoorder.orders`.

Pair- and triple-level checks are exhaustive on pools up to the limits in
:class:`Budget`; beyond those limits they run on deterministic subsamples
(recorded in each result's ``note``).
"""
from __future__ import annotations

import itertools
import json
import math
import time
from dataclasses import asdict, dataclass, field
from typing import Iterator, List, Optional, Sequence

import numpy as np

from .errors import BadParameter
from .measurements import Measurement
from .orders import EPS, OrderSpec, _sorted_desc, pair_signs
from .simplex import Distribution, Permutation, make_distribution

MIX_WEIGHTS = tuple(round(0.1 * k, 1) for k in range(1, 10))


# ---------------------------------------------------------------------------
# sampling


@dataclass(frozen=True)
class SampleConfig:
    """How to build a pool: an exhaustive lattice grid or seeded random draws."""

    n: int
    strategy: str = "grid"
    denominator: int = 8
    count: int = 1000
    seed: int = 0
    include_boundary: bool = True

    def __post_init__(self):
        if self.n < 1:
            raise BadParameter(f"n must be >= 1, got {self.n}")
        if self.strategy not in ("grid", "random"):
            raise BadParameter(f"unknown strategy {self.strategy!r}")
        if self.strategy == "grid" and self.denominator < 1:
            raise BadParameter("grid denominator must be >= 1")
        if self.strategy == "random" and self.count < 1:
            raise BadParameter("random count must be >= 1")

    @classmethod
    def grid(cls, n: int, denominator: int, include_boundary: bool = True) -> "SampleConfig":
        return cls(n, "grid", denominator=denominator, include_boundary=include_boundary)

    @classmethod
    def random(cls, n: int, count: int, seed: int = 0) -> "SampleConfig":
        return cls(n, "random", count=count, seed=seed)

    def to_dict(self) -> dict:
        d = {"n": self.n, "strategy": self.strategy}
        if self.strategy == "grid":
            d.update(denominator=self.denominator, include_boundary=self.include_boundary)
        else:
            d.update(count=self.count, seed=self.seed)
        return d


def compositions(total: int, parts: int) -> Iterator[tuple]:
    """All tuples of ``parts`` nonnegative integers summing to ``total``."""
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        prev = -1
        out = []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(total + parts - 1 - prev - 1)
        yield tuple(out)


def sample(config: SampleConfig) -> List[Distribution]:
    """Grid points ``k / d`` (optionally interior only) or uniform random points.

    Random points are normalised independent unit-rate exponential draws,
    which are uniform on the simplex.
    """
    if config.strategy == "grid":
        d = config.denominator
        pts = [c for c in compositions(d, config.n) if config.include_boundary or min(c) > 0]
        return [make_distribution([k / d for k in c]) for c in pts]
    rng = np.random.default_rng(config.seed)
    E = rng.exponential(size=(config.count, config.n))
    return [make_distribution(row / math.fsum(row)) for row in E]


def stack(samples: Sequence) -> np.ndarray:
    if isinstance(samples, np.ndarray):
        return np.asarray(samples, float)
    return np.array([s.values if isinstance(s, Distribution) else s for s in samples], dtype=float)


# ---------------------------------------------------------------------------
# reports


@dataclass
class Violation:
    check: str
    witness: list
    details: str = ""
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"check": self.check, "witness": self.witness, "details": self.details, "extra": self.extra}


@dataclass
class CheckResult:
    name: str
    evaluated: int = 0
    violation_count: int = 0
    violations: list = field(default_factory=list)
    note: str = ""
    stats: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.violation_count == 0

    def add(self, v: Violation, cap: int) -> None:
        self.violation_count += 1
        if len(self.violations) < cap:
            self.violations.append(v)

    def to_dict(self) -> dict:
        d = {
            "name": self.name,
            "passed": self.passed,
            "evaluated": self.evaluated,
            "violation_count": self.violation_count,
            "violations": [v.to_dict() for v in self.violations],
        }
        if self.note:
            d["note"] = self.note
        if self.stats:
            d["stats"] = self.stats
        return d


@dataclass
class SuiteReport:
    """Outcome of one or more checks for one order (or pair of orders) on one pool."""

    spec: str
    sample_count: int
    seed: int = 0
    config: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    @property
    def violation_count(self) -> int:
        return sum(c.violation_count for c in self.checks.values())

    def __getitem__(self, name: str) -> CheckResult:
        return self.checks[name]

    def merge(self, other: "SuiteReport") -> "SuiteReport":
        self.checks.update(other.checks)
        self.elapsed += other.elapsed
        return self

    def to_dict(self, include_timing: bool = False) -> dict:
        d = {
            "spec": self.spec,
            "sample_count": self.sample_count,
            "seed": self.seed,
            "config": self.config,
            "passed": self.passed,
            "violation_count": self.violation_count,
            "checks": {k: c.to_dict() for k, c in self.checks.items()},
        }
        if include_timing:
            d["elapsed"] = self.elapsed
        return d

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2, sort_keys=True)

    def summary(self) -> str:
        lines = [f"{self.spec}: {'PASS' if self.passed else 'FAIL'} ({self.sample_count} samples)"]
        for c in self.checks.values():
            status = "ok" if c.passed else f"{c.violation_count} violation(s)"
            lines.append(f"  {c.name:<24} {status:>18}   [{c.evaluated} evaluated]")
        return "\n".join(lines)


@dataclass(frozen=True)
class Budget:
    """Limits that keep pair- and triple-level checks tractable on large pools."""

    exact_triple_limit: int = 1500
    chain_fanout: int = 16
    perm_limit: int = 400
    mixing_limit: int = 20000
    witness_cap: int = 20
    block_elems: int = 4_000_000
    seed: int = 0


DEFAULT_BUDGET = Budget()


# ---------------------------------------------------------------------------
# relation matrices


def _blocked(fn, A: np.ndarray, B: np.ndarray, block_elems: int) -> np.ndarray:
    """``fn(A[:, None], B[None])`` computed in row blocks to bound memory."""
    rows = max(1, block_elems // max(1, B.shape[0] * B.shape[-1]))
    out = np.empty((A.shape[0], B.shape[0]), dtype=bool)
    for s in range(0, A.shape[0], rows):
        out[s:s + rows] = fn(A[s:s + rows, None, :], B[None, :, :])
    return out


def relation_matrix(spec: OrderSpec, samples, eps: float = EPS, budget: Budget = DEFAULT_BUDGET) -> np.ndarray:
    """Dense ``R[a, b] = leq(samples[a], samples[b])``."""
    X = stack(samples)
    N, n = X.shape
    spec.check_dimension(n)
    if not spec.sectored:
        rows = max(1, budget.block_elems // max(1, N * n))
        R = np.empty((N, N), dtype=bool)
        for s in range(0, N, rows):
            R[s:s + rows] = spec.outer(X[s:s + rows], X, eps)
        return R
    S = _sorted_desc(X)
    sorted_fn = lambda A, B: spec.sorted_leq(A, B, eps)  # noqa: E731
    if np.all(np.diff(S, axis=1) < 0) or n == 1:
        # no ties anywhere: each point lies in exactly one sector, so only
        # points with the same sorting permutation can be related
        keys = np.argsort(-X, axis=1, kind="stable")
        _, group = np.unique(keys, axis=0, return_inverse=True)
        group = np.asarray(group).reshape(-1)
        R = np.zeros((N, N), dtype=bool)
        for g in np.unique(group):
            idx = np.flatnonzero(group == g)
            R[np.ix_(idx, idx)] = _blocked(sorted_fn, S[idx], S[idx], budget.block_elems)
        return R
    P = pair_signs(X)
    R = np.empty((N, N), dtype=bool)
    rows = max(1, budget.block_elems // max(1, N * max(n, P.shape[1])))
    for s in range(0, N, rows):
        sl = slice(s, s + rows)
        conc = ~np.any(P[sl, None, :] * P[None, :, :] < 0, axis=-1)
        R[sl] = conc & spec.sorted_leq(S[sl, None, :], S[None, :, :], eps)
    return R


def _rng(budget: Budget) -> np.random.Generator:
    return np.random.default_rng(budget.seed)


def _subsample(N: int, limit: int, budget: Budget) -> np.ndarray:
    if N <= limit:
        return np.arange(N)
    return np.sort(_rng(budget).choice(N, size=limit, replace=False))


def _edges(R: np.ndarray, offdiag: bool = True) -> tuple:
    M = R.copy()
    if offdiag:
        np.fill_diagonal(M, False)
    a, b = np.nonzero(M)
    return a, b


def _report(spec, X, checks, t0, budget, extra_config=None) -> SuiteReport:
    return SuiteReport(
        spec=str(spec),
        sample_count=int(X.shape[0]),
        seed=budget.seed,
        config=dict(extra_config or {}),
        checks={c.name: c for c in checks},
        elapsed=time.perf_counter() - t0,
    )


def _w(*rows) -> list:
    return [np.asarray(r, float).tolist() for r in rows]


# ---------------------------------------------------------------------------
# partial-order axioms


def check_partial_order_axioms(spec: OrderSpec, samples, eps: float = EPS, budget: Budget = DEFAULT_BUDGET,
                               R: Optional[np.ndarray] = None) -> SuiteReport:
    """Reflexivity on every sample, antisymmetry on every pair, transitivity on chains.

    Transitivity is exhaustive (every chain ``a <= b <= c``) on the first
    ``budget.exact_triple_limit`` samples; on larger pools it is additionally
    checked on up to ``chain_fanout**2`` chains through every middle element.
    """
    t0 = time.perf_counter()
    X = stack(samples)
    N = X.shape[0]
    if R is None:
        R = relation_matrix(spec, X, eps, budget)
    cap = budget.witness_cap

    refl = CheckResult("reflexivity", evaluated=N)
    for a in np.flatnonzero(~np.diag(R)):
        refl.add(Violation("reflexivity", _w(X[a]), "x <= x fails"), cap)

    anti = CheckResult("antisymmetry", evaluated=N * (N - 1) // 2)
    both = np.triu(R & R.T, k=1)
    for a, b in zip(*np.nonzero(both)):
        if np.max(np.abs(X[a] - X[b])) > 10 * eps:
            anti.add(Violation("antisymmetry", _w(X[a], X[b]), "x <= y and y <= x for distinct points"), cap)

    trans = CheckResult("transitivity")
    idx = _subsample(N, budget.exact_triple_limit, budget)
    Rs = R[np.ix_(idx, idx)]
    Rf = Rs.astype(np.float32)
    reach = (Rf @ Rf) > 0
    bad = reach & ~Rs
    trans.evaluated = int(Rf.sum(axis=0) @ Rf.sum(axis=1))
    for a, c in zip(*np.nonzero(bad)):
        mids = np.flatnonzero(Rs[a] & Rs[:, c])
        b = mids[0]
        trans.add(Violation("transitivity", _w(X[idx[a]], X[idx[b]], X[idx[c]]), "x <= y <= z but not x <= z"), cap)
    if N > len(idx):
        rng = _rng(budget)
        k = budget.chain_fanout
        sampled = 0
        for b in range(N):
            down = np.flatnonzero(R[:, b])
            up = np.flatnonzero(R[b])
            if len(down) == 0 or len(up) == 0:
                continue
            if len(down) > k:
                down = rng.choice(down, size=k, replace=False)
            if len(up) > k:
                up = rng.choice(up, size=k, replace=False)
            sub = R[np.ix_(down, up)]
            sampled += sub.size
            for i, j in zip(*np.nonzero(~sub)):
                trans.add(Violation("transitivity", _w(X[down[i]], X[b], X[up[j]]), "x <= y <= z but not x <= z"), cap)
        trans.evaluated += sampled
        trans.note = f"all chains within a subsample of {len(idx)}; {sampled} sampled chains on the full pool"

    return _report(spec, X, [refl, anti, trans], t0, budget)


# ---------------------------------------------------------------------------
# information-ordering axioms


def _permutations(n: int, budget: Budget) -> list:
    if n <= 5:
        return [Permutation(p) for p in itertools.permutations(range(n))]
    rng = _rng(budget)
    perms = {tuple(range(n)), tuple(list(range(1, n)) + [0]), (1, 0) + tuple(range(2, n))}
    while len(perms) < 120:
        perms.add(tuple(rng.permutation(n).tolist()))
    return [Permutation(p) for p in sorted(perms)]


def check_information_axioms(spec: OrderSpec, samples, eps: float = EPS, budget: Budget = DEFAULT_BUDGET,
                             R: Optional[np.ndarray] = None) -> SuiteReport:
    """Permutation invariance, mixing, bottom below everything, everything below a top."""
    t0 = time.perf_counter()
    X = stack(samples)
    N, n = X.shape
    if R is None:
        R = relation_matrix(spec, X, eps, budget)
    cap = budget.witness_cap

    perm = CheckResult("permutation_invariance")
    idx = _subsample(N, budget.perm_limit, budget)
    Xs, Rs = X[idx], R[np.ix_(idx, idx)]
    for sigma in _permutations(n, budget):
        Rp = relation_matrix(spec, sigma.apply(Xs), eps, budget)
        perm.evaluated += Rp.size
        for a, b in zip(*np.nonzero(Rp != Rs)):
            perm.add(Violation("permutation_invariance", _w(Xs[a], Xs[b]),
                               f"leq(x, y)={bool(Rs[a, b])} but leq(sx, sy)={bool(Rp[a, b])}",
                               {"perm": list(sigma.mapping)}), cap)
    if N > len(idx):
        perm.note = f"pairs from a subsample of {len(idx)}"

    mixing = CheckResult("mixing")
    ea, eb = _edges(R)
    if len(ea) > budget.mixing_limit:
        pick = np.sort(_rng(budget).choice(len(ea), size=budget.mixing_limit, replace=False))
        ea, eb = ea[pick], eb[pick]
        mixing.note = f"{budget.mixing_limit} comparable pairs sampled"
    A, B = X[ea], X[eb]
    for t in MIX_WEIGHTS:
        M = (1 - t) * A + t * B
        M = M / M.sum(axis=1, keepdims=True)
        lo = spec.batch(A, M, eps)
        hi = spec.batch(M, B, eps)
        mixing.evaluated += 2 * len(ea)
        for k in np.flatnonzero(~(lo & hi)):
            which = "x <= m" if not lo[k] else "m <= y"
            mixing.add(Violation("mixing", _w(A[k], B[k]), f"{which} fails at t={t}", {"t": t}), cap)

    bot = CheckResult("bottom_minimal", evaluated=N)
    ok = spec.batch(np.full(n, 1.0 / n), X, eps)
    for a in np.flatnonzero(~ok):
        bot.add(Violation("bottom_minimal", _w(X[a]), "uniform distribution is not below this point"), cap)

    topc = CheckResult("below_some_top", evaluated=N)
    below = np.zeros(N, dtype=bool)
    for i in range(n):
        t_i = np.zeros(n)
        t_i[i] = 1.0
        below |= spec.batch(X, t_i, eps)
    for a in np.flatnonzero(~below):
        topc.add(Violation("below_some_top", _w(X[a]), "not below any pointed distribution"), cap)

    return _report(spec, X, [perm, mixing, bot, topc], t0, budget)


def check_axioms(spec: OrderSpec, samples, eps: float = EPS, budget: Budget = DEFAULT_BUDGET) -> SuiteReport:
    """Partial-order and information-ordering axioms together (one relation matrix)."""
    X = stack(samples)
    t0 = time.perf_counter()
    R = relation_matrix(spec, X, eps, budget)
    rep = check_partial_order_axioms(spec, X, eps, budget, R)
    rep.merge(check_information_axioms(spec, X, eps, budget, R))
    rep.elapsed = time.perf_counter() - t0
    return rep


# ---------------------------------------------------------------------------
# degeneracy, measurements, cross-order claims


def check_degeneracy(spec: OrderSpec, samples, eps: float = EPS, budget: Budget = DEFAULT_BUDGET,
                     R: Optional[np.ndarray] = None) -> SuiteReport:
    """Whenever ``x <= y`` and ``y_i = y_j != 0``, require ``x_i = x_j != 0``."""
    t0 = time.perf_counter()
    X = stack(samples)
    N, n = X.shape
    if R is None:
        R = relation_matrix(spec, X, eps, budget)
    res = CheckResult("degeneracy")
    pairs = list(itertools.combinations(range(n), 2))
    for b in range(N):
        y = X[b]
        ties = [(i, j) for i, j in pairs if y[i] == y[j] and y[i] != 0]
        if not ties:
            continue
        below = np.flatnonzero(R[:, b])
        res.evaluated += len(below)
        for a in below:
            x = X[a]
            for i, j in ties:
                if abs(x[i] - x[j]) > 10 * eps or x[i] == 0:
                    res.add(Violation("degeneracy", _w(x, y), f"y_{i + 1} = y_{j + 1} but x_{i + 1} != x_{j + 1}",
                                      {"i": i, "j": j}), budget.witness_cap)
                    break
    return _report(spec, X, [res], t0, budget)


def _edge_blocks(R: np.ndarray, rows: int = 512):
    N = R.shape[0]
    for s in range(0, N, rows):
        blk = R[s:s + rows].copy()
        for k in range(blk.shape[0]):
            blk[k, s + k] = False
        a, b = np.nonzero(blk)
        yield a + s, b


def check_measurement(spec: OrderSpec, measurement: Measurement, samples, eps: float = EPS,
                      budget: Budget = DEFAULT_BUDGET, R: Optional[np.ndarray] = None) -> SuiteReport:
    """On every related pair ``x <= y``: ``mu(x) >= mu(y)`` (monotone, reversed
    codomain) and equal values only for equal points (strict)."""
    t0 = time.perf_counter()
    X = stack(samples)
    if R is None:
        R = relation_matrix(spec, X, eps, budget)
    mu = measurement.batch(X)
    mono = CheckResult("monotone")
    strict = CheckResult("strict")
    cap = budget.witness_cap
    for a, b in _edge_blocks(R):
        mono.evaluated += len(a)
        strict.evaluated += len(a)
        for k in np.flatnonzero(mu[a] < mu[b] - eps):
            mono.add(Violation("monotone", _w(X[a[k]], X[b[k]]),
                               f"{measurement.value}(x)={mu[a[k]]!r} < {measurement.value}(y)={mu[b[k]]!r}"), cap)
        same = np.abs(mu[a] - mu[b]) <= eps
        far = np.max(np.abs(X[a] - X[b]), axis=1) > 10 * eps
        for k in np.flatnonzero(same & far):
            strict.add(Violation("strict", _w(X[a[k]], X[b[k]]), "equal measurement on distinct related points"), cap)
    rep = _report(spec, X, [mono, strict], t0, budget, {"measurement": measurement.value})
    return rep


def check_contradiction(spec_a: OrderSpec, spec_b: OrderSpec, samples, eps: float = EPS,
                        budget: Budget = DEFAULT_BUDGET) -> SuiteReport:
    """Every pair of distinct points with ``x <=_a y`` and ``y <=_b x``."""
    t0 = time.perf_counter()
    X = stack(samples)
    N = X.shape[0]
    RA = relation_matrix(spec_a, X, eps, budget)
    RB = relation_matrix(spec_b, X, eps, budget)
    res = CheckResult("contradiction", evaluated=N * (N - 1))
    hits = RA & RB.T
    np.fill_diagonal(hits, False)
    for a, b in zip(*np.nonzero(hits)):
        if np.max(np.abs(X[a] - X[b])) > 10 * eps:
            res.add(Violation("contradiction", _w(X[a], X[b]),
                              f"x <= y under {spec_a} but y <= x under {spec_b}"), max(budget.witness_cap, 1000))
    rep = _report(f"{spec_a} vs {spec_b}", X, [res], t0, budget)
    return rep


def check_containment(spec_a: OrderSpec, spec_b: OrderSpec, samples, eps: float = EPS,
                      budget: Budget = DEFAULT_BUDGET) -> SuiteReport:
    """Compare two relations as sets of pairs.

    ``a_subset_b`` passes when every pair related by ``spec_a`` is related by
    ``spec_b``; ``b_subset_a`` the other way. Counts of exceptions are in the
    stats; this is a report, not a claim that either inclusion must hold.
    """
    t0 = time.perf_counter()
    X = stack(samples)
    N = X.shape[0]
    RA = relation_matrix(spec_a, X, eps, budget)
    RB = relation_matrix(spec_b, X, eps, budget)
    cap = budget.witness_cap
    out = []
    for name, P, Q in (("a_subset_b", RA, RB), ("b_subset_a", RB, RA)):
        res = CheckResult(name, evaluated=N * N)
        only = P & ~Q
        for a, b in zip(*np.nonzero(only)):
            res.add(Violation(name, _w(X[a], X[b]), "related by one order only"), cap)
        res.stats = {"related_a": int(RA.sum()), "related_b": int(RB.sum()), "exceptions": int(only.sum())}
        out.append(res)
    return _report(f"{spec_a} vs {spec_b}", X, out, t0, budget)


# ---------------------------------------------------------------------------
# witness replay


def replay(spec: OrderSpec, violation: Violation, eps: float = EPS, other: Optional[OrderSpec] = None,
           measurement: Optional[Measurement] = None) -> bool:
    """Re-evaluate a stored witness with the scalar predicates.

    Returns True when the witness still exhibits the reported failure.
    """
    w = [make_distribution(v) for v in violation.witness]
    leq = spec.leq
    kind = violation.check
    if kind == "reflexivity":
        return not leq(w[0], w[0], eps)
    if kind == "antisymmetry":
        return leq(w[0], w[1], eps) and leq(w[1], w[0], eps)
    if kind == "transitivity":
        return leq(w[0], w[1], eps) and leq(w[1], w[2], eps) and not leq(w[0], w[2], eps)
    if kind == "permutation_invariance":
        sigma = Permutation(violation.extra["perm"])
        return leq(w[0], w[1], eps) != leq(sigma(w[0]), sigma(w[1]), eps)
    if kind == "mixing":
        from .simplex import mix

        m = mix(w[0], w[1], violation.extra["t"])
        return leq(w[0], w[1], eps) and not (leq(w[0], m, eps) and leq(m, w[1], eps))
    if kind == "bottom_minimal":
        n = w[0].n
        return not leq(make_distribution([1.0 / n] * n), w[0], eps)
    if kind == "below_some_top":
        n = w[0].n
        return not any(leq(w[0], make_distribution(np.eye(n)[i]), eps) for i in range(n))
    if kind == "degeneracy":
        i, j = violation.extra["i"], violation.extra["j"]
        x, y = w[0].values, w[1].values
        return leq(w[0], w[1], eps) and y[i] == y[j] != 0 and (abs(x[i] - x[j]) > 10 * eps or x[i] == 0)
    if kind == "contradiction":
        return leq(w[0], w[1], eps) and other.leq(w[1], w[0], eps)
    if kind == "monotone":
        return leq(w[0], w[1], eps) and measurement(w[0]) < measurement(w[1]) - eps
    if kind == "strict":
        return leq(w[0], w[1], eps) and abs(measurement(w[0]) - measurement(w[1])) <= eps
    raise BadParameter(f"cannot replay check {kind!r}")
