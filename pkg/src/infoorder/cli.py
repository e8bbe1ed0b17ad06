"""Command-line front end.

Exit codes: 0 success (an ``Incomparable`` answer is a success), 1 usage
error, 2 invalid input, 3 ``check`` found violations.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Optional

from . import io as fio
from .density import lift_compare
from .errors import BadParameter, OrderError
from .measurements import Measurement
from .orders import EPS, RestrictedParams, compare, graded_leq, max_graded_p, order_from_name
from .scan import region_scan, to_csv, to_svg
from .simplex import make_distribution
from .suite import Budget, SampleConfig, check_axioms, check_degeneracy, check_measurement, sample

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_VIOLATIONS = 0, 1, 2, 3
ORDER_CHOICES = ("bayesian", "lowner-plus", "lowner-minus", "restricted", "majorization")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@dataclass
class CliConfig:
    """Everything a subcommand needs besides its positional data."""

    command: str
    order: Optional[str] = None
    params_path: Optional[str] = None
    tol: float = EPS
    seed: int = 0
    outputs: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "CliConfig":
        return cls(**json.loads(text))

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> "CliConfig":
        outputs = {k: getattr(ns, k) for k in ("report", "out") if getattr(ns, k, None)}
        return cls(ns.command, getattr(ns, "order", None), getattr(ns, "params", None),
                   getattr(ns, "tol", EPS), getattr(ns, "seed", 0) or 0, outputs)

    def spec(self, n: int):
        if self.order == "restricted":
            params = fio.load_params(self.params_path) if self.params_path else RestrictedParams.zeros(n)
            return order_from_name("restricted", params)
        return order_from_name(self.order)


def _dist(text: str):
    return make_distribution(fio.parse_csv_values(text))


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="infoorder", description="Information orders on probability distributions.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def order_args(sp, params=True):
        sp.add_argument("--order", required=True, choices=ORDER_CHOICES)
        if params:
            sp.add_argument("--params", help="restricted-order parameters JSON (default: all zeros)")
        sp.add_argument("--tol", type=float, default=EPS, help="comparison slack (default 1e-12)")

    c = sub.add_parser("compare", help="compare two distributions")
    order_args(c)
    c.add_argument("--x", required=True)
    # checked after --x so that a malformed --x is reported as invalid input
    c.add_argument("--y")

    e = sub.add_parser("entail", help="graded entailment on feature vectors")
    order_args(e)
    e.add_argument("--x", required=True)
    e.add_argument("--y", required=True)
    g = e.add_mutually_exclusive_group(required=True)
    g.add_argument("--p", type=float)
    g.add_argument("--max-p", action="store_true")

    k = sub.add_parser("check", help="run the axiom suite and write a JSON report")
    order_args(k)
    k.add_argument("--n", type=int, required=True)
    s = k.add_mutually_exclusive_group(required=True)
    s.add_argument("--grid", type=int, metavar="D")
    s.add_argument("--random", type=int, metavar="COUNT")
    k.add_argument("--seed", type=int, default=0)
    k.add_argument("--boundary", action="store_true", help="include boundary grid points")
    k.add_argument("--degeneracy", action="store_true", help="also check the degeneracy condition")
    k.add_argument("--measurement", choices=[m.value for m in Measurement])
    k.add_argument("--report", required=True)

    r = sub.add_parser("scan", help="classify a triangle lattice against a base point")
    order_args(r)
    r.add_argument("--base", required=True)
    r.add_argument("--resolution", type=int, required=True)
    r.add_argument("--format", choices=("csv", "svg"), required=True)
    r.add_argument("--out", required=True)

    li = sub.add_parser("lift", help="compare two density matrices")
    order_args(li)
    li.add_argument("--rho", required=True)
    li.add_argument("--pi", required=True)

    i = sub.add_parser("ingest", help="turn co-occurrence counts into distributions")
    i.add_argument("--counts", required=True)
    i.add_argument("--out", required=True)
    return p


def _compare(ns, cfg, out):
    x = _dist(ns.x)
    if ns.y is None:
        raise UsageError("infoorder compare: the following arguments are required: --y")
    y = _dist(ns.y)
    print(compare(cfg.spec(x.n), x, y, ns.tol), file=out)
    return EXIT_OK


def _entail(ns, cfg, out):
    x, y = _dist(ns.x), _dist(ns.y)
    spec = cfg.spec(x.n)
    if ns.max_p:
        p = max_graded_p(spec, x, y, eps=ns.tol)
        print("none" if p is None else f"{p:.6f}", file=out)
    else:
        if not 0.0 <= ns.p <= 1.0:
            raise BadParameter(f"--p must lie in [0, 1], got {ns.p}")
        word = "entails" if graded_leq(spec, ns.p, x, y, ns.tol) else "no-entailment"
        print(f"{word}@{ns.p:g}", file=out)
    return EXIT_OK


def _check(ns, cfg, out):
    if ns.grid is not None:
        conf = SampleConfig.grid(ns.n, ns.grid, include_boundary=ns.boundary)
    else:
        conf = SampleConfig.random(ns.n, ns.random, seed=ns.seed)
    spec = cfg.spec(ns.n)
    pool = sample(conf)
    budget = Budget(seed=ns.seed)
    rep = check_axioms(spec, pool, ns.tol, budget)
    if ns.degeneracy:
        rep.merge(check_degeneracy(spec, pool, ns.tol, budget))
    if ns.measurement:
        rep.merge(check_measurement(spec, Measurement(ns.measurement), pool, ns.tol, budget))
    rep.config = conf.to_dict()
    Path(ns.report).write_text(rep.to_json() + "\n")
    print(rep.summary(), file=out)
    return EXIT_OK if rep.passed else EXIT_VIOLATIONS


def _scan(ns, cfg, out):
    base = _dist(ns.base)
    grid = region_scan(cfg.spec(base.n), base, ns.resolution, ns.tol)
    text = to_csv(grid) if ns.format == "csv" else to_svg(grid)
    Path(ns.out).write_text(text)
    counts = grid.counts()
    print(" ".join(f"{k}={v}" for k, v in counts.items()), file=out)
    return EXIT_OK


def _lift(ns, cfg, out):
    rho, pi = fio.load_density(ns.rho), fio.load_density(ns.pi)
    print(lift_compare(cfg.spec(rho.n), rho, pi, eps=ns.tol), file=out)
    return EXIT_OK


def ingest_counts(text: str) -> dict:
    """``word<TAB>c1<TAB>...`` rows to ``{word: {"values": [...]}}``."""
    result = {}
    width = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        word, *cells = line.rstrip("\n").split("\t")
        if not cells:
            raise BadParameter(f"line {lineno}: no counts for {word!r}")
        try:
            counts = [float(c) for c in cells]
        except ValueError as exc:
            raise BadParameter(f"line {lineno}: {exc}") from exc
        if width is None:
            width = len(counts)
        elif len(counts) != width:
            raise BadParameter(f"line {lineno}: expected {width} counts, got {len(counts)}")
        if any(c < 0 or c != c for c in counts):
            raise BadParameter(f"line {lineno}: counts must be nonnegative")
        total = sum(counts)
        if total == 0:
            raise BadParameter(f"line {lineno}: all counts for {word!r} are zero")
        if word in result:
            raise BadParameter(f"line {lineno}: duplicate word {word!r}")
        result[word] = {"values": make_distribution([c / total for c in counts]).tolist()}
    return result


def _ingest(ns, cfg, out):
    data = ingest_counts(Path(ns.counts).read_text())
    fio.dump_json(data, ns.out)
    print(f"wrote {len(data)} distributions", file=out)
    return EXIT_OK


HANDLERS = {"compare": _compare, "entail": _entail, "check": _check, "scan": _scan, "lift": _lift, "ingest": _ingest}


def run(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        ns = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    cfg = CliConfig.from_args(ns)
    try:
        return HANDLERS[ns.command](ns, cfg, out)
    except UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except (OrderError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INVALID


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
