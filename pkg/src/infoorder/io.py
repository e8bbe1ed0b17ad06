"""JSON shapes for distributions, density matrices, parameters and reports."""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .density import DensityMatrix, make_density_matrix
from .errors import BadParameter, InvalidParams
from .orders import RestrictedParams
from .simplex import Distribution, make_distribution


def _load(path) -> object:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise BadParameter(f"{path}: not valid JSON ({exc})") from exc


def parse_csv_values(text: str) -> list:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise BadParameter(f"cannot parse {text!r} as comma-separated numbers") from exc


def distribution_to_json(x: Distribution) -> dict:
    return {"values": x.tolist()}


def distribution_from_json(d) -> Distribution:
    if not isinstance(d, dict) or "values" not in d:
        raise BadParameter('distribution JSON must look like {"values": [...]}')
    return make_distribution(d["values"])


def density_to_json(rho: DensityMatrix) -> dict:
    return {"re": rho.data.real.tolist(), "im": rho.data.imag.tolist()}


def density_from_json(d) -> DensityMatrix:
    if not isinstance(d, dict) or "re" not in d:
        raise BadParameter('density matrix JSON must look like {"re": [[...]], "im": [[...]]}')
    re = np.array(d["re"], dtype=float)
    im = np.array(d.get("im", np.zeros_like(re)), dtype=float)
    if re.shape != im.shape:
        raise BadParameter(f"re and im shapes differ: {re.shape} vs {im.shape}")
    return make_density_matrix(re + 1j * im)


def load_density(path) -> DensityMatrix:
    return density_from_json(_load(path))


def load_params(path) -> RestrictedParams:
    d = _load(path)
    if not isinstance(d, dict):
        raise InvalidParams("parameter JSON must be an object")
    return RestrictedParams.from_dict(d)


def dump_json(obj, path) -> None:
    Path(path).write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n")
