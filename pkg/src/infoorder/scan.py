"""Classify a triangular lattice over the 3-simplex against a base point.

Every cell ``(i, j, k) / r`` with ``i + j + k = r`` is labelled ``up`` (the
cell lies above the base), ``down`` (below), ``equal`` or ``incomparable``,
exactly as :func:`infoorder.orders.compare` would label ``(cell, base)``.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .errors import AntisymmetryViolation, BadDimension, BadParameter
from .orders import EPS, OrderSpec
from .simplex import Distribution, DistLike, as_distribution, make_distribution

RELATIONS = ("up", "down", "equal", "incomparable")
COLORS = {"up": "#d62728", "down": "#1f77b4", "equal": "#2ca02c", "incomparable": "#ffffff"}


@dataclass(frozen=True)
class ScanGrid:
    base: Distribution
    resolution: int
    spec_name: str
    lattice: np.ndarray  # (M, 3) integer compositions of ``resolution``
    coords: np.ndarray  # (M, 3) barycentric coordinates
    relations: tuple  # one label per cell

    def cells(self, relation: str) -> set:
        """Integer lattice indices of every cell carrying ``relation``."""
        return {tuple(int(v) for v in self.lattice[k]) for k, r in enumerate(self.relations) if r == relation}

    def counts(self) -> dict:
        return {r: sum(1 for v in self.relations if v == r) for r in RELATIONS}

    def relation_at(self, point: DistLike, tol: float = 1e-12) -> str:
        """Label of the cell whose coordinates match ``point``."""
        p = as_distribution(point).values
        hit = np.flatnonzero(np.max(np.abs(self.coords - p), axis=1) <= tol)
        if len(hit) == 0:
            raise BadParameter(f"{p.tolist()} is not a cell at resolution {self.resolution}")
        return self.relations[int(hit[0])]


def lattice(resolution: int) -> np.ndarray:
    rows = [(i, j, resolution - i - j) for i in range(resolution, -1, -1) for j in range(resolution - i, -1, -1)]
    return np.array(rows, dtype=int)


def classify(spec: OrderSpec, base: Distribution, cells: np.ndarray, eps: float = EPS) -> tuple:
    """Labels for ``compare(spec, cell, base)`` over a stack of cells."""
    b = np.broadcast_to(base.values, cells.shape)
    up = spec.batch(b, cells, eps)
    down = spec.batch(cells, b, eps)
    equal = np.max(np.abs(cells - b), axis=1) <= eps
    clash = up & down & ~equal
    if np.any(clash):
        k = int(np.flatnonzero(clash)[0])
        raise AntisymmetryViolation(f"{spec}: {cells[k].tolist()} and the base are related both ways")
    labels = np.where(equal, "equal", np.where(up, "up", np.where(down, "down", "incomparable")))
    return tuple(labels.tolist())


def region_scan(spec: OrderSpec, base: DistLike, resolution: int, eps: float = EPS) -> ScanGrid:
    """Label every lattice cell of the triangle by its relation to ``base``.

    Raises BadDimension unless ``base`` has three entries.
    """
    base = as_distribution(base)
    if base.n != 3:
        raise BadDimension(f"region scans need n = 3, got n = {base.n}")
    if resolution < 2:
        raise BadParameter(f"resolution must be >= 2, got {resolution}")
    spec.check_dimension(3)
    L = lattice(resolution)
    C = L / resolution
    return ScanGrid(base, resolution, str(spec), L, C, classify(spec, base, C, eps))


# ---------------------------------------------------------------------------
# CSV and SVG


def to_csv(grid: ScanGrid) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["a", "b", "c", "relation"])
    for (a, b, c), rel in zip(grid.coords.tolist(), grid.relations):
        w.writerow([repr(a), repr(b), repr(c), rel])
    return buf.getvalue()


def read_csv(text: str) -> list:
    """Rows ``((a, b, c), relation)`` from :func:`to_csv` output."""
    rows = list(csv.DictReader(io.StringIO(text)))
    if rows and set(rows[0]) != {"a", "b", "c", "relation"}:
        raise BadParameter("scan CSV must have columns a,b,c,relation")
    return [((float(r["a"]), float(r["b"]), float(r["c"])), r["relation"]) for r in rows]


def reclassify(spec: OrderSpec, base: DistLike, rows: list, eps: float = EPS) -> list:
    """Recompute the labels of rows read back from CSV."""
    base = as_distribution(base)
    # cells are used exactly as written: the scan itself never renormalises them
    for p, _ in rows:
        make_distribution(p)
    cells = np.array([p for p, _ in rows], dtype=float)
    return list(classify(spec, base, cells, eps))


def _xy(coords: np.ndarray, size: float, pad: float) -> np.ndarray:
    # first vertex top, second bottom-left, third bottom-right
    h = size * np.sqrt(3) / 2
    verts = np.array([[size / 2, 0.0], [0.0, h], [size, h]]) + pad
    return coords @ verts


def to_svg(grid: ScanGrid, size: float = 600.0) -> str:
    pad = 20.0
    r = grid.resolution
    dot = max(0.6, 0.5 * size / r)
    pts = _xy(grid.coords, size, pad)
    h = size * np.sqrt(3) / 2
    corners = _xy(np.eye(3), size, pad)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size + 2 * pad:.0f}" height="{h + 2 * pad:.0f}">',
        f'<title>{grid.spec_name} around {grid.base.tolist()}</title>',
        '<rect width="100%" height="100%" fill="#ffffff"/>',
    ]
    for (px, py), rel in zip(pts.tolist(), grid.relations):
        if rel == "incomparable":
            continue
        out.append(f'<circle cx="{px:.2f}" cy="{py:.2f}" r="{dot:.2f}" fill="{COLORS[rel]}"/>')
    bx, by = _xy(grid.base.values[None, :], size, pad)[0]
    out.append(f'<circle cx="{bx:.2f}" cy="{by:.2f}" r="{max(3.0, 2 * dot):.2f}" fill="#000000"/>')
    path = " ".join(f"{x:.2f},{y:.2f}" for x, y in corners.tolist())
    out.append(f'<polygon points="{path}" fill="none" stroke="#000000" stroke-width="1"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
