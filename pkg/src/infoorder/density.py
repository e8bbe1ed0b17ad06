"""Density matrices: validation, joint diagonalisation and lifted orders.

A simplex order compares two density matrices only when they commute; the
paired eigenvalues on a shared eigenbasis are then compared as distributions.
Because every simplex order here is permutation invariant, the order in which
the shared eigenvectors are listed does not matter.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np
from scipy import stats

from .errors import BadParameter, BadTrace, DimensionMismatch, NotCommuting, NotHermitian, NotPSD
from .orders import EPS, ComparisonResult, OrderSpec, compare
from .simplex import VALIDATION_TOL, Distribution, DistLike, as_distribution, make_distribution

#: Default tolerance for ``||rho pi - pi rho||``.
COMMUTE_TOL = 1e-8


class DensityMatrix:
    """Hermitian, positive semidefinite, unit-trace complex matrix (read-only)."""

    __slots__ = ("_data",)

    def __init__(self, entries, tol: float = VALIDATION_TOL):
        self._data = _validated(entries, tol)

    @classmethod
    def _trusted(cls, arr) -> "DensityMatrix":
        obj = cls.__new__(cls)
        arr = np.array(arr, dtype=complex)
        arr.setflags(write=False)
        obj._data = arr
        return obj

    @property
    def data(self) -> np.ndarray:
        return self._data

    @property
    def n(self) -> int:
        return self._data.shape[0]

    def __repr__(self) -> str:
        return f"DensityMatrix(n={self.n})"


def _validated(entries, tol: float) -> np.ndarray:
    if tol <= 0:
        raise BadParameter(f"tolerance must be positive, got {tol}")
    M = np.array(entries, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] == 0:
        raise BadParameter(f"expected a nonempty square matrix, got shape {M.shape}")
    if np.max(np.abs(M - M.conj().T)) > tol:
        raise NotHermitian("matrix differs from its conjugate transpose")
    M = 0.5 * (M + M.conj().T)
    lam = np.linalg.eigvalsh(M)
    if lam[0] < -tol:
        raise NotPSD(f"smallest eigenvalue {lam[0]:.3g} is negative")
    tr = np.trace(M).real
    if abs(tr - 1.0) > tol:
        raise BadTrace(f"trace is {tr!r}, not 1")
    M.setflags(write=False)
    return M


def make_density_matrix(entries, tol: float = VALIDATION_TOL) -> DensityMatrix:
    """Validate ``entries`` as a density matrix; the Hermitian part is kept exactly.

    Raises NotHermitian, NotPSD or BadTrace.
    """
    return DensityMatrix(entries, tol)


Operator = Union[DensityMatrix, np.ndarray]


def _mat(a: Operator) -> np.ndarray:
    return a.data if isinstance(a, DensityMatrix) else np.asarray(a, dtype=complex)


def _same_dim(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise DimensionMismatch(f"shapes differ: {a.shape} vs {b.shape}")


def embed_diag(x: DistLike) -> DensityMatrix:
    x = as_distribution(x)
    return DensityMatrix._trusted(np.diag(x.values).astype(complex))


def commutes(rho: Operator, pi: Operator, tol: float = COMMUTE_TOL) -> bool:
    a, b = _mat(rho), _mat(pi)
    _same_dim(a, b)
    return float(np.max(np.abs(a @ b - b @ a))) <= tol


@dataclass(frozen=True)
class JointEigenDecomposition:
    """Shared eigenbasis (columns of ``basis``) and the paired eigenvalues.

    Ordered by decreasing ``rho_eigs`` with ties broken by decreasing ``pi_eigs``.
    """

    basis: np.ndarray
    rho_eigs: Distribution
    pi_eigs: Distribution

    def reconstruct(self, which: str = "rho") -> np.ndarray:
        lam = (self.rho_eigs if which == "rho" else self.pi_eigs).values
        B = self.basis
        return (B * lam) @ B.conj().T


def joint_diagonalize(rho: Operator, pi: Operator, tol: float = COMMUTE_TOL) -> JointEigenDecomposition:
    """Common eigenbasis of two commuting Hermitian matrices.

    ``rho`` is diagonalised first; inside each of its (numerically) degenerate
    eigenspaces, ``pi`` restricted to that block is diagonalised to split it.

    Raises NotCommuting.
    """
    a, b = _mat(rho), _mat(pi)
    _same_dim(a, b)
    if not commutes(a, b, tol):
        raise NotCommuting("operators do not commute, so they have no common eigenbasis")
    w, V = np.linalg.eigh(a)
    cols = []
    start = 0
    n = len(w)
    while start < n:
        stop = start + 1
        while stop < n and w[stop] - w[stop - 1] <= tol:
            stop += 1
        Vc = V[:, start:stop]
        if stop - start > 1:
            _, U = np.linalg.eigh(Vc.conj().T @ b @ Vc)
            Vc = Vc @ U
        cols.append(Vc)
        start = stop
    B = np.hstack(cols)
    ra = np.real(np.einsum("ij,ik,kj->j", B.conj(), a, B))
    rb = np.real(np.einsum("ij,ik,kj->j", B.conj(), b, B))
    order = np.lexsort((-rb, -ra))
    B = B[:, order]
    return JointEigenDecomposition(B, make_distribution(ra[order]), make_distribution(rb[order]))


def lift_compare(spec: OrderSpec, rho: Operator, pi: Operator, tol: float = COMMUTE_TOL, eps: float = EPS) -> ComparisonResult:
    """Compare two density matrices through a simplex order.

    Non-commuting pairs are incomparable; commuting pairs are compared on
    their paired spectra.
    """
    a, b = _mat(rho), _mat(pi)
    _same_dim(a, b)
    if not commutes(a, b, tol):
        return ComparisonResult.INCOMPARABLE
    jd = joint_diagonalize(a, b, tol)
    return compare(spec, jd.rho_eigs, jd.pi_eigs, eps)


def lowner_psd_leq(A: Operator, B: Operator, tol: float = VALIDATION_TOL) -> bool:
    """Loewner order: ``B - A`` positive semidefinite up to ``tol``."""
    a, b = _mat(A), _mat(B)
    _same_dim(a, b)
    d = b - a
    d = 0.5 * (d + d.conj().T)
    return bool(np.linalg.eigvalsh(d)[0] >= -tol)


def renorm_lowner_operator_leq(rho: Operator, pi: Operator, tol: float = 1e-12) -> bool:
    """Operator version of the max-renormalised order: ``pi/max(pi) <= rho/max(rho)``
    in the Loewner order.

    Oriented so the maximally mixed state is the global minimum; on diagonal
    matrices it agrees with :func:`infoorder.orders.lowner_plus_leq`.
    """
    a, b = _mat(rho), _mat(pi)
    _same_dim(a, b)
    top_a = np.linalg.eigvalsh(0.5 * (a + a.conj().T))[-1]
    top_b = np.linalg.eigvalsh(0.5 * (b + b.conj().T))[-1]
    return lowner_psd_leq(b / top_b, a / top_a, tol)


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random unitary."""
    return stats.unitary_group.rvs(n, random_state=rng)


def random_density_matrix(n: int, rng: np.random.Generator, rank: int = None) -> DensityMatrix:
    """Random full-rank (or given-rank) density matrix from a complex Ginibre matrix."""
    k = n if rank is None else rank
    G = rng.standard_normal((n, k)) + 1j * rng.standard_normal((n, k))
    M = G @ G.conj().T
    return make_density_matrix(M / np.trace(M).real)


def conjugate(U: np.ndarray, rho: Operator) -> DensityMatrix:
    """``U rho U^dagger`` (symmetrised to stay exactly Hermitian)."""
    M = U @ _mat(rho) @ U.conj().T
    return DensityMatrix._trusted(0.5 * (M + M.conj().T))
