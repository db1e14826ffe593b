"""Dense complex-matrix primitives: partial trace, partial transpose,
realignment, matrix norms and extremal eigenvalues.

All operations are pure; density matrices are validated once at
construction and treated as immutable afterwards.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

HERM_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_TOL = 1e-10


class InvalidStateError(ValueError):
    """Raised when a matrix fails a density-matrix invariant."""


class InvalidSubsystemError(ValueError):
    """Raised for out-of-range or otherwise unusable subsystem indices."""


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A multipartite quantum state with declared subsystem dimensions.

    dims: ordered subsystem dimensions, each >= 2.
    mat:  D x D complex matrix, D = prod(dims); Hermitian, unit trace,
          positive semidefinite (each within tolerance).
    """

    dims: tuple[int, ...]
    mat: np.ndarray

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        object.__setattr__(self, "dims", dims)
        if not dims or any(d < 2 for d in dims):
            raise InvalidStateError(f"subsystem dimensions must be >= 2, got {dims}")
        mat = np.asarray(self.mat, dtype=complex)
        object.__setattr__(self, "mat", mat)
        D = int(np.prod(dims))
        if mat.shape != (D, D):
            raise InvalidStateError(
                f"matrix shape {mat.shape} does not match dims {dims} (D={D})"
            )
        herm_res = np.abs(mat - mat.conj().T).max()
        if herm_res > HERM_TOL:
            raise InvalidStateError(f"not Hermitian: residual {herm_res:.3e}")
        tr_res = abs(mat.trace() - 1.0)
        if tr_res > TRACE_TOL:
            raise InvalidStateError(f"trace differs from 1 by {tr_res:.3e}")
        min_eig = float(np.linalg.eigvalsh((mat + mat.conj().T) / 2).min())
        if min_eig < -PSD_TOL:
            raise InvalidStateError(f"not positive semidefinite: min eigenvalue {min_eig:.3e}")

    @property
    def total_dim(self) -> int:
        return int(np.prod(self.dims))

    @property
    def n_parties(self) -> int:
        return len(self.dims)

    def purity(self) -> float:
        return float(np.real(np.trace(self.mat @ self.mat)))


def _check_subsystems(rho: DensityMatrix, keep: Iterable[int]) -> tuple[int, ...]:
    keep = tuple(sorted(set(int(k) for k in keep)))
    n = rho.n_parties
    if not keep:
        raise InvalidSubsystemError("keep set must be nonempty")
    if any(k < 0 or k >= n for k in keep):
        raise InvalidSubsystemError(f"subsystem index out of range for {n} parties: {keep}")
    return keep


def partial_trace(rho: DensityMatrix, keep: Iterable[int]) -> DensityMatrix:
    """Trace out every subsystem not in `keep`, preserving their order."""
    keep = _check_subsystems(rho, keep)
    n = rho.n_parties
    t = rho.mat.reshape(rho.dims + rho.dims)
    # Row axis i gets label i; column axis gets the same label when traced out.
    row = list(range(n))
    col = [i if i not in keep else i + n for i in range(n)]
    out = list(keep) + [k + n for k in keep]
    reduced = np.einsum(t, row + col, out)
    d_keep = tuple(rho.dims[k] for k in keep)
    D = int(np.prod(d_keep))
    return DensityMatrix(d_keep, reduced.reshape(D, D))


def partial_transpose(rho: DensityMatrix, subsystem: int = 0) -> np.ndarray:
    """Transpose the indices of one tensor factor of a bipartite state."""
    if rho.n_parties != 2:
        raise InvalidSubsystemError(
            f"partial transpose needs a bipartite state, got {rho.n_parties} parties"
        )
    if subsystem not in (0, 1):
        raise InvalidSubsystemError(f"subsystem must be 0 or 1, got {subsystem}")
    m, n = rho.dims
    t = rho.mat.reshape(m, n, m, n)
    if subsystem == 0:
        t = t.transpose(2, 1, 0, 3)
    else:
        t = t.transpose(0, 3, 2, 1)
    return t.reshape(m * n, m * n)


def realign(rho: DensityMatrix) -> np.ndarray:
    """Reshuffle a bipartite M x N state into an M^2 x N^2 matrix.

    Convention: R[(i,k),(j,l)] = rho[(i,j),(k,l)], so the row index
    combines the first party's row and column indices.  For a product
    state this is the outer product vec(rho_A) vec(rho_B)^T.
    """
    if rho.n_parties != 2:
        raise InvalidSubsystemError(
            f"realignment needs a bipartite state, got {rho.n_parties} parties"
        )
    m, n = rho.dims
    t = rho.mat.reshape(m, n, m, n)          # indices (i, j, k, l)
    return t.transpose(0, 2, 1, 3).reshape(m * m, n * n)


def trace_norm(m: np.ndarray) -> float:
    """Ky Fan (trace) norm: sum of singular values."""
    return float(np.linalg.svd(np.asarray(m, dtype=complex), compute_uv=False).sum())


def hs_norm(m: np.ndarray) -> float:
    """Hilbert-Schmidt (Frobenius) norm."""
    return float(np.linalg.norm(np.asarray(m, dtype=complex)))


def min_eigenvalue(h: np.ndarray, herm_tol: float = HERM_TOL) -> float:
    """Smallest eigenvalue of a Hermitian matrix."""
    h = np.asarray(h, dtype=complex)
    res = np.abs(h - h.conj().T).max()
    if res > herm_tol:
        raise InvalidStateError(f"matrix not Hermitian: residual {res:.3e}")
    return float(np.linalg.eigvalsh((h + h.conj().T) / 2).min())
