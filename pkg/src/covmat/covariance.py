"""Covariance matrices of observable sets and their block structure.

For a state rho and observables {M_k}, the covariance matrix is

    gamma_ij = <M_i M_j + M_j M_i> / 2 - <M_i><M_j>,

which for an N-party state and per-party observable sets splits into
per-party diagonal blocks and cross-correlation blocks

    (A_ij)_mn = <M_m^i x M_n^j> - <M_m^i><M_n^j>.

Cross blocks only involve two-party reduced states, so they are computed
from partial traces rather than full-space operators.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import DensityMatrix, partial_trace
from .observables import ObservableBasis, pad_basis

IMAG_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class CovarianceBlocks:
    """Block decomposition of the covariance matrix of a multipartite state."""

    n_parties: int
    diag: list[np.ndarray]
    cross: dict[tuple[int, int], np.ndarray]

    def block(self, i: int, j: int) -> np.ndarray:
        if i == j:
            return self.diag[i]
        if i < j:
            return self.cross[(i, j)]
        return self.cross[(j, i)].T


def expectation(rho: DensityMatrix, m: np.ndarray) -> float:
    """Tr(rho M) for Hermitian M; the imaginary residue must be negligible."""
    m = np.asarray(m, dtype=complex)
    if m.shape != rho.mat.shape:
        raise ValueError(f"observable shape {m.shape} does not match state {rho.mat.shape}")
    val = complex(np.trace(rho.mat @ m))
    if abs(val.imag) > IMAG_TOL:
        raise ValueError(f"expectation has imaginary part {val.imag:.3e}")
    return val.real


def covariance_matrix(rho: DensityMatrix, ms) -> np.ndarray:
    """Symmetrized covariance matrix of a list of Hermitian observables.

    Re Tr(rho M_i M_j) equals the anticommutator average
    <M_i M_j + M_j M_i>/2 exactly for Hermitian inputs.
    """
    s = np.asarray(ms, dtype=complex)
    if s.ndim != 3 or s.shape[1] != s.shape[2]:
        raise ValueError(f"observables must be a stack of square matrices, got {s.shape}")
    if s.shape[1] != rho.total_dim:
        raise ValueError(
            f"observable dimension {s.shape[1]} does not match state dimension {rho.total_dim}"
        )
    rm = np.einsum("ij,ajk->aik", rho.mat, s)          # rho @ M_a
    second = np.einsum("aij,bji->ab", rm, s)           # Tr(rho M_a M_b)
    means = np.einsum("aii->a", rm).real
    gamma = second.real - np.outer(means, means)
    return (gamma + gamma.T) / 2


def correlation_block(
    rho: DensityMatrix,
    i: int,
    j: int,
    basis_i: ObservableBasis,
    basis_j: ObservableBasis,
) -> np.ndarray:
    """Cross block C_mn = <M_m^i x M_n^j> - <M_m^i><M_n^j> for parties i != j.

    Works on the two-party reduced state; rows/columns from zero-padded
    observables come out zero.
    """
    if i == j:
        raise ValueError("correlation block requires two distinct parties")
    if basis_i.dim != rho.dims[i] or basis_j.dim != rho.dims[j]:
        raise ValueError("basis dimensions do not match subsystem dimensions")
    swap = i > j
    lo, hi = min(i, j), max(i, j)
    red = rho if (rho.n_parties == 2 and (lo, hi) == (0, 1)) else partial_trace(rho, (lo, hi))
    ba, bb = (basis_j, basis_i) if swap else (basis_i, basis_j)
    da, db = red.dims
    t = red.mat.reshape(da, db, da, db)
    la, lb = ba.elements, bb.elements
    joint = np.einsum("ijkl,aki,blj->ab", t, la, lb).real
    mean_a = np.einsum("ijkj,aki->a", t, la).real
    mean_b = np.einsum("ijil,blj->b", t, lb).real
    block = joint - np.outer(mean_a, mean_b)
    return block.T if swap else block


def all_blocks(rho: DensityMatrix, bases: list[ObservableBasis]) -> CovarianceBlocks:
    """All diagonal and cross blocks, with bases padded to a common length."""
    n = rho.n_parties
    if len(bases) != n:
        raise ValueError(f"need one basis per party: {n} parties, {len(bases)} bases")
    for k, b in enumerate(bases):
        if b.dim != rho.dims[k]:
            raise ValueError(f"basis {k} has dim {b.dim}, subsystem has dim {rho.dims[k]}")
    width = max(b.padded_count for b in bases)
    padded = [pad_basis(b, width) for b in bases]
    diag = []
    for k in range(n):
        red = rho if n == 1 else partial_trace(rho, (k,))
        diag.append(covariance_matrix(red, padded[k].elements))
    cross = {}
    for i in range(n):
        for j in range(i + 1, n):
            cross[(i, j)] = correlation_block(rho, i, j, padded[i], padded[j])
    return CovarianceBlocks(n, diag, cross)


def joint_variance_sum(
    rho: DensityMatrix, basis_a: ObservableBasis, basis_b: ObservableBasis
) -> float:
    """Sum of variances of K_i = G_i^A x I + I x G_i^B over paired observables.

    Bases of unequal length are zero-padded to match before pairing.
    """
    if rho.n_parties != 2:
        raise ValueError("joint variance sum requires a bipartite state")
    width = max(basis_a.padded_count, basis_b.padded_count)
    ba = pad_basis(basis_a, width)
    bb = pad_basis(basis_b, width)
    da, db = rho.dims
    ia, ib = np.eye(da), np.eye(db)
    ks = np.array(
        [np.kron(ba.elements[i], ib) + np.kron(ia, bb.elements[i]) for i in range(width)]
    )
    rm = np.einsum("ij,ajk->aik", rho.mat, ks)
    second = np.einsum("aij,aji->a", rm, ks).real
    means = np.einsum("aii->a", rm).real
    return float((second - means ** 2).sum())
