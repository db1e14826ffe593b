"""Shared test helpers: random orthogonal/unitary generators."""
import numpy as np

from covmat.linalg import DensityMatrix


def random_orthogonal(n, seed):
    q, r = np.linalg.qr(np.random.default_rng(seed).standard_normal((n, n)))
    return q * np.sign(np.diag(r))


def local_unitary(dims, seed):
    rng = np.random.default_rng(seed)
    us = []
    for d in dims:
        q, r = np.linalg.qr(rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d)))
        us.append(q * np.sign(np.diag(r).real))
    u = us[0]
    for w in us[1:]:
        u = np.kron(u, w)
    return u


def apply_lu(rho, seed):
    u = local_unitary(rho.dims, seed)
    return DensityMatrix(rho.dims, u @ rho.mat @ u.conj().T)
