"""Concurrence: exact values for pure states and three lower bounds for
mixed states.

The bounds, from weakest to strongest on the bound entangled benchmark:
a PPT/realignment bound, a local-uncertainty bound depending on the
observable basis, and its basis-free envelope obtained by absorbing the
basis optimization into the trace norm of the cross-correlation block.
Raw bound values may be negative; only the `best` aggregate clamps at 0.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .covariance import correlation_block, joint_variance_sum
from .linalg import (
    DensityMatrix,
    partial_trace,
    partial_transpose,
    realign,
    trace_norm,
)
from .observables import ObservableBasis, gell_mann_basis
from .states import dm_from_vector


@dataclass(frozen=True)
class ConcurrenceBounds:
    """The three lower bounds plus the exact value when the state is pure.

    m, n: local dimensions with m <= n; `swapped` records whether the
    parties were reordered to achieve that.
    """

    m: int
    n: int
    bound_ccnr_ppt: float
    bound_lur: float
    bound_optimized: float
    exact_pure: float | None = None
    swapped: bool = False

    @property
    def best(self) -> float:
        return max(0.0, self.bound_ccnr_ppt, self.bound_lur, self.bound_optimized)


def _require_bipartite(rho: DensityMatrix):
    if rho.n_parties != 2:
        raise ValueError(f"concurrence bounds require a bipartite state, got {rho.n_parties}")


def _mn(rho: DensityMatrix) -> tuple[int, int]:
    return min(rho.dims), max(rho.dims)


def pure_concurrence(psi: np.ndarray, dims) -> float:
    """sqrt(2 (1 - tr rho_A^2)) for a normalized bipartite state vector."""
    rho = dm_from_vector(psi, dims)
    _require_bipartite(rho)
    pa = partial_trace(rho, (0,)).purity()
    return float(np.sqrt(max(0.0, 2.0 * (1.0 - pa))))


def bound_ccnr_ppt(rho: DensityMatrix) -> float:
    """sqrt(2/(M(M-1))) * (max(||rho^T_A||, ||R(rho)||) - 1), M the
    smaller local dimension.  Both norms are invariant under swapping the
    parties, so no physical reordering is needed."""
    _require_bipartite(rho)
    m, _ = _mn(rho)
    biggest = max(trace_norm(partial_transpose(rho, 0)), trace_norm(realign(rho)))
    return float(np.sqrt(2.0 / (m * (m - 1))) * (biggest - 1.0))


def bound_lur(
    rho: DensityMatrix,
    basis_a: ObservableBasis | None = None,
    basis_b: ObservableBasis | None = None,
) -> float:
    """(M + N - 2 - sum_i Var(G_i^A x I + I x G_i^B)) / sqrt(2M(M-1)).

    Defaults to the Gell-Mann bases; the value depends on that choice.
    """
    _require_bipartite(rho)
    m, n = _mn(rho)
    basis_a = basis_a or gell_mann_basis(rho.dims[0])
    basis_b = basis_b or gell_mann_basis(rho.dims[1])
    jvs = joint_variance_sum(rho, basis_a, basis_b)
    return float((m + n - 2.0 - jvs) / np.sqrt(2.0 * m * (m - 1)))


def bound_optimized(rho: DensityMatrix) -> float:
    """(2 ||C||_KF - (1 - tr rho_A^2) - (1 - tr rho_B^2)) / sqrt(2M(M-1)).

    The trace norm of the cross block already is the basis optimum (the
    singular value decomposition closes the search), so no basis argument
    exists.
    """
    _require_bipartite(rho)
    m, _ = _mn(rho)
    c = correlation_block(
        rho, 0, 1, gell_mann_basis(rho.dims[0]), gell_mann_basis(rho.dims[1])
    )
    ea = 1.0 - partial_trace(rho, (0,)).purity()
    eb = 1.0 - partial_trace(rho, (1,)).purity()
    return float((2.0 * trace_norm(c) - ea - eb) / np.sqrt(2.0 * m * (m - 1)))


def svd_rotated_bases(rho: DensityMatrix) -> tuple[ObservableBasis, ObservableBasis]:
    """Observable bases that attain the basis optimum of the variance bound.

    Rotates the Gell-Mann bases by the singular vectors of the cross
    block (with a sign flip on one side), making the paired cross
    correlations sum to minus the trace norm; bound_lur in these bases
    equals bound_optimized.  Equal local dimensions only.
    """
    _require_bipartite(rho)
    if rho.dims[0] != rho.dims[1]:
        raise ValueError("rotated-basis construction requires equal local dimensions")
    from .observables import rotate_basis

    ba = gell_mann_basis(rho.dims[0])
    bb = gell_mann_basis(rho.dims[1])
    c = correlation_block(rho, 0, 1, ba, bb)
    u, _, vt = np.linalg.svd(c)
    return rotate_basis(ba, u.T), rotate_basis(bb, -vt)


def all_bounds(rho: DensityMatrix, pure_vector: np.ndarray | None = None) -> ConcurrenceBounds:
    """Evaluate every bound; `pure_vector`, when given, supplies the exact
    pure-state value alongside."""
    _require_bipartite(rho)
    m, n = _mn(rho)
    exact = None
    if pure_vector is not None:
        exact = pure_concurrence(pure_vector, rho.dims)
    return ConcurrenceBounds(
        m=m,
        n=n,
        bound_ccnr_ppt=bound_ccnr_ppt(rho),
        bound_lur=bound_lur(rho),
        bound_optimized=bound_optimized(rho),
        exact_pure=exact,
        swapped=rho.dims[0] > rho.dims[1],
    )
