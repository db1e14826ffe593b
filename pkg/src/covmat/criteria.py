"""Separability criteria and structured verdicts.

Every criterion is a necessary condition for (full or partial)
separability: a violated inequality certifies entanglement, a satisfied
one is inconclusive.  Bipartite criteria compare norms of the
cross-correlation block C against linear-entropy factors 1 - tr(rho_i^2);
PPT and CCNR are included as baselines.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .covariance import correlation_block
from .linalg import (
    DensityMatrix,
    hs_norm,
    min_eigenvalue,
    partial_trace,
    partial_transpose,
    realign,
    trace_norm,
)
from .observables import gell_mann_basis

DECISION_TOL = 1e-9

ENTANGLED = "ENTANGLED"
INCONCLUSIVE = "INCONCLUSIVE"
BOUNDARY = "BOUNDARY"

TRIPARTITE_PARTITIONS = ("A|BC", "AB|C", "AC|B")

# Pairs whose cross blocks a biseparable state still constrains:
# the block between the split-off party and anything else is zero, so only
# the listed inequalities survive the concavity argument.
_BISEP_PAIRS = {
    "A|BC": ((0, 1), (0, 2)),
    "AB|C": ((0, 2), (1, 2)),
    "AC|B": ((0, 1), (1, 2)),
}


@dataclass(frozen=True)
class CriterionVerdict:
    """One evaluated inequality.  ENTANGLED iff lhs exceeds rhs beyond
    the decision tolerance; BOUNDARY when the margin is within it."""

    name: str
    lhs: float
    rhs: float
    margin: float
    conclusion: str
    details: dict = field(default_factory=dict)


@dataclass(frozen=True)
class MultipartiteReport:
    """Aggregated pairwise verdicts for an N-party state."""

    pair_verdicts: dict[tuple[int, int], dict[str, CriterionVerdict]]
    full_sep_refuted: bool
    bisep_refuted: dict[str, bool]
    fully_entangled: bool


def make_verdict(name, lhs, rhs, tol=DECISION_TOL, details=None) -> CriterionVerdict:
    margin = lhs - rhs
    if margin > tol:
        conclusion = ENTANGLED
    elif abs(margin) <= tol:
        conclusion = BOUNDARY
    else:
        conclusion = INCONCLUSIVE
    return CriterionVerdict(name, float(lhs), float(rhs), float(margin), conclusion,
                            details or {})


def _require_bipartite(rho: DensityMatrix, what: str):
    if rho.n_parties != 2:
        raise ValueError(f"{what} requires a bipartite state, got {rho.n_parties} parties")


def _cross_block(rho: DensityMatrix, i: int, j: int) -> np.ndarray:
    return correlation_block(
        rho, i, j, gell_mann_basis(rho.dims[i]), gell_mann_basis(rho.dims[j])
    )


def _linear_entropies(rho: DensityMatrix) -> list[float]:
    return [1.0 - partial_trace(rho, (k,)).purity() for k in range(rho.n_parties)]


def kf_criterion(rho: DensityMatrix, tol: float = DECISION_TOL) -> CriterionVerdict:
    """Trace-norm criterion: ||C||_KF <= ((1-tr rho_A^2) + (1-tr rho_B^2)) / 2.

    The sum of |C_ii| in the plain Gell-Mann basis (its basis-dependent
    precursor) is reported in details.
    """
    _require_bipartite(rho, "trace-norm criterion")
    c = _cross_block(rho, 0, 1)
    ea, eb = _linear_entropies(rho)
    diag_sum = float(np.abs(np.diagonal(c)).sum())
    return make_verdict("kf", trace_norm(c), (ea + eb) / 2, tol,
                        details={"diag_abs_sum": diag_sum})


def hs_criterion(rho: DensityMatrix, tol: float = DECISION_TOL) -> CriterionVerdict:
    """Frobenius criterion: ||C||_HS^2 <= (1-tr rho_A^2)(1-tr rho_B^2)."""
    _require_bipartite(rho, "Frobenius criterion")
    c = _cross_block(rho, 0, 1)
    ea, eb = _linear_entropies(rho)
    return make_verdict("hs", hs_norm(c) ** 2, ea * eb, tol)


def ppt_criterion(rho: DensityMatrix, tol: float = DECISION_TOL) -> CriterionVerdict:
    """Positive partial transpose baseline; lhs is minus the smallest
    eigenvalue of rho^(T_A)."""
    _require_bipartite(rho, "PPT criterion")
    lam = min_eigenvalue(partial_transpose(rho, 0))
    return make_verdict("ppt", -lam, 0.0, tol, details={"min_eigenvalue": lam})


def ccnr_criterion(rho: DensityMatrix, tol: float = DECISION_TOL) -> CriterionVerdict:
    """Realignment baseline: trace norm of the reshuffled state vs 1."""
    _require_bipartite(rho, "CCNR criterion")
    return make_verdict("ccnr", trace_norm(realign(rho)), 1.0, tol)


def _pair_verdicts(rho: DensityMatrix, pairs, tol) -> dict:
    ent = _linear_entropies(rho)
    out = {}
    for (i, j) in pairs:
        c = _cross_block(rho, i, j)
        out[(i, j)] = {
            "hs": make_verdict(f"hs_{i}{j}", hs_norm(c) ** 2, ent[i] * ent[j], tol),
            "kf": make_verdict(f"kf_{i}{j}", trace_norm(c), (ent[i] + ent[j]) / 2, tol),
        }
    return out


def _count_violations(pair_verdicts) -> tuple[int, int]:
    hs = sum(1 for v in pair_verdicts.values() if v["hs"].conclusion == ENTANGLED)
    kf = sum(1 for v in pair_verdicts.values() if v["kf"].conclusion == ENTANGLED)
    return hs, kf


def multipartite_full_sep(rho: DensityMatrix, tol: float = DECISION_TOL) -> MultipartiteReport:
    """Full-separability test for N parties: every cross block must obey
    both norm inequalities.  Two violations within one norm family imply
    the state is fully entangled (no bipartite cut is separable)."""
    pairs = [(i, j) for i in range(rho.n_parties) for j in range(i + 1, rho.n_parties)]
    verdicts = _pair_verdicts(rho, pairs, tol)
    hs_v, kf_v = _count_violations(verdicts)
    return MultipartiteReport(
        pair_verdicts=verdicts,
        full_sep_refuted=hs_v + kf_v > 0,
        bisep_refuted={},
        fully_entangled=hs_v >= 2 or kf_v >= 2,
    )


def tripartite_full_sep(rho: DensityMatrix, tol: float = DECISION_TOL) -> MultipartiteReport:
    """All six cross-block inequalities (blocks D, E, F; both norms)."""
    if rho.n_parties != 3:
        raise ValueError(f"tripartite test requires 3 parties, got {rho.n_parties}")
    return multipartite_full_sep(rho, tol)


def tripartite_bisep(
    rho: DensityMatrix, partition: str, tol: float = DECISION_TOL
) -> MultipartiteReport:
    """Test biseparability across one partition; only the four
    inequalities that partition implies are evaluated."""
    if rho.n_parties != 3:
        raise ValueError(f"biseparability test requires 3 parties, got {rho.n_parties}")
    if partition not in _BISEP_PAIRS:
        raise ValueError(f"unknown partition {partition!r}, expected one of {TRIPARTITE_PARTITIONS}")
    verdicts = _pair_verdicts(rho, _BISEP_PAIRS[partition], tol)
    hs_v, kf_v = _count_violations(verdicts)
    refuted = hs_v + kf_v > 0
    return MultipartiteReport(
        pair_verdicts=verdicts,
        full_sep_refuted=refuted,
        bisep_refuted={partition: refuted},
        fully_entangled=hs_v >= 2 or kf_v >= 2,
    )
