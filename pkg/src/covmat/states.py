"""State constructors: the 3x3 bound entangled tiles state, maximally
entangled states, products, isotropic states, convex mixtures and seeded
random ensembles, plus the text/file vocabulary the CLI accepts.
"""
from __future__ import annotations

import json
from functools import reduce
from pathlib import Path

import numpy as np

from .linalg import DensityMatrix, InvalidStateError


def ket(d: int, i: int) -> np.ndarray:
    v = np.zeros(d, dtype=complex)
    v[i] = 1.0
    return v


def dm_from_vector(psi: np.ndarray, dims) -> DensityMatrix:
    psi = np.asarray(psi, dtype=complex)
    nrm = np.linalg.norm(psi)
    if abs(nrm - 1.0) > 1e-10:
        raise InvalidStateError(f"state vector norm differs from 1 by {abs(nrm - 1.0):.3e}")
    return DensityMatrix(tuple(dims), np.outer(psi, psi.conj()))


def bennett_state() -> DensityMatrix:
    """Rank-4 bound entangled two-qutrit state built from five tile vectors.

    rho = (I_9 - sum_i |xi_i><xi_i|) / 4 with the tiles spanning a
    5-dimensional subspace; rho is PPT yet entangled.
    """
    e = [ket(3, i) for i in range(3)]
    s = (e[0] + e[1] + e[2]) / np.sqrt(3)
    tiles = [
        np.kron(e[0], (e[0] - e[1]) / np.sqrt(2)),
        np.kron((e[0] - e[1]) / np.sqrt(2), e[2]),
        np.kron(e[2], (e[1] - e[2]) / np.sqrt(2)),
        np.kron((e[1] - e[2]) / np.sqrt(2), e[0]),
        np.kron(s, s),
    ]
    proj = sum(np.outer(t, t.conj()) for t in tiles)
    return DensityMatrix((3, 3), (np.eye(9) - proj) / 4)


def max_entangled(d: int) -> DensityMatrix:
    """(1/sqrt(d)) sum_i |ii> as a density matrix."""
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    psi = sum(np.kron(ket(d, i), ket(d, i)) for i in range(d)) / np.sqrt(d)
    return dm_from_vector(psi, (d, d))


def product_state(locals_: list[DensityMatrix]) -> DensityMatrix:
    """Tensor product of single-party states."""
    mats = [r.mat for r in locals_]
    dims = tuple(d for r in locals_ for d in r.dims)
    return DensityMatrix(dims, reduce(np.kron, mats))


def isotropic(d: int, x: float) -> DensityMatrix:
    """x * MES_d + (1 - x) * I / d^2."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"mixing parameter must be in [0, 1], got {x}")
    mes = max_entangled(d)
    return DensityMatrix((d, d), x * mes.mat + (1 - x) * np.eye(d * d) / (d * d))


def mix(a: DensityMatrix, b: DensityMatrix, x: float) -> DensityMatrix:
    """(1 - x) * a + x * b."""
    if a.dims != b.dims:
        raise ValueError(f"dimension mismatch: {a.dims} vs {b.dims}")
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"mixing parameter must be in [0, 1], got {x}")
    return DensityMatrix(a.dims, (1 - x) * a.mat + x * b.mat)


def random_pure(dims, seed) -> DensityMatrix:
    """Haar-random pure state via a normalized complex Gaussian vector."""
    rng = np.random.default_rng(seed)
    D = int(np.prod(dims))
    psi = rng.standard_normal(D) + 1j * rng.standard_normal(D)
    return dm_from_vector(psi / np.linalg.norm(psi), tuple(dims))


def random_mixed(dims, seed, rank: int | None = None) -> DensityMatrix:
    """Random mixed state rho = G G^dag / Tr(...) with Gaussian G."""
    rng = np.random.default_rng(seed)
    D = int(np.prod(dims))
    r = rank or D
    g = rng.standard_normal((D, r)) + 1j * rng.standard_normal((D, r))
    m = g @ g.conj().T
    return DensityMatrix(tuple(dims), m / np.trace(m).real)


def random_separable(dims, terms: int, seed) -> DensityMatrix:
    """Convex mixture of `terms` random pure product states.

    Local factors are Haar-random pure states, weights Dirichlet-uniform;
    fully reproducible from the seed.
    """
    if terms < 1:
        raise ValueError(f"need at least one term, got {terms}")
    rng = np.random.default_rng(seed)
    dims = tuple(int(d) for d in dims)
    D = int(np.prod(dims))
    weights = rng.dirichlet(np.ones(terms))
    acc = np.zeros((D, D), dtype=complex)
    for w in weights:
        factors = []
        for d in dims:
            v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
            factors.append(v / np.linalg.norm(v))
        psi = reduce(np.kron, factors)
        acc += w * np.outer(psi, psi.conj())
    return DensityMatrix(dims, acc)


def load_state(path) -> DensityMatrix:
    """Load a state from a JSON file: {"dims": [...], "matrix": [[[re, im], ...], ...]}."""
    with open(path) as fh:
        data = json.load(fh)
    dims = tuple(int(d) for d in data["dims"])
    rows = data["matrix"]
    mat = np.array([[complex(c[0], c[1]) for c in row] for row in rows])
    return DensityMatrix(dims, mat)


def save_state(rho: DensityMatrix, path) -> None:
    data = {
        "dims": list(rho.dims),
        "matrix": [[[z.real, z.imag] for z in row] for row in rho.mat],
    }
    Path(path).write_text(json.dumps(data))


def _parse_dims(text: str) -> tuple[int, ...]:
    try:
        dims = tuple(int(p) for p in text.split("x"))
    except ValueError:
        raise ValueError(f"bad dimension list {text!r}, expected e.g. '3x3'") from None
    if not dims:
        raise ValueError(f"bad dimension list {text!r}")
    return dims


def build_state(spec: str) -> DensityMatrix:
    """Resolve a textual state description.

    Grammar (colon-separated fields):
      bennett3x3
      mes:<d>
      isotropic:<d>:<x>
      product:<d1>,<d2>[,...]            computational |0...0>
      random_pure:<d1>x<d2>[x...]:<seed>
      random_separable:<dims>:<terms>:<seed>
      mix:<x>:<specA>+<specB>            (1-x)*A + x*B
      file:<path>
    """
    spec = spec.strip()
    if spec == "bennett3x3":
        return bennett_state()
    head, _, rest = spec.partition(":")
    if head == "mes":
        return max_entangled(int(rest))
    if head == "isotropic":
        d, x = rest.split(":")
        return isotropic(int(d), float(x))
    if head == "product":
        dims = [int(p) for p in rest.split(",")]
        return product_state([dm_from_vector(ket(d, 0), (d,)) for d in dims])
    if head == "random_pure":
        dims, seed = rest.split(":")
        return random_pure(_parse_dims(dims), int(seed))
    if head == "random_separable":
        dims, terms, seed = rest.split(":")
        return random_separable(_parse_dims(dims), int(terms), int(seed))
    if head == "mix":
        x, _, pair = rest.partition(":")
        a, _, b = pair.partition("+")
        return mix(build_state(a), build_state(b), float(x))
    if head == "file":
        return load_state(rest)
    raise ValueError(f"unknown state spec {spec!r}")
