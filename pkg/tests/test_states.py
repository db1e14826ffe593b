import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from covmat.linalg import min_eigenvalue, partial_transpose
from covmat.states import (
    bennett_state,
    build_state,
    dm_from_vector,
    isotropic,
    ket,
    load_state,
    max_entangled,
    mix,
    product_state,
    random_pure,
    random_separable,
    save_state,
)


class TestBennettState:
    def test_trace_and_rank(self):
        rho = bennett_state()
        assert rho.mat.trace().real == pytest.approx(1.0, abs=1e-12)
        evs = np.linalg.eigvalsh(rho.mat)
        np.testing.assert_allclose(evs[:5], 0.0, atol=1e-12)
        np.testing.assert_allclose(evs[5:], 0.25, atol=1e-12)

    def test_ppt(self):
        assert min_eigenvalue(partial_transpose(bennett_state(), 0)) >= -1e-10

    def test_tile_vectors_orthogonal_and_in_kernel(self):
        e = [ket(3, i) for i in range(3)]
        s = (e[0] + e[1] + e[2]) / np.sqrt(3)
        tiles = [
            np.kron(e[0], (e[0] - e[1]) / np.sqrt(2)),
            np.kron((e[0] - e[1]) / np.sqrt(2), e[2]),
            np.kron(e[2], (e[1] - e[2]) / np.sqrt(2)),
            np.kron((e[1] - e[2]) / np.sqrt(2), e[0]),
            np.kron(s, s),
        ]
        gram = np.array([[np.vdot(a, b) for b in tiles] for a in tiles])
        np.testing.assert_allclose(gram, np.eye(5), atol=1e-12)
        rho = bennett_state()
        for t in tiles:
            assert abs(np.vdot(t, rho.mat @ t)) <= 1e-12


class TestMaxEntangled:
    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_reduced_state_maximally_mixed(self, d):
        from covmat.linalg import partial_trace

        red = partial_trace(max_entangled(d), [1])
        np.testing.assert_allclose(red.mat, np.eye(d) / d, atol=1e-12)

    def test_purity_one(self):
        assert max_entangled(3).purity() == pytest.approx(1.0, abs=1e-12)


class TestMix:
    def test_endpoints(self):
        a, b = bennett_state(), max_entangled(3)
        np.testing.assert_array_equal(mix(a, b, 0.0).mat, a.mat)
        np.testing.assert_array_equal(mix(a, b, 1.0).mat, b.mat)

    def test_halfway_entrywise_average(self):
        a = dm_from_vector(ket(4, 0), (2, 2))
        b = dm_from_vector(ket(4, 3), (2, 2))
        np.testing.assert_allclose(mix(a, b, 0.5).mat, (a.mat + b.mat) / 2, atol=1e-15)

    def test_bad_weight(self):
        with pytest.raises(ValueError):
            mix(bennett_state(), max_entangled(3), 1.5)

    def test_dim_mismatch(self):
        with pytest.raises(ValueError):
            mix(max_entangled(2), max_entangled(3), 0.5)


class TestRandomStates:
    def test_single_term_is_product(self):
        from covmat.covariance import correlation_block
        from covmat.observables import gell_mann_basis

        rho = random_separable((2, 3), 1, 42)
        b2, b3 = gell_mann_basis(2), gell_mann_basis(3)
        block = correlation_block(rho, 0, 1, b2, b3)
        np.testing.assert_allclose(block, 0, atol=1e-10)

    def test_seed_determinism(self):
        a = random_separable((3, 3), 5, 123)
        b = random_separable((3, 3), 5, 123)
        np.testing.assert_array_equal(a.mat, b.mat)
        c = random_pure((2, 2), 7)
        d = random_pure((2, 2), 7)
        np.testing.assert_array_equal(c.mat, d.mat)

    @given(st.integers(0, 10_000))
    @settings(max_examples=25, deadline=None)
    def test_outputs_are_valid_states(self, seed):
        rho = random_separable((2, 2, 2), 3, seed)
        assert abs(rho.mat.trace() - 1) <= 1e-10
        assert np.linalg.eigvalsh(rho.mat).min() >= -1e-10

    def test_terms_below_one_rejected(self):
        with pytest.raises(ValueError):
            random_separable((2, 2), 0, 0)


class TestFileRoundTrip:
    def test_save_load(self, tmp_path):
        path = tmp_path / "state.json"
        rho = random_separable((2, 3), 4, 9)
        save_state(rho, path)
        loaded = load_state(path)
        assert loaded.dims == rho.dims
        np.testing.assert_allclose(loaded.mat, rho.mat, atol=1e-15)


class TestBuildState:
    def test_named_states(self):
        np.testing.assert_allclose(build_state("bennett3x3").mat, bennett_state().mat)
        np.testing.assert_allclose(build_state("mes:3").mat, max_entangled(3).mat)
        np.testing.assert_allclose(
            build_state("isotropic:2:0.25").mat, isotropic(2, 0.25).mat
        )

    def test_product_spec(self):
        rho = build_state("product:2,3")
        assert rho.dims == (2, 3)
        assert rho.purity() == pytest.approx(1.0, abs=1e-12)

    def test_mix_spec(self):
        rho = build_state("mix:0.3:bennett3x3+mes:3")
        np.testing.assert_allclose(
            rho.mat, mix(bennett_state(), max_entangled(3), 0.3).mat, atol=1e-15
        )

    def test_random_specs_deterministic(self):
        a = build_state("random_separable:3x3:5:11")
        b = build_state("random_separable:3x3:5:11")
        np.testing.assert_array_equal(a.mat, b.mat)

    def test_unknown_spec(self):
        with pytest.raises(ValueError):
            build_state("nonsense:1:2")


def test_isotropic_weights():
    rho = isotropic(3, 0.0)
    np.testing.assert_allclose(rho.mat, np.eye(9) / 9, atol=1e-15)
    rho = isotropic(3, 1.0)
    np.testing.assert_allclose(rho.mat, max_entangled(3).mat, atol=1e-15)


def test_product_state_dims_flatten():
    rho = product_state([bennett_state(), max_entangled(2)])
    assert rho.dims == (3, 3, 2, 2)
