import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toepfact import (
    FactorChain,
    HankelSpec,
    PermutationSpec,
    ToeplitzSpec,
    dense_product,
    densify,
    generate_matrix,
    hankel_from_dense,
    relative_residual,
    shift_basis,
    toeplitz_from_dense,
)
from toepfact.structmat import (
    circulant_deviation,
    hankel_deviation,
    toeplitz_deviation,
)


class TestShiftBasis:
    def test_zero_offset_is_identity(self):
        assert np.array_equal(densify(shift_basis(0, 3)), np.eye(3))

    def test_superdiagonal_placement(self):
        B1 = densify(shift_basis(1, 5))
        expected = np.zeros((5, 5))
        expected[np.arange(4), np.arange(1, 5)] = 1.0
        assert np.array_equal(B1, expected)

    def test_corner_for_maximal_offset(self):
        for n in (2, 4, 7):
            B = densify(shift_basis(n - 1, n))
            expected = np.zeros((n, n))
            expected[0, n - 1] = 1.0
            assert np.array_equal(B, expected)

    def test_negation_transposes(self):
        for k in range(-3, 4):
            assert np.array_equal(densify(shift_basis(-k, 4)),
                                  densify(shift_basis(k, 4)).T)

    @pytest.mark.parametrize("k,n", [(3, 3), (-3, 3), (10, 4)])
    def test_out_of_range_offset(self, k, n):
        with pytest.raises(ValueError):
            shift_basis(k, n)


class TestDensify:
    def test_toeplitz_2x2_layout(self):
        # diag stores [below, main, above]
        M = densify(ToeplitzSpec(2, [4.0, 1.0, 2.0]))
        assert np.array_equal(M, np.array([[1, 2], [4, 1]]))

    def test_permutation_swap(self):
        M = densify(PermutationSpec(2, [1, 0]))
        assert np.array_equal(M, np.array([[0, 1], [1, 0]]))

    def test_left_shift_action(self):
        A = np.arange(1, 10, dtype=np.complex128).reshape(3, 3)
        shifted = densify(shift_basis(1, 3)) @ A
        expected = np.vstack([A[1:], np.zeros((1, 3))])
        assert np.array_equal(shifted, expected)

    def test_right_shift_action(self):
        A = np.arange(1, 10, dtype=np.complex128).reshape(3, 3)
        shifted = A @ densify(shift_basis(1, 3))
        expected = np.hstack([np.zeros((3, 1)), A[:, :2]])
        assert np.array_equal(shifted, expected)

    def test_hankel_layout(self):
        M = densify(HankelSpec(2, [1.0, 2.0, 3.0]))
        assert np.array_equal(M, np.array([[1, 2], [2, 3]]))


class TestValidation:
    def test_rejects_nan(self):
        with pytest.raises(ValueError):
            ToeplitzSpec(2, [1.0, np.nan, 0.0])

    def test_rejects_wrong_length(self):
        with pytest.raises(ValueError):
            ToeplitzSpec(3, [1.0, 2.0])

    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            PermutationSpec(3, [0, 0, 2])

    def test_specs_are_immutable(self):
        t = ToeplitzSpec(2, [1.0, 2.0, 3.0])
        with pytest.raises(ValueError):
            t.diag[0] = 5.0

    def test_chain_rejects_mixed_dimensions(self):
        with pytest.raises(ValueError):
            FactorChain(2, (shift_basis(0, 2), shift_basis(0, 3)))


class TestDenseProduct:
    def test_identity_pair(self):
        chain = FactorChain(3, (shift_basis(0, 3), shift_basis(0, 3)))
        assert np.array_equal(dense_product(chain), np.eye(3))

    def test_empty_chain_rejected(self):
        with pytest.raises(ValueError):
            dense_product(FactorChain(3, ()))

    def test_leading_permutation_applies_first(self):
        lead = PermutationSpec(2, [1, 0])
        t = ToeplitzSpec(2, [0.0, 1.0, 2.0])
        chain = FactorChain(2, (t,), leading_permutation=lead)
        assert np.allclose(dense_product(chain), densify(lead) @ densify(t))


class TestStructureDetection:
    def test_round_trip_toeplitz(self, rng):
        diag = rng.standard_normal(9) + 1j * rng.standard_normal(9)
        spec = ToeplitzSpec(5, diag)
        again = toeplitz_from_dense(densify(spec))
        assert np.array_equal(again.diag, spec.diag)

    def test_round_trip_hankel(self, rng):
        anti = rng.standard_normal(7) + 1j * rng.standard_normal(7)
        spec = HankelSpec(4, anti)
        again = hankel_from_dense(densify(spec))
        assert np.array_equal(again.anti, spec.anti)

    def test_generic_matrix_fails_detections(self):
        A = generate_matrix(5, 2, "generic")
        assert toeplitz_deviation(A) > 1e-3
        assert hankel_deviation(A) > 1e-3
        assert circulant_deviation(A) > 1e-3
        with pytest.raises(ValueError):
            toeplitz_from_dense(A)

    def test_generated_kinds_have_their_structure(self):
        assert toeplitz_deviation(generate_matrix(6, 3, "toeplitz")) == 0.0
        assert hankel_deviation(generate_matrix(6, 3, "hankel")) == 0.0
        assert circulant_deviation(generate_matrix(6, 3, "circulant")) == 0.0


def test_relative_residual_zero_matrix_falls_back_to_absolute():
    X = np.full((2, 2), 0.5)
    assert relative_residual(X, np.zeros((2, 2))) == pytest.approx(1.0)


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=1, max_value=8), st.integers(min_value=0, max_value=2**32 - 1))
def test_toeplitz_diagonals_are_constant(n, seed):
    rng = np.random.default_rng(seed)
    spec = ToeplitzSpec(n, rng.standard_normal(2 * n - 1))
    M = densify(spec)
    for i in range(n - 1):
        for j in range(n - 1):
            assert M[i, j] == M[i + 1, j + 1]
