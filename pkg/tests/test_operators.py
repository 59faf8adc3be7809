import numpy as np
import pytest

from toepfact import (
    HankelSpec,
    ToeplitzSpec,
    apply_operator,
    densify,
    exchange_matrix,
    exchange_permutation,
    generate_matrix,
    hankel_from_toeplitz,
    shift_basis,
    toeplitz_from_dense,
)
from toepfact.structmat import hankel_deviation, toeplitz_deviation

A333 = np.arange(1, 10, dtype=np.complex128).reshape(3, 3)


class TestDisplays:
    def test_rotate(self):
        expected = np.array([[3, 6, 9], [2, 5, 8], [1, 4, 7]])
        assert np.array_equal(apply_operator(A333, "R"), expected)

    def test_swap(self):
        expected = np.array([[3, 2, 1], [6, 5, 4], [9, 8, 7]])
        assert np.array_equal(apply_operator(A333, "S"), expected)

    def test_flip(self):
        expected = np.array([[7, 8, 9], [4, 5, 6], [1, 2, 3]])
        assert np.array_equal(apply_operator(A333, "F"), expected)

    def test_transpose(self):
        assert np.array_equal(apply_operator(A333, "T"), A333.T)

    def test_unknown_operator(self):
        with pytest.raises(ValueError):
            apply_operator(A333, "Q")


def _rand(n, seed):
    return generate_matrix(n, seed, "generic")


class TestInvolutions:
    @pytest.mark.parametrize("seed", range(5))
    @pytest.mark.parametrize("n", [1, 2, 3, 6])
    def test_exact_involutions(self, n, seed):
        A = _rand(n, seed)
        assert np.array_equal(apply_operator(apply_operator(A, "S"), "S"), A)
        assert np.array_equal(apply_operator(apply_operator(A, "F"), "F"), A)
        R4 = A
        for _ in range(4):
            R4 = apply_operator(R4, "R")
        assert np.array_equal(R4, A)


def _op(A, ops):
    for op in ops:
        A = apply_operator(A, op)
    return A


class TestProductIdentities:
    """Index-permutation identities relating operators and products."""

    @pytest.mark.parametrize("seed", range(8))
    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_all_clauses(self, n, seed):
        A = _rand(n, (seed, 0))
        B = _rand(n, (seed, 1))
        AB = A @ B
        norm = np.linalg.norm(AB)
        # rotation anti-distributes over products, two equivalent forms
        assert np.linalg.norm(_op(AB, "R") - _op(B, "RS") @ _op(A, "R")) <= 1e-12 * norm
        assert np.linalg.norm(_op(AB, "R") - _op(B, "R") @ _op(A, "RF")) <= 1e-12 * norm
        # swap-then-rotate and rotate-then-flip both transpose (no
        # arithmetic, so these are bitwise)
        assert np.array_equal(_op(A, "SR"), A.T)
        assert np.array_equal(_op(A, "RF"), A.T)
        # swap and flip act on one side of a product only; both sides
        # multiply, so roundoff-level tolerance applies
        assert np.linalg.norm(_op(AB, "S") - A @ _op(B, "S")) <= 1e-12 * norm
        assert np.linalg.norm(_op(AB, "F") - _op(A, "F") @ B) <= 1e-12 * norm

    @pytest.mark.parametrize("r", [3, 4, 5])
    def test_chain_identity(self, r):
        mats = [_rand(5, (99, r, i)) for i in range(r)]
        swapped = [_op(M, "S") for M in mats]
        lhs = _op(np.linalg.multi_dot(swapped), "R")
        head = swapped[0] if r == 3 else np.linalg.multi_dot(swapped[:r - 2])
        rhs = _op(mats[-1], "SR") @ _op(mats[-2], "SRSF") @ _op(head, "R")
        assert np.linalg.norm(lhs - rhs) <= 1e-12 * np.linalg.norm(lhs)


class TestStructureTransport:
    @pytest.mark.parametrize("op", ["R", "S", "F"])
    def test_hankel_becomes_toeplitz(self, op, rng):
        H = densify(HankelSpec(5, rng.standard_normal(9) + 1j * rng.standard_normal(9)))
        assert toeplitz_deviation(apply_operator(H, op)) == 0.0

    @pytest.mark.parametrize("op", ["R", "S", "F"])
    def test_toeplitz_becomes_hankel(self, op, rng):
        T = densify(ToeplitzSpec(5, rng.standard_normal(9)))
        assert hankel_deviation(apply_operator(T, op)) == 0.0


class TestHankelFromToeplitz:
    def test_identity_left_gives_anti_identity(self):
        H = hankel_from_toeplitz(shift_basis(0, 4), side="left")
        assert np.array_equal(densify(H), exchange_matrix(4))

    @pytest.mark.parametrize("side", ["left", "right"])
    def test_dense_oracle(self, side, rng):
        t = ToeplitzSpec(6, rng.standard_normal(11) + 1j * rng.standard_normal(11))
        H = hankel_from_toeplitz(t, side=side)
        P = exchange_matrix(6)
        expected = P @ densify(t) if side == "left" else densify(t) @ P
        assert np.array_equal(densify(H), expected)

    def test_rotation_recovers_toeplitz(self, rng):
        t = ToeplitzSpec(5, rng.standard_normal(9))
        H = hankel_from_toeplitz(t, side="right")
        back = apply_operator(densify(H), "R")
        toeplitz_from_dense(back)  # raises if structure was lost

    def test_bad_side(self):
        with pytest.raises(ValueError):
            hankel_from_toeplitz(ToeplitzSpec(2, [0, 1, 0]), side="top")


def test_exchange_permutation_matches_dense():
    assert np.array_equal(densify(exchange_permutation(5)), exchange_matrix(5))
