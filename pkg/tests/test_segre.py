import numpy as np
import pytest

from toepfact import (
    LinearQuadraticSystem,
    ToeplitzSpec,
    build_linear_quadratic_system,
    densify,
    export_system,
    generate_matrix,
    linear_values,
    quadratic_values,
    rank_one_coordinates,
    variable_index,
)
from toepfact.generate import complex_normal


class TestBuild:
    def test_counts_n2(self):
        system = build_linear_quadratic_system(generate_matrix(2, 0, "generic"))
        assert system.num_linear == 4
        assert system.num_quadratic == 9  # all 2x2 minors of a 3x3 coordinate grid
        assert system.num_unknowns == 9

    def test_counts_n3(self):
        system = build_linear_quadratic_system(generate_matrix(3, 0, "generic"))
        assert system.num_linear == 9
        assert system.num_quadratic == 100
        assert system.num_unknowns == 25

    def test_first_entry_row_n2(self):
        A = generate_matrix(2, 1, "generic")
        system = build_linear_quadratic_system(A)
        row = system.C[0]
        nonzero = set(np.nonzero(row)[0])
        # entry (1,1) of the product collects z_{0,0} and z_{1,-1}
        assert nonzero == {variable_index(2, 0, 0), variable_index(2, 1, -1)}
        assert np.all(row[sorted(nonzero)] == 1.0)
        assert system.d[0] == A[0, 0]

    def test_rejects_other_factor_counts(self):
        with pytest.raises(ValueError, match="gauss_newton_decompose"):
            build_linear_quadratic_system(np.eye(3), r=3)


class TestRankOneOracle:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_outer_product_solves_system(self, n):
        rng = np.random.default_rng((3, n))
        t1 = ToeplitzSpec(n, complex_normal(rng, 2 * n - 1))
        t2 = ToeplitzSpec(n, complex_normal(rng, 2 * n - 1))
        product = densify(t1) @ densify(t2)
        system = build_linear_quadratic_system(product)
        x = rank_one_coordinates(t1, t2)
        scale = np.max(np.abs(x)) ** 2
        assert np.max(np.abs(quadratic_values(system, x))) <= 1e-12 * scale
        assert np.allclose(linear_values(system, x), product.reshape(-1), atol=1e-12)


class TestExport:
    def test_line_count_n2(self):
        system = build_linear_quadratic_system(generate_matrix(2, 5, "generic"))
        text = export_system(system)
        lines = text.strip("\n").split("\n")
        assert len(lines) == 13  # 9 quadrics then 4 linear rows

    def test_deterministic(self):
        A = generate_matrix(3, 8, "generic")
        first = export_system(build_linear_quadratic_system(A))
        second = export_system(build_linear_quadratic_system(A))
        assert first == second

    def test_quadric_format(self):
        system = build_linear_quadratic_system(np.eye(2))
        line = export_system(system).split("\n")[0]
        assert line == "z_-1_-1*z_0_0 - z_-1_0*z_0_-1"

    def test_linear_only_degenerate_system(self):
        # single-factor flattening: identity linear part, no quadrics
        system = LinearQuadraticSystem(
            num_unknowns=3,
            var_names=("z_-1", "z_0", "z_1"),
            C=np.eye(3, dtype=np.complex128),
            d=np.array([1.0, 2.0, 3.0 - 0.5j]),
            quadratics=(),
        )
        text = export_system(system)
        lines = text.strip("\n").split("\n")
        assert len(lines) == 3
        assert lines[0].startswith("z_-1")

    def test_round_trip_counts(self):
        system = build_linear_quadratic_system(generate_matrix(3, 2, "generic"))
        text = export_system(system)
        lines = text.strip("\n").split("\n")
        quadric_lines = [ln for ln in lines if "*z" in ln and "I" not in ln]
        linear_lines = [ln for ln in lines if ln not in quadric_lines]
        assert len(quadric_lines) == system.num_quadratic
        assert len(linear_lines) == system.num_linear

    def test_unknown_format_rejected(self):
        system = build_linear_quadratic_system(np.eye(2))
        with pytest.raises(ValueError):
            export_system(system, format="json")
