import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toepfact import FormatError, generate_matrix, toeplitz_permutation_decompose
from toepfact.io import (
    format_chain,
    format_complex,
    format_matrix,
    parse_chain,
    parse_complex,
    parse_matrix,
)


class TestComplexLiterals:
    @pytest.mark.parametrize("text,value", [
        ("1.5", 1.5),
        ("2-0.25i", 2 - 0.25j),
        ("-3e-4+1e2i", -3e-4 + 1e2j),
        ("0", 0j),
    ])
    def test_parse(self, text, value):
        assert parse_complex(text) == value

    def test_bad_literal_carries_line(self):
        with pytest.raises(FormatError) as info:
            parse_complex("1+2j", line=7)
        assert info.value.line == 7

    @settings(max_examples=100, deadline=None)
    @given(st.complex_numbers(allow_nan=False, allow_infinity=False,
                              min_magnitude=0, max_magnitude=1e300))
    def test_round_trip(self, z):
        assert parse_complex(format_complex(z)) == z


class TestMatrixFiles:
    def test_round_trip_values_and_bytes(self):
        A = generate_matrix(5, 42, "generic")
        text = format_matrix(A)
        B = parse_matrix(text)
        assert np.array_equal(A, B)
        assert format_matrix(B) == text

    def test_header_shape(self):
        text = format_matrix(np.eye(2))
        assert text.splitlines()[0] == "toepfact-matrix v1 2 2"

    def test_bad_header(self):
        with pytest.raises(FormatError) as info:
            parse_matrix("toepfact-matrix v2 2 2\n1 0\n0 1\n")
        assert info.value.line == 1

    def test_row_count_mismatch(self):
        with pytest.raises(FormatError):
            parse_matrix("toepfact-matrix v1 2 2\n1 0\n")

    def test_entry_count_mismatch_names_line(self):
        with pytest.raises(FormatError) as info:
            parse_matrix("toepfact-matrix v1 2 2\n1 0\n0\n")
        assert info.value.line == 3

    def test_non_square_rejected(self):
        with pytest.raises(FormatError):
            parse_matrix("toepfact-matrix v1 2 3\n1 0 0\n0 1 0\n")


class TestChainFiles:
    def test_round_trip(self):
        A = generate_matrix(4, 3, "generic")
        chain = toeplitz_permutation_decompose(A)
        meta = {"method": "ge", "seed": 3, "residual": 1.25e-12}
        text = format_chain(chain, meta)
        parsed, parsed_meta = parse_chain(text)
        assert format_chain(parsed, parsed_meta) == text
        assert parsed_meta["residual"] == 1.25e-12
        assert parsed_meta["method"] == "ge"
        assert len(parsed.factors) == len(chain.factors)
        for f, g in zip(chain.factors, parsed.factors):
            assert type(f) is type(g)

    def test_leading_permutation_round_trip(self):
        from toepfact import hankel_permutation_decompose

        chain = hankel_permutation_decompose(generate_matrix(3, 9, "generic"))
        text = format_chain(chain)
        parsed, _ = parse_chain(text)
        assert parsed.leading_permutation is not None
        assert np.array_equal(parsed.leading_permutation.perm,
                              chain.leading_permutation.perm)
        assert format_chain(parsed) == text

    def test_factor_count_mismatch(self):
        text = "toepfact-chain v1 2 2\ntoeplitz 0 1 0\n"
        with pytest.raises(FormatError):
            parse_chain(text)

    def test_bad_permutation_images(self):
        text = "toepfact-chain v1 2 1\npermutation 1 1\n"
        with pytest.raises(FormatError):
            parse_chain(text)

    def test_unknown_kind_names_line(self):
        text = "toepfact-chain v1 2 1\ncirculant 1 2 3\n"
        with pytest.raises(FormatError) as info:
            parse_chain(text)
        assert info.value.line == 2
