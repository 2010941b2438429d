import numpy as np
import pytest

from tbtrellis import (
    PolyMatrix,
    coefficient_expansion,
    format_bits,
    format_state,
    mat_mul,
    nullspace,
    parse_bits,
    parse_state,
    poly_from_strings,
    rank,
    reciprocal,
    split_symbols,
)

from oracle import bitset_rank


def test_poly_from_strings_rate13(G1):
    assert G1.rows == 1 and G1.cols == 3
    assert G1.deg == 2
    expected = [[[1, 1, 1]], [[0, 0, 1]], [[0, 1, 1]]]
    for got, want in zip(coefficient_expansion(G1), expected):
        assert np.array_equal(got, np.array(want))


def test_poly_from_strings_parity(H1):
    assert (H1.rows, H1.cols, H1.deg) == (2, 3, 1)
    C = coefficient_expansion(H1)
    assert np.array_equal(C[0], np.array([[1, 0, 1], [0, 1, 1]]))
    assert np.array_equal(C[1], np.array([[1, 1, 1], [1, 0, 0]]))


def test_poly_from_strings_zero():
    Z = poly_from_strings([["0"]])
    assert Z.is_zero() and Z.deg == 0
    assert len(coefficient_expansion(Z)) == 1


def test_poly_from_strings_rejects_ragged():
    with pytest.raises(ValueError):
        poly_from_strings([["1", "1"], ["1"]])


def test_poly_from_strings_rejects_bad_characters():
    with pytest.raises(ValueError):
        poly_from_strings([["1", "1x1"]])
    with pytest.raises(ValueError):
        poly_from_strings([["1", ""]])


def test_string_round_trip(G1, H1):
    for P in (G1, H1, poly_from_strings([["0", "01"], ["1", "0011"]])):
        assert poly_from_strings(P.to_strings()) == P


def test_coefficient_expansion_constant():
    P = poly_from_strings([["1", "0"], ["1", "1"]])
    C = coefficient_expansion(P)
    assert len(C) == 1
    assert np.array_equal(C[0], np.array([[1, 0], [1, 1]]))


def test_reciprocal_swaps_parity_coefficients(H1):
    Ht = reciprocal(H1)
    C, Ct = coefficient_expansion(H1), coefficient_expansion(Ht)
    assert np.array_equal(Ct[0], C[1])
    assert np.array_equal(Ct[1], C[0])
    assert Ht.to_strings() == [["11", "1", "11"], ["1", "01", "01"]]


def test_reciprocal_generator(G1):
    assert reciprocal(G1).to_strings() == [["001", "101", "111"]]


def test_reciprocal_constant_is_identity():
    P = poly_from_strings([["1", "0"]])
    assert reciprocal(P) == P


def test_reciprocal_involution(G1, H1):
    rng = np.random.default_rng(7)
    mats = [G1, H1]
    for _ in range(20):
        coeffs = rng.integers(0, 2, size=(rng.integers(1, 4), 2, 3))
        mats.append(PolyMatrix(list(coeffs)))
    for P in mats:
        assert reciprocal(reciprocal(P)) == P


def test_generator_parity_product_is_zero(G1, H1, G2, H2):
    assert (G1 * H1.transpose()).is_zero()
    assert (G2 * H2.transpose()).is_zero()


def test_poly_product_dimension_mismatch(G1, H1):
    with pytest.raises(ValueError):
        G1 * H1  # 1x3 times 2x3


def test_mat_mul_and_errors():
    A = np.array([[1, 1], [0, 1]], dtype=np.uint8)
    B = np.array([[1], [1]], dtype=np.uint8)
    assert np.array_equal(mat_mul(A, B), np.array([[0], [1]]))
    with pytest.raises(ValueError):
        mat_mul(A, np.ones((3, 1), dtype=np.uint8))


def test_rank_identity():
    assert rank(np.eye(4, dtype=np.uint8)) == 4


def test_rank_nullity_random():
    """rank + nullity = cols, basis vectors lie in the kernel, rank matches
    an independent bitset elimination."""
    rng = np.random.default_rng(11)
    for _ in range(50):
        m, n = rng.integers(1, 33, size=2)
        A = rng.integers(0, 2, size=(m, n)).astype(np.uint8)
        r = rank(A)
        basis = nullspace(A)
        assert r + basis.shape[0] == n
        assert r == bitset_rank(A)
        for v in basis:
            assert not (mat_mul(A, v.reshape(-1, 1)) % 2).any()
        assert rank(basis) == basis.shape[0] if basis.size else True


def test_bit_parsing_and_formatting():
    bits = parse_bits("111 110_000")
    assert bits.tolist() == [1, 1, 1, 1, 1, 0, 0, 0, 0]
    assert format_bits(bits, group=3) == "111 110 000"
    assert format_bits(bits) == "111110000"
    assert split_symbols(bits, 3) == [(1, 1, 1), (1, 1, 0), (0, 0, 0)]
    with pytest.raises(ValueError):
        parse_bits("10x")
    with pytest.raises(ValueError):
        split_symbols(bits, 2)


def test_state_formatting():
    assert format_state((1, 0)) == "(1,0)"
    assert format_state(()) == "()"
    assert parse_state("(1,0)") == (1, 0)
    assert parse_state("10") == (1, 0)
    assert parse_state("1, 0") == (1, 0)
    with pytest.raises(ValueError):
        parse_state("(1,2)")
