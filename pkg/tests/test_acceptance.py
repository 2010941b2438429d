"""Acceptance gate: the golden worked example and the exhaustive/randomized
property suites, each criterion reported with its own pass/fail line.

GF(2) arithmetic is exact, so every comparison is bit-exact.  Run with
``pytest tests/test_acceptance.py -s`` to see the per-criterion lines.
"""

from contextlib import contextmanager

import numpy as np

from tbtrellis import (
    backward_error_anchor,
    backward_sigma_fin,
    backward_syndromes,
    build_backward_error_trellis,
    build_tailbiting_error_trellis,
    decode_tailbiting,
    dual_state_of,
    enc_state_space,
    enumerate_paths,
    error_anchor,
    eta_from_zeta,
    hscalar_tailbiting,
    is_tailbiting_codeword,
    rank,
    reciprocal,
    sf_run,
    sf_step,
    sigma_fin,
    split_symbols,
    tailbiting_syndromes,
    xor_states,
)

from oracle import all_tailbiting, flat

ZETA = ((0, 0), (0, 0), (1, 0), (0, 1), (1, 1))
ETA = ((0, 0), (1, 1), (0, 1), (1, 0), (0, 0))


@contextmanager
def criterion(label):
    try:
        yield
    except Exception:
        print(f"{label}: FAIL")
        raise
    print(f"{label}: PASS")


def test_criterion_1_forward_golden(H1, received):
    with criterion("criterion 1 (forward syndromes of the reference word)"):
        assert sigma_fin(H1, received) == (0, 0)
        seq = tailbiting_syndromes(H1, received)
        assert seq.symbols == ZETA
        assert str(seq) == "00 00 10 01 11"


def test_criterion_2_backward_golden(H1, received):
    with criterion("criterion 2 (backward syndromes and reordering)"):
        Ht = reciprocal(H1)
        assert Ht.to_strings() == [["11", "1", "11"], ["1", "01", "01"]]
        zt = list(reversed(received))
        assert flat(zt) == tuple(int(c) for c in "000111110110111")
        assert sigma_fin(Ht, zt) == (0, 0)
        assert backward_sigma_fin(H1, received) == (0, 0)
        assert tailbiting_syndromes(Ht, zt).symbols == ETA
        assert backward_syndromes(H1, received).symbols == ETA
        reordered = eta_from_zeta(tailbiting_syndromes(H1, received), 1)
        assert reordered.symbols == (ZETA[0], ZETA[4], ZETA[3], ZETA[2], ZETA[1])
        assert reordered.symbols == ETA


def test_criterion_3_dual_states(G1, H1):
    with criterion("criterion 3 (dual states, forward and backward)"):
        for beta in enc_state_space(G1):
            u_prev, u = beta
            assert dual_state_of(G1, H1, beta) == ((u_prev + u) % 2, u)
            assert dual_state_of(reciprocal(G1), reciprocal(H1), beta) == ((u_prev + u) % 2, u_prev)
        assert error_anchor((1, 0), (0, 0), G1, H1) == (1, 0)
        assert backward_error_anchor((1, 0), (0, 0), G1, H1) == (1, 0)


def test_criterion_4_subtrellis_set_equality(G1, g1_coeffs, H1, received):
    with criterion("criterion 4 (error subtrellises match code subtrellises)"):
        by_anchor, _ = all_tailbiting(g1_coeffs, 5, 1, 2)
        assert len(by_anchor) == 4
        fin = sigma_fin(H1, received)
        T = build_tailbiting_error_trellis(H1, received)
        zf = flat(received)
        for beta, codewords in by_anchor.items():
            paths = enumerate_paths(T, error_anchor(beta, fin, G1, H1))
            assert len(paths) == 8 and len(codewords) == 8
            shifted = {tuple((a + b) % 2 for a, b in zip(zf, flat(labels))) for labels, _ in paths}
            assert shifted == {flat(y) for y in codewords}


def test_criterion_5_tailbiting_hscalar(G1, g1_coeffs, H1):
    with criterion("criterion 5 (cyclic scalar parity-check matrix)"):
        P = hscalar_tailbiting(H1, 5)
        assert P.matrix.shape == (10, 15)
        assert rank(P.matrix) == 10
        _, flat_words = all_tailbiting(g1_coeffs, 5, 1, 2)
        codewords = {tuple(int(b) for b in row) for row in flat_words}
        assert len(codewords) == 32
        for y in codewords:
            assert is_tailbiting_codeword(P, y)
        rng = np.random.default_rng(101)
        rejected = 0
        while rejected < 1000:
            w = tuple(int(b) for b in rng.integers(0, 2, 15))
            if w in codewords:
                continue
            assert not is_tailbiting_codeword(P, w)
            rejected += 1
        for _ in range(1000):
            w = tuple(int(b) for b in rng.integers(0, 2, 15))
            zero_syndrome = not any(
                any(z) for z in tailbiting_syndromes(H1, split_symbols(w, 3))
            )
            assert is_tailbiting_codeword(P, w) == zero_syndrome


def test_criterion_6_property_suites(G1, g1_coeffs, H1):
    with criterion("criterion 6 (superposition, silent codewords, fixed point)"):
        rng = np.random.default_rng(103)
        for _ in range(1000):
            s1 = tuple(rng.integers(0, 2, 2))
            s2 = tuple(rng.integers(0, 2, 2))
            e1 = tuple(rng.integers(0, 2, 3))
            e2 = tuple(rng.integers(0, 2, 3))
            n1, z1 = sf_step(H1, s1, e1)
            n2, z2 = sf_step(H1, s2, e2)
            ns, zs = sf_step(H1, xor_states(s1, s2), xor_states(e1, e2))
            assert ns == xor_states(n1, n2) and zs == xor_states(z1, z2)

        by_anchor, _ = all_tailbiting(g1_coeffs, 5, 1, 2)
        traversed = 0
        for beta, codewords in by_anchor.items():
            start = dual_state_of(G1, H1, beta)
            for y in codewords:
                final, zetas = sf_run(H1, start, y)
                assert final == start
                assert all(not any(z) for z in zetas)
                traversed += 1
        assert traversed == 32

        for _ in range(1000):
            z = [tuple(rng.integers(0, 2, 3)) for _ in range(5)]
            fin = sigma_fin(H1, z)
            final, _ = sf_run(H1, fin, z)
            assert final == fin


def test_criterion_7_decoder_oracle(G1, g1_coeffs, H1, received):
    with criterion("criterion 7 (decoder equals exhaustive minimum distance)"):
        res = decode_tailbiting(G1, H1, received)
        assert res.weight == 2
        assert res.codeword == tuple(int(c) for c in "111110010011000")
        assert res.anchor_beta == (0, 0)
        _, flat_words = all_tailbiting(g1_coeffs, 5, 1, 2)
        zf = np.array(flat(received), dtype=np.uint8)
        dists = np.bitwise_xor(flat_words, zf).sum(axis=1)
        assert res.weight == int(dists.min())
        assert int((dists == dists.min()).sum()) == 1
        assert res.codeword == tuple(int(b) for b in flat_words[int(dists.argmin())])

        rng = np.random.default_rng(107)
        for _ in range(1000):
            z = rng.integers(0, 2, 15).astype(np.uint8)
            got = decode_tailbiting(G1, H1, split_symbols(z, 3))
            dists = np.bitwise_xor(flat_words, z).sum(axis=1)
            assert got.weight == int(dists.min())


def test_criterion_8_backward_correspondence(G1, H1, received):
    with criterion("criterion 8 (backward paths reverse forward paths)"):
        fin = sigma_fin(H1, received)
        fin_t = backward_sigma_fin(H1, received)
        Tf = build_tailbiting_error_trellis(H1, received)
        Tb = build_backward_error_trellis(H1, received)
        for beta in enc_state_space(G1):
            fwd = {p[0] for p in enumerate_paths(Tf, error_anchor(beta, fin, G1, H1))}
            bwd = {p[0] for p in enumerate_paths(Tb, backward_error_anchor(beta, fin_t, G1, H1))}
            assert len(fwd) == 8
            assert bwd == {tuple(reversed(labels)) for labels in fwd}
