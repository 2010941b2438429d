"""Self-verification suites: every construction against a brute-force oracle.

All suites work at desk scale (exhaustive enumeration of the 2^(Nk)
tailbiting codewords) and are deterministic given a seed.  They back the
``verify`` CLI command; the same properties are frozen individually in
the test suite.
"""

from __future__ import annotations

from itertools import product

import numpy as np

from .decoder import decode_tailbiting
from .error_trellis import (
    backward_syndromes,
    build_tailbiting_error_trellis,
    error_anchor,
    eta_from_zeta,
    sigma_fin,
    tailbiting_syndromes,
)
from .scalar_parity import hscalar_tailbiting, is_tailbiting_codeword
from .state_machines import (
    dual_state_of,
    sf_run,
    sf_step,
    tailbiting_anchor,
    tailbiting_encode,
    xor_states,
)
from .trellis import enumerate_paths

EXHAUSTIVE_BITS = 20


def _random_bits(rng, width):
    return tuple(int(b) for b in rng.integers(0, 2, size=width))


def _random_word(rng, N, n):
    return [_random_bits(rng, n) for _ in range(N)]


def _codeword_table(G, N):
    """All tailbiting codewords, bucketed by anchor and flattened to rows."""
    k = G.rows
    by_anchor = {}
    flat = []
    for bits in product((0, 1), repeat=N * k):
        u = [bits[i * k : (i + 1) * k] for i in range(N)]
        y = tailbiting_encode(G, u)
        by_anchor.setdefault(tailbiting_anchor(G, u), []).append(y)
        flat.append([b for sym in y for b in sym])
    return by_anchor, np.array(flat, dtype=np.uint8)


def suite_superposition(H, rng, trials=1000):
    """Transitions add: the syndrome former is linear in (state, input)."""
    M, r, n = H.deg, H.rows, H.cols
    for _ in range(trials):
        s1, s2 = _random_bits(rng, M * r), _random_bits(rng, M * r)
        e1, e2 = _random_bits(rng, n), _random_bits(rng, n)
        n1, z1 = sf_step(H, s1, e1)
        n2, z2 = sf_step(H, s2, e2)
        ns, zs = sf_step(H, xor_states(s1, s2), xor_states(e1, e2))
        if ns != xor_states(n1, n2) or zs != xor_states(z1, z2):
            return False
    return True


def suite_zero_syndrome(G, H, N):
    """Codewords traverse the syndrome former from their dual anchor silently."""
    by_anchor, _ = _codeword_table(G, N)
    r = H.rows
    for beta, words in by_anchor.items():
        start = dual_state_of(G, H, beta)
        for y in words:
            final, zetas = sf_run(H, start, y)
            if final != start or any(any(z) for z in zetas):
                return False
    return True


def suite_set_equality(G, H, N, rng, words=5):
    """Error subtrellis paths shifted by z equal the matching code subtrellis."""
    by_anchor, _ = _codeword_table(G, N)
    n = H.cols
    for _ in range(words):
        z = _random_word(rng, N, n)
        fin = sigma_fin(H, z)
        T = build_tailbiting_error_trellis(H, z)
        for beta, codewords in by_anchor.items():
            anchor = error_anchor(beta, fin, G, H)
            shifted = {
                tuple(xor_states(zs, es) for zs, es in zip(z, labels))
                for labels, _ in enumerate_paths(T, anchor)
            }
            if shifted != {tuple(y) for y in codewords}:
                return False
    return True


def suite_eta_zeta(H, N, rng, trials=1000):
    """Backward syndromes equal the reindexed forward syndromes."""
    M, n = H.deg, H.cols
    for _ in range(trials):
        z = _random_word(rng, N, n)
        direct = backward_syndromes(H, z)
        reordered = eta_from_zeta(tailbiting_syndromes(H, z), M)
        if direct.symbols != reordered.symbols:
            return False
    return True


def suite_hscalar_membership(G, H, N, rng, trials=1000):
    """Matrix membership == zero syndrome sequence == exhaustive codeword set."""
    _, flat = _codeword_table(G, N)
    codewords = {tuple(int(b) for b in row) for row in flat}
    P = hscalar_tailbiting(H, N)
    n = H.cols
    for y in codewords:
        if not is_tailbiting_codeword(P, y):
            return False
    for _ in range(trials):
        w = _random_bits(rng, N * n)
        in_matrix = is_tailbiting_codeword(P, w)
        zetas = tailbiting_syndromes(H, [w[i * n : (i + 1) * n] for i in range(N)])
        zero_syndrome = not any(any(z) for z in zetas)
        if in_matrix != zero_syndrome or in_matrix != (w in codewords):
            return False
    return True


def suite_decoder_oracle(G, H, N, rng, trials=1000):
    """Decoder weight equals the exhaustive minimum distance, every time."""
    _, flat = _codeword_table(G, N)
    n = H.cols
    for _ in range(trials):
        z = _random_word(rng, N, n)
        res = decode_tailbiting(G, H, z)
        zvec = np.array([b for sym in z for b in sym], dtype=np.uint8)
        dists = np.bitwise_xor(flat, zvec).sum(axis=1)
        if res.weight != int(dists.min()):
            return False
        if (dists == dists.min()).sum() == 1:
            winner = flat[int(dists.argmin())]
            if tuple(int(b) for b in winner) != res.codeword:
                return False
    return True


def run_all(G, H, N, seed=1, trials=1000):
    """Run every suite; returns [(name, passed)] in a fixed order."""
    if N * G.rows > EXHAUSTIVE_BITS:
        raise ValueError(f"N*k = {N * G.rows} exceeds the exhaustive bound {EXHAUSTIVE_BITS}")
    rng = np.random.default_rng(seed)
    return [
        ("superposition", suite_superposition(H, rng, trials)),
        ("zero-syndrome-traversal", suite_zero_syndrome(G, H, N)),
        ("subtrellis-set-equality", suite_set_equality(G, H, N, rng)),
        ("eta-zeta-correspondence", suite_eta_zeta(H, N, rng, trials)),
        ("hscalar-membership", suite_hscalar_membership(G, H, N, rng, trials)),
        ("decoder-oracle", suite_decoder_oracle(G, H, N, rng, trials)),
    ]
