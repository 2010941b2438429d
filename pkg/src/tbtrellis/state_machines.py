"""Syndrome-former and encoder state machines for convolutional codes.

The syndrome former of an r x n parity-check matrix H(D) of memory M is
realized in observer canonical form.  Its state is a flat tuple of M*r
bits laid out block-wise: position (p-1)*r + (q-1) holds the content of
memory cell p on the chain feeding syndrome bit q (p = 1..M closest
first).  Cells that are structurally absent (p exceeds the degree of
row q) are pinned to zero.

The encoder of a k x n generator matrix G(D) of memory L is the
feedforward shift-register (controller) form: the state is a flat tuple
of k*L bits, row-major, each row holding the last L inputs of one input
stream, most recent last.
"""

from __future__ import annotations

from itertools import product
from typing import NamedTuple

import numpy as np

from .gf2 import as_bits


class ExtendedState(NamedTuple):
    """Syndrome-former state augmented with the current syndrome symbol."""

    zeta: tuple
    sigma: tuple


def constraint_length(P):
    """Overall constraint length: sum of the row degrees of P."""
    degs = []
    for q in range(P.rows):
        d = 0
        for i, c in enumerate(P.coefficient_list()):
            if c[q].any():
                d = i
        degs.append(d)
    return sum(degs)


def _row_degrees(H):
    out = []
    for q in range(H.rows):
        d = 0
        for i, c in enumerate(H.coefficient_list()):
            if c[q].any():
                d = i
        out.append(d)
    return out


def _sf_dims(H):
    return H.deg, H.rows, H.cols


def _check_sigma(sigma, M, r):
    s = np.asarray(sigma, dtype=np.uint8)
    if s.shape != (M * r,):
        raise ValueError(f"state has {s.size} bits, expected {M * r}")
    return s


def sf_zero_state(H):
    """The all-zero syndrome-former state for H."""
    M, r, _ = _sf_dims(H)
    return (0,) * (M * r)


def sf_step(H, sigma_prev, e):
    """One syndrome-former transition: returns (next state, syndrome symbol).

    The state shifts down one block and the input adds e*(H_1^T...H_M^T);
    the output is the first block of the old state plus e*H_0^T.
    """
    M, r, n = _sf_dims(H)
    coeffs = H.coefficient_list()
    e = as_bits(e, n)
    s = _check_sigma(sigma_prev, M, r)
    zeta = e @ coeffs[0].T % 2
    if M:
        zeta = (zeta + s[:r]) % 2
    new = np.concatenate([s[r:], np.zeros(r, dtype=np.uint8)]) if M else s
    for j in range(1, M + 1):
        new[(j - 1) * r : j * r] ^= (e @ coeffs[j].T % 2).astype(np.uint8)
    return tuple(int(b) for b in new), tuple(int(b) for b in zeta)


def sf_run(H, sigma0, seq):
    """Fold sf_step over a symbol sequence; returns (final state, syndromes)."""
    sigma = tuple(int(b) for b in sigma0)
    out = []
    for e in seq:
        sigma, zeta = sf_step(H, sigma, e)
        out.append(zeta)
    return sigma, out


def _window_state(H, window):
    """Map an M-symbol window onto the state it leaves the syndrome former in.

    Block j of the result is sum_{i=j..M} window[M-1-(i-j)] * H_i^T.
    """
    M, r, n = _sf_dims(H)
    coeffs = H.coefficient_list()
    syms = [as_bits(e, n) for e in window]
    blocks = []
    for j in range(1, M + 1):
        acc = np.zeros(r, dtype=np.uint8)
        for i in range(j, M + 1):
            acc ^= (syms[M - 1 - (i - j)] @ coeffs[i].T % 2).astype(np.uint8)
        blocks.append(acc)
    return tuple(int(b) for blk in blocks for b in blk)


def extended_state(H, window):
    """Syndrome and state produced by a window of the last M+1 input symbols."""
    M, r, n = _sf_dims(H)
    if len(window) != M + 1:
        raise ValueError(f"window length {len(window)}, expected {M + 1}")
    syms = [as_bits(e, n) for e in window]
    coeffs = H.coefficient_list()
    zeta = np.zeros(r, dtype=np.uint8)
    for i in range(M + 1):
        zeta ^= (syms[M - i] @ coeffs[i].T % 2).astype(np.uint8)
    return ExtendedState(tuple(int(b) for b in zeta), _window_state(H, window[1:]))


def dual_state(H, window):
    """Syndrome-former state reached by the last M encoder output symbols."""
    M, _, _ = _sf_dims(H)
    if len(window) != M:
        raise ValueError(f"window length {len(window)}, expected {M}")
    return _window_state(H, window)


def enc_dims(G):
    return G.deg, G.rows, G.cols


def enc_zero_state(G):
    L, k, _ = enc_dims(G)
    return (0,) * (k * L)


def encoder_step(G, beta, u):
    """One encoder transition: returns (next state, output symbol)."""
    L, k, n = enc_dims(G)
    coeffs = G.coefficient_list()
    u = as_bits(u, k)
    regs = as_bits(beta, k * L).reshape(k, L) if L else np.zeros((k, 0), np.uint8)
    y = u @ coeffs[0] % 2
    for i in range(1, L + 1):
        y = (y + regs[:, L - i] @ coeffs[i]) % 2
    if L:
        new = np.concatenate([regs[:, 1:], u[:, None]], axis=1).reshape(-1)
    else:
        new = np.zeros(0, dtype=np.uint8)
    return tuple(int(b) for b in new), tuple(int(b) for b in y)


def encoder_run(G, beta, seq):
    """Fold encoder_step over input symbols; returns (final state, outputs)."""
    state = tuple(int(b) for b in beta)
    out = []
    for u in seq:
        state, y = encoder_step(G, state, u)
        out.append(y)
    return state, out


def dual_state_of(G, H, beta, fill=0):
    """Syndrome-former state labeling the encoder state beta.

    Reconstructs the M output symbols entering the cut where the encoder
    sits in beta: the M unknown inputs preceding the register window are
    frozen to ``fill``, the encoder is run over them plus the register
    contents, and the last M outputs are mapped through the syndrome
    former's window formula.  For dual G/H pairs the result does not
    depend on ``fill``.
    """
    M = H.deg
    L, k, _ = enc_dims(G)
    regs = as_bits(beta, k * L).reshape(k, L) if L else np.zeros((k, 0), np.uint8)
    inputs = [tuple([fill] * k)] * M + [tuple(int(b) for b in regs[:, t]) for t in range(L)]
    _, outputs = encoder_run(G, enc_zero_state(G), inputs)
    return dual_state(H, outputs[-M:] if M else [])


def backward_state(G, beta):
    """State of the reciprocal encoder at the same cut, traversed in reverse.

    For shift-register states this is per-row reversal of the register
    contents.
    """
    L, k, _ = enc_dims(G)
    regs = as_bits(beta, k * L).reshape(k, L) if L else np.zeros((k, 0), np.uint8)
    return tuple(int(b) for b in regs[:, ::-1].reshape(-1))


def tailbiting_encode(G, inputs):
    """Circular-convolution (tailbiting) encoding of N input symbols.

    y_t = sum_i u_{(t-i) mod N} G_i.  The encoder starts and ends in the
    state formed by the last L input symbols.
    """
    L, k, n = enc_dims(G)
    coeffs = G.coefficient_list()
    syms = [as_bits(u, k) for u in inputs]
    N = len(syms)
    if N < 1:
        raise ValueError("need at least one input symbol")
    out = []
    for t in range(N):
        y = np.zeros(n, dtype=np.uint8)
        for i in range(L + 1):
            y ^= (syms[(t - i) % N] @ coeffs[i] % 2).astype(np.uint8)
        out.append(tuple(int(b) for b in y))
    return out


def tailbiting_anchor(G, inputs):
    """Encoder state shared by cut 0 and cut N for a tailbiting input word."""
    L, k, _ = enc_dims(G)
    syms = [as_bits(u, k) for u in inputs]
    regs = [[int(syms[(len(syms) - L + t) % len(syms)][j]) for t in range(L)] for j in range(k)]
    return tuple(b for row in regs for b in row)


def enc_state_space(G):
    """All encoder states, in ascending tuple order."""
    L, k, _ = enc_dims(G)
    return [tuple(bits) for bits in product((0, 1), repeat=k * L)]


def sf_state_space(H):
    """All syndrome-former states, structurally absent cells pinned to zero."""
    M, r, _ = _sf_dims(H)
    degs = _row_degrees(H)
    free = [(p - 1) * r + (q - 1) for p in range(1, M + 1) for q in range(1, r + 1) if p <= degs[q - 1]]
    states = []
    for values in product((0, 1), repeat=len(free)):
        bits = [0] * (M * r)
        for pos, v in zip(free, values):
            bits[pos] = v
        states.append(tuple(bits))
    return states


def xor_states(a, b):
    """Componentwise GF(2) sum of two states."""
    if len(a) != len(b):
        raise ValueError("state length mismatch")
    return tuple((x + y) % 2 for x, y in zip(a, b))


def poly_is_dual_pair(G, H):
    """True iff the polynomial product G(D) H(D)^T is the zero matrix."""
    return (G * H.T).is_zero()


__all__ = [
    "ExtendedState",
    "constraint_length",
    "sf_zero_state",
    "sf_step",
    "sf_run",
    "extended_state",
    "dual_state",
    "dual_state_of",
    "encoder_step",
    "encoder_run",
    "backward_state",
    "tailbiting_encode",
    "tailbiting_anchor",
    "enc_state_space",
    "sf_state_space",
    "xor_states",
    "poly_is_dual_pair",
]
