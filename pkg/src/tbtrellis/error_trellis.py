"""Tailbiting error-trellis construction, forward and backward.

The forward construction runs the received word through the syndrome
former once to find the self-consistent circular state, replays it from
that state to obtain the section syndromes, and concatenates one trellis
module per syndrome symbol.  The tailbiting paths of the result are
exactly the error sequences whose subtraction from the received word
leaves a tailbiting codeword.  The backward variant applies the same
procedure to the reciprocal parity-check matrix and the time-reversed
word; its paths are the forward paths read in reverse symbol order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .gf2 import format_bits
from .state_machines import (
    backward_state,
    dual_state_of,
    sf_run,
    sf_state_space,
    sf_step,
    sf_zero_state,
    xor_states,
)
from .trellis import Edge, _all_symbols, _make_trellis


@dataclass(frozen=True)
class SyndromeSequence:
    """A length-N sequence of r-bit syndrome symbols."""

    symbols: tuple
    kind: str  # "forward" | "backward"

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def __str__(self):
        return " ".join(format_bits(s) for s in self.symbols)


def _check_length(H, z):
    if len(z) < H.deg:
        raise ValueError(f"need at least M={H.deg} received symbols, got {len(z)}")


def sigma_fin(H, z):
    """Final syndrome-former state for input z, from the all-zero start.

    With N >= M the result is independent of the starting state and is
    determined by the last M symbols alone.
    """
    _check_length(H, z)
    final, _ = sf_run(H, sf_zero_state(H), z)
    return final


def tailbiting_syndromes(H, z):
    """Syndrome sequence of z when the initial state is set to sigma_fin.

    The run is circularly consistent: it ends in sigma_fin again.
    """
    fin = sigma_fin(H, z)
    _, zetas = sf_run(H, fin, z)
    return SyndromeSequence(symbols=tuple(zetas), kind="forward")


@lru_cache(maxsize=None)
def _module_table(H):
    """For each state, outgoing transitions bucketed by syndrome symbol."""
    table = {}
    for sigma in sf_state_space(H):
        by_zeta = {}
        for e in _all_symbols(H.cols):
            nxt, zeta = sf_step(H, sigma, e)
            by_zeta.setdefault(zeta, []).append((e, nxt))
        table[sigma] = by_zeta
    return table


def error_trellis_module(H, zeta):
    """All transitions (state, error symbol, next state) emitting ``zeta``."""
    zeta = tuple(int(b) for b in zeta)
    table = _module_table(H)
    edges = []
    for sigma in sf_state_space(H):
        for e, nxt in table[sigma].get(zeta, ()):
            edges.append(Edge(src=sigma, label=e, dst=nxt))
    return edges


def build_tailbiting_error_trellis(H, z):
    """Concatenate error-trellis modules for the syndromes of z."""
    zetas = tailbiting_syndromes(H, z)
    sections = [error_trellis_module(H, zeta) for zeta in zetas]
    return _make_trellis("error", sf_state_space(H), sections)


def error_anchor(beta, sigma_fin_state, G, H):
    """Anchor of the error subtrellis matching code subtrellis ``beta``."""
    return xor_states(sigma_fin_state, dual_state_of(G, H, beta))


def eta_from_zeta(zeta, M):
    """Backward syndrome order: zeta_M..zeta_1 followed by zeta_N..zeta_{M+1}."""
    symbols = tuple(zeta)
    N = len(symbols)
    if N < M:
        raise ValueError(f"need at least M={M} symbols, got {N}")
    out = [symbols[M - i] if i <= M else symbols[N + M - i] for i in range(1, N + 1)]
    return SyndromeSequence(symbols=tuple(out), kind="backward")


def build_backward_error_trellis(H, z):
    """Error trellis of the reciprocal syndrome former on the reversed word."""
    _check_length(H, z)
    Ht = H.reciprocal()
    zt = list(reversed(list(z)))
    etas = tailbiting_syndromes(Ht, zt)
    sections = [error_trellis_module(Ht, eta) for eta in etas]
    return _make_trellis("backward-error", sf_state_space(Ht), sections)


def backward_syndromes(H, z):
    """Syndromes of the backward construction (kind marked backward)."""
    _check_length(H, z)
    Ht = H.reciprocal()
    zt = list(reversed(list(z)))
    return SyndromeSequence(symbols=tailbiting_syndromes(Ht, zt).symbols, kind="backward")


def backward_sigma_fin(H, z):
    """Circular syndrome-former state of the backward construction."""
    _check_length(H, z)
    return sigma_fin(H.reciprocal(), list(reversed(list(z))))


def backward_error_anchor(beta, sigma_fin_tilde, G, H):
    """Anchor of the backward error subtrellis matching code subtrellis ``beta``.

    The matching backward code subtrellis is anchored at the backward
    state of beta; its dual is taken with respect to the reciprocal pair.
    """
    beta_t = backward_state(G, beta)
    return xor_states(sigma_fin_tilde, dual_state_of(G.reciprocal(), H.reciprocal(), beta_t))
