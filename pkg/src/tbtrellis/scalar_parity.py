"""Scalar (block) parity-check matrices for terminated and tailbiting codes.

Both constructions place the coefficient matrices H_0..H_M of H(D) on a
block band; the tailbiting variant additionally wraps H_1..H_M into the
top-right corner cyclically, giving an Nr x Nn matrix whose null space
is the length-N tailbiting code.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf2 import as_bits, format_bits


@dataclass(frozen=True)
class ScalarParity:
    matrix: np.ndarray
    kind: str  # "terminated" | "tailbiting"
    n_sections: int
    block_dims: tuple  # (r, n)


def hscalar_terminated(H, N):
    """Block-banded (N+M)r x Nn matrix: block (i, j) = H_{i-j}."""
    if N < 1:
        raise ValueError("need N >= 1 sections")
    coeffs = H.coefficient_list()
    M, r, n = H.deg, H.rows, H.cols
    out = np.zeros(((N + M) * r, N * n), dtype=np.uint8)
    for i in range(N + M):
        for j in range(N):
            if 0 <= i - j <= M:
                out[i * r : (i + 1) * r, j * n : (j + 1) * n] = coeffs[i - j]
    out.flags.writeable = False
    return ScalarParity(matrix=out, kind="terminated", n_sections=N, block_dims=(r, n))


def hscalar_tailbiting(H, N):
    """Cyclic Nr x Nn matrix: block (i, j) collects H_m for m = (i-j) mod N.

    Requires N >= M.  For N = M the main-diagonal H_M occupies the same
    block as the wrapped H_M; coinciding contributions are summed over
    GF(2).
    """
    coeffs = H.coefficient_list()
    M, r, n = H.deg, H.rows, H.cols
    if N < M:
        raise ValueError(f"need N >= M ({N} < {M})")
    out = np.zeros((N * r, N * n), dtype=np.uint8)
    for i in range(N):
        for j in range(N):
            block = out[i * r : (i + 1) * r, j * n : (j + 1) * n]
            for m in range(M + 1):
                if m % N == (i - j) % N:
                    block ^= coeffs[m]
    out.flags.writeable = False
    return ScalarParity(matrix=out, kind="tailbiting", n_sections=N, block_dims=(r, n))


def is_tailbiting_codeword(P, y):
    """Membership test: y (length Nn) has zero syndrome under P."""
    if P.kind != "tailbiting":
        raise ValueError("membership test needs a tailbiting matrix")
    y = as_bits(y, P.matrix.shape[1])
    return not ((P.matrix.astype(np.int64) @ y.astype(np.int64)) % 2).any()


def format_matrix(P):
    """Plain-text rows of '0'/'1' characters."""
    return "\n".join(format_bits(row) for row in P.matrix)


def annotate_blocks(H, N, kind="tailbiting"):
    """Pretty print of the block structure, one token per r x n block.

    Tokens name the coefficient matrices placed in each block ("H0",
    "H0+H2", or "." for a zero block).
    """
    M = H.deg
    if kind == "tailbiting":
        if N < M:
            raise ValueError(f"need N >= M ({N} < {M})")
        rows, cols = N, N
        members = lambda i, j: [m for m in range(M + 1) if m % N == (i - j) % N]
    elif kind == "terminated":
        rows, cols = N + M, N
        members = lambda i, j: [m for m in range(M + 1) if m == i - j]
    else:
        raise ValueError(f"unknown kind: {kind!r}")
    grid = [["+".join(f"H{m}" for m in members(i, j)) or "." for j in range(cols)] for i in range(rows)]
    width = max(len(tok) for row in grid for tok in row)
    return "\n".join(" ".join(tok.ljust(width) for tok in row).rstrip() for row in grid)
