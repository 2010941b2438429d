"""Scalar parity-check matrices: the block code behind the trellis.

Terminated codes get the block-banded matrix; tailbiting codes get the
cyclic variant whose wrapped top-right corner encodes the state
constraint sigma_0 = sigma_N.
"""

from itertools import product

from tbtrellis import (
    annotate_blocks,
    format_matrix,
    hscalar_tailbiting,
    hscalar_terminated,
    is_tailbiting_codeword,
    nullspace,
    poly_from_strings,
    rank,
    tailbiting_encode,
)

G = poly_from_strings([["1", "101", "111"]])
H = poly_from_strings([["11", "01", "11"], ["01", "1", "1"]])
N = 5

# Terminated: (N+M)r x Nn, plain band.
P_term = hscalar_terminated(H, N)
print("terminated block layout:")
print(annotate_blocks(H, N, kind="terminated"))
print("size:", P_term.matrix.shape)

# Tailbiting: Nr x Nn with the cyclic wrap.
P = hscalar_tailbiting(H, N)
print()
print("tailbiting block layout:")
print(annotate_blocks(H, N, kind="tailbiting"))
print(format_matrix(P))
r = rank(P.matrix)
print("size:", P.matrix.shape, "rank:", r, "-> codewords:", 2 ** (P.matrix.shape[1] - r))

# Membership: every circularly encoded word lies in the null space.
words = 0
for bits in product((0, 1), repeat=N):
    y = tailbiting_encode(G, [(b,) for b in bits])
    assert is_tailbiting_codeword(P, [b for sym in y for b in sym])
    words += 1
print()
print("all", words, "tailbiting codewords pass the membership test")

# And the null space contains nothing else.
basis = nullspace(P.matrix)
print("null space dimension:", basis.shape[0])
print("a non-codeword is rejected:", not is_tailbiting_codeword(P, [1] + [0] * 14))
