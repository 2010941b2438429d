"""Polynomial generator/parity-check matrices over GF(2)[D].

Entry strings are LSB-first binary: "111" means 1 + D + D^2.
"""

from tbtrellis import coefficient_expansion, poly_from_strings, reciprocal

# A rate-1/3 generator and its rate-2/3 parity check.  G has memory
# L = 2 (its highest power of D), H has memory M = 1.
G = poly_from_strings([["1", "101", "111"]])
H = poly_from_strings([["11", "01", "11"], ["01", "1", "1"]])

print("G(D) =")
print(G)
print("degree of G:", G.deg)
print()
print("H(D) =")
print(H)
print("degree of H:", H.deg)

# The coefficient expansion recovers the constant matrices H_0, H_1, ...
print()
for i, Hi in enumerate(coefficient_expansion(H)):
    print(f"H_{i} =")
    print(Hi)

# A generator/parity-check pair must annihilate each other: the
# polynomial product G(D) H(D)^T is the zero matrix.
product = G * H.transpose()
print()
print("G(D) H(D)^T == 0:", product.is_zero())

# The reciprocal matrix reverses the coefficient order; it processes
# sequences in time-reversed order and drives the backward error-trellis.
print()
print("reciprocal of H:")
print(reciprocal(H))
print("reciprocal of G:")
print(reciprocal(G))
