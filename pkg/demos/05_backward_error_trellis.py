"""The backward error-trellis: error paths in time-reversed order.

Reversing the received word and switching to the reciprocal parity-check
matrix gives a second error-trellis whose paths are the reversals of the
forward ones.  The backward syndromes are a fixed reordering of the
forward syndromes, so no second syndrome-former run is needed in
principle; both routes are shown here.
"""

from tbtrellis import (
    backward_error_anchor,
    backward_sigma_fin,
    backward_syndromes,
    build_backward_error_trellis,
    build_tailbiting_error_trellis,
    enc_state_space,
    enumerate_paths,
    error_anchor,
    eta_from_zeta,
    format_state,
    parse_bits,
    poly_from_strings,
    reciprocal,
    sigma_fin,
    split_symbols,
    tailbiting_syndromes,
)

G = poly_from_strings([["1", "101", "111"]])
H = poly_from_strings([["11", "01", "11"], ["01", "1", "1"]])
z = split_symbols(parse_bits("111 110 110 111 000"), 3)

print("reciprocal parity check:")
print(reciprocal(H))

zt = list(reversed(z))
print()
print("reversed word:", " ".join("".join(map(str, s)) for s in zt))
print("circular state:", format_state(backward_sigma_fin(H, z)))

# Route 1: run the reciprocal syndrome former over the reversed word.
etas = backward_syndromes(H, z)
print("backward syndromes:", etas)

# Route 2: reorder the forward syndromes (first M reversed, rest reversed).
zetas = tailbiting_syndromes(H, z)
print("forward syndromes: ", zetas)
print("reordered forward: ", eta_from_zeta(zetas, H.deg))

# Path reversal correspondence, subtrellis by subtrellis.
fin = sigma_fin(H, z)
fin_t = backward_sigma_fin(H, z)
Tf = build_tailbiting_error_trellis(H, z)
Tb = build_backward_error_trellis(H, z)
print()
for beta in enc_state_space(G):
    af = error_anchor(beta, fin, G, H)
    ab = backward_error_anchor(beta, fin_t, G, H)
    fwd = {labels for labels, _ in enumerate_paths(Tf, af)}
    bwd = {tuple(reversed(labels)) for labels, _ in enumerate_paths(Tb, ab)}
    print(
        f"forward anchor {format_state(af)} <-> backward anchor {format_state(ab)}:",
        "reversed path sets equal:",
        fwd == bwd,
    )
