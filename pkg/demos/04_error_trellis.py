"""Constructing the tailbiting error-trellis for a received word.

The construction has three steps: find the circular syndrome-former
state (run the word once), replay the word from that state to get the
section syndromes, then concatenate the per-syndrome trellis modules.
Each error subtrellis corresponds to one code subtrellis; its anchor is
the circular state plus the dual of the code anchor.
"""

from tbtrellis import (
    build_tailbiting_code_trellis,
    build_tailbiting_error_trellis,
    enumerate_paths,
    error_anchor,
    format_state,
    parse_bits,
    poly_from_strings,
    sigma_fin,
    split_symbols,
    tailbiting_syndromes,
    xor_states,
)

G = poly_from_strings([["1", "101", "111"]])
H = poly_from_strings([["11", "01", "11"], ["01", "1", "1"]])
z = split_symbols(parse_bits("111 110 110 111 000"), 3)

# Step 1: the circular state, independent of where the run starts.
fin = sigma_fin(H, z)
print("circular state sigma_fin:", format_state(fin))

# Step 2: replay from sigma_fin; the syndrome sequence drives the modules.
zetas = tailbiting_syndromes(H, z)
print("section syndromes:", zetas)

# Step 3: the assembled trellis.
T = build_tailbiting_error_trellis(H, z)
print("sections:", T.n_sections, "edges per section:", [len(s) for s in T.sections])

# Correspondence: error paths anchored at sigma_fin + beta*, shifted by z,
# are exactly the codewords anchored at beta.
Tc = build_tailbiting_code_trellis(G, len(z))
print()
for beta in Tc.anchors:
    a = error_anchor(beta, fin, G, H)
    errors = {labels for labels, _ in enumerate_paths(T, a)}
    shifted = {tuple(xor_states(zs, es) for zs, es in zip(z, labels)) for labels in errors}
    codewords = {labels for labels, _ in enumerate_paths(Tc, beta)}
    print(
        f"code anchor {format_state(beta)} <-> error anchor {format_state(a)}:",
        "z + error paths == codewords:",
        shifted == codewords,
    )

# The lightest error path in each subtrellis (what the decoder minimizes).
from tbtrellis import min_weight_path

print()
for beta in Tc.anchors:
    a = error_anchor(beta, fin, G, H)
    labels, w = min_weight_path(T, a)
    print(
        f"anchor {format_state(a)}: weight {w}, e =",
        " ".join("".join(map(str, s)) for s in labels),
    )
