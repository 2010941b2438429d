"""The tailbiting code-trellis and its subtrellises.

A tailbiting codeword is a trellis path whose initial and final encoder
states coincide; each shared state anchors one subtrellis.
"""

from tbtrellis import (
    build_tailbiting_code_trellis,
    count_paths,
    enumerate_paths,
    format_state,
    poly_from_strings,
    to_dot,
)

G = poly_from_strings([["1", "101", "111"]])
N = 5

T = build_tailbiting_code_trellis(G, N)
print("sections:", T.n_sections)
print("states per cut:", len(T.states_per_cut[0]))
print("subtrellis anchors:", [format_state(a) for a in T.anchors])

# Every subtrellis carries the same share of the 2^(N k) codewords.
for anchor in T.anchors:
    print(f"paths anchored at {format_state(anchor)}:", count_paths(T, anchor))

# The eight codewords of one subtrellis, as label sequences.
print()
print("codewords anchored at (1,0):")
for labels, _ in enumerate_paths(T, (1, 0)):
    print("  ", " ".join("".join(map(str, s)) for s in labels))

# DOT export; the highlighted subtrellis renders with bold edges.
dot = to_dot(T, highlight=(1, 0))
print()
print("DOT export:", len(dot.splitlines()), "lines;")
print("write it with: tbtrellis code-trellis --code demos/example_code.json -N 5 \\")
print("               --highlight '(1,0)' --out trellis.dot")
