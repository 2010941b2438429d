"""Running the syndrome former of H^T(D) over a received word.

The syndrome former is realized in observer canonical form: its state
is one r-bit block per memory level.  Fed a codeword from the right
starting state it stays silent; fed anything else it emits nonzero
syndrome symbols.
"""

from tbtrellis import (
    dual_state_of,
    format_state,
    parse_bits,
    poly_from_strings,
    sf_run,
    sf_step,
    sf_zero_state,
    split_symbols,
    tailbiting_encode,
)

G = poly_from_strings([["1", "101", "111"]])
H = poly_from_strings([["11", "01", "11"], ["01", "1", "1"]])

# A hard-decision received word, five 3-bit symbols.
z = split_symbols(parse_bits("111 110 110 111 000"), 3)

# Single transitions: state and syndrome symbol step by step.
sigma = sf_zero_state(H)
print("stepping from the zero state:")
for e in z:
    nxt, zeta = sf_step(H, sigma, e)
    print(f"  {format_state(sigma)} --{''.join(map(str, e))}/{''.join(map(str, zeta))}--> {format_state(nxt)}")
    sigma = nxt

final, zetas = sf_run(H, sf_zero_state(H), z)
print("final state:", format_state(final))

# A tailbiting codeword, traversed from the dual state of its anchor,
# produces the all-zero syndrome sequence and returns to the same state.
u = [(1,), (1,), (0,), (0,), (0,)]
y = tailbiting_encode(G, u)
anchor = (u[-2][0], u[-1][0])
start = dual_state_of(G, H, anchor)
final, zetas = sf_run(H, start, y)
print()
print("codeword for input 1,1,0,0,0:", " ".join("".join(map(str, s)) for s in y))
print("dual state of its anchor:", format_state(start))
print("syndromes along the codeword:", " ".join("".join(map(str, s)) for s in zetas))
print("returned to the start state:", final == start)
