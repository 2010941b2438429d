"""Loading and validation of code-spec JSON files.

A code spec is a JSON document ``{"n": int, "k": int, "G": [[str]],
"H": [[str]]}`` whose entry strings are LSB-first binary polynomial
coefficients.  Either matrix may be omitted; commands needing only one
still work.  When both are present their duality (G H^T = 0) is
checked, and H may not contain an all-zero parity row.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .gf2 import PolyMatrix, poly_from_strings
from .state_machines import poly_is_dual_pair


class CodeSpecError(ValueError):
    """Malformed or inconsistent code-spec document."""


@dataclass(frozen=True)
class CodeSpec:
    n: int
    k: int
    G: PolyMatrix | None
    H: PolyMatrix | None

    @property
    def r(self):
        return self.n - self.k

    def require_G(self):
        if self.G is None:
            raise CodeSpecError("this command needs a generator matrix G in the code spec")
        return self.G

    def require_H(self):
        if self.H is None:
            raise CodeSpecError("this command needs a parity-check matrix H in the code spec")
        return self.H


def parse_codespec(obj):
    """Validate a decoded JSON object into a CodeSpec."""
    if not isinstance(obj, dict):
        raise CodeSpecError("code spec must be a JSON object")
    try:
        n = int(obj["n"])
        k = int(obj["k"])
    except (KeyError, TypeError, ValueError) as exc:
        raise CodeSpecError("code spec needs integer fields 'n' and 'k'") from exc
    if not (0 < k < n):
        raise CodeSpecError(f"need 0 < k < n, got k={k}, n={n}")
    G = _parse_matrix(obj.get("G"), "G", rows=k, cols=n)
    H = _parse_matrix(obj.get("H"), "H", rows=n - k, cols=n)
    if G is None and H is None:
        raise CodeSpecError("code spec must provide G, H, or both")
    if H is not None:
        for q in range(H.rows):
            if all(H.entry_string(q, j) == "0" for j in range(H.cols)):
                raise CodeSpecError(f"parity row {q + 1} of H is zero")
    if G is not None and H is not None and not poly_is_dual_pair(G, H):
        raise CodeSpecError("G and H are not dual: G(D) H(D)^T is nonzero")
    return CodeSpec(n=n, k=k, G=G, H=H)


def _parse_matrix(entries, name, rows, cols):
    if entries is None:
        return None
    try:
        P = poly_from_strings(entries)
    except ValueError as exc:
        raise CodeSpecError(f"bad matrix {name}: {exc}") from exc
    if (P.rows, P.cols) != (rows, cols):
        raise CodeSpecError(f"matrix {name} must be {rows}x{cols}, got {P.rows}x{P.cols}")
    return P


def load_codespec(path):
    """Read and validate a code-spec JSON file."""
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise CodeSpecError(f"cannot read code spec: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CodeSpecError(f"code spec is not valid JSON: {exc}") from exc
    return parse_codespec(obj)
