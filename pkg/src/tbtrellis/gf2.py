"""Exact GF(2) arithmetic: dense bit vectors/matrices and polynomial matrices.

Bit vectors and matrices are numpy uint8 arrays with entries in {0, 1};
row reduction uses XOR row operations.  A :class:`PolyMatrix` is a matrix
over GF(2)[D], stored as the list of its constant coefficient matrices,
lowest power of D first.

Entry strings are LSB-first binary: character i is the coefficient of
D^i, so ``"111"`` is 1+D+D^2 and ``"01"`` is D.  Bit vectors print
leftmost-first (bit 1 of a symbol is the leftmost character).
"""

from __future__ import annotations

import numpy as np


def as_bits(x, length=None):
    """Coerce a bit sequence (or a single 0/1 int) to a uint8 array."""
    if isinstance(x, (int, np.integer)):
        x = [x]
    a = np.asarray(x, dtype=np.uint8)
    if a.ndim != 1 or not np.all(a <= 1):
        raise ValueError("expected a one-dimensional sequence of 0/1 bits")
    if length is not None and a.shape[0] != length:
        raise ValueError(f"expected {length} bits, got {a.shape[0]}")
    return a


def parse_bits(text):
    """Parse a bit string; spaces and underscores are group separators."""
    cleaned = text.replace(" ", "").replace("_", "")
    if not cleaned or any(c not in "01" for c in cleaned):
        raise ValueError(f"not a bit string: {text!r}")
    return np.array([int(c) for c in cleaned], dtype=np.uint8)


def split_symbols(bits, n):
    """Split a flat bit sequence into a list of n-bit tuples."""
    a = as_bits(bits)
    if n <= 0 or a.shape[0] % n != 0:
        raise ValueError(f"bit count {a.shape[0]} is not a multiple of {n}")
    return [tuple(int(b) for b in a[i : i + n]) for i in range(0, a.shape[0], n)]


def format_bits(bits, group=None):
    """Render bits as '0'/'1' text, optionally in space-separated groups."""
    a = as_bits(bits)
    s = "".join(str(int(b)) for b in a)
    if group is None:
        return s
    return " ".join(s[i : i + group] for i in range(0, len(s), group))


def format_state(bits):
    """Render a state as a parenthesized bit tuple, e.g. ``(1,0)``."""
    return "(" + ",".join(str(int(b)) for b in bits) + ")"


def parse_state(text):
    """Parse a state written as ``(1,0)``, ``1,0`` or ``10``."""
    cleaned = text.strip().strip("()").replace(",", "").replace(" ", "")
    if cleaned == "":
        return ()
    if any(c not in "01" for c in cleaned):
        raise ValueError(f"not a state: {text!r}")
    return tuple(int(c) for c in cleaned)


# ---------------------------------------------------------------------------
# scalar matrices


def mat_mul(A, B):
    """Matrix product over GF(2)."""
    A = np.asarray(A, dtype=np.uint8)
    B = np.asarray(B, dtype=np.uint8)
    if A.shape[-1] != B.shape[0]:
        raise ValueError(f"dimension mismatch: {A.shape} x {B.shape}")
    return (A.astype(np.int64) @ B.astype(np.int64)) % 2


def _row_echelon(A):
    """Row-reduce in place (copy); returns (reduced matrix, pivot columns)."""
    R = np.array(A, dtype=np.uint8, copy=True) % 2
    m, n = R.shape
    pivots = []
    row = 0
    for col in range(n):
        if row >= m:
            break
        hits = np.nonzero(R[row:, col])[0]
        if hits.size == 0:
            continue
        p = row + int(hits[0])
        if p != row:
            R[[row, p]] = R[[p, row]]
        others = np.nonzero(R[:, col])[0]
        for i in others:
            if i != row:
                R[i] ^= R[row]
        pivots.append(col)
        row += 1
    return R, pivots


def rank(A):
    """GF(2) rank of a dense binary matrix."""
    A = np.atleast_2d(np.asarray(A, dtype=np.uint8))
    return len(_row_echelon(A)[1])


def nullspace(A):
    """Basis of {x : A x = 0 over GF(2)}, as rows of a (nullity x cols) array."""
    A = np.atleast_2d(np.asarray(A, dtype=np.uint8))
    n = A.shape[1]
    R, pivots = _row_echelon(A)
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((len(free), n), dtype=np.uint8)
    for idx, fc in enumerate(free):
        basis[idx, fc] = 1
        # back-substitute: pivot row r constrains x[pivots[r]] = sum of free terms
        for r, pc in enumerate(pivots):
            basis[idx, pc] = R[r, fc]
    return basis


# ---------------------------------------------------------------------------
# polynomial matrices


def _trimmed(coeffs):
    end = len(coeffs)
    while end > 1 and not coeffs[end - 1].any():
        end -= 1
    return coeffs[:end]


class PolyMatrix:
    """Matrix over GF(2)[D] as a list of coefficient matrices [P_0, ..., P_d].

    Instances are immutable.  ``deg`` is the effective degree (highest
    index with a nonzero coefficient matrix; 0 for the zero matrix).
    Equality and hashing compare the trimmed coefficient lists, so
    trailing zero matrices do not distinguish two values.
    """

    __slots__ = ("coeffs", "rows", "cols")

    def __init__(self, coeffs):
        mats = [np.array(c, dtype=np.uint8, copy=True) % 2 for c in coeffs]
        if not mats:
            raise ValueError("need at least one coefficient matrix")
        shape = mats[0].shape
        if len(shape) != 2:
            raise ValueError("coefficient matrices must be two-dimensional")
        if any(m.shape != shape for m in mats):
            raise ValueError("coefficient matrices must share dimensions")
        for m in mats:
            m.flags.writeable = False
        object.__setattr__(self, "coeffs", tuple(mats))
        object.__setattr__(self, "rows", shape[0])
        object.__setattr__(self, "cols", shape[1])

    def __setattr__(self, name, value):
        raise AttributeError("PolyMatrix is immutable")

    @classmethod
    def from_strings(cls, rows):
        """Build from LSB-first coefficient strings, e.g. [["1","101","111"]]."""
        if not rows or not rows[0]:
            raise ValueError("empty matrix")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        deg = 0
        for r in rows:
            for s in r:
                if not s or any(c not in "01" for c in s):
                    raise ValueError(f"bad coefficient string: {s!r}")
                deg = max(deg, len(s) - 1)
        coeffs = [np.zeros((len(rows), ncols), dtype=np.uint8) for _ in range(deg + 1)]
        for i, r in enumerate(rows):
            for j, s in enumerate(r):
                for p, c in enumerate(s):
                    coeffs[p][i, j] = int(c)
        return cls(_trimmed(coeffs))

    @property
    def deg(self):
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i].any():
                return i
        return 0

    def is_zero(self):
        return not any(c.any() for c in self.coeffs)

    def coefficient_list(self):
        """[P_0, ..., P_deg] with the trailing zero matrices trimmed."""
        return list(self.coeffs[: self.deg + 1])

    def reciprocal(self):
        """Reverse the stored coefficient list (P~_i = P_{deg-i})."""
        return PolyMatrix(list(reversed(self.coeffs)))

    def transpose(self):
        return PolyMatrix([c.T for c in self.coeffs])

    @property
    def T(self):
        return self.transpose()

    def __add__(self, other):
        self._check_same_shape(other)
        d = max(len(self.coeffs), len(other.coeffs))
        out = []
        for i in range(d):
            a = self.coeffs[i] if i < len(self.coeffs) else 0
            b = other.coeffs[i] if i < len(other.coeffs) else 0
            out.append((a + b) % 2)
        return PolyMatrix(_trimmed([np.asarray(c, dtype=np.uint8) for c in out]))

    def __mul__(self, other):
        """Polynomial matrix product by coefficient convolution."""
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(
                f"dimension mismatch: {self.rows}x{self.cols} times "
                f"{other.rows}x{other.cols}"
            )
        out = [
            np.zeros((self.rows, other.cols), dtype=np.uint8)
            for _ in range(len(self.coeffs) + len(other.coeffs) - 1)
        ]
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] ^= mat_mul(a, b).astype(np.uint8)
        return PolyMatrix(_trimmed(out))

    def _check_same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def _key(self):
        trimmed = self.coeffs[: self.deg + 1]
        return (self.rows, self.cols, b"".join(c.tobytes() for c in trimmed))

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def entry_string(self, i, j):
        """LSB-first coefficient string of entry (i, j) in canonical form."""
        bits = [str(int(c[i, j])) for c in self.coeffs]
        while len(bits) > 1 and bits[-1] == "0":
            bits.pop()
        return "".join(bits)

    def to_strings(self):
        return [[self.entry_string(i, j) for j in range(self.cols)] for i in range(self.rows)]

    def __str__(self):
        rows = self.to_strings()
        widths = [max(len(r[j]) for r in rows) for j in range(self.cols)]
        return "\n".join("  ".join(r[j].rjust(widths[j]) for j in range(self.cols)) for r in rows)

    def __repr__(self):
        return f"PolyMatrix({self.to_strings()!r})"


def poly_from_strings(rows):
    """Parse a polynomial matrix from LSB-first binary coefficient strings."""
    return PolyMatrix.from_strings(rows)


def coefficient_expansion(P):
    """Coefficient matrices [P_0, ..., P_deg] of a PolyMatrix."""
    return P.coefficient_list()


def reciprocal(P):
    """The reciprocal polynomial matrix (coefficient order reversed)."""
    return P.reciprocal()
