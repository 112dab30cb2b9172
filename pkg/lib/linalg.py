"""Dense matrix algebra over F_q.

Matrices are `galois` field arrays (row-major, immutable by convention:
nothing here mutates its inputs). Singularity is an ordinary outcome
when MDS sweeps check many submatrices, so it surfaces as a typed error
carrying the rank that was reached, never as a crash deep in numpy.
"""

from __future__ import annotations

from collections.abc import Sequence

import galois
import numpy as np

from lib.gf import FieldMismatchError

Mat = galois.FieldArray


class DimensionError(ValueError):
    """Operand shapes are incompatible."""


class SingularMatrixError(ArithmeticError):
    """A square matrix that needed inverting is rank deficient."""

    def __init__(self, size: int, rank: int):
        super().__init__(f"singular {size}x{size} matrix (rank {rank})")
        self.size = size
        self.rank = rank


def _same_field(*mats: Mat) -> type[galois.FieldArray]:
    if not mats:
        raise DimensionError("no matrices given")
    gf = type(mats[0])
    for m in mats[1:]:
        if type(m) is not gf:
            raise FieldMismatchError(f"mixed fields: GF({gf.order}) vs GF({type(m).order})")
    return gf


def _require_2d(a: Mat, what: str = "matrix") -> None:
    if a.ndim != 2:
        raise DimensionError(f"{what} must be 2-D, got shape {a.shape}")


def matmul(a: Mat, b: Mat) -> Mat:
    _same_field(a, b)
    if a.shape[-1] != b.shape[0]:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def transpose(a: Mat) -> Mat:
    _require_2d(a)
    return a.T.copy()


def rank(a: Mat) -> int:
    """Row-echelon rank (galois row reduction)."""
    _require_2d(a)
    if a.size == 0:
        return 0
    return int(np.linalg.matrix_rank(a))


def inverse(a: Mat) -> Mat:
    _require_2d(a)
    n, m = a.shape
    if n != m:
        raise DimensionError(f"inverse needs a square matrix, got {a.shape}")
    if n == 0:
        return a.copy()
    r = rank(a)
    if r < n:
        raise SingularMatrixError(n, r)
    return np.linalg.inv(a)


def solve(a: Mat, b: Mat) -> Mat:
    """x with a @ x == b for square invertible a (b may be a vector)."""
    _same_field(a, b)
    if a.shape[0] != b.shape[0]:
        raise DimensionError(f"cannot solve {a.shape} against {b.shape}")
    return inverse(a) @ b


def submatrix(a: Mat, row_idx: Sequence[int], col_idx: Sequence[int] | None = None) -> Mat:
    """Rows/cols in the order given (0-based). `col_idx=None` keeps all columns."""
    _require_2d(a)
    rows = list(row_idx)
    cols = list(range(a.shape[1])) if col_idx is None else list(col_idx)
    for i in rows:
        if not 0 <= i < a.shape[0]:
            raise IndexError(f"row index {i} out of range for {a.shape[0]} rows")
    for j in cols:
        if not 0 <= j < a.shape[1]:
            raise IndexError(f"column index {j} out of range for {a.shape[1]} columns")
    return a[np.ix_(rows, cols)] if rows and cols else type(a).Zeros((len(rows), len(cols)))


def hstack(parts: Sequence[Mat]) -> Mat:
    gf = _same_field(*parts)
    heights = {p.shape[0] for p in parts}
    if len(heights) != 1:
        raise DimensionError(f"hstack needs equal row counts, got {sorted(heights)}")
    return gf(np.hstack([p.view(np.ndarray) for p in parts]))


def vstack(parts: Sequence[Mat]) -> Mat:
    gf = _same_field(*parts)
    widths = {p.shape[1] for p in parts}
    if len(widths) != 1:
        raise DimensionError(f"vstack needs equal column counts, got {sorted(widths)}")
    return gf(np.vstack([p.view(np.ndarray) for p in parts]))


def block_diag(parts: Sequence[Mat]) -> Mat:
    gf = _same_field(*parts)
    for p in parts:
        _require_2d(p, "block")
    out = gf.Zeros((sum(p.shape[0] for p in parts), sum(p.shape[1] for p in parts)))
    r0 = c0 = 0
    for p in parts:
        r, c = p.shape
        if r and c:
            out[r0 : r0 + r, c0 : c0 + c] = p
        r0 += r
        c0 += c
    return out


def diag(v: Mat) -> Mat:
    gf = type(v)
    n = v.shape[0]
    out = gf.Zeros((n, n))
    if n:
        out[np.arange(n), np.arange(n)] = v
    return out


def is_zero(a: Mat) -> bool:
    return not np.any(a.view(np.ndarray))


def first_nonzero(a: Mat) -> tuple[tuple[int, ...], int] | None:
    """(index, value) of the first nonzero entry in row-major order."""
    hits = np.argwhere(a.view(np.ndarray) != 0)
    if len(hits) == 0:
        return None
    idx = tuple(int(i) for i in hits[0])
    return idx, int(a[idx])


def column_span_contains(a: Mat, b: Mat) -> bool:
    """True iff every column of b lies in colspan(a)."""
    if b.ndim == 1:
        b = b.reshape(-1, 1)
    return rank(hstack([a, b])) == rank(a)


def to_rows(a: Mat) -> list:
    """Nested int lists (decimal residues) for JSON output."""
    return a.view(np.ndarray).astype(int).tolist()
