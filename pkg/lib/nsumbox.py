"""The N-sum box as a MIMO MAC over F_q: y = M x with M = [0 I] [G H]^-1.

The box is modelled purely by its transfer function. G must be strongly
self-orthogonal (G^T J G = 0) and [G H] must have rank 2N; H only relabels
the measurement outcome, so the output depends on x only through its
H-coordinates (M G = 0, M H = I).

Symplectic weight helpers back the rank argument for erasure columns:
colspan([G H_left]) has swt >= E+1 everywhere, colspan(H_right) has
swt <= E, so the two only meet at 0.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from typing import Any

import numpy as np

from lib.gf import FieldSpec
from lib.linalg import (
    DimensionError,
    Mat,
    first_nonzero,
    hstack,
    inverse,
    is_zero,
    rank,
)

logger = logging.getLogger(__name__)

DEFAULT_ENUM_CAP = 10**7
_CHUNK = 1 << 15


class NSumBoxError(ValueError):
    """(G, H) does not define a valid box.

    `condition` names the violated requirement, `witness` carries the
    numeric evidence (the nonzero entry of G^T J G, or the rank reached).
    """

    def __init__(self, condition: str, witness: Any = None):
        detail = f" ({witness})" if witness is not None else ""
        super().__init__(f"{condition}{detail}")
        self.condition = condition
        self.witness = witness


class EnumerationCapExceeded(RuntimeError):
    """q**cols combinations exceed the enumeration cap."""

    def __init__(self, combos: int, cap: int):
        super().__init__(
            f"colspan enumeration needs {combos} combinations (> cap {cap}); "
            "use sampled_min_swt (sampled, lower-confidence mode) or raise QECSA_ENUM_CAP"
        )
        self.combos = combos
        self.cap = cap


@dataclass(frozen=True)
class NSumBoxSpec:
    n: int
    g: Mat
    h: Mat
    m: Mat


def symplectic_form(n: int, q: int | FieldSpec) -> Mat:
    """J = [[0, I_N], [-I_N, 0]]."""
    field = q if isinstance(q, FieldSpec) else FieldSpec(q)
    j = field.zeros((2 * n, 2 * n))
    eye = field.identity(n)
    if n:
        j[:n, n:] = eye
        j[n:, :n] = -eye
    return j


def _sso_product(g: Mat) -> Mat:
    rows, _ = g.shape
    if rows % 2:
        raise DimensionError(f"G must have 2N rows, got {rows}")
    j = symplectic_form(rows // 2, type(g).order)
    return g.T @ j @ g


def is_sso(g: Mat) -> bool:
    return is_zero(_sso_product(g))


def transfer_matrix(g: Mat, h: Mat) -> Mat:
    """[0 I_N] [G H]^-1, i.e. the bottom N rows of the inverse."""
    n = g.shape[1]
    return inverse(hstack([g, h]))[n:, :]


def build_box(g: Mat, h: Mat) -> NSumBoxSpec:
    two_n, n = g.shape
    if two_n != 2 * n or h.shape != g.shape:
        raise NSumBoxError("dimension", f"G {g.shape}, H {h.shape}; both must be 2N x N")
    product = _sso_product(g)
    if not is_zero(product):
        (i, j), value = first_nonzero(product)
        raise NSumBoxError("invalid stabilizer side", f"(G^T J G)[{i + 1},{j + 1}] = {value}")
    r = rank(hstack([g, h]))
    if r < two_n:
        raise NSumBoxError("G/H not complementary", f"rank {r} < {two_n}")
    return NSumBoxSpec(n=n, g=g, h=h, m=transfer_matrix(g, h))


def apply(box: NSumBoxSpec, x: Mat) -> Mat:
    if x.ndim != 1 or x.shape[0] != 2 * box.n:
        raise DimensionError(f"box input must have length {2 * box.n}, got shape {x.shape}")
    return box.m @ x


def _swt_rows(codewords: np.ndarray) -> np.ndarray:
    n = codewords.shape[1] // 2
    active = (codewords[:, :n] != 0) | (codewords[:, n:] != 0)
    return active.sum(axis=1)


def swt(c: Mat | np.ndarray) -> int:
    """Number of transmitters n with (c_n, c_{n+N}) != (0, 0)."""
    arr = np.asarray(c.view(np.ndarray) if hasattr(c, "view") else c)
    if arr.ndim != 1 or arr.shape[0] % 2:
        raise DimensionError(f"swt needs an even-length vector, got shape {arr.shape}")
    return int(_swt_rows(arr.reshape(1, -1))[0])


def _colspan_weights(m: Mat, cap: int) -> Iterator[np.ndarray]:
    """swt of every nonzero codeword sum_j c_j m[:, j], chunked."""
    gf = type(m)
    q = gf.order
    cols = m.shape[1]
    combos = q**cols
    if combos > cap:
        raise EnumerationCapExceeded(combos, cap)
    powers = q ** np.arange(cols, dtype=np.int64)
    mt = m.T
    for start in range(1, combos, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, combos), dtype=np.int64)
        coeffs = gf((idx[:, np.newaxis] // powers) % q)
        words = (coeffs @ mt).view(np.ndarray)
        nonzero = np.any(words != 0, axis=1)
        yield _swt_rows(words[nonzero])


def min_swt_colspan(m: Mat, cap: int = DEFAULT_ENUM_CAP) -> int | None:
    """Minimum swt over nonzero vectors of colspan(m); None when colspan(m) = {0}."""
    best: int | None = None
    for weights in _colspan_weights(m, cap):
        if weights.size:
            low = int(weights.min())
            best = low if best is None else min(best, low)
    return best


def max_swt_colspan(m: Mat, cap: int = DEFAULT_ENUM_CAP) -> int:
    """Maximum swt over colspan(m) (0 for the zero space)."""
    best = 0
    for weights in _colspan_weights(m, cap):
        if weights.size:
            best = max(best, int(weights.max()))
    return best


def sampled_min_swt(m: Mat, trials: int, rng: np.random.Generator) -> tuple[int | None, int]:
    """Lower-confidence mode: minimum swt seen over `trials` random combinations.

    An upper bound on the true minimum; returns (value, trials).
    """
    gf = type(m)
    coeffs = gf(rng.integers(0, gf.order, size=(trials, m.shape[1]), dtype=np.int64))
    words = (coeffs @ m.T).view(np.ndarray)
    words = words[np.any(words != 0, axis=1)]
    logger.debug("sampled %d combinations, %d nonzero", trials, len(words))
    if not len(words):
        return None, trials
    return int(_swt_rows(words).min()), trials
