"""Structured code matrices: CSA, GRS, QCSA and the dual multipliers.

Row index n is server n (1-based in every public report; arrays are
0-based as usual). Column layout follows the answer vector: Cauchy block
(one column per desired symbol) first, Vandermonde/GRS block after it.

    CSA(n, l)  = 1 / (f_l - alpha_n)             l <= L
    CSA(n, L+j) = alpha_n ** (j-1)               j = 1..vdm_cols
    QCSA       = Diag(beta) @ CSA
    GRS(n, j)  = beta_n * alpha_n ** (j-1)
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field

import numpy as np

from lib.gf import FieldSpec
from lib.linalg import Mat, diag, matmul, rank, submatrix

logger = logging.getLogger(__name__)


class CodeError(ValueError):
    """Invalid code parameters (colliding points, zero multipliers, k > N)."""


@dataclass(frozen=True)
class CodePoints:
    """Evaluation points alpha_1..alpha_N and Cauchy poles f_1..f_L."""

    field: FieldSpec
    alpha: tuple[int, ...]
    f: tuple[int, ...]

    def __post_init__(self) -> None:
        q = self.field.q
        values = (*self.alpha, *self.f)
        for v in values:
            if not 0 <= v < q:
                raise CodeError(f"point {v} is not a residue mod {q}")
        if len(set(values)) != len(values):
            raise CodeError(
                f"alpha/f must be {len(values)} distinct elements of F_{q}: "
                f"alpha={list(self.alpha)} f={list(self.f)}"
            )
        if not self.alpha:
            raise CodeError("at least one evaluation point is required")

    @classmethod
    def default(cls, field: FieldSpec, n: int, l_symbols: int) -> CodePoints:
        """alpha_n = n-1, f_l = N+l-1 (the layout of the worked F_5 example)."""
        if n + l_symbols > field.q:
            raise CodeError(
                f"insufficient distinct points: need N+L = {n + l_symbols} <= q = {field.q}"
            )
        return cls(field, tuple(range(n)), tuple(range(n, n + l_symbols)))

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def num_poles(self) -> int:
        return len(self.f)

    @property
    def alpha_vec(self) -> Mat:
        return self.field.vector(self.alpha)

    @property
    def f_vec(self) -> Mat:
        return self.field.vector(self.f)

    def with_l(self, l_symbols: int) -> CodePoints:
        """Same alphas, first `l_symbols` poles."""
        if l_symbols > len(self.f):
            raise CodeError(f"only {len(self.f)} poles available, asked for {l_symbols}")
        return CodePoints(self.field, self.alpha, self.f[:l_symbols])


@dataclass(frozen=True)
class Multipliers:
    """Instance multipliers: u scales instance 1, v (dual of u) scales instance 2."""

    u: tuple[int, ...]
    v: tuple[int, ...]

    @classmethod
    def from_u(cls, points: CodePoints, u: Sequence[int] | None = None) -> Multipliers:
        u_vals = tuple(u) if u is not None else (1,) * points.n
        if len(u_vals) != points.n:
            raise CodeError(f"u needs {points.n} entries, got {len(u_vals)}")
        u_vec = points.field.vector(u_vals)
        v_vec = dual_multipliers(points.alpha_vec, u_vec)
        mult = cls(tuple(int(x) for x in u_vec), tuple(int(x) for x in v_vec))
        mult.validate(points)
        return mult

    def validate(self, points: CodePoints) -> None:
        """Nonzero multipliers and sum_n u_n v_n alpha_n**m = 0 for m <= N-2."""
        if 0 in self.u or 0 in self.v:
            raise CodeError("zero multiplier")
        field = points.field
        sums = duality_sums(points.alpha_vec, field.vector(self.u), field.vector(self.v))
        bad = next((m for m, s in enumerate(sums[: points.n - 1]) if s), None)
        if bad is not None:
            raise CodeError(
                f"v={list(self.v)} is not the dual of u={list(self.u)}: "
                f"power {bad} sums to {sums[bad]}"
            )

    def beta(self, instance: int) -> tuple[int, ...]:
        """Instance 0 uses u, instance 1 uses v."""
        return self.u if instance == 0 else self.v


def _vandermonde(alpha: Mat, k: int) -> Mat:
    gf = type(alpha)
    n = alpha.shape[0]
    out = gf.Zeros((n, k))
    col = gf.Ones(n)
    for j in range(k):
        out[:, j] = col
        col = col * alpha
    return out


def _require_nonzero(beta: Mat) -> None:
    if np.any(beta.view(np.ndarray) == 0):
        raise CodeError("zero multiplier")


def cauchy_block(points: CodePoints, beta: Mat | None = None, l_symbols: int | None = None) -> Mat:
    """GC block: entry (n, l) = beta_n / (f_l - alpha_n)."""
    l_symbols = points.num_poles if l_symbols is None else l_symbols
    alpha = points.alpha_vec
    gf = type(alpha)
    if l_symbols == 0:
        return gf.Zeros((points.n, 0))
    poles = points.with_l(l_symbols).f_vec
    diff = poles[np.newaxis, :] - alpha[:, np.newaxis]
    scale = gf.Ones(points.n) if beta is None else beta
    _require_nonzero(scale)
    return scale[:, np.newaxis] / diff


def csa_matrix(points: CodePoints, vdm_cols: int) -> Mat:
    """N x (L + vdm_cols): Cauchy block then Vandermonde block."""
    if vdm_cols < 0:
        raise CodeError(f"vdm_cols must be >= 0, got {vdm_cols}")
    gf = points.field.GF
    cauchy = cauchy_block(points)
    vdm = _vandermonde(points.alpha_vec, vdm_cols)
    return gf(np.hstack([cauchy.view(np.ndarray), vdm.view(np.ndarray)]))


def grs_matrix(alpha: Mat, beta: Mat, k: int) -> Mat:
    """N x k generalized Reed-Solomon generator: entry (n, j) = beta_n * alpha_n**(j-1)."""
    n = alpha.shape[0]
    if beta.shape[0] != n:
        raise CodeError(f"beta has {beta.shape[0]} entries for {n} points")
    if not 0 <= k <= n:
        raise CodeError(f"GRS dimension k={k} must lie in [0, {n}]")
    _require_nonzero(beta)
    return beta[:, np.newaxis] * _vandermonde(alpha, k)


def qcsa_matrix(points: CodePoints, beta: Mat, vdm_cols: int) -> Mat:
    """Diag(beta) @ CSA: every server scales its classical answer by beta_n."""
    _require_nonzero(beta)
    return matmul(diag(beta), csa_matrix(points, vdm_cols))


def qcsa_split(points: CodePoints, beta: Mat, vdm_cols: int, head: int) -> tuple[Mat, Mat, Mat]:
    """(GC, GRS[:, :head], GRS[:, head:]), the Gamma/Lambda partition of a QCSA matrix."""
    if head > vdm_cols:
        raise CodeError(
            f"GRS block has {vdm_cols} columns but {head} are needed for the stabilizer side"
        )
    grs = grs_matrix(points.alpha_vec, beta, vdm_cols)
    return cauchy_block(points, beta), grs[:, :head], grs[:, head:]


def dual_multipliers(alpha: Mat, u: Mat) -> Mat:
    """v_n = (u_n * prod_{i != n} (alpha_n - alpha_i)) ** -1."""
    gf = type(alpha)
    n = alpha.shape[0]
    if len(set(int(a) for a in alpha)) != n:
        raise CodeError("alpha must be pairwise distinct")
    _require_nonzero(u)
    out = gf.Zeros(n)
    for i in range(n):
        prod = u[i]
        for j in range(n):
            if j != i:
                prod = prod * (alpha[i] - alpha[j])
        out[i] = np.reciprocal(prod)
    return out


def duality_sums(alpha: Mat, u: Mat, v: Mat) -> list[int]:
    """[sum_n u_n v_n alpha_n**m for m in 0..N-1]; zero for m <= N-2 when v is dual to u."""
    n = alpha.shape[0]
    term = u * v
    sums = []
    for _ in range(n):
        sums.append(int(np.add.reduce(term)))
        term = term * alpha
    return sums


@dataclass
class MdsCheck:
    ok: bool
    mode: str  # "exhaustive" | "sampled"
    checked: int
    witness: list[int] = dc_field(default_factory=list)  # 1-based rows of a singular subset

    def __bool__(self) -> bool:
        return self.ok


def _singular_rows(m: Mat, subsets: Iterable[tuple[int, ...]], k: int) -> tuple[int, ...] | None:
    for rows in subsets:
        if rank(submatrix(m, rows)) < k:
            return rows
    return None


def _chunks(items: list, size: int) -> list[list]:
    return [items[i : i + size] for i in range(0, len(items), size)]


def check_mds_erasure(
    m: Mat,
    e: int,
    *,
    max_exhaustive_n: int = 16,
    samples: int = 2000,
    rng: np.random.Generator | None = None,
    workers: int = 1,
) -> MdsCheck:
    """True iff every (N-e)-row submatrix of the N x (N-e) matrix m is invertible.

    Exhaustive over all C(N, N-e) row subsets up to `max_exhaustive_n`
    rows, random subset sampling beyond it (reported via `mode`).
    """
    n, k = m.shape
    if k != n - e:
        raise CodeError(f"expected {n - e} columns for N={n}, E={e}; got {k}")
    if n <= max_exhaustive_n:
        mode = "exhaustive"
        subsets = list(itertools.combinations(range(n), k))
    else:
        mode = "sampled"
        rng = rng or np.random.default_rng(0)
        subsets = [tuple(sorted(rng.choice(n, size=k, replace=False))) for _ in range(samples)]
        logger.warning(
            "⚠️  N=%d exceeds the exhaustive bound %d; sampling %d row subsets",
            n,
            max_exhaustive_n,
            samples,
        )

    if workers > 1 and len(subsets) > workers:
        parts = _chunks(subsets, -(-len(subsets) // workers))
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda part: _singular_rows(m, part, k), parts))
        bad = next((r for r in results if r is not None), None)
    else:
        bad = _singular_rows(m, subsets, k)

    if bad is not None:
        logger.debug("singular row subset %s", [r + 1 for r in bad])
        return MdsCheck(False, mode, len(subsets), [int(r) + 1 for r in bad])
    return MdsCheck(True, mode, len(subsets))
