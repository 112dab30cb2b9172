"""End-to-end secure, private retrieval simulation over the N-sum box.

Pipeline (one transcript):

    plan_scheme -> encode_storage / make_queries -> server_answer
        -> inject_erasures -> build_gh + build_box -> quantum_decode

Regime-3 plans (and regime-2 plans where the classical branch wins) skip
the box and go through `classical_decode` on the responsive servers.

Conventions:
  - servers, theta and erasure sets are 1-based at every public boundary
    (as in [N], [K]); arrays are 0-based internally.
  - instance 0 is scaled by u, instance 1 by v (v dual to u).
  - the symbol U of the rate bound is read as E throughout.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field as dc_field
from enum import Enum
from fractions import Fraction

import numpy as np

from lib.codes import CodeError, CodePoints, Multipliers, qcsa_matrix, qcsa_split
from lib.gf import Fe, FieldSpec, smallest_prime_at_least
from lib.linalg import Mat, block_diag, column_span_contains, hstack, solve, submatrix
from lib.nsumbox import NSumBoxSpec, apply, build_box

logger = logging.getLogger(__name__)


class PlanError(ValueError):
    """Parameters admit no scheme (zero/negative rate, too few field points, ...)."""


class ProtocolError(ValueError):
    """A protocol step got inconsistent inputs (theta range, erasure set, responses)."""


class Regime(str, Enum):
    R1 = "R1"
    R2_EVEN = "R2_even"
    R2_ODD = "R2_odd"
    R3 = "R3"
    CLASSICAL_ONLY = "classical_only"

    @property
    def quantum(self) -> bool:
        return self in (Regime.R1, Regime.R2_EVEN, Regime.R2_ODD)


@dataclass(frozen=True)
class InstancePlan:
    t_effective: int
    l_symbols: int


@dataclass(frozen=True)
class SchemeParams:
    n_servers: int
    n_messages: int
    x_secure: int
    t_private: int
    erasures: int
    field: FieldSpec
    points: CodePoints
    mult: Multipliers
    regime: Regime
    per_instance: tuple[InstancePlan, ...]

    @property
    def quantum(self) -> bool:
        return self.regime.quantum

    @property
    def delivered_symbols(self) -> int:
        return sum(p.l_symbols for p in self.per_instance)

    @property
    def rate(self) -> Fraction:
        return Fraction(self.delivered_symbols, self.n_servers)

    @property
    def classical_rate(self) -> Fraction:
        n, x, t, e = self.n_servers, self.x_secure, self.t_private, self.erasures
        return Fraction(n - x - t - e, n)

    @property
    def gain(self) -> Fraction:
        return self.rate / self.classical_rate

    def vdm_cols(self, instance: int) -> int:
        return self.x_secure + self.per_instance[instance].t_effective

    def l_symbols(self, instance: int) -> int:
        return self.per_instance[instance].l_symbols

    def instance_points(self, instance: int) -> CodePoints:
        return self.points.with_l(self.l_symbols(instance))

    def beta(self, instance: int) -> Mat:
        if not self.quantum:
            return self.field.GF.Ones(self.n_servers)
        return self.field.vector(self.mult.beta(instance))

    def to_dict(self) -> dict:
        return {
            "N": self.n_servers,
            "K": self.n_messages,
            "X": self.x_secure,
            "T": self.t_private,
            "E": self.erasures,
            "q": self.field.q,
            "alpha": list(self.points.alpha),
            "f": list(self.points.f),
            "u": list(self.mult.u),
            "v": list(self.mult.v),
            "regime": self.regime.value,
            "per_instance": [
                {"t_effective": p.t_effective, "l_symbols": p.l_symbols} for p in self.per_instance
            ],
            "delivered_symbols": self.delivered_symbols,
            "rate": str(self.rate),
            "classical_rate": str(self.classical_rate),
            "gain": str(self.gain),
        }


# ---------- rate planning ----------


def _require_positive_rate(n: int, x: int, t: int, e: int) -> None:
    for name, value in (("X", x), ("T", t), ("E", e)):
        if value < 0:
            raise PlanError(f"{name} must be >= 0, got {value}")
    if n < 1:
        raise PlanError(f"N must be >= 1, got {n}")
    if n <= x + t + e:
        raise PlanError(f"zero/negative rate: need N > X+T+E, got N={n}, X+T+E={x + t + e}")


def classify(n: int, x: int, t: int, e: int) -> Regime:
    """Case split: R1 (X+T >= N/2), R2 (N-E >= N/2 > X+T), R3 (N/2 > N-E)."""
    _require_positive_rate(n, x, t, e)
    if 2 * (x + t) >= n:
        return Regime.R1
    if 2 * (n - e) >= n:
        return Regime.R2_EVEN if n % 2 == 0 else Regime.R2_ODD
    return Regime.R3


def rate(n: int, x: int, t: int, e: int) -> Fraction:
    regime = classify(n, x, t, e)
    classical = Fraction(n - x - t - e, n)
    if regime is Regime.R1:
        return 2 * classical
    if regime is Regime.R3:
        return classical
    return max(Fraction(n - 2 * e, n), classical)


def _instances(n: int, x: int, t: int, e: int) -> tuple[Regime, tuple[InstancePlan, ...]]:
    regime = classify(n, x, t, e)
    classical = InstancePlan(t, n - x - t - e)
    if regime is Regime.R1:
        return regime, (classical, classical)
    if regime is Regime.R3:
        return regime, (classical,)
    # R2: raise privacy until X+T_i reaches the half point; ties keep the quantum branch
    if n - 2 * e < classical.l_symbols:
        return Regime.CLASSICAL_ONLY, (classical,)
    t1 = (n + 1) // 2 - x
    t2 = n // 2 - x
    return regime, (InstancePlan(t1, n - e - x - t1), InstancePlan(t2, n - e - x - t2))


def plan_scheme(
    n: int,
    k: int,
    x: int,
    t: int,
    e: int,
    q: int | None = None,
    *,
    alpha: Sequence[int] | None = None,
    f: Sequence[int] | None = None,
    u: Sequence[int] | None = None,
) -> SchemeParams:
    """Classify (N, X, T, E), size both instances and fix the field points."""
    if k < 1:
        raise PlanError(f"K must be >= 1, got {k}")
    regime, per_instance = _instances(n, x, t, e)
    l_max = max(p.l_symbols for p in per_instance)
    if q is None:
        q = smallest_prime_at_least(n + l_max)
    field = FieldSpec(q)
    try:
        if alpha is None and f is None:
            points = CodePoints.default(field, n, l_max)
        else:
            alpha_vals = tuple(alpha) if alpha is not None else tuple(range(n))
            f_vals = tuple(f) if f is not None else tuple(range(n, n + l_max))
            if len(alpha_vals) != n:
                raise PlanError(f"alpha needs {n} entries, got {len(alpha_vals)}")
            if len(f_vals) < l_max:
                raise PlanError(f"f needs at least {l_max} entries, got {len(f_vals)}")
            points = CodePoints(field, alpha_vals, f_vals[:l_max])
        mult = Multipliers.from_u(points, u)
    except CodeError as e_:
        if n + l_max > q:
            raise PlanError(
                f"insufficient distinct points: N+L = {n + l_max} > q = {q}"
            ) from e_
        raise PlanError(str(e_)) from e_
    params = SchemeParams(n, k, x, t, e, field, points, mult, regime, per_instance)
    logger.debug(
        "planned %s: per_instance=%s rate=%s", regime.value, per_instance, params.rate
    )
    return params


# ---------- storage, queries, answers ----------


@dataclass(frozen=True)
class MessageStore:
    """w[i] is a K x L_i matrix: row k holds message k's symbols for instance i."""

    w: tuple[Mat, ...]

    def desired(self, theta: int) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(s) for s in block[theta - 1]) for block in self.w)


@dataclass(frozen=True)
class ServerShare:
    """blocks[i] is L_i x K; row l is S_n^(i,l)."""

    server: int
    blocks: tuple[Mat, ...]


@dataclass(frozen=True)
class QueryShare:
    """blocks[i] is K x L_i; column l is Q_n^(i,l)."""

    server: int
    blocks: tuple[Mat, ...]


def random_store(params: SchemeParams, rng: np.random.Generator) -> MessageStore:
    return MessageStore(
        tuple(
            params.field.random((params.n_messages, p.l_symbols), rng) for p in params.per_instance
        )
    )


def _check_store(store: MessageStore, params: SchemeParams) -> None:
    shapes = [(params.n_messages, p.l_symbols) for p in params.per_instance]
    if [b.shape for b in store.w] != shapes:
        raise ProtocolError(
            f"message store shapes {[b.shape for b in store.w]} do not match plan {shapes}"
        )


def pole_offsets(params: SchemeParams, instance: int) -> Mat:
    """(f_l - alpha_n) as an N x L_i matrix; never zero since alpha and f are disjoint."""
    points = params.instance_points(instance)
    return points.f_vec[np.newaxis, :] - points.alpha_vec[:, np.newaxis]


def _noise(
    params: SchemeParams,
    rng: np.random.Generator | None,
    given: Sequence[Mat] | None,
    depth: Sequence[int],
) -> list[Mat]:
    gf = params.field.GF
    if given is not None:
        out = [params.field.array(z) for z in given]
        for i, z in enumerate(out):
            want = (params.l_symbols(i), depth[i], params.n_messages)
            if z.shape != want:
                raise ProtocolError(f"noise for instance {i + 1} must be {want}, got {z.shape}")
        return out
    if rng is None:
        if all(d == 0 for d in depth):
            return [
                gf.Zeros((params.l_symbols(i), 0, params.n_messages)) for i in range(len(depth))
            ]
        raise ProtocolError("a seeded rng (or explicit noise) is required")
    return [
        params.field.random((params.l_symbols(i), depth[i], params.n_messages), rng)
        for i in range(len(depth))
    ]


def storage_block(offsets: Mat, w: Mat, z: Mat, terms: int | None = None) -> Mat:
    """One storage block at several servers, batched over noise draws.

    offsets (S,) are the (f_l - alpha_n), w (K,) the message column, z
    (B, X, K) the noise draws; returns (B, S, K) with
    w / c + sum_{x<terms} c**x z_x per offset c.
    """
    gf = type(offsets)
    depth = z.shape[1] if terms is None else min(terms, z.shape[1])
    out = (w[np.newaxis, :] / offsets[:, np.newaxis])[np.newaxis] + gf.Zeros((z.shape[0], 1, 1))
    power = gf.Ones(offsets.shape[0])
    for d in range(depth):
        out = out + power[np.newaxis, :, np.newaxis] * z[:, d, np.newaxis, :]
        power = power * offsets
    return out


def query_block(offsets: Mat, e_theta: Mat, z: Mat, terms: int | None = None) -> Mat:
    """Query counterpart of `storage_block`: e_theta + sum_{t<terms} c**(t+1) z_t."""
    gf = type(offsets)
    depth = z.shape[1] if terms is None else min(terms, z.shape[1])
    out = gf.Zeros((z.shape[0], offsets.shape[0], 1)) + e_theta[np.newaxis, np.newaxis, :]
    power = offsets.copy()
    for d in range(depth):
        out = out + power[np.newaxis, :, np.newaxis] * z[:, d, np.newaxis, :]
        power = power * offsets
    return out


def encode_storage(
    store: MessageStore,
    params: SchemeParams,
    rng: np.random.Generator | None = None,
    *,
    noise: Sequence[Mat] | None = None,
    noise_terms: int | None = None,
) -> list[ServerShare]:
    """S_n^(i,l) = W^(i,l) / (f_l - alpha_n) + sum_{x<X} (f_l - alpha_n)**x Z_x^(i,l).

    `noise[i]` has shape (L_i, X, K). `noise_terms` truncates the noise
    sum (negative controls only).
    """
    _check_store(store, params)
    z = _noise(params, rng, noise, [params.x_secure] * len(params.per_instance))
    per_instance = []
    for i in range(len(params.per_instance)):
        offs = pole_offsets(params, i)
        blocks = [
            storage_block(offs[:, l_], store.w[i][:, l_], z[i][l_][np.newaxis], noise_terms)[0]
            for l_ in range(params.l_symbols(i))
        ]
        per_instance.append(_by_server(params, blocks, (params.l_symbols(i), params.n_messages)))
    return [
        ServerShare(n + 1, tuple(inst[n] for inst in per_instance))
        for n in range(params.n_servers)
    ]


def make_queries(
    theta: int,
    params: SchemeParams,
    rng: np.random.Generator | None = None,
    *,
    noise: Sequence[Mat] | None = None,
    noise_terms: int | None = None,
) -> list[QueryShare]:
    """Q_n^(i,l) = e_theta + sum_{t<T_i} (f_l - alpha_n)**(t+1) Z'_t^(i,l).

    `noise[i]` has shape (L_i, T_i, K).
    """
    e_theta = unit_query(params, theta)
    z = _noise(params, rng, noise, [p.t_effective for p in params.per_instance])
    per_instance = []
    for i in range(len(params.per_instance)):
        offs = pole_offsets(params, i)
        blocks = [
            query_block(offs[:, l_], e_theta, z[i][l_][np.newaxis], noise_terms)[0]
            for l_ in range(params.l_symbols(i))
        ]
        # query blocks are stored K x L_i (one column per block)
        by_server = _by_server(params, blocks, (params.l_symbols(i), params.n_messages))
        per_instance.append([b.T.copy() for b in by_server])
    return [
        QueryShare(n + 1, tuple(inst[n] for inst in per_instance))
        for n in range(params.n_servers)
    ]


def unit_query(params: SchemeParams, theta: int) -> Mat:
    k = params.n_messages
    if not 1 <= theta <= k:
        raise ProtocolError(f"theta must lie in [1, {k}], got {theta}")
    e_theta = params.field.zeros(k)
    e_theta[theta - 1] = 1
    return e_theta


def _by_server(params: SchemeParams, blocks: list[Mat], shape: tuple[int, int]) -> list[Mat]:
    """Regroup per-block (N, K) arrays into per-server (L, K) arrays."""
    out = []
    for n in range(params.n_servers):
        mat = params.field.zeros(shape)
        for l_, block in enumerate(blocks):
            mat[l_] = block[n]
        out.append(mat)
    return out


def server_answer(
    share: ServerShare, query: QueryShare, betas: Sequence[int | Fe]
) -> tuple[Fe, ...]:
    """A_n^i = beta_n^i * sum_l S_n^(i,l) Q_n^(i,l), one value per instance."""
    if share.server != query.server:
        raise ProtocolError(f"share of server {share.server} paired with query of {query.server}")
    if len(betas) != len(share.blocks):
        raise ProtocolError(f"{len(share.blocks)} instances but {len(betas)} multipliers")
    gf = type(share.blocks[0])
    spec = FieldSpec(gf.order)
    out = []
    for s, qry, beta in zip(share.blocks, query.blocks, betas, strict=True):
        if s.shape[0] != qry.shape[1]:
            raise ProtocolError(f"share has {s.shape[0]} blocks, query has {qry.shape[1]}")
        acc = gf(0)
        for l_ in range(s.shape[0]):
            acc = acc + s[l_] @ qry[:, l_]
        out.append(spec.element(int(acc * gf(int(beta)))))
    return tuple(out)


def answer_vectors(
    shares: Sequence[ServerShare], queries: Sequence[QueryShare], params: SchemeParams
) -> tuple[Mat, ...]:
    """Per instance, the length-N answer vector [A_1^i .. A_N^i]."""
    per_server = [
        server_answer(
            s,
            qry,
            [params.beta(i)[s.server - 1] for i in range(len(params.per_instance))],
        )
        for s, qry in zip(shares, queries, strict=True)
    ]
    return tuple(
        params.field.vector([row[i] for row in per_server]) for i in range(len(params.per_instance))
    )


def stack_answers(answers: Sequence[Mat]) -> Mat:
    """[A^1; A^2] as the 2N box input (before erasures)."""
    gf = type(answers[0])
    return gf(np.concatenate([a.view(np.ndarray) for a in answers]))


# ---------- classical decoding ----------


@dataclass(frozen=True)
class ClassicalDecoded:
    w: tuple[int, ...]
    nu: tuple[int, ...]
    rows_used: tuple[int, ...]


def instance_matrix(params: SchemeParams, instance: int) -> Mat:
    """QCSA (or plain CSA for classical plans) of one instance: N x (N - E)."""
    return qcsa_matrix(
        params.instance_points(instance), params.beta(instance), params.vdm_cols(instance)
    )


def classical_decode(
    answers: Mat,
    responsive: Iterable[int],
    params: SchemeParams,
    instance: int = 0,
) -> ClassicalDecoded:
    """Invert any N-E responsive rows of the instance matrix; returns (W_theta, nu)."""
    need = params.n_servers - params.erasures
    rows = sorted({r - 1 for r in responsive})
    if any(not 0 <= r < params.n_servers for r in rows):
        raise ProtocolError(f"responsive servers must lie in [1, {params.n_servers}]")
    if len(rows) < need:
        raise ProtocolError(f"too few responses: {len(rows)} < N-E = {need}")
    rows = rows[:need]
    mat = instance_matrix(params, instance)
    z = solve(submatrix(mat, rows), answers[rows])
    split = params.l_symbols(instance)
    return ClassicalDecoded(
        w=tuple(int(s) for s in z[:split]),
        nu=tuple(int(s) for s in z[split:]),
        rows_used=tuple(r + 1 for r in rows),
    )


def fit_answers(answers: Mat, params: SchemeParams, instance: int) -> tuple[ClassicalDecoded, bool]:
    """Fit (w, nu) from the first N-E rows; consistent iff all N answers lie in the code."""
    decoded = classical_decode(answers, range(1, params.n_servers + 1), params, instance)
    consistent = column_span_contains(instance_matrix(params, instance), answers)
    return decoded, consistent


# ---------- N-sum box assembly and decoding ----------


def _check_erasure_set(erasure_set: Iterable[int], n: int) -> tuple[int, ...]:
    servers = tuple(sorted(erasure_set))
    if len(set(servers)) != len(servers):
        raise ProtocolError(f"duplicate servers in erasure set {list(servers)}")
    if any(not 1 <= s <= n for s in servers):
        raise ProtocolError(f"erasure set {list(servers)} must lie in [1, {n}]")
    return servers


def pad_erasure_set(erasure_set: Iterable[int], n: int, e: int) -> tuple[int, ...]:
    """Declare exactly E positions: the actual erasures plus the lowest responsive servers."""
    actual = _check_erasure_set(erasure_set, n)
    if len(actual) > e:
        raise ProtocolError(f"{len(actual)} erasures exceed the tolerated E = {e}")
    padding = [s for s in range(1, n + 1) if s not in actual][: e - len(actual)]
    return tuple(sorted((*actual, *padding)))


def build_gh(params: SchemeParams, erasure_set: Iterable[int]) -> tuple[Mat, Mat]:
    """G = blockdiag(Gamma_top, Gamma_bottom); H = [GC/Lambda blocks | paired e_n columns]."""
    if not params.quantum:
        raise PlanError(f"regime {params.regime.value} has no quantum plan (no N-sum box)")
    n, e = params.n_servers, params.erasures
    declared = _check_erasure_set(erasure_set, n)
    if len(declared) != e:
        raise ProtocolError(
            f"the box needs exactly E = {e} declared erasures, got {list(declared)}; "
            "use pad_erasure_set for fewer"
        )
    gc_u, gamma_top, lambda_low = qcsa_split(
        params.instance_points(0), params.beta(0), params.vdm_cols(0), (n + 1) // 2
    )
    gc_v, gamma_low, lambda_top = qcsa_split(
        params.instance_points(1), params.beta(1), params.vdm_cols(1), n // 2
    )
    g = block_diag([gamma_top, gamma_low])
    h_left = hstack([block_diag([gc_u, gc_v]), block_diag([lambda_low, lambda_top])])
    picks = params.field.zeros((n, e))
    for j, server in enumerate(declared):
        picks[server - 1, j] = 1
    h = hstack([h_left, block_diag([picks, picks])])
    return g, h


def inject_erasures(
    answers: Mat,
    erasure_set: Iterable[int],
    deltas: Mapping[int, tuple[int, int]] | None = None,
) -> Mat:
    """x = A with (delta^1_n, delta^2_n) added at (n, n+N) for each erased server n."""
    two_n = answers.shape[0]
    n = two_n // 2
    erased = _check_erasure_set(erasure_set, n)
    deltas = dict(deltas or {})
    stray = set(deltas) - set(erased)
    if stray:
        raise ProtocolError(f"deltas given for responsive servers {sorted(stray)}")
    gf = type(answers)
    x = answers.copy()
    for server in erased:
        d1, d2 = deltas.get(server, (0, 0))
        x[server - 1] += gf(int(d1) % gf.order)
        x[server - 1 + n] += gf(int(d2) % gf.order)
    return x


@dataclass(frozen=True)
class Decoded:
    w: tuple[tuple[int, ...], ...]
    nu: tuple[tuple[int, ...], ...] = ()
    delta: tuple[tuple[int, ...], tuple[int, ...]] = ((), ())


def y_layout(params: SchemeParams) -> list[slice]:
    """Slices of y for w^1, w^2, nu_left^1, nu_left^2, delta^1, delta^2 (H column order)."""
    n, e = params.n_servers, params.erasures
    sizes = [
        params.l_symbols(0),
        params.l_symbols(1),
        params.vdm_cols(0) - (n + 1) // 2,
        params.vdm_cols(1) - n // 2,
        e,
        e,
    ]
    out, pos = [], 0
    for size in sizes:
        out.append(slice(pos, pos + size))
        pos += size
    return out


def split_output(y: Sequence[int], params: SchemeParams) -> Decoded:
    parts = [tuple(int(s) for s in y[sl]) for sl in y_layout(params)]
    return Decoded(w=(parts[0], parts[1]), nu=(parts[2], parts[3]), delta=(parts[4], parts[5]))


def quantum_decode(box: NSumBoxSpec, x: Mat, params: SchemeParams) -> Decoded:
    """y = M x = [w^1 w^2 nu_left^1 nu_left^2 delta^1 delta^2], split by the H column order."""
    return split_output(apply(box, x), params)


# ---------- orchestration ----------


@dataclass
class Transcript:
    params: SchemeParams
    theta: int
    seed: int
    store: MessageStore
    shares: list[ServerShare]
    queries: list[QueryShare]
    answers: tuple[Mat, ...]
    erasure_set: tuple[int, ...]
    declared_erasures: tuple[int, ...]
    deltas: dict[int, tuple[int, int]]
    decoded: Decoded
    box_input: Mat | None = None
    box_output: list[int] | None = None
    recovered_deltas: dict[int, tuple[int, int]] = dc_field(default_factory=dict)

    @property
    def download_qudits(self) -> int:
        # erased answers still count towards the download
        return self.params.n_servers

    @property
    def expected(self) -> tuple[tuple[int, ...], ...]:
        return self.store.desired(self.theta)

    @property
    def correct(self) -> bool:
        return self.decoded.w == self.expected

    @property
    def achieved_rate(self) -> Fraction:
        return Fraction(sum(len(w) for w in self.decoded.w), self.download_qudits)


def prepare_answers(
    params: SchemeParams,
    theta: int,
    rng: np.random.Generator,
    store: MessageStore | None = None,
) -> tuple[MessageStore, list[ServerShare], list[QueryShare], tuple[Mat, ...]]:
    store = store or random_store(params, rng)
    shares = encode_storage(store, params, rng)
    queries = make_queries(theta, params, rng)
    return store, shares, queries, answer_vectors(shares, queries, params)


def run_end_to_end(
    params: SchemeParams,
    theta: int,
    seed: int,
    erasure_set: Iterable[int] = (),
    deltas: Mapping[int, tuple[int, int]] | None = None,
    *,
    store: MessageStore | None = None,
    declared_erasures: Iterable[int] | None = None,
) -> Transcript:
    """One full run; decoded w equals (W_theta^1, W_theta^2) when the scheme is sound."""
    rng = np.random.default_rng(seed)
    erased = _check_erasure_set(erasure_set, params.n_servers)
    if len(erased) > params.erasures:
        raise ProtocolError(f"{len(erased)} erasures exceed the tolerated E = {params.erasures}")
    deltas = {int(k): (int(v[0]), int(v[1])) for k, v in (deltas or {}).items()}
    store, shares, queries, answers = prepare_answers(params, theta, rng, store)

    if not params.quantum:
        responsive = [s for s in range(1, params.n_servers + 1) if s not in erased]
        result = classical_decode(answers[0], responsive, params, 0)
        logger.debug("classical decode from rows %s", result.rows_used)
        return Transcript(
            params, theta, seed, store, shares, queries, answers, erased, erased, deltas,
            Decoded(w=(result.w,), nu=(result.nu,)),
        )

    declared = (
        pad_erasure_set(erased, params.n_servers, params.erasures)
        if declared_erasures is None
        else tuple(sorted(declared_erasures))
    )
    uncovered = sorted(set(erased) - set(declared))
    if uncovered:
        raise ProtocolError(
            f"erased servers {uncovered} are not among the declared erasures {list(declared)}"
        )
    box = build_box(*build_gh(params, declared))
    x = inject_erasures(stack_answers(answers), erased, deltas)
    decoded = quantum_decode(box, x, params)
    recovered = {
        s: (decoded.delta[0][j], decoded.delta[1][j]) for j, s in enumerate(declared)
    }
    logger.debug("declared erasures %s, recovered deltas %s", declared, recovered)
    return Transcript(
        params, theta, seed, store, shares, queries, answers, erased, declared, deltas, decoded,
        box_input=x, box_output=[int(s) for s in apply(box, x)], recovered_deltas=recovered,
    )
