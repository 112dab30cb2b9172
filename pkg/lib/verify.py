"""Property suites over a planned scheme.

Two tiers: exact enumeration at tiny scale (integer histograms, never
statistics) and rank conditions at any scale. Each suite returns a
`VerifyReport`; `passed` is true exactly when no witness was recorded.
Witnesses carry enough data (indices, seeds, deltas) to replay the
failing cell.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any

import numpy as np

from lib.codes import check_mds_erasure, dual_multipliers, duality_sums, grs_matrix
from lib.config import QecsaConfig
from lib.gf import FieldSpec
from lib.linalg import Mat, hstack, rank
from lib.nsumbox import (
    DEFAULT_ENUM_CAP,
    EnumerationCapExceeded,
    NSumBoxError,
    NSumBoxSpec,
    build_box,
    max_swt_colspan,
    min_swt_colspan,
    sampled_min_swt,
)
from lib.protocol import (
    MessageStore,
    PlanError,
    ProtocolError,
    SchemeParams,
    build_gh,
    classical_decode,
    instance_matrix,
    pad_erasure_set,
    plan_scheme,
    pole_offsets,
    prepare_answers,
    query_block,
    rate,
    split_output,
    stack_answers,
    storage_block,
    unit_query,
)

logger = logging.getLogger(__name__)

MAX_WITNESSES = 20

# (N, X, T, E) -> rate, hand-derived from the three-case rate formula
DEFAULT_RATE_CASES: tuple[tuple[int, int, int, int, Fraction], ...] = (
    (4, 1, 1, 1, Fraction(1, 2)),
    (10, 2, 2, 1, Fraction(4, 5)),
    (10, 2, 1, 6, Fraction(1, 10)),
    (5, 1, 1, 1, Fraction(3, 5)),
)


class VerifyError(ValueError):
    """A suite was asked for a mode (or plan) it cannot check."""


class Mode(str, Enum):
    EXHAUSTIVE = "exhaustive"
    SAMPLED = "sampled"
    RANK_CONDITION = "rank_condition"


@dataclass
class VerifyReport:
    suite: str
    params: dict[str, Any]
    mode: str
    trials: int = 0
    witnesses: list[dict[str, Any]] = field(default_factory=list)
    failures: int = 0
    seed: int | None = None
    notes: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.witnesses

    def fail(self, witness: dict[str, Any]) -> None:
        self.failures += 1
        if len(self.witnesses) < MAX_WITNESSES:
            self.witnesses.append(witness)

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "params": self.params,
            "mode": self.mode,
            "trials": self.trials,
            "pass": self.passed,
            "failures": self.failures,
            "witnesses": self.witnesses,
            "seed": self.seed,
            "notes": self.notes,
        }


def _mode(mode: str | Mode, allowed: Iterable[Mode], suite: str) -> Mode:
    try:
        m = Mode(mode)
    except ValueError as e:
        raise VerifyError(f"unknown mode {mode!r}") from e
    if m not in allowed:
        raise VerifyError(f"suite {suite} does not support mode {m.value}")
    return m


def _log_result(report: VerifyReport) -> VerifyReport:
    if report.passed:
        logger.info("✅ %s (%s): %d checks passed", report.suite, report.mode, report.trials)
    else:
        logger.info(
            "❌ %s (%s): %d of %d checks failed",
            report.suite,
            report.mode,
            report.failures,
            report.trials,
        )
    return report


# ---------- correctness ----------


def _erasure_sets(
    n: int, e: int, mode: Mode, rng: np.random.Generator, samples: int
) -> list[tuple[int, ...]]:
    every = [
        tuple(s + 1 for s in combo)
        for size in range(e + 1)
        for combo in itertools.combinations(range(n), size)
    ]
    if mode is Mode.EXHAUSTIVE or len(every) <= samples:
        return every
    picks = rng.choice(len(every), size=samples, replace=False)
    return [every[int(i)] for i in sorted(picks)]


def _digits(idx: np.ndarray, q: int, width: int) -> np.ndarray:
    powers = q ** np.arange(width, dtype=np.int64)
    return (idx[:, np.newaxis] // powers) % q


def _delta_rows(
    q: int, size: int, cap: int, samples: int, rng: np.random.Generator
) -> tuple[np.ndarray, bool]:
    """Rows of [delta^1 per erased server, delta^2 per erased server]; (rows, exhaustive)."""
    width = 2 * size
    if width == 0:
        return np.zeros((1, 0), dtype=np.int64), True
    combos = q**width
    if combos <= cap:
        return _digits(np.arange(combos, dtype=np.int64), q, width), True
    return rng.integers(0, q, size=(samples, width), dtype=np.int64), False


def _prepare_boxes(
    params: SchemeParams,
    sets: Sequence[tuple[int, ...]],
    declared_erasures: Callable[[tuple[int, ...]], Iterable[int]] | None,
) -> dict[tuple[int, ...], tuple[tuple[int, ...], NSumBoxSpec | str]]:
    boxes: dict[tuple[int, ...], NSumBoxSpec] = {}
    out = {}
    for erased in sets:
        if declared_erasures is None:
            declared = pad_erasure_set(erased, params.n_servers, params.erasures)
        else:
            declared = tuple(sorted(declared_erasures(erased)))
        if declared not in boxes:
            try:
                boxes[declared] = build_box(*build_gh(params, declared))
            except (NSumBoxError, ProtocolError) as e:
                boxes[declared] = str(e)
        out[erased] = (declared, boxes[declared])
    return out


def _correctness_cell(
    params: SchemeParams,
    seed: int,
    cell: int,
    sets: Sequence[tuple[int, ...]],
    boxes: dict,
    delta_cap: int,
    delta_samples: int,
) -> tuple[int, list[dict[str, Any]], bool]:
    """All theta x erasure sets x deltas for one noise seed."""
    rng = np.random.default_rng([seed, cell])
    q, n = params.field.q, params.n_servers
    trials, failures, all_exhaustive = 0, [], True
    for theta in range(1, params.n_messages + 1):
        store, _, _, answers = prepare_answers(params, theta, rng)
        expected = store.desired(theta)

        if not params.quantum:
            for erased in sets:
                responsive = [s for s in range(1, n + 1) if s not in erased]
                trials += 1
                got = classical_decode(answers[0], responsive, params, 0)
                if (got.w,) != expected:
                    failures.append(
                        {"seed_cell": cell, "theta": theta, "erasure_set": list(erased),
                         "expected": [list(w) for w in expected], "decoded": [list(got.w)]}
                    )
            continue

        a = stack_answers(answers).view(np.ndarray).astype(np.int64)
        for erased in sets:
            declared, box = boxes[erased]
            if isinstance(box, str):
                trials += 1
                failures.append(
                    {"seed_cell": cell, "theta": theta, "erasure_set": list(erased),
                     "declared": list(declared), "error": box}
                )
                continue
            rows, exhaustive = _delta_rows(q, len(erased), delta_cap, delta_samples, rng)
            all_exhaustive &= exhaustive
            x = np.tile(a, (rows.shape[0], 1))
            for j, server in enumerate(erased):
                x[:, server - 1] += rows[:, j]
                x[:, server - 1 + n] += rows[:, len(erased) + j]
            gf = params.field.GF
            ys = (box.m @ gf(x % q).T).T.view(np.ndarray)
            for r, y in enumerate(ys):
                trials += 1
                decoded = split_output(y, params)
                injected = {
                    s: (int(rows[r, j]), int(rows[r, len(erased) + j]))
                    for j, s in enumerate(erased)
                }
                want_delta = (
                    tuple(injected.get(s, (0, 0))[0] for s in declared),
                    tuple(injected.get(s, (0, 0))[1] for s in declared),
                )
                if decoded.w != expected or decoded.delta != want_delta:
                    failures.append(
                        {"seed_cell": cell, "theta": theta, "erasure_set": list(erased),
                         "declared": list(declared),
                         "deltas": {str(s): list(d) for s, d in injected.items()},
                         "expected": [list(w) for w in expected],
                         "decoded": [list(w) for w in decoded.w],
                         "recovered_deltas": [list(d) for d in decoded.delta]}
                    )
    return trials, failures, all_exhaustive


def verify_correctness(
    params: SchemeParams,
    mode: str | Mode = Mode.EXHAUSTIVE,
    *,
    seed: int = 0,
    noise_seeds: int = 20,
    delta_exhaustive_cap: int = 10**4,
    delta_samples: int = 100,
    set_samples: int = 64,
    workers: int = 1,
    declared_erasures: Callable[[tuple[int, ...]], Iterable[int]] | None = None,
) -> VerifyReport:
    """Every theta x erasure set (size <= E) x delta x noise seed decodes exactly.

    `declared_erasures` maps the actual erasure set to the positions the
    box is built for (default: pad with the lowest responsive servers).
    """
    m = _mode(mode, (Mode.EXHAUSTIVE, Mode.SAMPLED), "correctness")
    report = VerifyReport("correctness", params.to_dict(), m.value, seed=seed)
    rng = np.random.default_rng(seed)
    sets = _erasure_sets(params.n_servers, params.erasures, m, rng, set_samples)
    boxes = _prepare_boxes(params, sets, declared_erasures) if params.quantum else {}
    delta_cap = delta_exhaustive_cap if m is Mode.EXHAUSTIVE else 0

    def cell(c: int) -> tuple[int, list[dict[str, Any]], bool]:
        return _correctness_cell(params, seed, c, sets, boxes, delta_cap, delta_samples)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(cell, range(noise_seeds)))
    else:
        results = [cell(c) for c in range(noise_seeds)]

    delta_exhaustive = True
    for trials, failures, exhaustive in results:
        report.trials += trials
        delta_exhaustive &= exhaustive
        for w in failures:
            report.fail(w)

    expected_rate = rate(params.n_servers, params.x_secure, params.t_private, params.erasures)
    if params.rate != expected_rate:
        report.fail({"check": "rate", "delivered": str(params.rate), "formula": str(expected_rate)})
    report.notes = {
        "erasure_sets": len(sets),
        "noise_seeds": noise_seeds,
        "delta_mode": "exhaustive" if delta_exhaustive else "sampled",
    }
    logger.debug("correctness over %d erasure sets, deltas %s", len(sets), report.notes)
    return _log_result(report)


# ---------- X-security / T-privacy ----------


def _noise_chunks(gf: type, depth: int, k: int, chunk: int = 1 << 14) -> Iterable[Mat]:
    width = depth * k
    combos = gf.order**width
    for start in range(0, combos, chunk):
        idx = np.arange(start, min(start + chunk, combos), dtype=np.int64)
        yield gf(_digits(idx, gf.order, width).reshape(-1, depth, k))


def _histogram(blocks: Iterable[Mat]) -> Counter:
    hist: Counter = Counter()
    for block in blocks:
        rows = block.view(np.ndarray).reshape(block.shape[0], -1)
        uniq, counts = np.unique(rows, axis=0, return_counts=True)
        for row, count in zip(uniq, counts, strict=True):
            hist[tuple(int(v) for v in row)] += int(count)
    return hist


def _first_difference(a: Counter, b: Counter) -> dict[str, Any]:
    for key in sorted(set(a) | set(b)):
        if a[key] != b[key]:
            return {"observation": list(key), "counts": [a[key], b[key]]}
    return {}


def _coefficient_ranks(
    params: SchemeParams,
    report: VerifyReport,
    subset_size: Callable[[int], int],
    first_power: int,
    noise_terms: int | None,
) -> VerifyReport:
    """[(f_l - alpha_n)**(first_power + d)] over every subset must have full rank."""
    for i in range(len(params.per_instance)):
        size = subset_size(i)
        if size == 0:
            continue
        terms = size if noise_terms is None else min(noise_terms, size)
        offs = pole_offsets(params, i)
        for l_ in range(params.l_symbols(i)):
            for servers in itertools.combinations(range(params.n_servers), size):
                c = offs[list(servers), l_]
                mat = params.field.zeros((size, terms))
                for d in range(terms):
                    mat[:, d] = c ** int(first_power + d)
                report.trials += 1
                r = rank(mat)
                if r < size:
                    report.fail(
                        {"instance": i + 1, "block": l_ + 1,
                         "servers": [s + 1 for s in servers], "rank": r, "needed": size}
                    )
    return report


def _constant_stores(params: SchemeParams) -> tuple[MessageStore, MessageStore]:
    gf = params.field.GF
    shapes = [(params.n_messages, p.l_symbols) for p in params.per_instance]
    return (
        MessageStore(tuple(gf.Zeros(s) for s in shapes)),
        MessageStore(tuple(gf.Ones(s) for s in shapes)),
    )


def verify_x_security(
    params: SchemeParams,
    mode: str | Mode = Mode.EXHAUSTIVE,
    *,
    cap: int = DEFAULT_ENUM_CAP,
    noise_terms: int | None = None,
    stores: tuple[MessageStore, MessageStore] | None = None,
) -> VerifyReport:
    """Any X servers see the same share distribution for two different message stores.

    Exhaustive mode compares integer histograms per (instance, block,
    X-subset); blocks use independent noise, so per-block equality is
    joint equality. `noise_terms` drops noise terms (negative controls).
    """
    m = _mode(mode, (Mode.EXHAUSTIVE, Mode.RANK_CONDITION), "x_security")
    report = VerifyReport("x_security", params.to_dict(), m.value)
    x = params.x_secure
    if noise_terms is not None:
        report.notes["noise_terms"] = noise_terms
    if m is Mode.RANK_CONDITION:
        return _log_result(_coefficient_ranks(params, report, lambda _: x, 0, noise_terms))
    if x == 0:
        report.notes["vacuous"] = "X = 0"
        return _log_result(report)

    gf, k = params.field.GF, params.n_messages
    combos = gf.order ** (x * k)
    if combos > cap:
        raise EnumerationCapExceeded(combos, cap)
    first, second = stores or _constant_stores(params)
    report.notes["noise_realizations"] = combos
    for i in range(len(params.per_instance)):
        offs = pole_offsets(params, i)
        for l_ in range(params.l_symbols(i)):
            for servers in itertools.combinations(range(params.n_servers), x):
                c = offs[list(servers), l_]
                hists = [
                    _histogram(
                        storage_block(c, store.w[i][:, l_], z, noise_terms)
                        for z in _noise_chunks(gf, x, k)
                    )
                    for store in (first, second)
                ]
                report.trials += 1
                if hists[0] != hists[1]:
                    report.fail(
                        {"instance": i + 1, "block": l_ + 1,
                         "servers": [s + 1 for s in servers],
                         **_first_difference(hists[0], hists[1])}
                    )
    return _log_result(report)


def verify_t_privacy(
    params: SchemeParams,
    mode: str | Mode = Mode.EXHAUSTIVE,
    *,
    cap: int = DEFAULT_ENUM_CAP,
    noise_terms: int | None = None,
) -> VerifyReport:
    """Any T_i servers see the same query distribution for every theta in [K]."""
    m = _mode(mode, (Mode.EXHAUSTIVE, Mode.RANK_CONDITION), "t_privacy")
    report = VerifyReport("t_privacy", params.to_dict(), m.value)
    if noise_terms is not None:
        report.notes["noise_terms"] = noise_terms

    def depth(i: int) -> int:
        return params.per_instance[i].t_effective

    if m is Mode.RANK_CONDITION:
        return _log_result(_coefficient_ranks(params, report, depth, 1, noise_terms))

    gf, k = params.field.GF, params.n_messages
    combos = max(gf.order ** (depth(i) * k) for i in range(len(params.per_instance)))
    if combos > cap:
        raise EnumerationCapExceeded(combos, cap)
    report.notes["noise_realizations"] = combos
    units = [unit_query(params, theta) for theta in range(1, k + 1)]
    for i in range(len(params.per_instance)):
        t_i = depth(i)
        if t_i == 0:
            continue
        offs = pole_offsets(params, i)
        for l_ in range(params.l_symbols(i)):
            for servers in itertools.combinations(range(params.n_servers), t_i):
                c = offs[list(servers), l_]
                hists = [
                    _histogram(
                        query_block(c, e, z, noise_terms) for z in _noise_chunks(gf, t_i, k)
                    )
                    for e in units
                ]
                report.trials += 1
                for theta, hist in enumerate(hists[1:], start=2):
                    if hist != hists[0]:
                        report.fail(
                            {"instance": i + 1, "block": l_ + 1,
                             "servers": [s + 1 for s in servers], "thetas": [1, theta],
                             **_first_difference(hists[0], hist)}
                        )
                        break
    return _log_result(report)


# ---------- box structure ----------


def _h_right_support(h_right: Mat) -> int:
    """Transmitters touched by any column of H_right; bounds swt over its span."""
    n = h_right.shape[0] // 2
    arr = h_right.view(np.ndarray)
    return int(np.count_nonzero(np.any(arr[:n] != 0, axis=1) | np.any(arr[n:] != 0, axis=1)))


def verify_lemma1(
    params: SchemeParams,
    erasure_set: Iterable[int],
    mode: str | Mode = Mode.EXHAUSTIVE,
    *,
    cap: int = DEFAULT_ENUM_CAP,
    samples: int = 20000,
    seed: int = 0,
    gh: tuple[Mat, Mat] | None = None,
) -> VerifyReport:
    """(a) min swt of colspan([G H_left]) >= E+1, (b) swt <= E on colspan(H_right),
    (c) rank([G H]) = 2N.

    Sampled mode bounds (a) from random combinations (advisory only) and
    (b) from the support of H_right.
    """
    m = _mode(mode, (Mode.EXHAUSTIVE, Mode.SAMPLED), "lemma1")
    if not params.quantum and gh is None:
        raise VerifyError(f"regime {params.regime.value} builds no N-sum box")
    erased = tuple(sorted(erasure_set))
    g, h = gh if gh is not None else build_gh(params, erased)
    n, e = params.n_servers, params.erasures
    split = n - 2 * e
    h_left, h_right = h[:, :split], h[:, split:]
    report = VerifyReport("lemma1", params.to_dict(), m.value)
    if m is Mode.SAMPLED:
        report.seed = seed
    report.notes["erasure_set"] = list(erased)

    left = hstack([g, h_left])
    if m is Mode.EXHAUSTIVE:
        low = min_swt_colspan(left, cap)
        high = max_swt_colspan(h_right, cap)
        report.trials = type(g).order ** left.shape[1] + type(g).order ** h_right.shape[1]
    else:
        low, tried = sampled_min_swt(left, samples, np.random.default_rng(seed))
        high = _h_right_support(h_right)
        report.trials = tried
    report.notes.update({"min_swt_left": low, "max_swt_right": high})

    if low is not None and low < e + 1:
        report.fail({"check": "a", "min_swt": low, "required": e + 1})
    if high > e:
        report.fail({"check": "b", "max_swt": high, "allowed": e})
    r = rank(hstack([g, h]))
    report.notes["rank"] = r
    if r < 2 * n:
        report.fail({"check": "c", "rank": r, "required": 2 * n})
    return _log_result(report)


def verify_duality(q: int, alpha: Sequence[int], u: Sequence[int]) -> VerifyReport:
    """sum_n u_n v_n alpha_n**m = 0 for m <= N-2, and Gamma_top^T Gamma_bottom = 0."""
    spec = FieldSpec(q)
    a, u_vec = spec.vector(alpha), spec.vector(u)
    v = dual_multipliers(a, u_vec)
    n = a.shape[0]
    sums = duality_sums(a, u_vec, v)
    report = VerifyReport(
        "duality",
        {"q": q, "alpha": [int(s) for s in a], "u": [int(s) for s in u_vec],
         "v": [int(s) for s in v]},
        Mode.EXHAUSTIVE.value,
    )
    report.notes["sums"] = sums
    for power, value in enumerate(sums[: n - 1]):
        report.trials += 1
        if value:
            report.fail({"check": "sum", "m": power, "value": value})
    top = grs_matrix(a, u_vec, (n + 1) // 2)
    bottom = grs_matrix(a, v, n // 2)
    product = top.T @ bottom
    report.trials += 1
    hits = np.argwhere(product.view(np.ndarray) != 0)
    if len(hits):
        i, j = (int(t) for t in hits[0])
        report.fail({"check": "gamma", "entry": [i + 1, j + 1], "value": int(product[i, j])})
    return _log_result(report)


def verify_rate_table(
    cases: Iterable[Sequence[Any]] = DEFAULT_RATE_CASES, *, k: int = 1
) -> VerifyReport:
    """Planner-delivered symbols / N equals rate(.) (and the expected value when given)."""
    report = VerifyReport("rate_table", {"K": k}, Mode.EXHAUSTIVE.value)
    rows = []
    for case in cases:
        n, x, t, e = (int(v) for v in case[:4])
        want = Fraction(case[4]) if len(case) > 4 else None
        report.trials += 1
        try:
            params = plan_scheme(n, k, x, t, e)
        except PlanError as err:
            report.fail({"case": [n, x, t, e], "error": str(err)})
            continue
        formula = rate(n, x, t, e)
        rows.append(
            {"case": [n, x, t, e], "regime": params.regime.value, "rate": str(params.rate)}
        )
        if params.rate != formula or (want is not None and formula != want):
            report.fail(
                {"case": [n, x, t, e], "delivered": str(params.rate), "formula": str(formula),
                 "expected": str(want) if want is not None else None}
            )
    report.notes["table"] = rows
    return _log_result(report)


def verify_mds(
    params: SchemeParams,
    *,
    max_exhaustive_n: int = 16,
    samples: int = 2000,
    seed: int = 0,
    workers: int = 1,
) -> VerifyReport:
    """Every (N-E)-row submatrix of each instance matrix is invertible."""
    checks = [
        check_mds_erasure(
            instance_matrix(params, i),
            params.erasures,
            max_exhaustive_n=max_exhaustive_n,
            samples=samples,
            rng=np.random.default_rng(seed),
            workers=workers,
        )
        for i in range(len(params.per_instance))
    ]
    mode = Mode.SAMPLED if any(c.mode == "sampled" for c in checks) else Mode.EXHAUSTIVE
    report = VerifyReport("mds", params.to_dict(), mode.value, seed=seed)
    for i, check in enumerate(checks):
        report.trials += check.checked
        if not check:
            report.fail({"instance": i + 1, "rows": check.witness})
    return _log_result(report)


def verify_all(
    params: SchemeParams,
    config: QecsaConfig | None = None,
    *,
    seed: int = 0,
    mode: str | Mode = Mode.EXHAUSTIVE,
) -> list[VerifyReport]:
    """Every suite for one parameter set.

    `mode` is the requested tier. Exhaustive runs exact modes wherever the
    enumeration fits `enum_cap` and falls back per suite otherwise. Sampled
    and rank_condition skip enumeration: correctness and lemma1 sample,
    X-security and T-privacy check the rank condition.
    """
    config = config or QecsaConfig()
    tier = _mode(mode, tuple(Mode), "all")
    q, k = params.field.q, params.n_messages
    exact = tier is Mode.EXHAUSTIVE
    reports = [
        verify_rate_table(
            [(params.n_servers, params.x_secure, params.t_private, params.erasures)], k=k
        ),
        verify_correctness(
            params,
            Mode.EXHAUSTIVE if exact else Mode.SAMPLED,
            seed=seed,
            noise_seeds=config.noise_seeds,
            delta_exhaustive_cap=config.delta_exhaustive_cap,
            delta_samples=config.delta_samples,
            workers=config.workers,
        ),
        verify_mds(
            params,
            max_exhaustive_n=config.mds_exhaustive_max_n,
            samples=config.mds_samples,
            seed=seed,
            workers=config.workers,
        ),
    ]

    def security_mode(depth: int) -> Mode:
        fits = q ** (depth * k) <= config.enum_cap
        return Mode.EXHAUSTIVE if exact and fits else Mode.RANK_CONDITION

    t_max = max(p.t_effective for p in params.per_instance)
    reports.append(
        verify_x_security(params, security_mode(params.x_secure), cap=config.enum_cap)
    )
    reports.append(verify_t_privacy(params, security_mode(t_max), cap=config.enum_cap))

    if params.quantum:
        reports.append(verify_duality(q, params.points.alpha, params.mult.u))
        declared = tuple(range(1, params.erasures + 1))
        left_cols = 2 * params.n_servers - 2 * params.erasures
        fits = q**left_cols <= config.enum_cap
        lemma_mode = Mode.EXHAUSTIVE if exact and fits else Mode.SAMPLED
        reports.append(
            verify_lemma1(
                params, declared, lemma_mode, cap=config.enum_cap,
                samples=config.swt_samples, seed=seed,
            )
        )
    return reports
