"""JSON payloads for plans, matrices, transcripts and verify reports.

Field elements are decimal integers, matrices row-major nested lists,
rationals strings such as "1/2". Every payload is stamped via
`lib.schema`, so `qecsa run --replay` can check what it is reading.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from typing import Any

from lib import schema
from lib.codes import csa_matrix
from lib.linalg import Mat, to_rows
from lib.nsumbox import transfer_matrix
from lib.protocol import (
    PlanError,
    SchemeParams,
    Transcript,
    build_gh,
    instance_matrix,
    pad_erasure_set,
    plan_scheme,
    run_end_to_end,
)

logger = logging.getLogger(__name__)


def _vec(v: Mat | Sequence[int] | None) -> list[int] | None:
    return None if v is None else [int(s) for s in v]


def plan_payload(params: SchemeParams) -> dict[str, Any]:
    return schema.stamp(params.to_dict(), schema.PLAN)


def matrix_set(params: SchemeParams, erasure_set: Iterable[int] = ()) -> dict[str, Mat]:
    """CSA and the instance matrices; G, H and M as well for quantum plans."""
    out = {"CSA": csa_matrix(params.instance_points(0), params.vdm_cols(0))}
    if not params.quantum:
        return out
    out["QCSA_u"] = instance_matrix(params, 0)
    out["QCSA_v"] = instance_matrix(params, 1)
    declared = pad_erasure_set(erasure_set, params.n_servers, params.erasures)
    g, h = build_gh(params, declared)
    out["G"], out["H"] = g, h
    out["M"] = transfer_matrix(g, h)
    return out


def matrices_payload(params: SchemeParams, erasure_set: Iterable[int] = ()) -> dict[str, Any]:
    mats = matrix_set(params, erasure_set)
    payload: dict[str, Any] = {
        "params": params.to_dict(),
        "matrices": {name: to_rows(m) for name, m in mats.items()},
    }
    if params.quantum:
        payload["declared_erasures"] = list(
            pad_erasure_set(erasure_set, params.n_servers, params.erasures)
        )
    return schema.stamp(payload, schema.MATRICES)


def transcript_payload(t: Transcript) -> dict[str, Any]:
    payload = {
        "params": t.params.to_dict(),
        "theta": t.theta,
        "seed": t.seed,
        "erasure_set": list(t.erasure_set),
        "declared_erasures": list(t.declared_erasures),
        "deltas": {str(s): list(d) for s, d in sorted(t.deltas.items())},
        "store": [to_rows(w) for w in t.store.w],
        "shares": [
            {"server": s.server, "blocks": [to_rows(b) for b in s.blocks]} for s in t.shares
        ],
        "queries": [
            {"server": q.server, "blocks": [to_rows(b) for b in q.blocks]} for q in t.queries
        ],
        "answers": [_vec(a) for a in t.answers],
        "box_input": _vec(t.box_input),
        "box_output": _vec(t.box_output),
        "decoded": {
            "w": [list(w) for w in t.decoded.w],
            "nu": [list(v) for v in t.decoded.nu],
            "delta": [list(d) for d in t.decoded.delta],
        },
        "recovered_deltas": {str(s): list(d) for s, d in sorted(t.recovered_deltas.items())},
        "expected": [list(w) for w in t.expected],
        "correct": t.correct,
        "download_qudits": t.download_qudits,
        "achieved_rate": str(t.achieved_rate),
    }
    return schema.stamp(payload, schema.TRANSCRIPT)


def reports_payload(reports: Sequence[Any]) -> dict[str, Any]:
    """One report as-is, several under `reports` with an overall `pass`."""
    if len(reports) == 1:
        return schema.stamp(reports[0].to_dict(), schema.VERIFY_REPORT)
    return schema.stamp(
        {"reports": [r.to_dict() for r in reports], "pass": all(r.passed for r in reports)},
        schema.VERIFY_REPORT,
    )


def params_from_payload(p: dict[str, Any]) -> SchemeParams:
    """Re-plan from a serialized `params` block; the recorded regime must come back."""
    params = plan_scheme(
        int(p["N"]),
        int(p["K"]),
        int(p["X"]),
        int(p["T"]),
        int(p["E"]),
        int(p["q"]),
        alpha=p.get("alpha"),
        f=p.get("f"),
        u=p.get("u"),
    )
    if params.regime.value != p.get("regime", params.regime.value):
        raise PlanError(
            f"recorded regime {p['regime']!r} does not match re-planned {params.regime.value!r}"
        )
    return params


def replay(payload: dict[str, Any]) -> tuple[dict[str, Any], bool]:
    """Re-run a recorded transcript; (fresh payload, identical to the recording)."""
    schema.require_schema_version(payload, schema.TRANSCRIPT)
    params = params_from_payload(payload["params"])
    deltas = {int(s): (int(d[0]), int(d[1])) for s, d in payload.get("deltas", {}).items()}
    fresh = transcript_payload(
        run_end_to_end(
            params,
            int(payload["theta"]),
            int(payload["seed"]),
            payload.get("erasure_set", []),
            deltas,
            declared_erasures=payload.get("declared_erasures") if params.quantum else None,
        )
    )
    identical = fresh == payload
    if not identical:
        diff = sorted(k for k in set(fresh) | set(payload) if fresh.get(k) != payload.get(k))
        logger.debug("replay differs in %s", diff)
    return fresh, identical
