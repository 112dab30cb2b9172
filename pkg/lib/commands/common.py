"""Flags and config shared by the scheme-level subcommands.

Every subcommand accepts the same scheme flags (-N -K -X -T -E -q,
--alpha/--f/--u) plus an optional `--config` JSON file. Values given
on the command line win over the file, the file wins over the
defaults, and the defaults are the worked F_5 example (N=4, K=2,
X=T=E=1; q defaults to the smallest prime that fits, 5 here).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from lib import schema
from lib.protocol import SchemeParams, plan_scheme

SCHEME_FLAGS = ("N", "K", "X", "T", "E", "q", "alpha", "f", "u")
RUN_FLAGS = ("theta", "erase", "delta", "seed", "out", "mode", "suite")

SUITES = (
    "all",
    "correctness",
    "x_security",
    "t_privacy",
    "lemma1",
    "duality",
    "rate_table",
    "mds",
)


class RunConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    N: int = Field(4, ge=1)
    K: int = Field(2, ge=1)
    X: int = Field(1, ge=0)
    T: int = Field(1, ge=0)
    E: int = Field(1, ge=0)
    q: int | None = Field(None, ge=2)  # None: smallest prime >= N + max L_i
    alpha: list[int] | None = None
    f: list[int] | None = None
    u: list[int] | None = None
    theta: int = Field(1, ge=1)
    erase: list[int] = Field(default_factory=list)
    delta: list[int] = Field(default_factory=list)
    seed: int = 0
    out: str | None = None
    mode: Literal["exhaustive", "sampled", "rank_condition"] = "exhaustive"
    suite: Literal[
        "all", "correctness", "x_security", "t_privacy", "lemma1", "duality", "rate_table", "mds"
    ] = "all"

    @model_validator(mode="after")
    def _check_run_inputs(self) -> RunConfig:
        if self.theta > self.K:
            raise ValueError(f"theta must lie in [1, K={self.K}], got {self.theta}")
        if len(set(self.erase)) != len(self.erase):
            raise ValueError(f"duplicate servers in erase {self.erase}")
        if any(not 1 <= s <= self.N for s in self.erase):
            raise ValueError(f"erase must list servers in [1, N={self.N}], got {self.erase}")
        if self.delta and len(self.delta) != 2 * len(self.erase):
            raise ValueError(
                "delta needs two values (delta^1, delta^2) per erased server, "
                f"got {len(self.delta)} for {len(self.erase)} erasures"
            )
        return self

    def deltas(self) -> dict[int, tuple[int, int]]:
        """{server: (delta^1, delta^2)} in erase order; zeros when --delta is absent."""
        if not self.delta:
            return {s: (0, 0) for s in self.erase}
        return {
            s: (self.delta[2 * j], self.delta[2 * j + 1]) for j, s in enumerate(self.erase)
        }

    def plan(self) -> SchemeParams:
        return plan_scheme(
            self.N, self.K, self.X, self.T, self.E, self.q, alpha=self.alpha, f=self.f, u=self.u
        )


def csv_ints(value: str) -> list[int]:
    """Parse `3` / `1,2` / `` into a list of ints."""
    if not value.strip():
        return []
    try:
        return [int(part.strip()) for part in value.split(",") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {value!r}"
        ) from exc


def add_scheme_arguments(parser: argparse.ArgumentParser) -> None:
    """Flags default to None so `resolve_config` can tell given from omitted."""
    parser.add_argument("-N", type=int, default=None, help="number of servers (default 4)")
    parser.add_argument("-K", type=int, default=None, help="number of messages (default 2)")
    parser.add_argument("-X", type=int, default=None, help="X-security level (default 1)")
    parser.add_argument("-T", type=int, default=None, help="T-privacy level (default 1)")
    parser.add_argument("-E", type=int, default=None, help="tolerated erasures (default 1)")
    parser.add_argument(
        "-q", type=int, default=None, help="prime field size (default: smallest prime that fits)"
    )
    parser.add_argument("--alpha", type=csv_ints, default=None, help="evaluation points, csv")
    parser.add_argument("--f", type=csv_ints, default=None, help="Cauchy poles, csv")
    parser.add_argument("--u", type=csv_ints, default=None, help="instance-1 multipliers, csv")
    parser.add_argument("--config", default=None, help="JSON file with RunConfig fields")
    parser.add_argument("--debug", action="store_true", help="DEBUG logging on stderr")


def _read_config_file(path: str) -> dict[str, Any]:
    with Path(path).open(encoding="utf-8") as f:
        data = json.load(f)
    if not isinstance(data, dict):
        raise ValueError(f"{path}: top-level JSON must be an object")
    data.pop("schema_version", None)
    return data


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Defaults < --config file < explicit flags. Exits 2 on invalid input."""
    from qecsa import logger

    data: dict[str, Any] = {}
    try:
        if getattr(args, "config", None):
            data.update(_read_config_file(args.config))
        for key in (*SCHEME_FLAGS, *RUN_FLAGS):
            value = getattr(args, key, None)
            if value is not None:
                data[key] = value
        return RunConfig(**data)
    except (OSError, ValueError, ValidationError) as e:
        logger.error("❌ invalid configuration: %s", e)
        sys.exit(2)


def setup_logging(args: argparse.Namespace) -> logging.Logger:
    from qecsa import logger

    if getattr(args, "debug", False):
        logger.setLevel(logging.DEBUG)
        logging.getLogger("lib").setLevel(logging.DEBUG)
        logger.debug("🐞 debug logging enabled")
    return logger


def emit(payload: dict[str, Any], out: str | None = None) -> None:
    """JSON to `out` when given, else to stdout (stderr stays for diagnostics)."""
    from qecsa import logger

    text = schema.dumps(payload)
    if out:
        tmp = Path(out + ".tmp")
        tmp.write_text(text + "\n", encoding="utf-8")
        tmp.replace(out)
        logger.info("💾 wrote %s", out)
    else:
        sys.stdout.write(text + "\n")
