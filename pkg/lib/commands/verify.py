"""`qecsa verify`: run property suites; exit 1 when any check fails."""

from __future__ import annotations

import argparse
import sys
from typing import TYPE_CHECKING

from lib.commands.common import (
    SUITES,
    add_scheme_arguments,
    csv_ints,
    emit,
    resolve_config,
    setup_logging,
)

if TYPE_CHECKING:
    from lib.commands.common import RunConfig
    from lib.config import QecsaConfig
    from lib.protocol import SchemeParams
    from lib.verify import VerifyReport


def add_parser(subparsers: argparse._SubParsersAction) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(
        "verify",
        help="correctness / security / privacy / box-structure suites",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
examples:
  qecsa verify                                   # every suite on the worked F_5 example
  qecsa verify --suite correctness -N 6 -K 3 -X 1 -T 2 -E 1
  qecsa verify --suite x_security --mode rank_condition -N 10 -X 3 -T 2 -E 1
  QECSA_ENUM_CAP=100000000 qecsa verify --suite lemma1 --erase 2

suite modes:
  correctness    exhaustive | sampled
  x_security     exhaustive | rank_condition
  t_privacy      exhaustive | rank_condition
  lemma1         exhaustive | sampled
  mds            exhaustive below mds_exhaustive_max_n servers, sampled above
        """,
    )
    add_scheme_arguments(parser)
    parser.add_argument("--suite", choices=SUITES, default=None, help="suite to run (default all)")
    parser.add_argument(
        "--mode",
        choices=["exhaustive", "sampled", "rank_condition"],
        default=None,
        help="verification mode (default exhaustive)",
    )
    parser.add_argument("--erase", type=csv_ints, default=None, help="erasure set for lemma1")
    parser.add_argument("--seed", type=int, default=None, help="seed for noise and sampling")
    parser.add_argument("--out", default=None, help="write the report JSON here")
    parser.add_argument(
        "--settings",
        default="config.json",
        help="tuning knobs (enum_cap, noise_seeds, ...); default config.json",
    )
    return parser


def run_suites(
    params: SchemeParams, config: RunConfig, knobs: QecsaConfig
) -> list[VerifyReport]:
    """Dispatch one suite (or all) with knobs from QecsaConfig."""
    from lib import verify as v
    from lib.protocol import pad_erasure_set

    suite, mode, seed = config.suite, config.mode, config.seed
    if suite == "all":
        return v.verify_all(params, knobs, seed=seed, mode=mode)
    if suite == "correctness":
        return [
            v.verify_correctness(
                params,
                mode,
                seed=seed,
                noise_seeds=knobs.noise_seeds,
                delta_exhaustive_cap=knobs.delta_exhaustive_cap,
                delta_samples=knobs.delta_samples,
                workers=knobs.workers,
            )
        ]
    if suite == "x_security":
        return [v.verify_x_security(params, mode, cap=knobs.enum_cap)]
    if suite == "t_privacy":
        return [v.verify_t_privacy(params, mode, cap=knobs.enum_cap)]
    if suite == "lemma1":
        declared = pad_erasure_set(config.erase, params.n_servers, params.erasures)
        return [
            v.verify_lemma1(
                params, declared, mode, cap=knobs.enum_cap, samples=knobs.swt_samples, seed=seed
            )
        ]
    if suite == "duality":
        return [v.verify_duality(params.field.q, params.points.alpha, params.mult.u)]
    if suite == "rate_table":
        return [
            v.verify_rate_table(
                [(params.n_servers, params.x_secure, params.t_private, params.erasures)],
                k=params.n_messages,
            )
        ]
    return [
        v.verify_mds(
            params,
            max_exhaustive_n=knobs.mds_exhaustive_max_n,
            samples=knobs.mds_samples,
            seed=seed,
            workers=knobs.workers,
        )
    ]


def run(args: argparse.Namespace) -> None:
    from lib.config import load_config
    from lib.transcript import reports_payload
    from lib.verify import VerifyError

    logger = setup_logging(args)
    config = resolve_config(args)
    knobs = load_config(args.settings)
    try:
        params = config.plan()
        logger.info("🔍 verifying %s (%s) on %s", config.suite, config.mode, params.regime.value)
        reports = run_suites(params, config, knobs)
    except VerifyError as e:
        logger.error("❌ %s", e)
        sys.exit(2)
    except Exception as e:
        logger.error("❌ %s", e)
        sys.exit(1)

    emit(reports_payload(reports), config.out)
    failed = [r.suite for r in reports if not r.passed]
    if failed:
        logger.error("❌ failed suites: %s", ", ".join(failed))
        sys.exit(1)
    logger.info("✅ all %d suite(s) passed", len(reports))
