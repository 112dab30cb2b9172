"""`qecsa run`: one end-to-end transcript (or replay of a recorded one)."""

from __future__ import annotations

import argparse
import sys

from lib.commands.common import add_scheme_arguments, csv_ints, emit, resolve_config, setup_logging


def add_parser(subparsers: argparse._SubParsersAction) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(
        "run",
        help="simulate storage, queries, answers, erasures and decoding",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
examples:
  qecsa run --theta 2 --erase 3 --delta 1,4 --seed 7
  qecsa run -N 5 -K 2 -X 1 -T 1 -E 1 --erase 5 --out build/run.json
  qecsa run --replay build/run.json          # exit 1 unless bit-identical
        """,
    )
    add_scheme_arguments(parser)
    parser.add_argument("--theta", type=int, default=None, help="desired message (1-based)")
    parser.add_argument("--erase", type=csv_ints, default=None, help="erased servers, csv")
    parser.add_argument(
        "--delta",
        type=csv_ints,
        default=None,
        help="delta^1,delta^2 per erased server in --erase order (default zeros)",
    )
    parser.add_argument("--seed", type=int, default=None, help="noise / message seed (default 0)")
    parser.add_argument("--out", default=None, help="write the transcript JSON here")
    parser.add_argument("--replay", default=None, help="re-run a recorded transcript JSON")
    return parser


def _replay(path: str, out: str | None) -> None:
    from lib import schema
    from lib.transcript import replay
    from qecsa import logger

    try:
        payload = schema.load_payload(path, schema.TRANSCRIPT)
        fresh, identical = replay(payload)
    except Exception as e:
        logger.error("❌ replay failed: %s", e)
        sys.exit(1)
    emit(fresh, out)
    if not identical:
        logger.error("❌ replay of %s is not identical to the recording", path)
        sys.exit(1)
    logger.info("✅ replay of %s is identical", path)


def run(args: argparse.Namespace) -> None:
    from lib.protocol import run_end_to_end
    from lib.transcript import transcript_payload

    logger = setup_logging(args)
    if args.replay:
        _replay(args.replay, args.out)
        return

    config = resolve_config(args)
    try:
        params = config.plan()
        logger.info(
            "🚀 %s: theta=%d erased=%s seed=%d",
            params.regime.value,
            config.theta,
            config.erase or "none",
            config.seed,
        )
        transcript = run_end_to_end(
            params, config.theta, config.seed, config.erase, config.deltas()
        )
        payload = transcript_payload(transcript)
    except Exception as e:
        logger.error("❌ %s", e)
        sys.exit(1)

    emit(payload, config.out)
    if not transcript.correct:
        logger.error("❌ decoded %s, expected %s", transcript.decoded.w, transcript.expected)
        sys.exit(1)
    logger.info(
        "✅ decoded %d symbols from %d qudits (rate %s)",
        sum(len(w) for w in transcript.decoded.w),
        transcript.download_qudits,
        transcript.achieved_rate,
    )
