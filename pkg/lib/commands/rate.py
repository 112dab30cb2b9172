"""`qecsa rate`: classify (N, X, T, E) and print the planned rate."""

from __future__ import annotations

import argparse
import sys

from lib.commands.common import add_scheme_arguments, emit, resolve_config, setup_logging


def add_parser(subparsers: argparse._SubParsersAction) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(
        "rate",
        help="classify the regime and print rate / per-instance plan",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
examples:
  qecsa rate -N 4 -X 1 -T 1 -E 1          # R1, rate 1/2
  qecsa rate -N 5 -X 1 -T 1 -E 1          # R2_odd, rate 3/5, T1=2 T2=1
  qecsa rate -N 10 -X 2 -T 2 -E 1 --format text
        """,
    )
    add_scheme_arguments(parser)
    parser.add_argument(
        "--format", choices=["json", "text"], default="json", help="output format (default json)"
    )
    parser.add_argument("--out", default=None, help="write the JSON plan here instead of stdout")
    return parser


def format_text(plan: dict) -> str:
    lines = [
        f"regime          {plan['regime']}",
        f"rate            {plan['rate']}",
        f"classical rate  {plan['classical_rate']}",
        f"gain            {plan['gain']}",
        f"field           F_{plan['q']}",
    ]
    for i, inst in enumerate(plan["per_instance"], 1):
        lines.append(f"instance {i}      T_{i}={inst['t_effective']}  L_{i}={inst['l_symbols']}")
    return "\n".join(lines)


def run(args: argparse.Namespace) -> None:
    from lib.transcript import plan_payload

    logger = setup_logging(args)
    config = resolve_config(args)
    try:
        payload = plan_payload(config.plan())
    except Exception as e:
        logger.error("❌ %s", e)
        sys.exit(1)

    logger.info(
        "📐 N=%d X=%d T=%d E=%d -> %s, rate %s",
        config.N,
        config.X,
        config.T,
        config.E,
        payload["regime"],
        payload["rate"],
    )
    if args.format == "text":
        sys.stdout.write(format_text(payload) + "\n")
    else:
        emit(payload, config.out)
