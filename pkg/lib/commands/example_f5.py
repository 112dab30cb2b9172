"""`qecsa example-f5`: reproduce the worked F_5 example and check it.

N=4 servers, K=2 messages, X=T=E=1 over F_5, alpha=0..3, f=4, u=1.
Prints the multipliers, the Cauchy column, G and H, then runs one
transcript with the chosen server erased and prints y. Exits 1 on any
deviation from GOLDEN.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any

from lib.commands.common import csv_ints, setup_logging

GOLDEN: dict[str, Any] = {
    "q": 5,
    "alpha": [0, 1, 2, 3],
    "f": [4],
    "u": [1, 1, 1, 1],
    "v": [4, 3, 2, 1],
    "cauchy_u": [4, 2, 3, 1],
    "cauchy_v": [1, 1, 1, 1],
    "G": [
        [1, 0, 0, 0],
        [1, 1, 0, 0],
        [1, 2, 0, 0],
        [1, 3, 0, 0],
        [0, 0, 4, 0],
        [0, 0, 3, 3],
        [0, 0, 2, 4],
        [0, 0, 1, 3],
    ],
    # H(:, 1:2) as columns
    "H_left_cols": [[4, 2, 3, 1, 0, 0, 0, 0], [0, 0, 0, 0, 1, 1, 1, 1]],
    "duality_sums": [0, 0, 0, 1],
    "rate": "1/2",
}


def add_parser(subparsers: argparse._SubParsersAction) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(
        "example-f5",
        help="reproduce and check the worked F_5 example (N=4, X=T=E=1)",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
examples:
  qecsa example-f5                           # server 3 erased, delta drawn from --seed
  qecsa example-f5 --erase 1 --delta 0,0 --theta 2 --seed 11
        """,
    )
    parser.add_argument("--erase", type=int, default=3, help="erased server (default 3)")
    parser.add_argument(
        "--delta",
        type=csv_ints,
        default=None,
        help="delta^1,delta^2 (default: drawn uniformly from F_5 with --seed)",
    )
    parser.add_argument("--theta", type=int, default=1, help="desired message (default 1)")
    parser.add_argument("--seed", type=int, default=0, help="noise / message seed (default 0)")
    parser.add_argument("--debug", action="store_true", help="DEBUG logging on stderr")
    return parser


def draw_delta(seed: int) -> tuple[int, int]:
    """Uniform (delta^1, delta^2) over F_5, reproducible from the seed."""
    import numpy as np

    d1, d2 = np.random.default_rng([seed, GOLDEN["q"]]).integers(0, GOLDEN["q"], size=2)
    return int(d1), int(d2)


def _column(e: int, n: int) -> list[int]:
    col = [0] * (2 * n)
    col[e - 1] = 1
    return col


def check_example(erase: int, delta: tuple[int, int], theta: int, seed: int) -> tuple[list, list]:
    """(printed lines, mismatch messages) for one erased server."""
    from lib.codes import cauchy_block, duality_sums
    from lib.linalg import to_rows, transpose
    from lib.protocol import build_gh, plan_scheme, run_end_to_end

    params = plan_scheme(4, 2, 1, 1, 1, GOLDEN["q"], alpha=GOLDEN["alpha"], f=GOLDEN["f"])
    points = params.instance_points(0)
    g, h = build_gh(params, [erase])
    h_cols = to_rows(transpose(h))
    got = {
        "q": params.field.q,
        "alpha": list(params.points.alpha),
        "f": list(params.points.f),
        "u": list(params.mult.u),
        "v": list(params.mult.v),
        "cauchy_u": [r[0] for r in to_rows(cauchy_block(points, params.beta(0)))],
        "cauchy_v": [r[0] for r in to_rows(cauchy_block(points, params.beta(1)))],
        "G": to_rows(g),
        "H_left_cols": h_cols[:2],
        "duality_sums": duality_sums(points.alpha_vec, params.beta(0), params.beta(1)),
        "rate": str(params.rate),
    }
    mismatches = [
        f"{key}: expected {want}, got {got[key]}"
        for key, want in GOLDEN.items()
        if got[key] != want
    ]
    want_right = [_column(erase, 4), _column(erase + 4, 4)]
    if h_cols[2:] != want_right:
        mismatches.append(f"H_right: expected {want_right}, got {h_cols[2:]}")

    t = run_end_to_end(params, theta, seed, [erase], {erase: delta})
    want_y = [*t.expected[0], *t.expected[1], delta[0] % 5, delta[1] % 5]
    if t.box_output != want_y:
        mismatches.append(f"y: expected {want_y}, got {t.box_output}")
    if str(t.achieved_rate) != GOLDEN["rate"]:
        mismatches.append(f"achieved rate {t.achieved_rate}, expected {GOLDEN['rate']}")

    lines = [
        f"F_{got['q']}  alpha={got['alpha']}  f={got['f']}  u={got['u']}  v={got['v']}",
        f"Cauchy column (u) {got['cauchy_u']}   (v) {got['cauchy_v']}",
        "G =",
        *(f"  {row}" for row in got["G"]),
        f"H(:,1:2) columns {got['H_left_cols']}",
        f"H(:,3:4) columns {h_cols[2:]}  (server {erase} erased)",
        f"theta={theta} seed={seed}  W^1={list(t.expected[0])} W^2={list(t.expected[1])}",
        f"x = {[int(s) for s in t.box_input]}",
        f"y = {t.box_output}   (W^1, W^2, delta^1, delta^2)",
        f"rate {t.achieved_rate}",
    ]
    return lines, mismatches


def run(args: argparse.Namespace) -> None:
    logger = setup_logging(args)
    if args.delta is None:
        args.delta = list(draw_delta(args.seed))
        logger.info("🎲 delta = %s drawn from seed %d", args.delta, args.seed)
    elif len(args.delta) != 2:
        logger.error("❌ --delta needs exactly two values, got %s", args.delta)
        sys.exit(2)
    if not 1 <= args.erase <= 4 or not 1 <= args.theta <= 2:
        logger.error("❌ --erase must lie in [1, 4] and --theta in [1, 2]")
        sys.exit(2)

    try:
        lines, mismatches = check_example(
            args.erase, (args.delta[0], args.delta[1]), args.theta, args.seed
        )
        # every single-server erasure must give a valid box that decodes
        for other in range(1, 5):
            if other != args.erase:
                _, extra = check_example(other, (0, 0), args.theta, args.seed)
                mismatches += [f"erase {other}: {m}" for m in extra]
    except Exception as e:
        logger.error("❌ %s", e)
        sys.exit(1)

    sys.stdout.write("\n".join(lines) + "\n")
    if mismatches:
        for m in mismatches:
            logger.error("❌ %s", m)
        sys.exit(1)
    logger.info("✅ worked F_5 example reproduced (all 4 single-server erasures decode)")
