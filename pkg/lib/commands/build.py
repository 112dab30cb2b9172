"""`qecsa build`: construct CSA/QCSA/G/H/M for a plan and print or export them.

`--out` picks the writer by extension: `.xlsx` writes one worksheet per
matrix (falling back to a `;`-separated CSV when openpyxl is missing),
anything else gets the JSON payload.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from lib.commands.common import add_scheme_arguments, csv_ints, emit, resolve_config, setup_logging


def add_parser(subparsers: argparse._SubParsersAction) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(
        "build",
        help="construct the code and box matrices (JSON or workbook)",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
examples:
  qecsa build --erase 3                      # worked F_5 example, server 3 erased
  qecsa build -N 6 -K 3 -X 1 -T 2 -E 1 --erase 2 --out build/matrices.xlsx
        """,
    )
    add_scheme_arguments(parser)
    parser.add_argument(
        "--erase",
        type=csv_ints,
        default=None,
        help="erased servers (1-based csv); padded to E positions for H",
    )
    parser.add_argument("--out", default=None, help="*.xlsx workbook or *.json payload")
    return parser


def write_matrices(matrices: dict[str, list], filepath: str) -> str:
    """Workbook export with CSV fallback; returns the path actually written."""
    from qecsa import logger

    try:
        from lib import excel_exporter
    except ImportError:
        logger.warning("⚠️  openpyxl is not installed, falling back to CSV")
        logger.info("💡 install with: pip install openpyxl")
        from lib import csv_exporter

        csv_path = str(Path(filepath).with_suffix(".csv"))
        csv_exporter.save_csv(csv_path, matrices)
        return csv_path
    excel_exporter.export_matrices(matrices, filepath)
    return filepath


def run(args: argparse.Namespace) -> None:
    from lib.transcript import matrices_payload

    logger = setup_logging(args)
    config = resolve_config(args)
    try:
        params = config.plan()
        payload = matrices_payload(params, config.erase)
        logger.info(
            "🧮 built %s for %s (q=%d)",
            ", ".join(payload["matrices"]),
            params.regime.value,
            params.field.q,
        )
        if config.out and config.out.lower().endswith(".xlsx"):
            written = write_matrices(payload["matrices"], config.out)
            logger.info("✅ matrices exported: %s", written)
            return
    except Exception as e:
        logger.error("❌ %s", e)
        sys.exit(1)
    emit(payload, config.out)
