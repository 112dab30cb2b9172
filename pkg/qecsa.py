#!/usr/bin/env python3
"""
QECSA simulation and verification tool.
Erasure-resilient X-secure T-private information retrieval over the N-sum box,
simulated exactly over prime fields.
"""

import logging
import os

logging.basicConfig(level=logging.INFO, format="%(message)s")
logger = logging.getLogger("qecsa")


def _env_flag(name: str, default: bool = False) -> bool:
    value = os.getenv(name)
    if value is None:
        return default
    return value.strip().lower() in {"1", "true", "yes", "on"}


if _env_flag("QECSA_DEBUG", False):
    logger.setLevel(logging.DEBUG)


def main():
    """Entry point (delegates to lib.cli.run)."""
    from lib.cli import run

    run()


if __name__ == "__main__":
    main()
