"""Command-line entry point: ``zenophase run <config> [options]``."""

from __future__ import annotations

import argparse
import sys

from .runner import run


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="zenophase",
        description="Run measurement-guided spin-1/2 evolutions from a config "
        "file and write deterministic CSV/JSON reports.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    runp = sub.add_parser("run", help="execute a config file and write reports")
    runp.add_argument("config", help="path to a JSON config file")
    runp.add_argument("--out-dir", default=".", help="directory for report files")
    runp.add_argument(
        "--tolerance-override",
        type=float,
        default=None,
        help="replace the config tolerance for compare/table1 modes",
    )
    runp.add_argument(
        "--threads",
        type=int,
        default=1,
        help="sweep-level parallelism (row order is preserved)",
    )
    runp.add_argument(
        "--emit-trajectory",
        action="store_true",
        help="also write trajectory.csv (single-row ideal compare only)",
    )
    args = parser.parse_args(argv)
    return run(
        args.config,
        out_dir=args.out_dir,
        tolerance_override=args.tolerance_override,
        threads=args.threads,
        emit_trajectory=args.emit_trajectory,
    )


if __name__ == "__main__":
    sys.exit(main())
