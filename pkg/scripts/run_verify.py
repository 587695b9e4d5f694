#!/usr/bin/env python3
"""Run the full invariant battery and write its report tables.

Usage:
    python scripts/run_verify.py [--out results/verify] [--seed 0]
"""

import argparse
import sys

from tfamalgam.cli import main as cli_main


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="results/verify")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    return cli_main(["verify", "--out", args.out, "--seed", str(args.seed)])


if __name__ == "__main__":
    sys.exit(main())
