#!/usr/bin/env python3
"""Reproduce both boundedness-region diagrams numerically.

Runs the STFT amalgam scan and the two localization-operator scans over the
full 5x5 reciprocal-exponent lattice, printing one classification line per
lattice point and writing the CSV/JSON artifacts.  Expect a few minutes of
runtime; the STFT scan carries the largest grids.

Usage:
    python scripts/reproduce_region_figures.py [--out results/regions]
"""

import argparse
import sys
import time

from tfamalgam.cli import main as cli_main


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="results/regions")
    args = ap.parse_args()
    worst = 0
    for command in ("scan-stft", "scan-locop", "scan-locop-lq"):
        start = time.time()
        print(f"== {command} ==")
        code = cli_main([command, "--out", f"{args.out}/{command}"])
        print(f"{command}: exit {code} in {time.time() - start:.0f}s\n")
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    sys.exit(main())
