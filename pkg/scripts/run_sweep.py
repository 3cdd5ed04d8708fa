#!/usr/bin/env python3
"""Run the default halved-hexagon sweep plus structural checks and write a CSV report."""
import argparse
import sys

from halvedhex.cli import run

ap = argparse.ArgumentParser()
ap.add_argument("--report", default="sweep.csv")
ap.add_argument("--jobs", type=int, default=1)
args = ap.parse_args()
sys.exit(run(["verify", "--families", "all", "--report", args.report, "--jobs", str(args.jobs)]))
