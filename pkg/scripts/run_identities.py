#!/usr/bin/env python3
"""Seeded fuzz of the product identities."""
import argparse
import sys

from halvedhex.cli import run

ap = argparse.ArgumentParser()
ap.add_argument("--trials", type=int, default=100)
ap.add_argument("--seed", type=int, default=7)
args = ap.parse_args()
sys.exit(run(["identities", "--trials", str(args.trials), "--seed", str(args.seed)]))
