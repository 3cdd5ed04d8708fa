"""Command-line front end.

Exit codes: 0 all checks matched, 1 some check mismatched, 2 usage error,
3 parameter error, 4 capacity exceeded.
"""
from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path
from typing import Sequence

from .counting import CapacityError, count_tilings, count_tilings_determinant, enumerate_tilings
from .families import build_halved, build_hexagon, build_proctor, build_quartered, build_symmetric
from .ferns import Fern
from .formulas import (FAMILIES, QUARTERED_KINDS, SYMMETRIC_KINDS, ParameterError, Params,
                       halved_count, halved_count_ratio_form, macmahon, proctor_count,
                       proctor_weighted_count, quartered_count, symmetric_count)
from .lattice import format_fraction, region_from_json, region_to_json
from .products import DomainError, PoleError
from .render import render_ascii, render_svg
from .verify import (ParameterGrid, algebraic_identity_fuzz, all_match, records_to_csv,
                     records_to_json, structural_checks, summarize, sweep)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_PARAM, EXIT_CAPACITY = 0, 1, 2, 3, 4
ENUM_LIMIT = 200_000
ALL_FAMILIES = FAMILIES + QUARTERED_KINDS + ("P", "Pp") + SYMMETRIC_KINDS + ("HEX",)


class UsageError(Exception):
    pass


def parse_fern(text: str | None) -> Fern:
    """'2,3', '(2,3)', '' and '()' are all accepted."""
    if text is None:
        return Fern()
    try:
        return Fern.parse(text)
    except ValueError as e:
        raise UsageError(f"bad fern {text!r}: {e}") from None


def parse_fern_list(text: str) -> list[tuple[int, ...]]:
    groups = re.findall(r"\(([^()]*)\)", text)
    if not groups and text.strip():
        raise UsageError(f"bad fern list {text!r}; expected e.g. \"(),(1),(2,1)\"")
    return [parse_fern(g).entries for g in groups]


def parse_abc(text: str | None) -> tuple[int, int, int]:
    if text is None:
        raise UsageError("--abc is required for this family")
    try:
        vals = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"bad --abc {text!r}") from None
    if len(vals) != 3:
        raise UsageError(f"--abc needs three integers, got {text!r}")
    return vals


def _params(ns) -> Params:
    return Params(ns.x, ns.y, ns.z, parse_fern(ns.a), parse_fern(ns.b))


def _need_t(ns) -> Fern:
    if ns.t is None:
        raise UsageError("--t is required for quartered families")
    return parse_fern(ns.t)


def build_region(ns):
    fam = ns.family
    if fam in FAMILIES:
        return build_halved(fam, _params(ns))
    if fam in SYMMETRIC_KINDS:
        return build_symmetric(fam, _params(ns))
    if fam in QUARTERED_KINDS:
        return build_quartered(fam, _need_t(ns))
    if fam in ("P", "Pp"):
        return build_proctor(fam, *parse_abc(ns.abc))
    return build_hexagon(*parse_abc(ns.abc))


def formula_value(ns):
    fam = ns.family
    if fam in FAMILIES:
        return halved_count(fam, _params(ns))
    if fam in SYMMETRIC_KINDS:
        return symmetric_count(fam, _params(ns))
    if fam in QUARTERED_KINDS:
        return quartered_count(fam, _need_t(ns))
    a, b, c = parse_abc(ns.abc)
    if fam == "P":
        return proctor_count(a, b, c)
    if fam == "Pp":
        return proctor_weighted_count(a, b, c)
    return macmahon(a, b, c)


def _write(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _read_region(path: str):
    try:
        return region_from_json(Path(path).read_text())
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e}") from None
    except (ValueError, KeyError, TypeError) as e:
        raise ParameterError(f"malformed region file {path}: {e}") from None


def cmd_region_build(ns) -> int:
    _write(region_to_json(build_region(ns)), ns.out)
    return EXIT_OK


def cmd_render(ns) -> int:
    r = _read_region(ns.inp)
    _write(render_svg(r) if ns.format == "svg" else render_ascii(r), ns.out)
    return EXIT_OK


def cmd_count(ns) -> int:
    r = _read_region(ns.inp)
    if ns.oracle == "dp":
        val = count_tilings(r)
    elif ns.oracle == "det":
        val = count_tilings_determinant(r)
    else:
        en = enumerate_tilings(r, ENUM_LIMIT)
        if not en.complete:
            raise CapacityError(f"more than {ENUM_LIMIT} tilings; use --oracle dp")
        val = en.weighted_sum(r)
    print(format_fraction(val))
    return EXIT_OK


def cmd_formula(ns) -> int:
    print(format_fraction(formula_value(ns)))
    if ns.ratio_form:
        if ns.family not in FAMILIES:
            raise UsageError("--ratio-form applies to the sixteen halved families only")
        print(format_fraction(halved_count_ratio_form(ns.family, _params(ns))))
    return EXIT_OK


def _families(text: str) -> list[str]:
    if text == "all":
        return list(FAMILIES)
    tags = [t.strip() for t in text.split(",") if t.strip()]
    bad = [t for t in tags if t not in FAMILIES]
    if bad:
        raise UsageError(f"unknown families {bad}; choose from {', '.join(FAMILIES)} or 'all'")
    return tags


def _report(records, csv_path: str | None, json_path: str | None) -> None:
    if csv_path:
        Path(csv_path).write_text(records_to_csv(records))
    if json_path:
        Path(json_path).write_text(records_to_json(records))


def _print_summary(label: str, records) -> None:
    s = summarize(records)
    print(f"{label}: {s['performed']} performed, {s['matched']} matched, "
          f"{s['mismatched']} mismatched, {s['skipped']} skipped")


def cmd_verify(ns) -> int:
    tags = _families(ns.families)
    grid = ParameterGrid.up_to(ns.max_x, ns.max_y, ns.max_z, parse_fern_list(ns.ferns))
    records = sweep(tags, grid, jobs=ns.jobs)
    _print_summary("sweep", records)
    extra = structural_checks(grid, tags, symmetric=ns.families == "all")
    for check in ("recurrence", "base_split", "factorization"):
        part = [r for r in extra if r.check == check]
        if part:
            _print_summary(check, part)
    records += extra
    for r in records:
        if not r.skipped and not r.match:
            print(f"MISMATCH {r.check} {r.family} {r.params}: "
                  f"{format_fraction(r.formula)} != {format_fraction(r.oracle)}")
    _report(records, ns.report, ns.json)
    return EXIT_OK if all_match(records) else EXIT_MISMATCH


def cmd_identities(ns) -> int:
    if ns.trials < 0:
        raise UsageError("--trials must be >= 0")
    records = algebraic_identity_fuzz(ns.trials, ns.seed)
    _print_summary("identities", records)
    _report(records, ns.report, ns.json)
    return EXIT_OK if all_match(records) else EXIT_MISMATCH


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def make_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="halvedhex", description="Lozenge tilings of halved hexagons with ferns.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def family_flags(p):
        p.add_argument("--family", required=True, choices=ALL_FAMILIES)
        for k in ("x", "y", "z"):
            p.add_argument(f"--{k}", type=int, default=0)
        p.add_argument("--a", default="")
        p.add_argument("--b", default="")
        p.add_argument("--t")
        p.add_argument("--abc")

    p = sub.add_parser("region-build", help="build a region and write it as JSON")
    family_flags(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_region_build)

    p = sub.add_parser("render", help="draw a region file")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--format", choices=("svg", "ascii"), default="ascii")
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("count", help="count the tilings of a region file")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--oracle", choices=("dp", "det", "enum"), default="dp")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("formula", help="evaluate a closed form")
    family_flags(p)
    p.add_argument("--ratio-form", action="store_true")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("verify", help="formula-vs-oracle sweep plus structural checks")
    p.add_argument("--families", default="all")
    p.add_argument("--max-x", type=int, default=2)
    p.add_argument("--max-y", type=int, default=2)
    p.add_argument("--max-z", type=int, default=2)
    p.add_argument("--ferns", default="(),(1),(2),(1,1),(2,1)")
    p.add_argument("--report", help="CSV output path")
    p.add_argument("--json", help="JSON output path")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("identities", help="seeded fuzz of the product identities")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--report")
    p.add_argument("--json")
    p.set_defaults(func=cmd_identities)
    return ap


def run(argv: Sequence[str] | None = None) -> int:
    try:
        ns = make_parser().parse_args(argv)
        if getattr(ns, "jobs", 1) < 1:
            raise UsageError("--jobs must be >= 1")
        return ns.func(ns)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:  # --help
        return int(e.code or 0)
    except CapacityError as e:
        print(f"capacity exceeded: {e}", file=sys.stderr)
        return EXIT_CAPACITY
    except (ParameterError, DomainError, PoleError, ValueError) as e:
        print(f"parameter error: {e}", file=sys.stderr)
        return EXIT_PARAM


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
