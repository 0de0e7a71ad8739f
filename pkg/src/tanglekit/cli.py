"""Command-line front end.

Commands mirror the library: canon, frac, eq, orbit, minimize,
classify, count, render.  Tangle arguments are compact notation by
default ("3(2(20))"); pass --spaced for whitespace-separated multi-digit
words.  Exit codes: 0 success, 1 bad input (syntax error or composite
tangle), 2 internal error.

The classification budget defaults to 10 crossings and can be raised
with the TANGLEKIT_BUDGET environment variable (larger runs are a
long-running mode with no accuracy guarantee beyond the desk scale).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import ALL_TRANSFORMS, apply, transform_name
from .canonical import CompositeInputError, canonicalize, equivalent, isotopic, same_orbit
from .classify import (
    ClassRecord,
    MIRROR_NAMES,
    NON_MIRROR_NAMES,
    classify,
    orbit_table,
    stabilizer,
    symmetry_name,
    symmetry_table,
)
from .fraction import frac_of, frac_str
from .minimize import crossing_count, minimize
from .notation import COMPACT, SPACED, TangleSyntaxError, emit, parse, parse_comma
from .diagram import render_svg


def _budget_default() -> int:
    return int(os.environ.get("TANGLEKIT_BUDGET", "10"))


def _parse_arg(text: str, spaced: bool):
    text = text.strip()
    if text.startswith("(") and "," in text:
        return parse_comma(text)
    return parse(text, SPACED if spaced else COMPACT)


def cmd_canon(args) -> int:
    t = _parse_arg(args.tangle, args.spaced)
    print(emit(canonicalize(t)))
    return 0


def cmd_frac(args) -> int:
    t = _parse_arg(args.tangle, args.spaced)
    print(frac_str(frac_of(t)))
    return 0


def cmd_eq(args) -> int:
    a = _parse_arg(args.a, args.spaced)
    b = _parse_arg(args.b, args.spaced)
    if isotopic(a, b):
        print("isotopic")
    elif equivalent(a, b):
        print("equivalent")
    elif same_orbit(a, b):
        print("same-orbit")
    else:
        print("distinct")
    return 0


def cmd_orbit(args) -> int:
    t = _parse_arg(args.tangle, args.spaced)
    base = canonicalize(t)
    for g in ALL_TRANSFORMS:
        print(f"{transform_name(g):12s} {emit(canonicalize(apply(g, base)))}")
    print("symmetry:", symmetry_name(stabilizer(base)))
    return 0


def cmd_minimize(args) -> int:
    t = _parse_arg(args.tangle, args.spaced)
    count, witness = minimize(t)
    print(count, emit(witness))
    return 0


def cmd_classify(args) -> int:
    budget = _budget_default()
    if args.max_crossings > budget:
        raise SystemExit(
            f"--max-crossings {args.max_crossings} exceeds budget {budget}; "
            "set TANGLEKIT_BUDGET to allow long runs"
        )
    jobs = args.jobs if args.jobs else os.cpu_count() or 1
    records = classify(args.max_crossings, jobs=jobs)
    if args.closed is not None:
        records = [r for r in records if r.closed_components == args.closed]
    out = sys.stdout if args.out in (None, "-") else open(args.out, "w", encoding="utf-8")
    try:
        for record in records:
            out.write(record.as_json_line() + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def _load_records(path: str) -> list[ClassRecord]:
    records = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            data = json.loads(line)
            records.append(
                ClassRecord(
                    canonical=data["canonical"],
                    crossings=data["crossings"],
                    closed_components=data["closed_components"],
                    vhx=data["vhx"],
                    fraction=data["fraction"],
                    symmetry=data["symmetry"],
                    isotopy_classes=data["isotopy_classes"],
                    equivalence_classes=data["equivalence_classes"],
                )
            )
    return records


def cmd_count(args) -> int:
    if args.infile:
        records = _load_records(args.infile)
        max_c = max((r.crossings for r in records), default=0)
    else:
        max_c = args.max_crossings if args.max_crossings is not None else _budget_default()
        jobs = args.jobs if args.jobs else os.cpu_count() or 1
        records = classify(max_c, jobs=jobs)
    if args.table == "orbits" or args.table is None:
        rows = orbit_table(records, max_c)
        max_closed = max((r.closed_components for r in records), default=0)
        closed_hdr = " ".join(f"{k:>6d}" for k in range(max_closed + 1))
        print(f"#cross {closed_hdr} {'Orbit':>7} {'Equiv.':>7} {'Isotopy':>8}")
        for row in rows:
            cells = " ".join(f"{n:>6d}" for n in row["by_closed"])
            print(
                f"{row['crossings']:>6d} {cells} {row['orbits']:>7d} "
                f"{row['equivalence']:>7d} {row['isotopy']:>8d}"
            )
    else:
        names = NON_MIRROR_NAMES if args.table == "symmetry" else MIRROR_NAMES
        closed = args.closed
        rows = symmetry_table(records, max_c, names, closed)
        print("#cross " + " ".join(f"{n:>5s}" for n in names))
        for row in rows:
            cells = " ".join(f"{row['counts'][n]:>5d}" for n in names)
            print(f"{row['crossings']:>6d} {cells}")
    return 0


def cmd_render(args) -> int:
    t = _parse_arg(args.tangle, args.spaced)
    svg = render_svg(t)
    if args.out in (None, "-"):
        print(svg)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tanglekit", description=__doc__)
    ap.add_argument("--spaced", action="store_true", help="parse spaced notation")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("canon", help="canonical form of a tangle")
    p.add_argument("tangle")
    p.set_defaults(fn=cmd_canon)

    p = sub.add_parser("frac", help="fraction invariant")
    p.add_argument("tangle")
    p.set_defaults(fn=cmd_frac)

    p = sub.add_parser("eq", help="isotopic / equivalent / same-orbit / distinct")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(fn=cmd_eq)

    p = sub.add_parser("orbit", help="list the 16 transform images")
    p.add_argument("tangle")
    p.set_defaults(fn=cmd_orbit)

    p = sub.add_parser("minimize", help="minimal crossing count and witness")
    p.add_argument("tangle")
    p.set_defaults(fn=cmd_minimize)

    p = sub.add_parser("classify", help="classify orbits up to a crossing number")
    p.add_argument("--max-crossings", type=int, default=8)
    p.add_argument("--out", default=None)
    p.add_argument("--jobs", type=int, default=0)
    p.add_argument("--closed", type=int, default=None)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("count", help="summary tables from records")
    p.add_argument("--table", choices=["orbits", "symmetry", "mirror"], default=None)
    p.add_argument("--in", dest="infile", default=None)
    p.add_argument("--max-crossings", type=int, default=None)
    p.add_argument("--jobs", type=int, default=0)
    p.add_argument("--closed", type=int, default=None)
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("render", help="draw a tangle as SVG")
    p.add_argument("tangle")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_render)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (TangleSyntaxError, CompositeInputError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit:
        raise
    except Exception as exc:  # internal error
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
