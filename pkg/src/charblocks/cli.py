"""Command-line front end.

Exit codes: 0 on success (and passing verifications), 1 when a verification
sweep fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import blocks, characters, sweeps
from .partitions import (
    e_core,
    e_weight,
    parse_partition,
    render_partition,
)


def _parse_e_range(text: str):
    """'3' or 'a..b' (inclusive) -> sorted list of ints."""
    if ".." in text:
        lo_s, _, hi_s = text.partition("..")
        lo, hi = int(lo_s), int(hi_s)
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charblocks",
        description="Exact character combinatorics of symmetric-group e-blocks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("core", help="e-core and e-weight of a partition")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("partition")
    p.add_argument("--format", choices=["plain", "json"], default="plain")

    p = sub.add_parser("char", help="irreducible character value")
    p.add_argument("--nu", required=True, help="character label")
    p.add_argument("--class", dest="cls", required=True, help="class label")
    p.add_argument("--format", choices=["plain", "json"], default="plain")

    p = sub.add_parser("count", help="non-zero character count of a block on a class")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--core", required=True)
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--format", choices=["plain", "json"], default="plain")

    p = sub.add_parser("block", help="list the partitions of a block")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--core", required=True)
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--format", choices=["plain", "json"], default="plain")

    p = sub.add_parser("extremal", help="constructed class attaining count w+1")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--core", required=True)
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--format", choices=["plain", "json"], default="plain")

    p = sub.add_parser("table", help="full character table of S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["plain", "csv", "json"], default="plain")

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument(
        "sweep",
        choices=[
            "theorem1",
            "dichotomy",
            "lemma1",
            "remark1",
            "remark2",
            "chibar",
            "rowstructure",
        ],
    )
    p.add_argument("--e", default="2..5", help="e value or inclusive range a..b")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--max-size", type=int, default=8, help="size bound for lemma1")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.add_argument("--no-meta", action="store_true", help="omit timestamp from JSON")

    return parser


def _cmd_core(args) -> int:
    p = parse_partition(args.partition)
    core = e_core(p, args.e)
    w = e_weight(p, args.e)
    if args.format == "json":
        print(json.dumps({"partition": render_partition(p), "e": args.e,
                          "core": render_partition(core), "weight": w}))
    else:
        print(f"core: {render_partition(core)}")
        print(f"weight: {w}")
    return 0


def _cmd_char(args) -> int:
    nu = parse_partition(args.nu)
    lam = parse_partition(args.cls)
    value = characters.char_value(nu, lam)
    if args.format == "json":
        print(json.dumps({"nu": render_partition(nu), "class": render_partition(lam),
                          "value": str(value)}))
    else:
        print(value)
    return 0


def _block_id(args) -> blocks.BlockId:
    return blocks.BlockId(e=args.e, core=parse_partition(args.core), weight=args.weight)


def _cmd_count(args) -> int:
    b = _block_id(args)
    report = blocks.c_mu(b, parse_partition(args.cls))
    if args.format == "json":
        print(json.dumps({
            "e": b.e, "core": render_partition(b.core), "weight": b.weight,
            "class": render_partition(report.class_label),
            "count": report.count,
            "witnesses": [render_partition(w) for w in report.witnesses],
        }))
    else:
        print(f"count: {report.count}")
        for w in report.witnesses:
            print(f"  {render_partition(w)}")
    return 0


def _cmd_block(args) -> int:
    b = _block_id(args)
    members = blocks.block_partitions(b)
    if args.format == "json":
        print(json.dumps({"e": b.e, "core": render_partition(b.core),
                          "weight": b.weight, "n": b.n,
                          "partitions": [render_partition(p) for p in members]}))
    else:
        for p in members:
            print(render_partition(p))
    return 0


def _cmd_extremal(args) -> int:
    b = _block_id(args)
    lam = blocks.extremal_lambda(b)
    count = blocks.c_mu(b, lam).count
    if args.format == "json":
        print(json.dumps({"e": b.e, "core": render_partition(b.core),
                          "weight": b.weight,
                          "class": render_partition(lam), "count": count}))
    else:
        print(render_partition(lam))
        print(f"count: {count}")
    return 0


def _cmd_table(args) -> int:
    if args.n < 0 or args.n > 30:
        raise ValueError("table size must be between 0 and 30")
    if args.format == "json":
        print(characters.character_table_json(args.n))
    elif args.format == "csv":
        print(characters.character_table_csv(args.n), end="")
    else:
        from .partitions import partitions_of

        ps = partitions_of(args.n)
        rows = characters.character_table(args.n)
        labels = [render_partition(p) for p in ps]
        width = max([len(s) for s in labels] + [5])
        print(" " * width + "  " + "  ".join(s.rjust(width) for s in labels))
        for label, row in zip(labels, rows):
            print(label.rjust(width) + "  "
                  + "  ".join(str(v).rjust(width) for v in row))
    return 0


def _cmd_verify(args) -> int:
    e_values = _parse_e_range(args.e)
    if args.sweep == "theorem1":
        report = sweeps.verify_theorem1(e_values, args.max_n, jobs=args.jobs)
    elif args.sweep == "dichotomy":
        report = sweeps.verify_dichotomy(e_values, args.max_n, jobs=args.jobs)
    elif args.sweep == "lemma1":
        report = sweeps.lemma1_sweep(args.max_size)
    elif args.sweep == "remark1":
        report = sweeps.verify_remark1(e_values, args.max_n, jobs=args.jobs)
    elif args.sweep == "remark2":
        report = sweeps.verify_remark2(args.max_n)
    elif args.sweep == "chibar":
        report = sweeps.verify_chibar(args.max_n, jobs=args.jobs)
    else:
        report = sweeps.nonvanishing_row_structure_check(args.max_n, e_values)
    if args.format == "json":
        print(report.to_json(meta=not args.no_meta))
    else:
        print(report.to_text())
    return 0 if report.passed() else 1


_HANDLERS = {
    "core": _cmd_core,
    "char": _cmd_char,
    "count": _cmd_count,
    "block": _cmd_block,
    "extremal": _cmd_extremal,
    "table": _cmd_table,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
