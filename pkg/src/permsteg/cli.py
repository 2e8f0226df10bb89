"""Command line front end.

Exit codes: 0 success, 1 reproduction mismatch, 2 usage error, 3 invalid
cover (duplicates, ragged or malformed file), 4 capacity exceeded, 5 the
recovered bits are not a whole number of bytes (rerun with ``--bits``).
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import codec, engine, tableio
from .capacity import FORMULAS, capacity, capacity_curve, curve_to_csv
from .errors import CapacityError, NotByteAligned, StegoError, ValidationError
from .experiments import TARGETS, reproduce
from .listmodel import detect_collation, detect_fds, validate_distinct

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_INVALID = 3
EXIT_CAPACITY = 4
EXIT_FRAMING = 5


class UsageError(Exception):
    pass


def _table_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--delimiter", choices=sorted(tableio.DELIMITERS), default="comma")
    p.add_argument("--no-header", action="store_true", help="first record is data, not column names")


def _layout_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--approach", type=int, choices=(1, 2), default=2)
    p.add_argument("--critical-col", type=int, default=0, metavar="N")


def _u64(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permsteg", description="Hide bits in a table by reordering the cells of its columns."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("embed", help="hide a message in a cover table")
    p.add_argument("--cover", required=True, type=Path)
    p.add_argument("--out", required=True, type=Path)
    _layout_opts(p)
    p.add_argument("--mode", choices=("independent", "chained"), default="independent")
    p.add_argument("--split", choices=("even", "greedy"), default="even")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--message-text", metavar="STR")
    src.add_argument("--message-hex", metavar="HEX")
    src.add_argument("--message-file", type=Path, metavar="PATH")
    p.add_argument("--shuffle-seed", type=_u64, metavar="U64")
    _table_opts(p)

    p = sub.add_parser("extract", help="recover a message from a stego table")
    p.add_argument("--stego", required=True, type=Path)
    p.add_argument("--out", type=Path, help="write the message here instead of stdout")
    _layout_opts(p)
    p.add_argument("--bits", action="store_true", help="print the recovered bits as 0/1 text")
    _table_opts(p)

    p = sub.add_parser("capacity", help="embedding capacity figures")
    p.add_argument("--rows", type=int, metavar="N")
    p.add_argument("--cols", type=int, metavar="M")
    p.add_argument("--avg-bits", type=float, metavar="L")
    p.add_argument("--formula", choices=FORMULAS, default="used")
    p.add_argument("--curve", metavar="N1:N2:STEP", help="tabulate over n = N1..N2 as CSV")
    p.add_argument("--cover", type=Path, help="report the payload bits this table can carry")
    p.add_argument("--approach", type=int, choices=(1, 2), default=2)
    p.add_argument("--out", type=Path)
    _table_opts(p)

    p = sub.add_parser("validate", help="check a cover table for duplicates and dependencies")
    p.add_argument("--cover", required=True, type=Path)
    _table_opts(p)

    p = sub.add_parser("attack", help="sort (or shuffle) the rows of a stego table")
    p.add_argument("--stego", required=True, type=Path)
    p.add_argument("--out", required=True, type=Path)
    p.add_argument("--shuffle-seed", type=_u64, metavar="U64", help="shuffle instead of sorting")
    _table_opts(p)

    p = sub.add_parser("reproduce", help="regenerate a worked example and compare with bundled tables")
    p.add_argument("target", choices=sorted(TARGETS))
    p.add_argument("--out", type=Path, help="directory for the regenerated files")
    return parser


def _load(path: Path, args) -> "tableio.CoverList":
    return tableio.load(path, args.delimiter, not args.no_header)


def _message_bits(args) -> str:
    if args.message_text is not None:
        data = args.message_text.encode("utf-8")
    elif args.message_hex is not None:
        try:
            data = bytes.fromhex(args.message_hex)
        except ValueError as exc:
            raise UsageError(f"--message-hex: {exc}") from None
    else:
        data = args.message_file.read_bytes()
    return codec.bits_from_bytes(data)


def cmd_embed(args, out) -> int:
    if args.mode == "chained" and args.approach != 2:
        raise UsageError("--mode chained requires --approach 2")
    if args.mode == "chained" and args.shuffle_seed is not None:
        raise UsageError("--shuffle-seed is not supported with --mode chained")
    cover = _load(args.cover, args)
    bits = _message_bits(args)
    if args.approach == 1:
        if args.shuffle_seed is not None:
            raise UsageError("--shuffle-seed would destroy an approach 1 message")
        result = engine.embed_approach1(cover, bits, split=args.split)
    elif args.mode == "chained":
        result = engine.embed_approach2_chained(cover, bits, args.critical_col, split=args.split)
    else:
        result = engine.embed_approach2(
            cover, bits, args.critical_col, split=args.split, shuffle_seed=args.shuffle_seed
        )
    tableio.save(result.stego, args.out, args.delimiter, not args.no_header)
    print(f"embedded {len(bits)} bits in {len(result.ranks)} columns -> {args.out}", file=sys.stderr)
    return EXIT_OK


def cmd_extract(args, out) -> int:
    stego = _load(args.stego, args)
    bits = engine.extract(stego, args.approach, args.critical_col)
    if args.bits:
        payload = (bits + "\n").encode("ascii")
    else:
        try:
            payload = codec.bytes_from_bits(bits)
        except NotByteAligned:
            print(
                f"error: recovered {len(bits)} bits, not a whole number of bytes; use --bits",
                file=sys.stderr,
            )
            return EXIT_FRAMING
    if args.out is not None:
        args.out.write_bytes(payload)
    else:
        out.buffer.write(payload) if hasattr(out, "buffer") else out.write(payload.decode("utf-8", "replace"))
        out.flush()
    return EXIT_OK


def _parse_curve(spec: str) -> range:
    try:
        start, stop, step = (int(x) for x in spec.split(":"))
    except ValueError:
        raise UsageError("--curve expects N1:N2:STEP") from None
    if step <= 0 or start < 1 or stop < start:
        raise UsageError("--curve needs 1 <= N1 <= N2 and STEP > 0")
    return range(start, stop + 1, step)


def cmd_capacity(args, out) -> int:
    if args.cover is not None:
        cover = _load(args.cover, args)
        bits = engine.capacity_bits(cover, args.approach)
        print(f"{bits} payload bits ({cover.n} rows, {cover.m} columns, approach {args.approach})", file=out)
        return EXIT_OK
    missing = [f for f, v in (("--cols", args.cols), ("--avg-bits", args.avg_bits)) if v is None]
    if args.curve is None and args.rows is None:
        missing.insert(0, "--rows")
    if missing:
        raise UsageError("capacity needs " + ", ".join(missing) + " (or --cover)")
    if args.curve is not None:
        text = curve_to_csv(capacity_curve(_parse_curve(args.curve), args.cols, args.avg_bits, args.formula))
        if args.out is not None:
            args.out.write_text(text)
        else:
            out.write(text)
        return EXIT_OK
    value = capacity(args.formula, args.rows, args.cols, args.avg_bits)
    print(f"{value:.3f}%", file=out)
    return EXIT_OK


def cmd_validate(args, out) -> int:
    cover = _load(args.cover, args)
    names = cover.header or tuple(f"col{j}" for j in range(cover.m))
    colls = detect_collation(cover)
    dups = validate_distinct(cover)
    print(f"{cover.n} rows x {cover.m} columns", file=out)
    for j, (name, coll, d) in enumerate(zip(names, colls, dups)):
        status = "ok" if not d else "DUPLICATES " + ", ".join(repr(v) for v in d[:5])
        print(f"  [{j}] {name}: {coll.value}, {status}", file=out)
    fds = detect_fds(cover)
    pairs = sorted(fds.pairs)
    print(f"single-column functional dependencies: {len(pairs)} of {cover.m * (cover.m - 1)}", file=out)
    for x, y in pairs:
        print(f"  {names[x]} -> {names[y]}", file=out)
    return EXIT_INVALID if any(dups) else EXIT_OK


def cmd_attack(args, out) -> int:
    stego = _load(args.stego, args)
    if args.shuffle_seed is None:
        attacked = engine.attack_row_sort(stego)
    else:
        attacked = engine.shuffle_rows(stego, args.shuffle_seed)
    tableio.save(attacked, args.out, args.delimiter, not args.no_header)
    return EXIT_OK


def cmd_reproduce(args, out) -> int:
    report = reproduce(args.target)
    out.write(report.render())
    if args.out is not None:
        args.out.mkdir(parents=True, exist_ok=True)
        for name, data in report.artifacts.items():
            (args.out / name).write_bytes(data)
    return EXIT_OK if report.ok else EXIT_MISMATCH


COMMANDS = {
    "embed": cmd_embed,
    "extract": cmd_extract,
    "capacity": cmd_capacity,
    "validate": cmd_validate,
    "attack": cmd_attack,
    "reproduce": cmd_reproduce,
}


def run(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (StegoError, OSError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
