"""
Command-line interface.

Exit codes: 0 success/verified, 1 verification failure, 2 usage error,
3 resource-guard abort.
"""
from __future__ import annotations

import argparse
import os
import sys
import tempfile
from pathlib import Path

from .enumeration import count_shapes, enumerate_shapes
from .histories import count_histories_closed, count_tie_permitting, tie_permitting_profile
from .huffman import StateCapExceeded, huffman_all_trees, huffman_tree
from .maxprob import (
    ResourceGuardError,
    conjecture_check,
    max_tie_table,
    maxprob_shape,
    nonunique_family,
    verify_maxprob,
)
from .shape import ShapeError, ascii_art, parse, serialize

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read_tree(arg: str, r: int):
    text = Path(arg[1:]).read_text() if arg.startswith("@") else arg
    return parse(text.strip(), r)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _atomic_write(path: str, data: str) -> None:
    target = Path(path)
    fd, tmp = tempfile.mkstemp(dir=target.parent or ".", prefix=f".{target.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(data)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _fmt(value: int, sci: bool) -> str:
    if not sci or value == 0:
        return str(value)
    return f"{value} {float(value):.6e}" if value < 10**300 else f"{value} ~1e{len(str(value)) - 1}"


def cmd_enumerate(args, out) -> int:
    if args.count_only:
        out.write(f"{count_shapes(args.r, args.n)}\n")
        return EXIT_OK
    for t in enumerate_shapes(args.r, args.n):
        out.write(serialize(t) + "\n")
    return EXIT_OK


def cmd_huffman(args, out) -> int:
    if args.all_ties:
        for shape, seq in sorted(huffman_all_trees(args.weights, args.r), key=lambda p: (p[0].text, p[1])):
            out.write(f"{serialize(shape)} {','.join(map(str, seq))}\n")
    else:
        shape, seq = huffman_tree(args.weights, args.r)
        out.write(f"{serialize(shape)} {','.join(map(str, seq))}\n")
    return EXIT_OK


def cmd_count(args, out) -> int:
    t = _read_tree(args.tree, args.r)
    if not args.ties:
        if args.z is not None or args.all_z:
            raise UsageError("--z/--all-z require --ties")
        out.write(_fmt(count_histories_closed(t), args.sci) + "\n")
    elif args.all_z:
        for z, e in tie_permitting_profile(t).items():
            out.write(f"{z} {_fmt(e, args.sci)}\n")
    elif args.z is not None:
        out.write(_fmt(count_tie_permitting(t, args.z), args.sci) + "\n")
    else:
        raise UsageError("--ties needs --z Z or --all-z")
    return EXIT_OK


def cmd_maxprob(args, out) -> int:
    t = maxprob_shape(args.n, args.r)
    out.write((ascii_art(t) if args.format == "ascii" else serialize(t)) + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    rep = verify_maxprob(args.n, args.r, jobs=args.jobs)
    out.write(rep.to_text())
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_table(args, out) -> int:
    table = max_tie_table(args.r, args.n_max, jobs=args.jobs)
    data = table.to_csv()
    if args.out:
        _atomic_write(args.out, data)
    else:
        out.write(data)
    return EXIT_OK


def cmd_conjecture(args, out) -> int:
    rep = conjecture_check(args.r, args.n, jobs=args.jobs)
    out.write(rep.to_text())
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_nonunique(args, out) -> int:
    t1, t2, n, z = nonunique_family(args.r, args.k)
    out.write(f"n={n} z={z}\n")
    out.write(f"{serialize(t1)} {count_tie_permitting(t1, z)}\n")
    out.write(f"{serialize(t2)} {count_tie_permitting(t2, z)}\n")
    return EXIT_OK


def cmd_selftest(args, out) -> int:
    from .acceptance import run_all

    results = run_all(quick=args.quick, jobs=args.jobs)
    for res in results:
        out.write(res.line() + "\n")
    failed = [r.number for r in results if not r.passed]
    out.write("ALL PASSED\n" if not failed else f"FAILED criteria: {failed}\n")
    return EXIT_OK if not failed else EXIT_FAIL


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="maxtree", description="Maximally probable r-furcating tree shapes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("enumerate", help="list every shape with n leaves")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--count-only", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("huffman", help="r-ary Huffman tree for integer weights")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--weights", type=_int_list, required=True)
    s.add_argument("--all-ties", action="store_true", help="explore every tie resolution")
    s.set_defaults(func=cmd_huffman)

    s = sub.add_parser("count", help="labeled-history counts for one shape")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--tree", required=True, help="shape text, or @FILE")
    s.add_argument("--ties", action="store_true")
    s.add_argument("--z", type=int)
    s.add_argument("--all-z", action="store_true")
    s.add_argument("--sci", action="store_true", help="append a float approximation")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("maxprob", help="print the maximally probable shape")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--format", choices=["shape", "ascii"], default="shape")
    s.set_defaults(func=cmd_maxprob)

    s = sub.add_parser("verify", help="exhaustively verify the maximizer")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("table", help="max tie-permitting counts as CSV")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--out")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("conjecture", help="check the simultaneity conjecture at (r, n)")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_conjecture)

    s = sub.add_parser("nonunique", help="two shapes with equal tie-permitting counts")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_nonunique)

    s = sub.add_parser("selftest", help="run the acceptance suite")
    s.add_argument("--quick", action="store_true", help="cap the table at n=21")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_selftest)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be >= 1")
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except (ResourceGuardError, StateCapExceeded) as exc:
        err.write(f"resource guard: {exc}\n")
        return EXIT_GUARD
    except (ShapeError, ValueError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
