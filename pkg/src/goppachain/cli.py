"""Command-line entry point.

    goppachain build    --l 3 [--seed 1] [--cap 28] [--format report-text|structured]
    goppachain verify   --l 2 [--seed 7]
    goppachain distance --l 3 --code 7
    goppachain export   --l 2 --code 4s --format matrix-text --out H4s.txt

Exit codes: 0 success, 1 failed check or cap exceeded, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .analysis import analysis_checks, min_distance, min_even_weight
from .chain import CODE_IDS, Chain, build_chain, chain_checks, code_name, sample_params
from .errors import CapExceededError, GoppaChainError
from .gf2linalg import DEFAULT_CAP
from .gf2m import field_new
from .report import SCHEMA_VERSION, chain_report

FORMATS = ("report-text", "structured", "matrix-text")
L_RANGE = range(2, 9)


def make_chain(l: int, seed: int) -> Chain:
    F = field_new(l)
    return build_chain(F, sample_params(F, seed))


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="goppachain", description="Chain of separable binary Goppa codes.")
    sub = p.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--l", type=int, required=True, choices=L_RANGE, metavar="L",
                        help="field GF(2^(2l)), 2 <= l <= 8")
    common.add_argument("--seed", type=int, default=1, help="parameter sampling seed (default 1)")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="max dimension k to enumerate")
    common.add_argument("--format", choices=FORMATS, default="report-text")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--workers", type=int, default=1, help="processes for distance search")

    sub.add_parser("build", parents=[common], help="build the chain and report (n, k, d)")
    sub.add_parser("verify", parents=[common], help="run every structural and distance check")
    for name, default, text in (("distance", "7", "exact minimum distance of one code"),
                                ("export", None, "export a parity-check matrix")):
        sp = sub.add_parser(name, parents=[common], help=text)
        sp.add_argument("--code", choices=CODE_IDS, default=default, required=default is None)
        if name == "distance":
            sp.add_argument("--even", action="store_true", help="minimum even weight instead")
    return p


def _distances(chain: Chain, cap: int, workers: int) -> dict:
    return {
        cid: min_distance(code, cap, workers)
        for cid, code in chain.codes.items()
        if code.k <= cap
    }


def _cmd_build(args, chain: Chain) -> tuple[str, int]:
    dist = _distances(chain, args.cap, args.workers)
    extras = {}
    if chain["5"].k <= args.cap:
        me = min_even_weight(chain["5"], args.cap, args.workers).d
        extras["min_even_weight_5"] = "none" if me is None else str(me)
    report = chain_report(chain, dist, extras=extras)
    return (report.to_structured() if args.format == "structured" else report.to_text()), 0


def _cmd_verify(args, chain: Chain) -> tuple[str, int]:
    dist = _distances(chain, args.cap, args.workers)
    checks = chain_checks(chain) + analysis_checks(chain, args.cap, dist)
    report = chain_report(chain, dist, checks)
    text = report.to_structured() if args.format == "structured" else report.to_text()
    for c in report.failed:
        print(f"check failed: {c.name}" + (f" ({c.detail})" if c.detail else ""), file=sys.stderr)
    return text, 1 if report.failed else 0


def _cmd_distance(args, chain: Chain) -> tuple[str, int]:
    code = chain[args.code]
    label = "min_even_weight" if args.even else "d"
    search = min_even_weight if args.even else min_distance
    try:
        res = search(code, args.cap, args.workers)
    except CapExceededError as exc:
        print(f"CapExceededError: {exc}", file=sys.stderr)
        d_text, kind, status = str(code.design_distance), "bound", 1
        enumerated = 0
    else:
        d_text = "none" if res.d is None else str(res.d)
        kind, status, enumerated = ("exact" if res.d is not None else "none"), 0, res.enumerated
    if args.format == "structured":
        lines = [
            f"schema_version: {SCHEMA_VERSION}",
            f"l: {args.l}",
            f"seed: {args.seed}",
            f"code_id: {args.code}",
            f"n: {code.n}",
            f"k: {code.k}",
            f"{label}: {d_text}",
            f"d_kind: {kind}",
            f"enumerated: {enumerated}",
        ]
        return "\n".join(lines) + "\n", status
    rel = f">= {d_text} (bound)" if kind == "bound" else f"= {d_text}"
    text = f"{code_name(args.code)}: n = {code.n}, k = {code.k}, {label} {rel}\n"
    return text, status


def _cmd_export(args, chain: Chain) -> tuple[str, int]:
    code = chain[args.code]
    if args.format == "matrix-text":
        return code.binary_matrix_text(), 0
    if args.format == "structured":
        lines = [
            f"schema_version: {SCHEMA_VERSION}",
            f"l: {args.l}",
            f"seed: {args.seed}",
            f"code_id: {args.code}",
            f"n: {code.n}",
            f"k: {code.k}",
            "G: " + " ".join(map(str, code.poly.to_list())),
            "L: " + " ".join(map(str, code.locations)),
        ]
        lines += [f"H_bin.{i}: {row}" for i, row in enumerate(code.binary_matrix_text().split())]
        return "\n".join(lines) + "\n", 0
    head = f"{code_name(args.code)}  n={code.n}  k={code.k}  G={code.poly!r}\n"
    return head + code.field_matrix_text(), 0


COMMANDS = {"build": _cmd_build, "verify": _cmd_verify, "distance": _cmd_distance, "export": _cmd_export}


def run(argv: Sequence[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.format == "matrix-text" and args.command != "export":
        parser.print_usage(sys.stderr)
        print("goppachain: error: matrix-text is only available for export", file=sys.stderr)
        return 2
    if args.cap < 0 or args.workers < 1:
        parser.print_usage(sys.stderr)
        print("goppachain: error: --cap must be >= 0 and --workers >= 1", file=sys.stderr)
        return 2
    try:
        chain = make_chain(args.l, args.seed)
        text, status = COMMANDS[args.command](args, chain)
    except GoppaChainError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
