"""Command-line front end.

Exit codes for ``check-minimal``: 0 minimal, 1 not minimal, 2 inconclusive.
Any usage or input error exits with 3 so it never reads as a verdict.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from minimalcodes._parallel import default_threads
from minimalcodes.field import LinearCode, WeightDistribution, weight_distribution
from minimalcodes.formats import format_generator, read_function, read_generator, write_generator
from minimalcodes.krawtchouk import krawtchouk, lloyd
from minimalcodes.minimality import (
    MinimalityVerdict,
    ab_verdict,
    is_minimal_definitional,
    is_minimal_weight_criterion,
    two_weight_verdict,
)
from minimalcodes.ternary import (
    GmkParams,
    build_cf,
    build_cf_general,
    distribution_from_walsh,
    gmk_certificate,
    is_minimal_walsh,
    make_gmk,
)

EXIT_ERROR = 3
METHODS = ("definitional", "weights", "walsh", "ab", "two-weight")


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def _dump(obj: dict) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _weights_json(dist: WeightDistribution) -> dict:
    return {str(w): c for w, c in dist.items()}


def _code_header(code: LinearCode) -> dict:
    return {"q": code.q, "n": code.n, "k": code.k}


def _emit(args, report: dict, text: str, started: float) -> None:
    if args.timing:
        elapsed = round((time.perf_counter() - started) * 1000)
        report["timing_ms"] = elapsed
        text += f"\ntiming_ms: {elapsed}"
    print(_dump(report) if args.json else text)


def _load_code(args) -> tuple[LinearCode, object]:
    """Code plus the function it came from (``None`` for generator input)."""
    if args.code:
        return read_generator(args.code), None
    f = read_function(args.func)
    code = build_cf(f) if f.p == 3 else build_cf_general(f)
    return code, f


def cmd_krawtchouk(args) -> int:
    started = time.perf_counter()
    if args.lloyd is not None:
        value = lloyd(args.q, args.m, args.lloyd, args.x)
        report = {"q": args.q, "m": args.m, "k": args.lloyd, "x": args.x, "lloyd": value}
    else:
        value = krawtchouk(args.q, args.m, args.t, args.x)
        report = {"q": args.q, "m": args.m, "t": args.t, "x": args.x, "krawtchouk": value}
    _emit(args, report, str(value), started)
    return 0


def cmd_construct(args) -> int:
    started = time.perf_counter()
    if args.kind == "gmk":
        GmkParams(args.m, args.k)
        code = build_cf(make_gmk(args.m, args.k))
    else:
        f = read_function(args.func)
        code = build_cf(f) if f.p == 3 else build_cf_general(f)
    summary = f"n={code.n} k={code.k} q={code.q}"
    if args.out:
        write_generator(code, args.out)
        _emit(args, _code_header(code), summary, started)
    else:
        sys.stdout.write(format_generator(code))
        print(summary, file=sys.stderr)
    return 0


def cmd_weights(args) -> int:
    started = time.perf_counter()
    code, f = _load_code(args)
    if f is not None and f.p == 3 and not args.enumerate:
        dist = distribution_from_walsh(f)
    else:
        dist = weight_distribution(code, args.threads)
    report = _code_header(code) | {"weights": _weights_json(dist), "wmin": dist.w_min, "wmax": dist.w_max}
    text = f"q={code.q} n={code.n} k={code.k}\n{dist}\nwmin={dist.w_min} wmax={dist.w_max}"
    _emit(args, report, text, started)
    return 0


def _verdict_exit(verdict: MinimalityVerdict) -> int:
    return {True: 0, False: 1, None: 2}[verdict.minimal]


def cmd_check_minimal(args) -> int:
    started = time.perf_counter()
    if args.method == "walsh":
        if not args.func:
            raise CliError("method 'walsh' needs a function table (--func)")
    code, f = _load_code(args)
    report = _code_header(code)
    dist = None
    if args.method == "definitional":
        verdict = is_minimal_definitional(code, args.threads)
    elif args.method == "weights":
        verdict = is_minimal_weight_criterion(code, args.threads)
    elif args.method == "walsh":
        if f.p != 3:
            raise CliError("method 'walsh' needs a ternary function (p = 3)")
        verdict = is_minimal_walsh(f, threads=args.threads)
    else:
        dist = weight_distribution(code, args.threads)
        verdict = ab_verdict(dist, code.q) if args.method == "ab" else two_weight_verdict(dist, code.q)

    report["method"] = verdict.method.value
    report["verdict"] = verdict.status
    lines = [f"q={code.q} n={code.n} k={code.k}", f"method: {verdict.method.value}", f"verdict: {verdict.status}"]
    if dist is not None:
        q = code.q
        report["weights"] = _weights_json(dist)
        report["wmin"], report["wmax"] = dist.w_min, dist.w_max
        report["ab_satisfied"] = q * dist.w_min > (q - 1) * dist.w_max
        report["ratio_le_bound"] = q * dist.w_min <= (q - 1) * dist.w_max
        lines.append(f"wmin={dist.w_min} wmax={dist.w_max}")
    if verdict.witness is not None:
        a, b = verdict.witness
        report["witness"] = [list(a.entries), list(b.entries)]
        report["witness_index"] = list(verdict.witness_index)
        lines += [f"witness a: {a}", f"witness b: {b}"]
    if verdict.triple is not None:
        report["triple"] = [list(w) for w in verdict.triple]
        lines.append("triple: " + " ".join("(" + ",".join(map(str, w)) + ")" for w in verdict.triple))
    _emit(args, report, "\n".join(lines), started)
    return _verdict_exit(verdict)


def cmd_certify_gmk(args) -> int:
    started = time.perf_counter()
    cert = gmk_certificate(args.m, args.k)
    report = cert.as_dict()
    text = "\n".join(f"{key}: {value}" for key, value in report.items())
    _emit(args, report, text, started)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit a JSON report")
    common.add_argument("--threads", type=_positive, default=argparse.SUPPRESS, help="worker threads")
    common.add_argument("--timing", action="store_true", default=argparse.SUPPRESS, help="report wall time in ms")

    parser = _Parser(prog="minimalcodes", description="Minimal linear codes over prime fields.")
    parser.add_argument("--json", action="store_true")
    parser.add_argument("--threads", type=_positive, default=default_threads())
    parser.add_argument("--timing", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("krawtchouk", parents=[common], help="evaluate K_t(x, m) or a Lloyd sum")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    deg = p.add_mutually_exclusive_group(required=True)
    deg.add_argument("--t", type=int, help="Krawtchouk degree")
    deg.add_argument("--lloyd", type=int, metavar="K", help="Lloyd polynomial degree")
    p.set_defaults(func_=cmd_krawtchouk)

    p = sub.add_parser("construct", help="write a generator matrix")
    kinds = p.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    g = kinds.add_parser("gmk", parents=[common], help="code of the weight-<=k indicator")
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--out", type=Path)
    g.set_defaults(func_=cmd_construct)
    c = kinds.add_parser("cf", parents=[common], help="code of a function table")
    c.add_argument("--func", type=Path, required=True)
    c.add_argument("--out", type=Path)
    c.set_defaults(func_=cmd_construct)

    for name, handler, helptext in (
        ("weights", cmd_weights, "weight distribution"),
        ("check-minimal", cmd_check_minimal, "decide minimality"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--code", type=Path, help="generator-matrix file")
        src.add_argument("--func", type=Path, help="function-table file")
        p.set_defaults(func_=handler)
    sub.choices["weights"].add_argument(
        "--enumerate", action="store_true", help="enumerate codewords even for ternary function input"
    )
    sub.choices["check-minimal"].add_argument("--method", choices=METHODS, required=True)

    p = sub.add_parser("certify-gmk", parents=[common], help="parameter certificate for g_(m,k)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func_=cmd_certify_gmk)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func_(args)
    except (CliError, ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
