"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 parse or usage error,
3 instance-size guard violation.
"""
from __future__ import annotations

import argparse
import sys

from . import __version__
from .formula import DEFAULT_LIMIT, HARD_LIMIT, DeficiencyCertificate, max_deficiency
from .generate import SEED_BITS, random_instance
from .io import ParseError, dump_kv, format_ids, format_instance, load_kv, parse_instance
from .multigraph import GraphError, InstanceTooLarge
from .selftest import run_selftest
from .solver import solve_max_fbounded, verify_minmax

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(args):
    if not args.input:
        raise UsageError("--input is required")
    return parse_instance(_read_text(args.input))


def cmd_solve(args) -> int:
    G, f = _load(args)
    H = solve_max_fbounded(G, f)
    if args.format == "kv":
        print(dump_kv({
            "size": H.size,
            "h": H.degree_sum,
            "edges": format_ids(H.edge_indices),
            "degree": format_ids(H.degree),
        }), end="")
    else:
        print(f"|H| = {H.size}")
        print(f"h = {H.degree_sum}")
        print(f"edges: {format_ids(H.edge_indices) or '-'}")
        print(f"degrees: {format_ids(H.degree) or '-'}")
    return EXIT_OK


def cmd_certify(args) -> int:
    G, f = _load(args)
    cert = max_deficiency(G, f, args.limit)
    if args.format == "kv":
        doc = cert.to_kv()
        doc["bound"] = cert.bound
        print(dump_kv(doc), end="")
    else:
        print(cert.to_text(), end="")
    return EXIT_OK


def cmd_verify(args) -> int:
    G, f = _load(args)
    claimed = None
    if args.certificate:
        claimed = DeficiencyCertificate.from_kv(load_kv(_read_text(args.certificate)))
    report = verify_minmax(G, f, args.limit, certificate=claimed)
    print(report.dumps() if args.format == "kv" else report.to_text(), end="")
    if not report.passed:
        failure = report.first_failure
        print(f"verification failed at check '{failure.name}': {failure.detail}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_gen(args) -> int:
    for name in ("n", "m", "fmax", "seed"):
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required")
    G, f = random_instance(args.n, args.m, args.fmax, args.seed)
    text = format_instance(G, f)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_selftest(args) -> int:
    n_max = 7 if args.n is None else args.n
    m_max = 14 if args.m is None else args.m
    fmax = 4 if args.fmax is None else args.fmax
    seed = 0 if args.seed is None else args.seed
    if n_max < 1 or m_max < 0 or fmax < 0:
        raise UsageError("selftest needs --n >= 1, --m >= 0, --fmax >= 0")

    def report(s: int, name: str) -> None:
        print(
            f"FAIL {name} seed={s}; replay: fbounded selftest --count 1 --seed {s} "
            f"--n {n_max} --m {m_max} --fmax {fmax} --limit {args.limit}",
            file=sys.stderr,
        )

    result = run_selftest(args.count, seed, n_max, m_max, fmax, args.limit, on_failure=report)
    names = sorted(set(result.passed) | set(result.failed))
    if args.format == "kv":
        doc = {"instances": result.count, "seed": seed, "status": "PASS" if result.ok else "FAIL"}
        for name in names:
            doc[f"{name}.pass"] = result.passed[name]
            doc[f"{name}.fail"] = result.failed[name]
        print(dump_kv(doc), end="")
    else:
        print(f"selftest: {result.count} instances, seed {seed}, n <= {n_max}, m <= {m_max}, f <= {fmax}")
        for name in names:
            print(f"  {name:<20} pass {result.passed[name]:>6}  fail {result.failed[name]:>6}")
        print("PASS" if result.ok else f"FAIL ({len(result.failures)} failed checks)")
    return EXIT_OK if result.ok else EXIT_FAIL


def _seed(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 1 << SEED_BITS:
        raise argparse.ArgumentTypeError(f"seed must fit in {SEED_BITS} unsigned bits")
    return value


def _limit(text: str) -> int:
    value = int(text)
    if not 0 <= value <= HARD_LIMIT:
        raise argparse.ArgumentTypeError(f"limit must be in 0..{HARD_LIMIT}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fbounded", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="instance file, '-' for stdin")
    common.add_argument("--n", type=int)
    common.add_argument("--m", type=int)
    common.add_argument("--fmax", type=int)
    common.add_argument("--seed", type=_seed)
    common.add_argument("--limit", type=_limit, default=DEFAULT_LIMIT, help="exhaustive search vertex limit")
    common.add_argument("--format", choices=("text", "kv"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("solve", parents=[common], help="maximum f-bounded subgraph").set_defaults(func=cmd_solve)
    sub.add_parser("certify", parents=[common], help="maximum deficiency certificate").set_defaults(func=cmd_certify)
    p = sub.add_parser("verify", parents=[common], help="cross-check solver and certificate")
    p.add_argument("--certificate", help="key = value certificate to check instead of trusting")
    p.set_defaults(func=cmd_verify)
    p = sub.add_parser("gen", parents=[common], help="random instance")
    p.add_argument("--output", help="write here instead of stdout")
    p.set_defaults(func=cmd_gen)
    p = sub.add_parser("selftest", parents=[common], help="randomized invariant battery")
    p.add_argument("--count", type=int, default=1000)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InstanceTooLarge as exc:
        print(f"instance too large: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (GraphError, UsageError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
