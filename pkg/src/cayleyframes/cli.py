"""Command line: ``cayleyframes verify | dump-fixture | dump-table``.

Exit codes: 0 when every check passes, 1 when a check fails, 2 for usage
errors (argparse's own convention).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__
from . import io as fx
from .errors import UnknownFixture
from .verify import SUITES, SuiteConfig, resolve_check, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _tolerance(text: str) -> tuple[str, float]:
    name, sep, value = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected name=value, got {text!r}")
    try:
        resolve_check(name)
    except KeyError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    try:
        val = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {value!r}") from None
    if not val > 0:
        raise argparse.ArgumentTypeError(f"tolerance must be positive: {value!r}")
    return name, val


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def _seed(text: str) -> int:
    n = int(text)
    if not 0 <= n < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cayleyframes", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run property suites and pinned regressions")
    v.add_argument("suite", choices=SUITES + ("all",))
    v.add_argument("--trials", type=_positive, default=1000)
    v.add_argument("--seed", type=_seed, default=42)
    v.add_argument("--tol", type=_tolerance, nargs="+", action="extend", default=[],
                   metavar="NAME=VALUE", help="override a check threshold")
    v.add_argument("--json", dest="json_path", type=Path, help="write the JSON report here")
    v.add_argument("--quiet", action="store_true", help="print only the summary line")
    v.add_argument("--workers", type=_positive, default=1, help="worker processes")

    d = sub.add_parser("dump-fixture", help="print a pinned JSON fixture")
    d.add_argument("name", choices=sorted(fx.FIXTURE_BUILDERS))
    d.add_argument("--out", type=Path)

    t = sub.add_parser("dump-table", help="print the signed multiplication table as CSV")
    t.add_argument("--out", type=Path)
    return parser


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")

    if args.command == "dump-table":
        _emit(fx.table_csv(), args.out)
        return EXIT_OK
    if args.command == "dump-fixture":
        try:
            _emit(fx.dumps(fx.load_fixture(args.name)), args.out)
        except UnknownFixture as exc:
            print(f"unknown fixture {exc}", file=sys.stderr)
            return EXIT_USAGE
        return EXIT_OK

    cfg = SuiteConfig(args.suite, args.trials, args.seed, dict(args.tol), args.json_path, args.workers)
    report = run_suite(cfg)
    text = report.text()
    print(text.splitlines()[-1] if args.quiet else text)
    if cfg.output is not None:
        cfg.output.write_text(json.dumps(report.to_dict(), indent=2) + "\n")
    return EXIT_OK if report.passed else EXIT_FAIL


if __name__ == "__main__":
    raise SystemExit(main())
