"""Command line front end.

    fibsym analyze --family fibonacci 6 8 9
    fibsym analyze --raw 4 6 10
    fibsym sweep --family lucas --max-index 17 --format csv
    fibsym verify --family fibonacci --max-index 12

Exit codes: 0 success, 1 formula/oracle discrepancies found by ``verify``,
2 usage error, 3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .classification import (
    Family,
    OracleConfidence,
    SweepRow,
    classify,
    cross_check,
    sweep,
)
from .oracle import DEFAULT_CEILING
from .report import (
    dumps,
    render_csv,
    render_sweep_text,
    render_text,
    sweep_summary,
    sweep_to_dict,
    verdict_to_dict,
)

log = logging.getLogger("fibsym")

CEILING_ENV = "FIBSYM_CONDUCTOR_CEILING"
MIN_CEILING = 10**3
MAX_SWEEP_INDEX = 64

EXIT_OK, EXIT_DISCREPANCY, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    family: Family
    values: list[int] = field(default_factory=list)
    index_ceiling: int = 0
    conductor_ceiling: int = DEFAULT_CEILING
    output_format: str = "text"
    output_path: Optional[str] = None
    oracle: bool = True
    workers: int = 1

    def validate(self) -> None:
        if self.conductor_ceiling < MIN_CEILING:
            raise UsageError(f"--conductor-ceiling must be >= {MIN_CEILING}")
        if self.command == "analyze":
            if len(self.values) != 3:
                raise UsageError(f"analyze takes exactly three values, got {len(self.values)}")
            if len(set(self.values)) != 3:
                raise UsageError("the three values must be distinct")
        else:
            if self.family is Family.RAW:
                raise UsageError(f"{self.command} needs --family fibonacci or lucas")
            if not 1 <= self.index_ceiling <= MAX_SWEEP_INDEX:
                raise UsageError(f"--max-index must be in 1..{MAX_SWEEP_INDEX}")
        if self.workers < 1:
            raise UsageError("--workers must be >= 1")


def _default_ceiling() -> int:
    raw = os.environ.get(CEILING_ENV)
    if not raw:
        return DEFAULT_CEILING
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{CEILING_ENV}={raw!r} is not an integer") from None


def _emit(text: str, cfg: RunConfig) -> None:
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(cfg: RunConfig) -> int:
    try:
        v = classify(cfg.family, cfg.values)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not v.check():
        log.error("verdict failed its own consistency check: %s", v)
        return EXIT_INTERNAL
    conf = cross_check(v, cfg.conductor_ceiling) if cfg.oracle else OracleConfidence.DISABLED
    if cfg.output_format == "json":
        _emit(dumps(verdict_to_dict(v, conf)), cfg)
    elif cfg.output_format == "csv":
        _emit(render_csv([(v, conf)]), cfg)
    else:
        _emit(render_text(v, conf), cfg)
    if conf is OracleConfidence.DISAGREES:
        log.error("formula and oracle disagree on %s", v.generators)
        return EXIT_INTERNAL
    return EXIT_OK


def _run_sweep(cfg: RunConfig) -> list[SweepRow]:
    return list(
        sweep(
            cfg.family,
            cfg.index_ceiling,
            cfg.conductor_ceiling,
            oracle=cfg.oracle,
            workers=cfg.workers,
        )
    )


def _emit_rows(rows: list[SweepRow], cfg: RunConfig, **meta) -> None:
    if cfg.output_format == "json":
        _emit(dumps(sweep_to_dict(rows, **meta)), cfg)
    elif cfg.output_format == "csv":
        _emit(render_csv((r.verdict, r.oracle) for r in rows), cfg)
    else:
        _emit(render_sweep_text(rows), cfg)


def cmd_sweep(cfg: RunConfig) -> int:
    rows = _run_sweep(cfg)
    if not all(r.verdict.check() for r in rows):
        return EXIT_INTERNAL
    _emit_rows(
        rows,
        cfg,
        family=cfg.family.value,
        max_index=cfg.index_ceiling,
        conductor_ceiling=cfg.conductor_ceiling,
    )
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    cfg.oracle = True
    rows = _run_sweep(cfg)
    bad = [r for r in rows if r.oracle is OracleConfidence.DISAGREES or not r.verdict.check()]
    if cfg.output_format == "json":
        doc = sweep_to_dict(
            rows,
            family=cfg.family.value,
            max_index=cfg.index_ceiling,
            conductor_ceiling=cfg.conductor_ceiling,
        )
        doc["discrepancies"] = [verdict_to_dict(r.verdict, r.oracle) for r in bad]
        _emit(dumps(doc), cfg)
    elif cfg.output_format == "csv":
        _emit(render_csv((r.verdict, r.oracle) for r in rows), cfg)
    else:
        summary = sweep_summary(rows)
        lines = [
            f"verified {cfg.family.value} triples up to index {cfg.index_ceiling}",
            "oracle: " + ", ".join(f"{k}={n}" for k, n in summary["oracle"].items()),
        ]
        for r in rows:
            if r.oracle is OracleConfidence.SKIPPED:
                lines.append(f"skipped {r.triple}: conductor above {cfg.conductor_ceiling}")
        for r in bad:
            lines.append(f"DISCREPANCY {r.triple}: {r.verdict.status.value} ({r.verdict.reason.value})")
        lines.append(f"{len(bad)} discrepancies")
        _emit("\n".join(lines) + "\n", cfg)
    return EXIT_DISCREPANCY if bad else EXIT_OK


COMMANDS = {"analyze": cmd_analyze, "sweep": cmd_sweep, "verify": cmd_verify}


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits with 2 as well; keep the message
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fibsym", description=__doc__.split("\n\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument(
            "--family", choices=[f.value for f in Family], default=None,
            help="index family, or raw for explicit generator values",
        )
        p.add_argument("--conductor-ceiling", type=int, default=None,
                       help=f"largest conductor the oracle will sieve (env {CEILING_ENV})")
        p.add_argument("--format", dest="output_format", choices=["text", "json", "csv"],
                       default="text")
        p.add_argument("-o", "--output", dest="output_path")
        p.add_argument("--no-oracle", dest="oracle", action="store_false",
                       help="skip the brute-force cross-check")

    p = sub.add_parser("analyze", help="classify one triple")
    common(p)
    p.add_argument("--raw", action="store_true", help="values are generators (same as --family raw)")
    p.add_argument("values", nargs="+", type=int)

    for name, text in (("sweep", "classify every ascending index triple"),
                       ("verify", "check closed forms against the oracle over a sweep")):
        p = sub.add_parser(name, help=text)
        common(p)
        p.add_argument("--max-index", dest="index_ceiling", type=int, required=True)
        p.add_argument("--workers", type=int, default=1)
    return parser


def parse_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    args = build_parser().parse_args(argv)
    family = args.family
    if getattr(args, "raw", False):
        if family not in (None, "raw"):
            raise UsageError("--raw conflicts with --family " + family)
        family = "raw"
    if family is None:
        if args.command == "analyze":
            raise UsageError("analyze needs --family or --raw")
        raise UsageError(f"{args.command} needs --family")
    cfg = RunConfig(
        command=args.command,
        family=Family(family),
        values=list(getattr(args, "values", [])),
        index_ceiling=getattr(args, "index_ceiling", 0),
        conductor_ceiling=(
            args.conductor_ceiling if args.conductor_ceiling is not None else _default_ceiling()
        ),
        output_format=args.output_format,
        output_path=args.output_path,
        oracle=args.oracle,
        workers=getattr(args, "workers", 1),
    )
    cfg.validate()
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG)
    return cfg


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = parse_config(argv)
        return COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"fibsym: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
