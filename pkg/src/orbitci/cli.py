"""Command line front end.

Subcommands: degrees (fundamental degrees of one type), ci-check (verdict
for one marking or one exceptional dimension pair), verify (sweep every
proper marking up to a rank bound), euler (exact Euler characteristic
values of a smooth complete intersection), oracle (the independent
cross-check suites).  Exit code 0 is an affirmative or clean run, 1 is a
sound negative finding, 2 is a usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import oracle
from .ci import (
    VERDICT_CONE,
    VERDICT_NOT_CI,
    CIReport,
    ci_verdict,
    exceptional_filter,
    report_to_dict,
)
from .dynkin import enumerate_markings, parse_marking
from .errors import OrbitCIError
from .euler import EulerPoly
from .orbits import OrbitDescriptor
from .rootsys import LieType, all_simple_types, build_root_system

_CSV_COLUMNS = ("type", "rank", "marking", "dim_orbit", "codim", "verdict", "first_rule")


@dataclass(frozen=True)
class RunConfig:
    max_rank: int = 8
    allow_unvalidated: bool = False
    parallelism: int = 1
    fmt: str = "table"


def _cmd_degrees(args) -> int:
    t = LieType.parse(args.type)
    rs = build_root_system(t)
    degs = list(rs.fundamental_degrees)
    half = rs.dim_nilpotent_cone // 2
    ok = sum(degs) == half + rs.rank
    print(f"{t} degrees {degs} dim {rs.dim_g} dim_N {rs.dim_nilpotent_cone} "
          f"identity {sum(degs)} = {half} + {rs.rank} {'ok' if ok else 'VIOLATED'}")
    return 0 if ok else 1


def _report_lines(report: CIReport) -> list[str]:
    lines = [f"verdict {report.verdict}"]
    s = report.subject
    if s is not None:
        lines.append(f"subject {s.lie_type} dim {s.dim_orbit} codim {s.codim}")
    for r in report.reasons:
        parts = ", ".join(f"{k}={v}" for k, v in r.witness.items())
        lines.append(f"  {r.rule}: {parts}")
        lines.append(f"    [{r.citation}]")
    return lines


def _cmd_ci_check(args) -> int:
    if args.exceptional is not None:
        t = LieType.parse(args.exceptional)
        if args.dim_orbit is None:
            raise OrbitCIError("--exceptional requires --dim-orbit")
        rs = build_root_system(t)
        subject = OrbitDescriptor(t, None, args.dim_orbit, rs.dim_g - args.dim_orbit)
        report = exceptional_filter(t, subject)
    else:
        if args.marking is None:
            raise OrbitCIError("provide MARKING or --exceptional TYPE --dim-orbit N")
        report = ci_verdict(parse_marking(args.marking))
    if args.json:
        print(json.dumps(report_to_dict(report), indent=2, sort_keys=True))
    else:
        print("\n".join(_report_lines(report)))
    return 0 if report.verdict == VERDICT_CONE else 1


def _sweep_type(key: tuple[str, int]) -> list[tuple]:
    """Worker: all proper markings of one type, as plain rows."""
    t = LieType(key[0], key[1])
    rows = []
    for d in enumerate_markings(t):
        report = ci_verdict(d)
        s = report.subject
        rows.append((t.family, t.rank, d.bits(), s.dim_orbit, s.codim,
                     report.verdict, report.first_rule))
    return rows


def _verify_rows(cfg: RunConfig) -> list[tuple]:
    specs = [(t.family, t.rank) for t in all_simple_types(cfg.max_rank)]
    if cfg.parallelism > 1:
        with ProcessPoolExecutor(max_workers=cfg.parallelism) as pool:
            chunks = list(pool.map(_sweep_type, specs))
    else:
        chunks = [_sweep_type(s) for s in specs]
    rows: list[tuple] = []
    for chunk in chunks:
        rows.extend(chunk)
    return rows


def _emit_table(rows) -> None:
    hist: dict[str, int] = {}
    verdicts: dict[str, int] = {}
    for row in rows:
        verdicts[row[5]] = verdicts.get(row[5], 0) + 1
        hist[row[6]] = hist.get(row[6], 0) + 1
    widths = [4, 4, 10, 9, 5, 24, 26]
    header = ("type", "rank", "marking", "dim_orbit", "codim", "verdict", "first_rule")
    print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
    for row in rows:
        print("  ".join(str(v).ljust(w) for v, w in zip(row, widths)))
    print(f"total {len(rows)}")
    for v in sorted(verdicts):
        print(f"verdict {v}: {verdicts[v]}")
    for rule in sorted(hist):
        print(f"rule {rule}: {hist[rule]}")


def _emit_csv(rows) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(_CSV_COLUMNS)
    for row in rows:
        writer.writerow(row)
    sys.stdout.write(buf.getvalue())


def _emit_json(rows) -> None:
    print(json.dumps(
        [dict(zip(_CSV_COLUMNS, row)) for row in rows],
        indent=2, sort_keys=True,
    ))


def _cmd_verify(args) -> int:
    cfg = RunConfig(
        max_rank=args.max_rank,
        allow_unvalidated=args.allow_unvalidated_tables,
        parallelism=args.parallelism,
        fmt=args.format,
    )
    if cfg.max_rank > 8 and not cfg.allow_unvalidated:
        raise OrbitCIError(
            "rank above 8 needs --allow-unvalidated-tables: the small-irrep "
            "table is only checked through rank 8"
        )
    if cfg.max_rank > 8:
        print("warning: rank above 8 uses the unvalidated small-irrep table",
              file=sys.stderr)
    rows = _verify_rows(cfg)
    if cfg.fmt == "csv":
        _emit_csv(rows)
    elif cfg.fmt == "json":
        _emit_json(rows)
    else:
        _emit_table(rows)
    # soundness: IsNilpotentCone may appear only at the all-black marking
    bad = [r for r in rows if r[5] == VERDICT_CONE and "1" in r[2]]
    undetermined = [r for r in rows if r[5] not in (VERDICT_CONE, VERDICT_NOT_CI)]
    if bad or undetermined:
        return 1
    return 0


def _parse_t_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _cmd_euler(args) -> int:
    degrees = tuple(int(v) for v in args.deg.split(",")) if args.deg else ()
    poly = EulerPoly(args.m, degrees)
    ts = _parse_t_range(args.t)
    vals = poly.values(ts)
    for t in ts:
        print(f"chi({t}) = {vals[t]}")
    return 0


def _cmd_oracle(args) -> int:
    stats = oracle.run_suite(args.suite, samples=args.samples)
    print(json.dumps(stats, indent=2, sort_keys=True))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitci",
        description="complete-intersection verdicts for nilpotent orbit closures",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("degrees", help="fundamental degrees of one simple type")
    p.add_argument("type", help="for example A4 or G2")
    p.set_defaults(func=_cmd_degrees)

    p = sub.add_parser("ci-check", help="verdict for one marking")
    p.add_argument("marking", nargs="?", default=None,
                   help="for example C3:101 (1 = white, kept in the Levi)")
    p.add_argument("--exceptional", default=None, metavar="TYPE",
                   help="exceptional type, decided from dimensions alone")
    p.add_argument("--dim-orbit", type=int, default=None,
                   help="orbit dimension for --exceptional")
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.set_defaults(func=_cmd_ci_check)

    p = sub.add_parser("verify", help="sweep all proper markings up to a rank")
    p.add_argument("--max-rank", type=int, default=8)
    p.add_argument("--allow-unvalidated-tables", action="store_true")
    p.add_argument("--parallelism", type=int, default=1)
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("euler", help="Euler characteristic of a smooth CI")
    p.add_argument("--m", type=int, required=True, help="ambient dimension")
    p.add_argument("--deg", default="", help="comma separated degrees, e.g. 2,3")
    p.add_argument("--t", required=True, help="twist, a value or a..b range")
    p.set_defaults(func=_cmd_euler)

    p = sub.add_parser("oracle", help="independent exact-arithmetic cross-checks")
    p.add_argument("suite", choices=("molien", "cones", "jacobian", "weights", "all"))
    p.add_argument("--samples", type=int, default=500)
    p.set_defaults(func=_cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except OrbitCIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())
