"""Command-line front end.

Subcommands:
  stats  PATH                      dataset summary (n, m, alpha, sigma_max, ...)
  query  KIND [flags] PATH         run one query, emit a run report
  sweep  KIND [grid flags] PATH    run a (delta, tau) grid, emit CSV rows

Durations accept s/m/h/d/w suffixes (bare integers are seconds). Thresholds
accept '0.25', '25%', or '1/4'. Exit codes: 0 success, 1 usage, 2 IO/parse,
3 oracle ceiling exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from fractions import Fraction

from .graph import ParseError, build_static, degeneracy_order, graph_stats, parse_edge_list
from .oracle import DEFAULT_CEILING, OracleCeilingError, oracle_counts
from .queries import (
    ParameterError,
    SolutionSet,
    Universe,
    eval_eaa,
    eval_eae,
    eval_eea,
    parse_tau,
    practical_counts,
    validate_kind,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_CEILING = 3

_DURATION_UNITS = {"s": 1, "m": 60, "h": 3600, "d": 86400, "w": 604800}

CSV_HEADER = ["kind", "delta_s", "tau", "tau2", "universe", "engine", "num_solutions", "elapsed_ms"]


class _Parser(argparse.ArgumentParser):
    """argparse that exits with the documented usage code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


class UsageError(ValueError):
    pass


def parse_duration(text: str) -> int:
    """Duration in seconds from '<int>[s|m|h|d|w]'."""
    s = text.strip().lower()
    if not s:
        raise UsageError("empty duration")
    unit = 1
    if s[-1] in _DURATION_UNITS:
        unit = _DURATION_UNITS[s[-1]]
        s = s[:-1]
    try:
        value = int(s)
    except ValueError:
        raise UsageError(f"cannot parse duration {text!r}") from None
    if value < 0:
        raise UsageError("duration must be >= 0")
    return value * unit


def _tau_fmt(tau: Fraction | None) -> str:
    if tau is None:
        return ""
    return str(tau.numerator) if tau.denominator == 1 else f"{tau.numerator}/{tau.denominator}"


def _load(path: str):
    try:
        with open(path, "rb") as fh:
            return parse_edge_list(fh)
    except ParseError as exc:
        raise ParseError(exc.lineno, exc.message, source=path) from None


def _resolve_threads(args) -> int:
    if args.threads is not None:
        n = args.threads
    else:
        raw = os.environ.get("FOLTY_THREADS", "1")
        try:
            n = int(raw)
        except ValueError:
            raise UsageError(f"FOLTY_THREADS must be an integer, got {raw!r}") from None
    if n < 1:
        raise UsageError("threads must be >= 1")
    return n


def run_query(
    path: str,
    kind: str,
    delta: int,
    tau: Fraction,
    tau2: Fraction | None = None,
    universe: Universe = Universe.DST,
    engine: str = "folty",
    threads: int = 1,
    ceiling: int = DEFAULT_CEILING,
) -> dict:
    """Execute one query and return the run report as a JSON-ready dict."""
    kind = validate_kind(kind)
    timings = {}

    t0 = time.perf_counter()
    g = _load(path)
    timings["load"] = _ms_since(t0)

    t0 = time.perf_counter()
    static = build_static(g)
    ordering = degeneracy_order(static)
    timings["orient"] = _ms_since(t0)

    totals, out_ms, in_ms = _run_counts(g, static, ordering, delta, engine, threads, ceiling)
    timings["out_pass"] = out_ms
    timings["in_pass"] = in_ms

    t0 = time.perf_counter()
    solset = _threshold(g, static, totals, kind, tau, tau2, universe)
    timings["threshold"] = _ms_since(t0)

    stats = graph_stats(g, static, ordering)
    return {
        "query": {
            "kind": kind,
            "delta_s": delta,
            "tau": _tau_fmt(tau),
            "tau2": _tau_fmt(tau2),
            "universe": universe.value,
            "engine": engine,
        },
        "num_solutions": solset.total,
        "solutions": _payload(solset),
        "graph": {
            "n": stats.n,
            "m": stats.m,
            "alpha": stats.alpha,
            "sigma_max": stats.sigma_max,
        },
        "timings_ms": timings,
    }


def _ms_since(t0: float) -> float:
    return round((time.perf_counter() - t0) * 1000.0, 3)


def _run_counts(g, static, ordering, delta, engine, threads, ceiling):
    if engine == "folty":
        from .engine import in_pass, out_pass, oriented_triangles

        triangles = list(oriented_triangles(static, ordering))
        t0 = time.perf_counter()
        out_count = out_pass(g, static, ordering, delta, iter(triangles))
        out_ms = _ms_since(t0)
        t0 = time.perf_counter()
        in_count = in_pass(g, static, ordering, delta, iter(triangles))
        in_ms = _ms_since(t0)
        totals = [a + b for a, b in zip(in_count, out_count)]
        return totals, out_ms, in_ms
    if engine == "practical":
        t0 = time.perf_counter()
        totals = practical_counts(g, static, delta)
        return totals, _ms_since(t0), 0.0
    if engine == "oracle":
        t0 = time.perf_counter()
        totals = oracle_counts(g, delta, static, max_edges=ceiling).count
        return totals, _ms_since(t0), 0.0
    raise UsageError(f"unknown engine {engine!r}; expected folty, practical, or oracle")


def _threshold(g, static, totals, kind, tau, tau2, universe) -> SolutionSet:
    if kind == "eea":
        return eval_eea(g, static, totals, tau, universe)
    if kind == "eae":
        return eval_eae(g, static, totals, tau)
    if tau2 is None:
        raise UsageError("eaa requires --tau1 and --tau2")
    return eval_eaa(g, static, totals, tau, tau2, universe)


def _payload(solset: SolutionSet) -> list[dict]:
    if solset.kind == "eea":
        return [
            {"src": c.src, "dst": c.dst, "t": c.t, "count": c.count, "universe_size": c.universe_size}
            for c in solset.solutions
        ]
    return [
        {"vertex": s.vertex, "satisfied": s.satisfied, "degree": s.degree}
        for s in solset.solutions
    ]


def run_sweep(
    path: str,
    kind: str,
    deltas: list[int],
    taus: list[Fraction],
    tau2: Fraction | None = None,
    universe: Universe = Universe.DST,
    engine: str = "folty",
    threads: int = 1,
    ceiling: int = DEFAULT_CEILING,
) -> tuple[list[dict], dict]:
    """Run the (delta, tau) grid, reusing one count table per delta.

    Returns (rows, meta). meta["count_runs"] has one entry per delta with its
    counting-pass timings, showing that counting work is independent of the
    number of thresholds.
    """
    kind = validate_kind(kind)
    if not deltas or not taus:
        raise UsageError("sweep grid is empty")
    g = _load(path)
    static = build_static(g)
    ordering = degeneracy_order(static)
    rows: list[dict] = []
    count_runs: list[dict] = []
    for delta in sorted(set(deltas)):
        totals, out_ms, in_ms = _run_counts(g, static, ordering, delta, engine, threads, ceiling)
        count_runs.append({"delta_s": delta, "out_pass_ms": out_ms, "in_pass_ms": in_ms})
        for tau in sorted(set(taus)):
            t0 = time.perf_counter()
            solset = _threshold(g, static, totals, kind, tau, tau2, universe)
            elapsed = _ms_since(t0)
            rows.append(
                {
                    "kind": kind,
                    "delta_s": delta,
                    "tau": _tau_fmt(tau),
                    "tau2": _tau_fmt(tau2) if kind == "eaa" else "",
                    "universe": universe.value,
                    "engine": engine,
                    "num_solutions": solset.total,
                    "elapsed_ms": elapsed,
                }
            )
    return rows, {"count_runs": count_runs}


def _format_report(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        sols = report["solutions"]
        if report["query"]["kind"] == "eea":
            writer.writerow(["src", "dst", "t", "count", "universe_size"])
            for s in sols:
                writer.writerow([s["src"], s["dst"], s["t"], s["count"], s["universe_size"]])
        else:
            writer.writerow(["vertex", "satisfied", "degree"])
            for s in sols:
                writer.writerow([s["vertex"], s["satisfied"], s["degree"]])
        return buf.getvalue()
    lines = []
    q = report["query"]
    lines.append(
        f"query {q['kind']} delta={q['delta_s']}s tau={q['tau']}"
        + (f" tau2={q['tau2']}" if q["tau2"] else "")
        + f" universe={q['universe']} engine={q['engine']}"
    )
    gr = report["graph"]
    lines.append(
        f"graph  n={gr['n']} m={gr['m']} alpha={gr['alpha']} sigma_max={gr['sigma_max']}"
    )
    tm = report["timings_ms"]
    lines.append(
        "time   "
        + " ".join(f"{k}={tm[k]:.1f}ms" for k in ("load", "orient", "out_pass", "in_pass", "threshold"))
    )
    lines.append(f"num_solutions {report['num_solutions']}")
    for s in report["solutions"]:
        if "src" in s:
            lines.append(f"  {s['src']} {s['dst']} {s['t']} count={s['count']}/{s['universe_size']}")
        else:
            lines.append(f"  vertex {s['vertex']} satisfied={s['satisfied']}/{s['degree']}")
    return "\n".join(lines) + "\n"


def _write_solutions(report: dict, path: str) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        if report["query"]["kind"] == "eea":
            writer.writerow(["src", "dst", "t", "count", "universe_size"])
            for s in report["solutions"]:
                writer.writerow([s["src"], s["dst"], s["t"], s["count"], s["universe_size"]])
        else:
            writer.writerow(["vertex", "satisfied", "degree"])
            for s in report["solutions"]:
                writer.writerow([s["vertex"], s["satisfied"], s["degree"]])


def _parse_tau_list(args) -> list[Fraction]:
    taus: list[Fraction] = []
    if args.tau_list:
        taus.extend(parse_tau(part) for part in args.tau_list.split(",") if part.strip())
    if args.tau_range:
        parts = args.tau_range.split(":")
        if len(parts) != 3:
            raise UsageError("--tau-range expects lo:hi:step")
        lo, hi, step = (parse_tau(p) for p in parts)
        cur = lo
        while cur <= hi:
            taus.append(cur)
            cur += step
    if not taus:
        raise UsageError("sweep needs --tau-list or --tau-range")
    return taus


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="folty", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p_stats = sub.add_parser("stats", help="dataset summary")
    p_stats.add_argument("path")
    p_stats.add_argument("--format", choices=["json", "text"], default="text")

    p_query = sub.add_parser("query", help="run one query")
    p_query.add_argument("kind", help="eea, eae, or eaa")
    p_query.add_argument("path")
    p_query.add_argument("--delta", required=True, help="window, e.g. 3600, 30m, 4w")
    p_query.add_argument("--tau", help="threshold for eea/eae")
    p_query.add_argument("--tau1", help="outer threshold for eaa")
    p_query.add_argument("--tau2", help="inner threshold for eaa")
    p_query.add_argument("--universe", choices=["dst", "common"], default="dst")
    p_query.add_argument("--engine", choices=["folty", "practical", "oracle"], default="folty")
    p_query.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p_query.add_argument("--solutions-out", help="write full solutions as CSV to this path")
    p_query.add_argument("--threads", type=int, default=None)
    p_query.add_argument("--oracle-ceiling", type=int, default=DEFAULT_CEILING)

    p_sweep = sub.add_parser("sweep", help="run a (delta, tau) grid as CSV")
    p_sweep.add_argument("kind")
    p_sweep.add_argument("path")
    p_sweep.add_argument("--delta-list", help="comma-separated windows, e.g. 10m,30m,1h")
    p_sweep.add_argument("--delta", help="single window (alternative to --delta-list)")
    p_sweep.add_argument("--tau-list", help="comma-separated thresholds")
    p_sweep.add_argument("--tau-range", help="lo:hi:step thresholds")
    p_sweep.add_argument("--tau2", help="fixed inner threshold for eaa sweeps")
    p_sweep.add_argument("--universe", choices=["dst", "common"], default="dst")
    p_sweep.add_argument("--engine", choices=["folty", "practical", "oracle"], default="folty")
    p_sweep.add_argument("--threads", type=int, default=None)
    p_sweep.add_argument("--oracle-ceiling", type=int, default=DEFAULT_CEILING)
    return parser


def _cmd_stats(args) -> int:
    g = _load(args.path)
    static = build_static(g)
    ordering = degeneracy_order(static)
    stats = graph_stats(g, static, ordering).as_dict()
    if args.format == "json":
        print(json.dumps(stats, indent=2, sort_keys=True))
    else:
        width = max(len(k) for k in stats)
        for key, value in stats.items():
            print(f"{key:<{width}}  {value}")
    return EXIT_OK


def _cmd_query(args) -> int:
    kind = validate_kind(args.kind)
    delta = parse_duration(args.delta)
    if kind == "eaa":
        if not args.tau1 or not args.tau2:
            raise UsageError("eaa requires --tau1 and --tau2")
        tau = parse_tau(args.tau1)
        tau2 = parse_tau(args.tau2)
    else:
        if not args.tau:
            raise UsageError(f"{kind} requires --tau")
        tau = parse_tau(args.tau)
        tau2 = None
    report = run_query(
        args.path,
        kind,
        delta,
        tau,
        tau2,
        Universe(args.universe),
        args.engine,
        _resolve_threads(args),
        args.oracle_ceiling,
    )
    out = _format_report(report, args.format)
    sys.stdout.write(out if out.endswith("\n") else out + "\n")
    if args.solutions_out:
        _write_solutions(report, args.solutions_out)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    kind = validate_kind(args.kind)
    deltas: list[int] = []
    if args.delta_list:
        deltas.extend(parse_duration(p) for p in args.delta_list.split(",") if p.strip())
    if args.delta:
        deltas.append(parse_duration(args.delta))
    if not deltas:
        raise UsageError("sweep needs --delta-list or --delta")
    taus = _parse_tau_list(args)
    tau2 = parse_tau(args.tau2) if args.tau2 else None
    if kind == "eaa" and tau2 is None:
        raise UsageError("eaa sweeps require --tau2")
    rows, _ = run_sweep(
        args.path,
        kind,
        deltas,
        taus,
        tau2,
        Universe(args.universe),
        args.engine,
        _resolve_threads(args),
        args.oracle_ceiling,
    )
    writer = csv.writer(sys.stdout)
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow([row[k] for k in CSV_HEADER])
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "stats":
            return _cmd_stats(args)
        if args.command == "query":
            return _cmd_query(args)
        return _cmd_sweep(args)
    except (UsageError, ParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OracleCeilingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CEILING
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
