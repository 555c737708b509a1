"""Command-line entry point: ``gridweave {draw,verify,count,bench,render}``.

Exit codes: 0 ok, 1 malformed input, 2 infeasible parameters,
3 budget exhausted, 4 drawing invalid, 5 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from pathlib import Path

from . import counting
from .bench import ConfigError, load_config, run_experiment
from .drawing import BudgetExhausted, DrawingParams, InfeasibleParameters, draw
from .formats import EmbeddingFormatError, embedding_from_json, embedding_to_json
from .graph import GraphFormatError, parse_graph
from .render import render_svg
from .verify import MalformedDrawing, verify_drawing

EXIT_OK, EXIT_PARSE, EXIT_INFEASIBLE, EXIT_BUDGET, EXIT_INVALID, EXIT_IO = 0, 1, 2, 3, 4, 5

ALG_NAMES = {"greedy": "blowup-greedy", "blowup-greedy": "blowup-greedy",
             "first": "first-moment", "first-moment": "first-moment"}


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_IO) from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc.strerror}", EXIT_IO) from None


def _load_graph(path: str):
    try:
        return parse_graph(_read(path))
    except GraphFormatError as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from None


def _load_embedding(path: str):
    try:
        return embedding_from_json(_read(path))
    except EmbeddingFormatError as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from None


def _int_range(text: str) -> list[int]:
    """``"3"``, ``"4,6,8"`` or ``"4..12"`` (inclusive) or ``"4..12..2"``."""
    try:
        if ".." in text:
            parts = [int(x) for x in text.split("..")]
            lo, hi = parts[0], parts[1]
            step = parts[2] if len(parts) > 2 else 1
            return list(range(lo, hi + 1, step))
        return [int(x) for x in text.split(",") if x]
    except (ValueError, IndexError):
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from None


def cmd_draw(args) -> int:
    g = _load_graph(args.graph)
    try:
        params = DrawingParams(m=args.m, t=args.t, volume_constant=args.c, attempt_budget=args.budget,
                               growth_factor=args.growth, seed=args.seed,
                               max_escalations=args.max_escalations)
        res = draw(g, params, ALG_NAMES[args.alg])
    except InfeasibleParameters as exc:
        raise CliError(str(exc), EXIT_INFEASIBLE) from None
    except BudgetExhausted as exc:
        for st in exc.stats:
            print(json.dumps(st.to_dict()), file=sys.stderr)
        raise CliError(str(exc), EXIT_BUDGET) from None
    verdict = verify_drawing(g, res.embedding)
    if not verdict.valid:
        raise CliError("internal error: drawing failed re-verification", EXIT_INVALID)
    if not args.quiet:
        for st in res.stats:
            print(json.dumps(st.to_dict()), file=sys.stderr)
    _write(args.out, embedding_to_json(res.embedding, g))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    emb, graph_hash = _load_embedding(args.embedding)
    if graph_hash is not None and graph_hash != g.content_hash():
        raise CliError("graph_hash does not match the graph file", EXIT_PARSE)
    try:
        verdict = verify_drawing(g, emb)
    except MalformedDrawing as exc:
        raise CliError(f"malformed drawing: {exc}", EXIT_PARSE) from None
    _write(args.out, json.dumps(verdict.to_dict(), indent=2) + "\n")
    return EXIT_OK if verdict.valid else EXIT_INVALID


def cmd_count(args) -> int:
    rows = []
    series = []
    for m in args.m:
        t0 = time.perf_counter()
        try:
            if args.kind == "collinear":
                res = counting.count_collinear_ksets(args.d, args.k, m, strategy=args.strategy or "lines")
            elif args.kind == "coplanar-origin":
                res = counting.count_coplanar_origin_triples(m)
            elif args.kind == "coplanar4":
                res = counting.count_coplanar_4sets(m, strategy=args.strategy or "brute")
            else:
                if not args.normal:
                    raise CliError("hyperplane census needs --normal", EXIT_INFEASIBLE)
                res, _ = counting.hyperplane_count(args.normal, m)
        except counting.CensusTooLarge as exc:
            raise CliError(str(exc), EXIT_INFEASIBLE) from None
        except ValueError as exc:
            raise CliError(str(exc), EXIT_INFEASIBLE) from None
        ms = (time.perf_counter() - t0) * 1e3
        rows.append([res.kind, res.d, "" if res.k is None else res.k, res.m, res.count, f"{ms:.3f}"])
        series.append((res.m, res.count))
    out = args.out
    fh = sys.stdout if out in (None, "-") else open(out, "w", encoding="utf-8", newline="")
    try:
        w = csv.writer(fh, lineterminator="\r\n")
        w.writerow(["kind", "d", "k", "m", "count", "elapsed_ms"])
        w.writerows(rows)
        if args.fit:
            try:
                fh.write(f"# slope={counting.fit_growth_exponent(series):.6f}\r\n")
            except ValueError as exc:
                print(f"fit skipped: {exc}", file=sys.stderr)
    finally:
        if fh is not sys.stdout:
            fh.close()
    return EXIT_OK


def cmd_bench(args) -> int:
    try:
        cfg = load_config(args.config) if Path(args.config).exists() else None
    except ConfigError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    if cfg is None:
        raise CliError(f"cannot read {args.config}", EXIT_IO)
    if args.trials is not None:
        cfg.trials = args.trials
        if cfg.trials < 1:
            raise CliError("--trials must be >= 1", EXIT_PARSE)
    if args.seed is not None:
        cfg.seed = args.seed
    base = args.out or str(Path(args.config).parent)
    try:
        summary = run_experiment(cfg, base, workers=args.workers)
    except InfeasibleParameters as exc:
        raise CliError(str(exc), EXIT_INFEASIBLE) from None
    except ConfigError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    print(json.dumps(summary, indent=2, sort_keys=True))
    return EXIT_OK


def cmd_render(args) -> int:
    emb, graph_hash = _load_embedding(args.embedding)
    g = _load_graph(args.graph) if args.graph else None
    if g is not None:
        if graph_hash is not None and graph_hash != g.content_hash():
            raise CliError("graph_hash does not match the graph file", EXIT_PARSE)
        if g.n != emb.n:
            raise CliError("graph and embedding disagree on the vertex count", EXIT_PARSE)
    _write(args.out, render_svg(emb, g, scale=args.scale))
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # usage errors are malformed input, not "infeasible" (argparse's default 2)
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gridweave", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("draw", help="draw a graph on the integer grid")
    d.add_argument("graph")
    d.add_argument("--alg", choices=sorted(ALG_NAMES), default="greedy")
    d.add_argument("--m", type=int, default=0, help="grid side (0 = automatic)")
    d.add_argument("--t", type=int, default=0, help="blowup size (0 = automatic)")
    d.add_argument("--seed", type=int, default=0)
    d.add_argument("--c", type=float, default=DrawingParams.volume_constant, help="volume constant")
    d.add_argument("--budget", type=int, default=DrawingParams.attempt_budget)
    d.add_argument("--growth", type=float, default=DrawingParams.growth_factor)
    d.add_argument("--max-escalations", type=int, default=DrawingParams.max_escalations)
    d.add_argument("--out")
    d.add_argument("--quiet", action="store_true", help="suppress per-level statistics")
    d.set_defaults(func=cmd_draw)

    v = sub.add_parser("verify", help="check that an embedding is a grid drawing")
    v.add_argument("graph")
    v.add_argument("embedding")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("count", help="lattice censuses as CSV")
    c.add_argument("kind", choices=["collinear", "coplanar-origin", "coplanar4", "hyperplane"])
    c.add_argument("-d", type=int, default=3)
    c.add_argument("-k", type=int, default=3)
    c.add_argument("-m", type=_int_range, required=True)
    c.add_argument("--strategy", choices=["brute", "lines", "planes"])
    c.add_argument("--normal", type=lambda s: tuple(int(x) for x in s.split(",")))
    c.add_argument("--fit", action="store_true", help="append the fitted log-log slope")
    c.add_argument("--out")
    c.set_defaults(func=cmd_count)

    b = sub.add_parser("bench", help="run a seeded experiment from a JSON config")
    b.add_argument("config")
    b.add_argument("--out", help="output directory (default: the config's directory)")
    b.add_argument("--trials", type=int)
    b.add_argument("--seed", type=int)
    b.add_argument("--workers", type=int, help="worker processes (default: GRIDWEAVE_THREADS or CPU count)")
    b.set_defaults(func=cmd_bench)

    r = sub.add_parser("render", help="SVG figure of an embedding")
    r.add_argument("embedding")
    r.add_argument("--graph")
    r.add_argument("--scale", type=float, default=20.0)
    r.add_argument("--out")
    r.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"gridweave {args.command}: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
