"""Seeded experiment runner: graph family x sizes x trials -> records CSV + summary JSON.

Per-trial seeds come from the master seed by ``seed_i = master XOR splitmix64(i)``
where ``i`` enumerates (size, trial) in row-major order. Records and summary
are byte-reproducible; wall-clock timings go to a separate CSV.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .drawing import MODES, BudgetExhausted, DrawingParams, InfeasibleParameters, draw
from .formats import embedding_from_json, embedding_to_json
from .graph import check_family, degeneracy_ordering, generate_family
from .verify import drawing_stats, verify_drawing

MASK64 = (1 << 64) - 1

RECORD_FIELDS = [
    "size", "trial", "seed", "n", "k", "D", "success", "escalated", "m", "t",
    "attempts", "volume", "aspect_ratio", "ratio", "verified",
]
TIMING_FIELDS = ["size", "trial", "elapsed_ms"]

_PARAM_KEYS = {"m": "m", "t": "t", "c": "volume_constant", "budget": "attempt_budget",
               "growth": "growth_factor", "max_escalations": "max_escalations"}
_ALGORITHMS = {"first-moment": "first-moment", "blowup-greedy": "blowup-greedy",
               "greedy": "blowup-greedy", "first": "first-moment"}


class ConfigError(ValueError):
    pass


def splitmix64(x: int) -> int:
    z = (x + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def trial_seed(master: int, index: int) -> int:
    return (master ^ splitmix64(index)) & MASK64


@dataclass
class ExperimentConfig:
    family: dict
    sizes: list[int]
    algorithm: str
    trials: int
    seed: int = 0
    params: dict = field(default_factory=dict)
    verify_fraction: float = 1.0
    records: str = "records.csv"
    summary: str = "summary.json"
    timings: str | None = "timings.csv"
    drawings: str | None = None

    @classmethod
    def from_dict(cls, doc: dict) -> "ExperimentConfig":
        if not isinstance(doc, dict):
            raise ConfigError("config must be a JSON object")
        unknown = set(doc) - {"family", "sizes", "algorithm", "trials", "seed", "params",
                              "verify_fraction", "output"}
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        family = doc.get("family")
        if not isinstance(family, dict) or "kind" not in family:
            raise ConfigError("'family' must be an object with a 'kind'")
        sizes = doc.get("sizes")
        if (not isinstance(sizes, list) or not sizes
                or not all(isinstance(s, int) and s > 0 for s in sizes)):
            raise ConfigError("'sizes' must be a nonempty list of positive integers")
        if any(b <= a for a, b in zip(sizes, sizes[1:])):
            raise ConfigError("'sizes' must be strictly increasing")
        alg = _ALGORITHMS.get(doc.get("algorithm", "blowup-greedy"))
        if alg is None:
            raise ConfigError(f"'algorithm' must be one of {MODES}")
        trials = doc.get("trials", 1)
        if not isinstance(trials, int) or trials < 1:
            raise ConfigError("'trials' must be an integer >= 1")
        seed = doc.get("seed", 0)
        if not isinstance(seed, int) or seed < 0:
            raise ConfigError("'seed' must be a nonnegative integer")
        params = doc.get("params", {})
        if not isinstance(params, dict) or set(params) - set(_PARAM_KEYS):
            raise ConfigError(f"'params' keys must be among {sorted(_PARAM_KEYS)}")
        frac = doc.get("verify_fraction", 1.0)
        if not isinstance(frac, (int, float)) or not 0 <= frac <= 1:
            raise ConfigError("'verify_fraction' must be in [0, 1]")
        out = doc.get("output", {})
        if not isinstance(out, dict) or set(out) - {"records", "summary", "timings", "drawings"}:
            raise ConfigError("'output' keys must be among records, summary, timings, drawings")
        cfg = cls(family=dict(family), sizes=list(sizes), algorithm=alg, trials=trials,
                  seed=seed, params=dict(params), verify_fraction=float(frac),
                  records=out.get("records", "records.csv"),
                  summary=out.get("summary", "summary.json"),
                  timings=out.get("timings", "timings.csv"),
                  drawings=out.get("drawings"))
        cfg.drawing_params(0)  # surface bad parameter values now
        return cfg

    def family_kwargs(self) -> dict:
        kw = {k: v for k, v in self.family.items() if k != "kind"}
        bad = set(kw) - {"d", "D", "a", "b"}
        if bad:
            raise ConfigError(f"unknown family parameters: {sorted(bad)}")
        return kw

    def check_feasible(self) -> None:
        """Raise InfeasibleParameters before any trial runs."""
        kw = self.family_kwargs()
        for n in self.sizes:
            try:
                check_family(self.family["kind"], n, d=kw.get("d", 3), D=kw.get("D", 2))
            except ValueError as exc:
                raise InfeasibleParameters(f"size {n}: {exc}") from None

    def drawing_params(self, seed: int) -> DrawingParams:
        try:
            return DrawingParams(seed=seed, **{_PARAM_KEYS[k]: v for k, v in self.params.items()})
        except (TypeError, InfeasibleParameters) as exc:
            raise ConfigError(f"bad drawing params: {exc}") from None


def load_config(path: str | Path) -> ExperimentConfig:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON in {path}: {exc}") from None
    return ExperimentConfig.from_dict(doc)


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return "inf" if math.isinf(x) else f"{x:.6f}"
    return str(x)


def run_trial(cfg: ExperimentConfig, size_index: int, trial: int, drawings_dir: str | None = None):
    """Run one (size, trial) cell; returns (record dict, elapsed_ms)."""
    n = cfg.sizes[size_index]
    index = size_index * cfg.trials + trial
    seed = trial_seed(cfg.seed, index)
    g = generate_family(cfg.family["kind"], n, seed=seed, **cfg.family_kwargs())
    D = degeneracy_ordering(g).D
    K = max(g.k, g.n)
    rec = {"size": n, "trial": trial, "seed": seed, "n": g.n, "k": g.k, "D": D,
           "success": False, "escalated": None, "m": None, "t": None, "attempts": None,
           "volume": None, "aspect_ratio": None, "ratio": None, "verified": None}
    t0 = time.perf_counter()
    try:
        res = draw(g, cfg.drawing_params(seed), cfg.algorithm)
    except BudgetExhausted as exc:
        last = exc.stats[-1] if exc.stats else None
        rec.update(attempts=sum(s.attempts for s in exc.stats), escalated=len(exc.stats) > 1,
                   m=last.m if last else None, t=last.t if last else None)
        return rec, (time.perf_counter() - t0) * 1e3
    elapsed = (time.perf_counter() - t0) * 1e3
    m = res.m
    rec.update(success=True, escalated=res.escalated, m=m, t=res.t, attempts=res.attempts,
               volume=m**3)
    if D > 0 and g.n > 1:
        rec["ratio"] = m**3 / (D * K * math.log(g.n))
    text = embedding_to_json(res.embedding, g)
    if drawings_dir is not None:
        path = Path(drawings_dir) / f"n{n}_t{trial}.json"
        path.write_text(text, encoding="utf-8")
        text = path.read_text(encoding="utf-8")
    emb, _ = embedding_from_json(text)
    verdict = verify_drawing(g, emb) if _should_verify(cfg, index) else None
    rec["aspect_ratio"] = drawing_stats(emb, g).aspect_ratio
    rec["verified"] = None if verdict is None else verdict.valid
    return rec, elapsed


def _should_verify(cfg: ExperimentConfig, index: int) -> bool:
    if cfg.verify_fraction >= 1:
        return True
    return (splitmix64(cfg.seed ^ (index << 1) ^ 1) % 1_000_000) < cfg.verify_fraction * 1_000_000


def _run_cell(job):
    return run_trial(*job)


def worker_count() -> int:
    cap = os.environ.get("GRIDWEAVE_THREADS")
    n = os.cpu_count() or 1
    if cap:
        try:
            n = min(n, max(1, int(cap)))
        except ValueError:
            pass
    return n


def run_experiment(cfg: ExperimentConfig, base_dir: str | Path = ".", workers: int | None = None) -> dict:
    """Run every trial, write the output files under ``base_dir``, return the summary."""
    cfg.check_feasible()
    base = Path(base_dir)
    base.mkdir(parents=True, exist_ok=True)
    drawings_dir = None
    if cfg.drawings:
        drawings_dir = str(base / cfg.drawings)
        Path(drawings_dir).mkdir(parents=True, exist_ok=True)
    jobs = [(cfg, si, tr, drawings_dir) for si in range(len(cfg.sizes)) for tr in range(cfg.trials)]
    workers = workers or worker_count()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_cell, jobs))
    else:
        results = [_run_cell(j) for j in jobs]

    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(RECORD_FIELDS)
    for rec, _ in results:
        w.writerow([_fmt(rec[f]) for f in RECORD_FIELDS])
    (base / cfg.records).write_text(buf.getvalue(), encoding="utf-8", newline="")
    if cfg.timings:
        tbuf = io.StringIO()
        tw = csv.writer(tbuf, lineterminator="\r\n")
        tw.writerow(TIMING_FIELDS)
        for rec, ms in results:
            tw.writerow([rec["size"], rec["trial"], f"{ms:.3f}"])
        (base / cfg.timings).write_text(tbuf.getvalue(), encoding="utf-8", newline="")

    summary = summarize(cfg, [r for r, _ in results])
    (base / cfg.summary).write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return summary


def summarize(cfg: ExperimentConfig, records: list[dict]) -> dict:
    per_size = []
    for n in cfg.sizes:
        rows = [r for r in records if r["size"] == n]
        ok = [r for r in rows if r["success"]]
        ratios = [r["ratio"] for r in ok if r["ratio"] is not None]
        aspects = [r["aspect_ratio"] for r in ok if r["aspect_ratio"] is not None]
        per_size.append({
            "size": n,
            "trials": len(rows),
            "successes": len(ok),
            "success_rate": round(len(ok) / len(rows), 6),
            "first_level_successes": sum(1 for r in ok if not r["escalated"]),
            "max_ratio": round(max(ratios), 6) if ratios else None,
            "max_aspect_ratio": round(max(aspects), 6) if aspects else None,
            "verified": sum(1 for r in ok if r["verified"]),
            "verify_failures": sum(1 for r in ok if r["verified"] is False),
        })
    return {
        "algorithm": cfg.algorithm,
        "family": cfg.family,
        "master_seed": cfg.seed,
        "params": cfg.params,
        "trials": cfg.trials,
        "sizes": per_size,
        "overall_success_rate": round(sum(r["success"] for r in records) / len(records), 6),
        "max_ratio": max((s["max_ratio"] for s in per_size if s["max_ratio"] is not None), default=None),
    }
