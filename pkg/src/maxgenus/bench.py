"""Benchmark harness: generate, run the pipeline, fit scaling slopes.

A benchmark config is a ``key = value`` text file (``#`` comments):

    family      = random        # any generator family
    sizes       = 64,128,256    # generator size parameter per run
    edge_factor = 2.0           # random family: m = round(factor * n)
    seeds       = 0,1,2
    backends    = dfs,dynamic
    policies    = edge-id
    preprocess  = true
    jobs        = 1

Every (size, seed, backend, policy) combination becomes one job.  Jobs
are independent processes when ``jobs > 1``.  Slopes are least-squares
fits on log-log (edge count vs mean elapsed time / connectivity tests).
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, replace

from .generators import FAMILIES, GeneratorSpec
from .graph import GraphError, MultiGraph
from .greedy import GenusBounds, PairSet, greedy_max_genus
from .preprocess import merge_pairs, reduce_multiedges
from .report import InstanceInfo, RunConfig, RunReport


# ---------------------------------------------------------------------------
# Pipeline shared with the CLI
# ---------------------------------------------------------------------------

@dataclass
class PipelineOutcome:
    report: RunReport
    pairs: PairSet
    bounds: GenusBounds
    residual: MultiGraph


def run_pipeline(
    g: MultiGraph,
    *,
    label: str = "input",
    backend: str = "dfs",
    policy: str = "edge-id",
    seed: int = 0,
    preprocess: bool = True,
) -> PipelineOutcome:
    """Preprocess, run the greedy, merge certificates, build a report.

    Bounds are stated for the input graph: the merged family is maximal
    on it, so ``gamma_max <= min(2k, floor(beta / 2))`` with k the merged
    family size.
    """
    t0 = time.perf_counter()
    pre_ops = 0
    if preprocess:
        pre = reduce_multiedges(g)
        work, pre_pairs, pre_ops = pre.reduced, pre.pairs, pre.ops
    else:
        work, pre_pairs = g, PairSet()
    res = greedy_max_genus(work, backend=backend, policy=policy, seed=seed)
    merged = merge_pairs(pre_pairs, res.pairs)
    elapsed = time.perf_counter() - t0

    st = res.stats
    be = res.backend_stats
    assert be.queries == st.tests, "one connectivity probe per tested pair"
    assert st.tests <= st.candidate_pairs
    stats = dict(asdict(st))
    stats.update({f"backend_{k}": v for k, v in asdict(be).items()})
    stats["preprocess_ops"] = pre_ops

    beta = g.n_edges - g.n_vertices + 1
    bounds = GenusBounds.from_pairs(len(merged.pairs), beta)
    report = RunReport(
        instance=InstanceInfo(label, g.n_vertices, g.n_edges, beta),
        config=RunConfig(backend, policy, seed, preprocess),
        lower=bounds.lower,
        upper=bounds.upper,
        pairs=[[p.e, p.f, p.witness] for p in merged.pairs],
        preprocess_pairs=len(pre_pairs.pairs),
        elapsed_s=elapsed,
        stats=stats,
    )
    return PipelineOutcome(report, merged, bounds, res.residual)


# ---------------------------------------------------------------------------
# Config
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BenchConfig:
    family: str = "random"
    sizes: tuple[int, ...] = (64, 128, 256)
    edge_factor: float = 2.0
    seeds: tuple[int, ...] = (0,)
    backends: tuple[str, ...] = ("dfs", "dynamic")
    policies: tuple[str, ...] = ("edge-id",)
    preprocess: bool = True
    loop_prob: float = 0.15
    parallel_prob: float = 0.15
    jobs: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise GraphError(f"unknown family {self.family!r}")
        if not self.sizes:
            raise GraphError("sizes must be non-empty")

    @classmethod
    def parse(cls, text: str) -> "BenchConfig":
        fields = {
            "family": str,
            "sizes": "ints",
            "edge_factor": float,
            "seeds": "ints",
            "backends": "strs",
            "policies": "strs",
            "preprocess": "bool",
            "loop_prob": float,
            "parallel_prob": float,
            "jobs": int,
        }
        out: dict = {}
        for no, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            key, value = key.strip(), value.strip()
            if not sep or key not in fields:
                raise GraphError(f"config line {no}: unknown entry {raw!r}")
            kind = fields[key]
            if kind == "ints":
                out[key] = tuple(int(t) for t in value.split(","))
            elif kind == "strs":
                out[key] = tuple(t.strip() for t in value.split(","))
            elif kind == "bool":
                if value not in ("true", "false"):
                    raise GraphError(f"config line {no}: expected true/false")
                out[key] = value == "true"
            else:
                out[key] = kind(value)
        return cls(**out)


def _spec_for(cfg: BenchConfig, size: int, seed: int) -> GeneratorSpec:
    base = GeneratorSpec(family=cfg.family, seed=seed,
                         loop_prob=cfg.loop_prob,
                         parallel_prob=cfg.parallel_prob)
    if cfg.family == "random":
        return replace(base, n=size, m=max(size, round(cfg.edge_factor * size)))
    if cfg.family in ("bouquet", "dipole"):
        return replace(base, k=size)
    return replace(base, n=size)


def _run_job(args: tuple) -> RunReport:
    cfg_fields, size, seed, backend, policy = args
    cfg = BenchConfig(**cfg_fields)
    g = _spec_for(cfg, size, seed).build()
    label = f"{cfg.family}-{size}-s{seed}"
    return run_pipeline(
        g, label=label, backend=backend, policy=policy, seed=seed,
        preprocess=cfg.preprocess,
    ).report


def run_bench(cfg: BenchConfig, *, jobs: int | None = None) -> list[RunReport]:
    jobs = cfg.jobs if jobs is None else jobs
    cfg_fields = asdict(cfg)
    arglist = [
        (cfg_fields, size, seed, backend, policy)
        for size in cfg.sizes
        for seed in cfg.seeds
        for backend in cfg.backends
        for policy in cfg.policies
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_job, arglist))
    return [_run_job(a) for a in arglist]


# ---------------------------------------------------------------------------
# Aggregation
# ---------------------------------------------------------------------------

def fit_loglog_slope(points: list[tuple[float, float]]) -> float:
    """Least-squares slope of log(y) against log(x).

    Needs at least two distinct x values; y is clamped away from zero so
    timer underflow cannot poison the fit.
    """
    if len({x for x, _ in points}) < 2:
        raise GraphError("slope fit needs at least two distinct sizes")
    lx = [math.log(x) for x, _ in points]
    ly = [math.log(max(y, 1e-9)) for _, y in points]
    n = len(points)
    mx = sum(lx) / n
    my = sum(ly) / n
    num = sum((a - mx) * (b - my) for a, b in zip(lx, ly))
    den = sum((a - mx) ** 2 for a in lx)
    return num / den


@dataclass(frozen=True)
class BenchSummary:
    """Per (backend, policy): rows of (n, m, mean elapsed, mean tests)
    sorted by m, plus log-log slopes of both quantities against m."""

    rows: dict[tuple[str, str], list[tuple[int, int, float, float]]]
    elapsed_slopes: dict[tuple[str, str], float]
    test_slopes: dict[tuple[str, str], float]


def summarize(reports: list[RunReport]) -> BenchSummary:
    groups: dict[tuple[str, str], dict[tuple[int, int], list[RunReport]]] = {}
    for r in reports:
        key = (r.config.backend, r.config.policy)
        size_key = (r.instance.n_vertices, r.instance.n_edges)
        groups.setdefault(key, {}).setdefault(size_key, []).append(r)
    rows: dict[tuple[str, str], list[tuple[int, int, float, float]]] = {}
    elapsed_slopes: dict[tuple[str, str], float] = {}
    test_slopes: dict[tuple[str, str], float] = {}
    for key, by_size in groups.items():
        table = []
        for (n, m), rs in sorted(by_size.items(), key=lambda kv: kv[0][1]):
            mean_t = sum(r.elapsed_s for r in rs) / len(rs)
            mean_q = sum(r.stats["tests"] for r in rs) / len(rs)
            table.append((n, m, mean_t, mean_q))
        rows[key] = table
        if len({m for _, m, _, _ in table}) >= 2:
            elapsed_slopes[key] = fit_loglog_slope(
                [(m, t) for _, m, t, _ in table])
            test_slopes[key] = fit_loglog_slope(
                [(m, q) for _, m, _, q in table])
    return BenchSummary(rows, elapsed_slopes, test_slopes)


def format_summary(summary: BenchSummary) -> str:
    lines = []
    for key in sorted(summary.rows):
        backend, policy = key
        lines.append(f"backend={backend} policy={policy}")
        lines.append(f"  {'n':>8} {'m':>8} {'elapsed_s':>12} {'tests':>10}")
        for n, m, t, q in summary.rows[key]:
            lines.append(f"  {n:>8} {m:>8} {t:>12.4f} {q:>10.0f}")
        if key in summary.elapsed_slopes:
            lines.append(
                f"  slope(elapsed~m)={summary.elapsed_slopes[key]:.2f} "
                f"slope(tests~m)={summary.test_slopes[key]:.2f}"
            )
    return "\n".join(lines)
