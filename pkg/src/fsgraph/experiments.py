"""Seeded Monte Carlo sweeps and the edge-addition hitting-time process.

Sampling is coupled across the p grid: trial ``t`` draws one uniform per
candidate edge (per graph) from the stream keyed by ``(seed, t)`` and every
grid value thresholds the same draws.  A larger ``p`` therefore always gives
supergraphs, so connectivity fractions rise and isolated-vertex fractions fall
exactly, not just on average.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import asdict, dataclass, fields
from itertools import combinations
from pathlib import Path
from typing import Sequence, Union

from .fs import MAX_EXACT_N, CapExceededError, components
from .graph import eligible_pairs, graph_from_uniforms, make_graph, rng_for

MODES = {"gnp": "gnp", "bipartite": "bipartite_gnp"}


@dataclass(frozen=True)
class SweepConfig:
    mode: str
    size: int
    p_grid: tuple[float, ...]
    trials: int
    seed: int
    cap: int = 10
    timing: bool = True

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {sorted(MODES)}")
        if self.size < 1 or self.trials < 1:
            raise ValueError("size and trials must be >= 1")
        if not self.p_grid or any(not 0.0 <= p <= 1.0 for p in self.p_grid):
            raise ValueError("p values must lie in [0, 1]")
        if self.cap > MAX_EXACT_N:
            raise CapExceededError(f"cap {self.cap} above {MAX_EXACT_N}")
        if self.n > self.cap:
            raise CapExceededError(f"{self.n} vertices exceed the exact-analysis cap {self.cap}")

    @property
    def n(self) -> int:
        return self.size if self.mode == "gnp" else 2 * self.size


@dataclass(frozen=True)
class ExperimentRecord:
    mode: str
    size: int
    p: float
    trials: int
    seed: int
    frac_connected: float
    frac_isolated_exists: float
    frac_exactly_two: float
    mean_components: float
    wall_ms: int


CSV_COLUMNS = tuple(f.name for f in fields(ExperimentRecord))


def _sweep(c: SweepConfig) -> list[ExperimentRecord]:
    kind = MODES[c.mode]
    npairs = len(eligible_pairs(kind, c.size))
    k = len(c.p_grid)
    conn = [0] * k
    iso = [0] * k
    two = [0] * k
    comp = [0] * k
    spent = [0.0] * k
    for t in range(c.trials):
        rng = rng_for(c.seed, t)
        ux = rng.random(npairs)
        uy = rng.random(npairs)
        for i, p in enumerate(c.p_grid):
            start = time.perf_counter()
            x = graph_from_uniforms(kind, c.size, ux, p)
            y = graph_from_uniforms(kind, c.size, uy, p)
            s = components(x, y, cap=c.cap)
            conn[i] += s.component_count == 1
            iso[i] += s.isolated_count > 0
            two[i] += s.component_count == 2
            comp[i] += s.component_count
            spent[i] += time.perf_counter() - start
    n = c.trials
    return [
        ExperimentRecord(
            c.mode, c.size, p, n, c.seed,
            conn[i] / n, iso[i] / n, two[i] / n, comp[i] / n,
            round(spent[i] * 1000) if c.timing else 0,
        )
        for i, p in enumerate(c.p_grid)
    ]


def run_sweep(c: SweepConfig) -> list[ExperimentRecord]:
    """One record per grid value for pairs drawn from G(n, p)."""
    if c.mode != "gnp":
        raise ValueError("run_sweep expects mode 'gnp'; use run_bipartite_sweep")
    return _sweep(c)


def run_bipartite_sweep(c: SweepConfig) -> list[ExperimentRecord]:
    """Same as ``run_sweep`` over edge-subgraphs of K_{r,r}."""
    if c.mode != "bipartite":
        raise ValueError("run_bipartite_sweep expects mode 'bipartite'")
    return _sweep(c)


def p_grid(spec: str) -> tuple[float, ...]:
    """``"a:b:step"`` inclusive of ``b`` (up to rounding), or a comma list."""
    if ":" in spec:
        a, b, step = (float(s) for s in spec.split(":"))
        if step <= 0:
            raise ValueError("step must be positive")
        count = int(round((b - a) / step)) + 1
        return tuple(round(a + i * step, 10) for i in range(count))
    return tuple(float(s) for s in spec.split(","))


# -- hitting times -----------------------------------------------------------


@dataclass(frozen=True)
class HittingTimeRecord:
    n: int
    seed: int
    trial: int
    t_iso: int
    t_conn: int


def hitting_time_trial(n: int, seed: int, trial: int = 0, cap: int = 10) -> HittingTimeRecord:
    """Grow X and Y from empty, one new random edge each per step.

    Both graphs follow independent uniformly random orders of all pairs.
    Returns the first steps at which FS(X_t, Y_t) has no isolated vertex and
    at which it is connected.
    """
    if n < 2:
        raise ValueError("hitting times need n >= 2")
    if n > min(cap, MAX_EXACT_N):
        raise CapExceededError(f"n={n} exceeds the cap {cap}")
    pairs = list(combinations(range(n), 2))
    ox = rng_for(seed, trial, 0).permutation(len(pairs))
    oy = rng_for(seed, trial, 1).permutation(len(pairs))
    t_iso = None
    for t in range(len(pairs) + 1):
        x = make_graph(n, [pairs[i] for i in ox[:t]])
        y = make_graph(n, [pairs[i] for i in oy[:t]])
        s = components(x, y, cap=cap)
        if t_iso is None and s.isolated_count == 0:
            t_iso = t
        if s.component_count == 1:
            assert t_iso is not None
            return HittingTimeRecord(n, seed, trial, t_iso, t)
    raise AssertionError("complete graphs always give a connected FS graph")


def run_hitting(n: int, trials: int, seed: int, cap: int = 10) -> list[HittingTimeRecord]:
    return [hitting_time_trial(n, seed, t, cap) for t in range(trials)]


# -- reports -----------------------------------------------------------------

Record = Union[ExperimentRecord, HittingTimeRecord]


def to_csv(records: Sequence[Record]) -> str:
    if not records:
        raise ValueError("no records to write")
    cols = [f.name for f in fields(records[0])]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for r in records:
        d = asdict(r)
        w.writerow([d[c] for c in cols])
    return buf.getvalue()


def to_svg(records: Sequence[ExperimentRecord], width: int = 480, height: int = 320) -> str:
    """Line plot of ``frac_connected`` (solid) and ``frac_isolated_exists`` (dashed) against p."""
    if not records:
        raise ValueError("no records to plot")
    pad = 40
    pts = sorted(records, key=lambda r: r.p)

    def sx(p: float) -> float:
        return pad + p * (width - 2 * pad)

    def sy(f: float) -> float:
        return height - pad - f * (height - 2 * pad)

    def line(attr: str) -> str:
        return " ".join(f"{sx(r.p):.1f},{sy(getattr(r, attr)):.1f}" for r in pts)

    r0 = pts[0]
    title = f"{r0.mode} size={r0.size} trials={r0.trials} seed={r0.seed}"
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        '<rect width="100%" height="100%" fill="white"/>',
        f'<line x1="{pad}" y1="{height - pad}" x2="{width - pad}" y2="{height - pad}" stroke="black"/>',
        f'<line x1="{pad}" y1="{pad}" x2="{pad}" y2="{height - pad}" stroke="black"/>',
        f'<text x="{width / 2:.0f}" y="{height - 8}" text-anchor="middle" font-size="12">p</text>',
        f'<text x="{width / 2:.0f}" y="20" text-anchor="middle" font-size="12">{title}</text>',
        f'<text x="{pad - 6}" y="{sy(1.0) + 4:.1f}" text-anchor="end" font-size="10">1</text>',
        f'<text x="{pad - 6}" y="{sy(0.0) + 4:.1f}" text-anchor="end" font-size="10">0</text>',
        f'<polyline fill="none" stroke="#1f77b4" stroke-width="2" points="{line("frac_connected")}"/>',
        f'<polyline fill="none" stroke="#d62728" stroke-width="2" stroke-dasharray="5,3" points="{line("frac_isolated_exists")}"/>',
        "</svg>",
    ]
    return "\n".join(parts) + "\n"


def emit_report(records: Sequence[Record], fmt: str, path: Union[str, Path]) -> Path:
    if fmt == "csv":
        text = to_csv(records)
    elif fmt == "svg":
        text = to_svg(records)  # type: ignore[arg-type]
    else:
        raise ValueError(f"unknown report format {fmt!r}")
    out = Path(path)
    out.write_text(text)
    return out
