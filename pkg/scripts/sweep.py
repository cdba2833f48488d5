"""Coupled p-grid sweep over G(n, p) or bipartite pairs, written as CSV and SVG."""

import argparse
from pathlib import Path

from fsgraph.experiments import SweepConfig, emit_report, p_grid, run_bipartite_sweep, run_sweep


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--mode", choices=["gnp", "bipartite"], default="gnp")
    ap.add_argument("--sizes", default="5,6,7,8")
    ap.add_argument("--pgrid", default="0.1:0.9:0.1")
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=2024)
    ap.add_argument("--out", default="results")
    a = ap.parse_args()
    out = Path(a.out)
    out.mkdir(parents=True, exist_ok=True)
    for size in (int(s) for s in a.sizes.split(",")):
        cfg = SweepConfig(a.mode, size, p_grid(a.pgrid), a.trials, a.seed)
        recs = run_sweep(cfg) if a.mode == "gnp" else run_bipartite_sweep(cfg)
        stem = out / f"sweep_{a.mode}_{size}"
        emit_report(recs, "csv", stem.with_suffix(".csv"))
        emit_report(recs, "svg", stem.with_suffix(".svg"))
        print(stem, " ".join(f"{r.p}:{r.frac_connected:.3f}" for r in recs))


if __name__ == "__main__":
    main()
