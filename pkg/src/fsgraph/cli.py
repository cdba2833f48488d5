"""Command line entry point ``fs``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import constructions, embedding, exchanger, experiments, fs, gadget, io, wilson
from .perm import format_perm, identity, parse_perm


def _sigma(text: Optional[str], n: int):
    b = identity(n) if text is None else parse_perm(text)
    if len(b) != n:
        raise SystemExit(f"--sigma has {len(b)} entries, graphs have {n} vertices")
    return b


def cmd_analyze(a: argparse.Namespace) -> int:
    x, y = io.read_graph(a.x), io.read_graph(a.y)
    did = False
    if a.components:
        print(fs.components(x, y, cap=a.cap).format())
        did = True
    if a.isolated:
        res = fs.find_isolated_vertex(x, y, budget=a.budget)
        if res.found:
            print(f"isolated {format_perm(res.bijection)}")
        else:
            print("isolated none" + (" (exhaustive)" if res.exhaustive else " (budget exhausted)"))
        did = True
    if a.exchange:
        u, v = a.exchange
        moves = fs.exchangeable(x, y, _sigma(a.sigma, x.n), u, v, cap=a.cap)
        print("exchange none" if moves is None else f"exchange {fs.format_sequence(moves)}")
        did = True
    if not did:
        print(fs.components(x, y, cap=a.cap).format())
    return 0


def cmd_classify(a: argparse.Namespace) -> int:
    print(wilson.classify(io.read_graph(a.y)).status)
    return 0


def _write_manifest(out: Path, lines: list[str]) -> None:
    (out / "manifest.txt").write_text("\n".join(lines) + "\n")


def cmd_construct(a: argparse.Namespace) -> int:
    out = Path(a.out)
    out.mkdir(parents=True, exist_ok=True)
    if a.family == "five-block":
        c = constructions.build_lower_bound_pair(a.n)
        cert = constructions.certify_block_disconnected(c)
        graphs = {"x": c.x, "y": c.y}
        lines = [f"family five-block", f"n {a.n}"] + [f"block {name} {' '.join(map(str, vs))}" for name, vs in c.blocks]
        lines += [f"x_block_pairs {sorted(cert.x_pairs)}", f"y_block_pairs {sorted(cert.y_pairs)}"]
    elif a.family == "bipartite-four-block":
        c, s0 = constructions.build_bipartite_lower_bound(a.n)
        graphs = {"x": c.x, "y": c.y}
        lines = [f"family bipartite-four-block", f"r {a.n}", f"sigma0 {format_perm(s0)}"]
        lines += [f"block {name} {' '.join(map(str, vs))}" for name, vs in c.blocks]
    elif a.family == "large-gadget":
        m = a.n if a.n else gadget.smallest_feasible_m()
        lay = gadget.build_large_gadget(m)
        graphs = {"g_star": lay.g_star, "h_star": lay.h_star, "g_2star": lay.g_2star, "h_2star": lay.h_2star}
        lines = [f"family large-gadget", f"m {lay.m}", f"ell {lay.ell}", f"w {lay.w}"]
        lines += [f"x{i} {lay.x(i)}" for i in range(1, lay.ell + 1)]
        lines += [f"y{j} {lay.y(j)}" for j in range(1, lay.ell + 1)]
        lines += [f"z{k} {lay.z(k)}" for k in range(1, 13)]
        lines += [f"extra {lay.m} {lay.m + 1}", f"cycle_order {' '.join(map(str, lay.order))}"]
    else:
        seqs = constructions.builtin_bipartite_gadget_sequences()
        if not 1 <= a.n <= len(seqs):
            raise SystemExit(f"sequence-gadget takes --n 1..{len(seqs)}")
        moves = seqs[a.n - 1]
        d = constructions.derive_gadget_from_sequence(moves, constructions.GADGET_SIZE, *constructions.GADGET_PAIR)
        graphs = {"g": d.g, "h": d.h}
        lines = [f"family sequence-gadget", f"index {a.n}", f"moves {fs.format_sequence(moves)}"]
        lines += [f"g_coloring {d.g_coloring}", f"h_coloring {d.h_coloring}"]
    for name, g in graphs.items():
        io.write_graph(g, out / f"{name}.txt")
    _write_manifest(out, lines)
    print(f"wrote {', '.join(sorted(graphs))} and manifest to {out}")
    return 0


def cmd_exchange(a: argparse.Namespace) -> int:
    x, y = io.read_graph(a.x), io.read_graph(a.y)
    b = _sigma(a.sigma, x.n)
    if a.strategy == "bip62":
        res = exchanger.bipartite_min_degree_exchange(x, y, b, a.u, a.v)
    elif a.strategy == "bfs":
        moves = fs.exchangeable(x, y, b, a.u, a.v, cap=a.cap)
        res = exchanger.NoExchange("certified by BFS: no exchanging sequence exists") if moves is None else \
            exchanger.ExchangeResult(tuple(moves), exchanger.BFS_FALLBACK, {"moves": len(moves)})
    else:
        res = exchanger.exchange_ladder(x, y, b, a.u, a.v, cap=a.cap)
    if not res:
        print(f"none {res.reason}")
        return 1
    print(fs.format_sequence(res.sequence))
    print(f"strategy {res.strategy}")
    return 0


def _parse_sets(text: str) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(t) for t in part.split(",") if t.strip()) for part in text.split(";"))


def cmd_embed(a: argparse.Namespace) -> int:
    g, h, x, y = (io.read_graph(p) for p in (a.g, a.h, a.x, a.y))
    inst = embedding.EmbedInstance(g, h, x, y, _sigma(a.sigma, x.n), _parse_sets(a.sets))
    wit = embedding.find_embedding(inst)
    print("none" if wit is None else " ".join(map(str, wit)))
    return 0


def cmd_montecarlo(a: argparse.Namespace) -> int:
    mode = "bipartite" if a.mode == "bip" else "gnp"
    cfg = experiments.SweepConfig(mode, a.size, experiments.p_grid(a.pgrid), a.trials, a.seed, cap=a.cap, timing=not a.no_timing)
    recs = experiments.run_sweep(cfg) if mode == "gnp" else experiments.run_bipartite_sweep(cfg)
    experiments.emit_report(recs, "csv", a.out)
    if a.svg:
        experiments.emit_report(recs, "svg", a.svg)
    sys.stdout.write(experiments.to_csv(recs))
    return 0


def cmd_hitting(a: argparse.Namespace) -> int:
    recs = experiments.run_hitting(a.n, a.trials, a.seed, cap=a.cap)
    experiments.emit_report(recs, "csv", a.out)
    gaps = [r.t_conn - r.t_iso for r in recs]
    print(f"trials {len(recs)} equal {sum(g == 0 for g in gaps)} max_gap {max(gaps)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fs", description="Friends-and-strangers graphs: analysis, constructions, experiments.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("analyze", help="exact component structure, isolated vertices, exchanges")
    s.add_argument("--x", required=True)
    s.add_argument("--y", required=True)
    s.add_argument("--components", action="store_true")
    s.add_argument("--isolated", action="store_true")
    s.add_argument("--exchange", nargs=2, type=int, metavar=("U", "V"))
    s.add_argument("--sigma", help="comma-separated images, default identity")
    s.add_argument("--cap", type=int, default=fs.DEFAULT_CAP)
    s.add_argument("--budget", type=int, default=10**7)
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("classify", help="print the classification token of a graph")
    s.add_argument("--y", required=True)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("construct", help="write a named construction as edge lists")
    s.add_argument("--family", required=True, choices=["five-block", "bipartite-four-block", "large-gadget", "sequence-gadget"])
    s.add_argument("--n", type=int, default=0, help="n, r, m (0 = smallest feasible) or sequence index 1..4")
    s.add_argument("--out", default=".")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("exchange", help="find moves trading two labels")
    s.add_argument("--x", required=True)
    s.add_argument("--y", required=True)
    s.add_argument("--sigma")
    s.add_argument("--u", type=int, required=True)
    s.add_argument("--v", type=int, required=True)
    s.add_argument("--strategy", choices=["auto", "bip62", "bfs"], default="auto")
    s.add_argument("--cap", type=int, default=fs.DEFAULT_CAP)
    s.set_defaults(func=cmd_exchange)

    s = sub.add_parser("embed", help="search for an embedding witness")
    for name in ("g", "h", "x", "y"):
        s.add_argument(f"--{name}", required=True)
    s.add_argument("--sigma")
    s.add_argument("--sets", required=True, help="semicolon-separated comma lists, one per pattern vertex")
    s.set_defaults(func=cmd_embed)

    s = sub.add_parser("montecarlo", help="coupled p-grid sweep")
    s.add_argument("--mode", choices=["gnp", "bip"], default="gnp")
    s.add_argument("--size", type=int, required=True)
    s.add_argument("--pgrid", default="0.1:0.9:0.1")
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--cap", type=int, default=10)
    s.add_argument("--out", required=True)
    s.add_argument("--svg")
    s.add_argument("--no-timing", action="store_true", help="write wall_ms as 0 so reruns are byte-identical")
    s.set_defaults(func=cmd_montecarlo)

    s = sub.add_parser("hitting", help="hitting times of the edge-addition process")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--trials", type=int, default=50)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--cap", type=int, default=10)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_hitting)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
