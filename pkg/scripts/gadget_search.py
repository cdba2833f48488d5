"""Scan m for feasible large-gadget layouts and report why the others fail."""

import argparse

from fsgraph.gadget import InfeasibleLayout, build_large_gadget
from fsgraph.wilson import classify


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--start", type=int, default=36)
    ap.add_argument("--stop", type=int, default=600)
    ap.add_argument("--count", type=int, default=3, help="stop after this many feasible m")
    ap.add_argument("--verbose", action="store_true")
    a = ap.parse_args()
    found = 0
    for m in range(a.start, a.stop):
        try:
            lay = build_large_gadget(m)
        except InfeasibleLayout as exc:
            if a.verbose:
                print(exc)
            continue
        g3, _ = lay.g_3star()
        print(f"m={m} ell={lay.ell} g2star={classify(lay.g_2star).status} g3star={classify(g3).status}")
        found += 1
        if found == a.count:
            break


if __name__ == "__main__":
    main()
