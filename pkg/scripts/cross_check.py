#!/usr/bin/env python3
"""Run the full cross-check battery on every graph in a small built-in
suite, or on a graph supplied as JSON.  Exits nonzero on any failure."""

import argparse
import sys

from raag.graph import (Graph, complete_graph, cycle_graph, empty_graph,
                        path_graph)
from raag.verify import verify_all


def builtin_suite():
    return {
        "K3": complete_graph(3),
        "E3": empty_graph(3),
        "P3": path_graph(3),
        "C4": cycle_graph(4),
        "C5": cycle_graph(5),
    }


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("graph", nargs="?", default=None,
                    help="optional path to a graph JSON file")
    ap.add_argument("--p", type=int, default=3)
    args = ap.parse_args()

    if args.graph:
        with open(args.graph) as fh:
            graphs = {args.graph: Graph.from_json(fh.read())}
    else:
        graphs = builtin_suite()

    failures = 0
    for name, g in graphs.items():
        for check in verify_all(g, p=args.p):
            status = "ok" if check.ok else "FAIL"
            print(f"[{name}] {check.name}: {status}")
            if not check.ok:
                print(f"        {check.detail}")
                failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
