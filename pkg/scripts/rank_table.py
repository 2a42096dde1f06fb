#!/usr/bin/env python3
"""Tabulate graded Lie algebra ranks for a graph by both independent
routes (bracket spans and series recursion) and report any disagreement."""

import argparse
import sys

from raag.graph import Graph
from raag.lie import (bracket_span_rank, lambda_dims, restricted_span_rank,
                      series_rank_lcs, series_rank_restricted)
from raag.series import Q


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("graph", help="path to a graph JSON file")
    ap.add_argument("--upto", type=int, default=5)
    ap.add_argument("--p", type=int, default=3)
    args = ap.parse_args()

    with open(args.graph) as fh:
        g = Graph.from_json(fh.read())
    upto, p = args.upto, args.p

    lcs_series = series_rank_lcs(g, upto).values
    lcs_spans = tuple(bracket_span_rank(g, n, Q) for n in range(1, upto + 1))
    res_series = series_rank_restricted(g, p, upto).values
    res_spans = tuple(restricted_span_rank(g, n, p) for n in range(1, upto + 1))

    print(f"{'n':>3} {'b_n (series)':>13} {'b_n (span)':>11} "
          f"{f'd_n p={p} (series)':>17} {f'd_n p={p} (span)':>15}")
    for n in range(1, upto + 1):
        print(f"{n:>3} {lcs_series[n-1]:>13} {lcs_spans[n-1]:>11} "
              f"{res_series[n-1]:>17} {res_spans[n-1]:>15}")
    if p >= 3:
        print(f"lambda dims (p={p}): {list(lambda_dims(g, p, upto).values)}")

    ok = lcs_series == lcs_spans and res_series == res_spans
    if not ok:
        print("MISMATCH between the two routes", file=sys.stderr)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
