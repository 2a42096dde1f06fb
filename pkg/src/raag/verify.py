"""Cross-checks between the independent routes, for one graph.

This is the engine behind the `verify-all` CLI subcommand: every analytic
quantity is recomputed by its brute-force counterpart and compared
exactly.  Desk-scale bounds keep the whole suite fast.
"""

from __future__ import annotations

from dataclasses import dataclass

from raag.exterior import poincare_poly, quadratic_dual_check
from raag.graph import Graph, clique_counts
from raag.growth import ball_growth_oracle, phi_A, phi_R, phi_S
from raag.koszul import verify_resolution
from raag.lie import (bracket_span_rank, lambda_dims, restricted_span_rank,
                      series_rank_lcs, series_rank_restricted)
from raag.magnus import injectivity_witness, magnus_span_rank
from raag.series import Fp, Q
from raag.useries import USeries
from raag.words import enumerate_traces


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def to_json_obj(self) -> dict:
        out = {"name": self.name, "ok": self.ok}
        if self.detail:
            out["detail"] = self.detail
        return out


def verify_all(g: Graph, *, series_order: int = 8, trace_degree: int = 4,
               lie_degree: int = 4, ball_radius: int = 3,
               koszul_order: int = 5, p: int = 3) -> list[CheckResult]:
    results: list[CheckResult] = []

    def check(name: str, ok: bool, detail: str = ""):
        results.append(CheckResult(name, bool(ok), detail))

    # clique polynomial vs counts
    counts = clique_counts(g)
    check("clique polynomial matches clique counts",
          phi_S(g).as_ints() == counts, f"counts={counts}")

    # reciprocity
    prod = phi_R(g, series_order) * phi_S(g).truncate(series_order).substitute_neg()
    check("Phi_R(t) * Phi_S(-t) = 1", prod == USeries.one(series_order))

    # trace counts vs Phi_R
    pr = phi_R(g, trace_degree + 1)
    tc = [len(enumerate_traces(g, n)) for n in range(trace_degree + 1)]
    check("trace counts match Phi_R coefficients",
          pr.as_ints() == tc, f"counts={tc}")

    # growth oracle
    spheres = ball_growth_oracle(g, ball_radius)
    pa = phi_A(g, ball_radius + 1)
    check("sphere sizes match Phi_A coefficients",
          pa.as_ints() == spheres, f"spheres={spheres}")

    # quadratic duality
    check("quadratic relation spaces are dual", quadratic_dual_check(g))

    # Lie ranks, both routes
    b_series = series_rank_lcs(g, lie_degree).values
    b_span = tuple(bracket_span_rank(g, n, Q) for n in range(1, lie_degree + 1))
    check("lower-central ranks: series recursion = bracket span",
          b_series == b_span, f"values={b_series}")
    d_series = series_rank_restricted(g, p, lie_degree).values
    d_span = tuple(restricted_span_rank(g, n, p) for n in range(1, lie_degree + 1))
    check(f"restricted ranks agree at p={p}",
          d_series == d_span, f"values={d_series}")
    lam = lambda_dims(g, p, lie_degree).values
    partial = tuple(sum(b_series[:n + 1]) for n in range(lie_degree))
    check("exponent-p dims are partial sums of lower-central ranks",
          lam == partial, f"values={lam}")

    # Magnus span ranks reach the trace counts
    for dom, name in ((Q, "Q"), (Fp(2), "F2")):
        ranks = magnus_span_rank(g, 2, trace_degree + 1, dom)
        check(f"augmentation-power span ranks over {name} match trace counts",
              ranks == tc[1:], f"ranks={ranks}")

    # injectivity at truncation
    wit = injectivity_witness(g, ball_radius, series_order - 1, Fp(2))
    check("truncated images pairwise distinct on the ball",
          wit is None, "" if wit is None else f"collision: {wit}")

    # Koszul certificate
    for dom, name in ((Q, "Q"), (Fp(2), "F2")):
        rep = verify_resolution(g, koszul_order, dom)
        check(f"Koszul contraction identity over {name}",
              rep.ok, f"checked={rep.checked}")

    return results
