"""Graded ranks of the Lie algebras attached to the graph, by two
independent routes: spans of left-normed bracket expansions inside the
partially commuting polynomial ring, and product recursions on the
Poincare series.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from raag.errors import check_states
from raag.graph import Graph
from raag.linalg import rank_of_rows
from raag.series import Domain, DomainError, Fp, PCSeries, Q
from raag.useries import USeries
from raag.words import Trace, canonicalize_trace


@dataclass(frozen=True)
class RankTable:
    graph: Graph
    kind: str  # "lower_central" | "restricted" | "exponent_p"
    values: tuple[int, ...]  # indexed by degree, starting at 1
    method: str  # "bracket_span" | "series_recursion" | "partial_sums"
    p: int | None = None

    def to_json_obj(self) -> dict:
        return {
            "kind": self.kind,
            "method": self.method,
            "p": self.p,
            "values": {str(n + 1): v for n, v in enumerate(self.values)},
        }


# -- bracket expansions ------------------------------------------------


def _concat(t1: Trace, t2: Trace, g: Graph) -> Trace:
    return canonicalize_trace(t1 + t2, g)


def _bracket(a: dict[Trace, int], b: dict[Trace, int], g: Graph) -> dict[Trace, int]:
    """[a, b] = ab - ba on homogeneous integer combinations of traces."""
    out: dict[Trace, int] = {}
    for t1, c1 in a.items():
        for t2, c2 in b.items():
            k = _concat(t1, t2, g)
            out[k] = out.get(k, 0) + c1 * c2
            k = _concat(t2, t1, g)
            out[k] = out.get(k, 0) - c1 * c2
    return {t: c for t, c in out.items() if c != 0}


@lru_cache(maxsize=256)
def left_normed_brackets(g: Graph, n: int) -> tuple[dict[Trace, int], ...]:
    """Expansions of [v1,[v2,[...,vn]]] over all generator tuples, with
    suffix sharing; degree-1 "brackets" are the generators themselves."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    layer: dict[tuple[str, ...], dict[Trace, int]] = {
        (v,): {(v,): 1} for v in g.vertices
    }
    for _ in range(n - 1):
        nxt: dict[tuple[str, ...], dict[Trace, int]] = {}
        for tail, expansion in layer.items():
            for v in g.vertices:
                nxt[(v,) + tail] = _bracket({(v,): 1}, expansion, g)
        check_states(len(nxt), "left_normed_brackets")
        layer = nxt
    return tuple(e for e in layer.values() if e)


def bracket_span_rank(g: Graph, n: int, domain: Domain) -> int:
    """Rank of the span of degree-n left-normed brackets inside the degree-n
    component of the polynomial ring; equals the degree-n rank of the
    associated graded Lie algebra."""
    if domain.kind not in ("Q", "Fp"):
        raise DomainError("span rank needs a field domain")
    rows = [dict(e) for e in left_normed_brackets(g, n)]
    return rank_of_rows(rows, domain,
                        col_key=lambda t: tuple(g.index(v) for v in t))


def _power(x: dict[Trace, int], k: int, g: Graph, p: int) -> dict[Trace, int]:
    out: dict[Trace, int] = {(): 1}
    for _ in range(k):
        acc: dict[Trace, int] = {}
        for t1, c1 in out.items():
            for t2, c2 in x.items():
                key = _concat(t1, t2, g)
                acc[key] = (acc.get(key, 0) + c1 * c2) % p
        out = {t: c for t, c in acc.items() if c}
    return out


def restricted_span_rank(g: Graph, n: int, p: int) -> int:
    """Rank over F_p of brackets of degree n together with p^i-th powers of
    lower-degree brackets with m * p^i = n."""
    rows = [dict(e) for e in left_normed_brackets(g, n)]
    m = n
    i = 0
    while m % p == 0:
        m //= p
        i += 1
        for e in left_normed_brackets(g, m):
            pw = _power(e, p**i, g, p)
            if pw:
                rows.append(pw)
    return rank_of_rows(rows, Fp(p),
                        col_key=lambda t: tuple(g.index(v) for v in t))


# -- series recursions -------------------------------------------------


def _solve_product_form(target: USeries, factor_at, upto: int) -> list[int]:
    """Solve prod_{n>=1} F_n(t)^{e_n} = target degree by degree, where
    F_n = factor_at(n) satisfies F_n = 1 + t^n + O(t^{n+1}).  Returns
    e_1..e_upto; each step divides out the known part and reads the next
    coefficient."""
    order = target.order
    residual = target
    exps: list[int] = []
    for n in range(1, upto + 1):
        c = residual[n]
        if c.denominator != 1:
            raise DomainError(f"non-integer exponent at degree {n}: {c}")
        e = c.numerator
        exps.append(e)
        residual = residual * factor_at(n).series(order) ** (-e)
    return exps


def series_rank_lcs(g: Graph, upto: int, order: int | None = None) -> RankTable:
    """Ranks b_n solving prod (1 - t^n)^{-b_n} = Phi_R(t)."""
    from raag.growth import phi_R
    from raag.useries import RatFunc

    order = order or upto + 1
    target = phi_R(g, max(order, upto + 1))

    def factor(n: int) -> RatFunc:
        # (1 - t^n)^{-1} = 1 + t^n + ...
        return RatFunc([1], [1] + [0] * (n - 1) + [-1])

    values = _solve_product_form(target, factor, upto)
    return RankTable(g, "lower_central", tuple(values), "series_recursion")


def series_rank_restricted(g: Graph, p: int, upto: int,
                           order: int | None = None) -> RankTable:
    """Ranks d_n solving prod ((1 - t^{pn})/(1 - t^n))^{d_n} = Phi_R(t)."""
    from raag.growth import phi_R
    from raag.useries import RatFunc

    order = order or upto + 1
    target = phi_R(g, max(order, upto + 1))

    def factor(n: int) -> RatFunc:
        # (1 - t^{pn})/(1 - t^n) = 1 + t^n + ... + t^{(p-1)n}
        return RatFunc([1] + [0] * (p * n - 1) + [-1],
                       [1] + [0] * (n - 1) + [-1])

    values = _solve_product_form(target, factor, upto)
    return RankTable(g, "restricted", tuple(values), "series_recursion", p=p)


def lambda_dims(g: Graph, p: int, upto: int) -> RankTable:
    """Dimensions of the exponent-p series quotients: the degree-n part of
    the lower-central Lie algebra tensored with a polynomial ring on one
    degree-1 variable, i.e. partial sums of the b_m.  Only valid for
    p >= 3 (the p-power map fails to be linear at p = 2)."""
    if p < 3:
        raise DomainError("exponent-p dimensions need p >= 3")
    b = series_rank_lcs(g, upto).values
    partial = []
    acc = 0
    for n in range(upto):
        acc += b[n]
        partial.append(acc)
    return RankTable(g, "exponent_p", tuple(partial), "partial_sums", p=p)


def primitivity_check(g: Graph, n: int, order: int):
    """Every degree-n spanning bracket is primitive for the coproduct; returns
    None on success, else a witness PCSeries."""
    from raag.series import is_primitive

    if order <= n:
        raise DomainError("truncation order must exceed the degree")
    for e in left_normed_brackets(g, n):
        x = PCSeries(g, Q, order, e)
        if not is_primitive(x):
            return x
    return None
