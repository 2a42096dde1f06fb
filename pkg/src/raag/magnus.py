"""The embedding of the group into units of the truncated series ring,
and the central-series data it computes.

Each generator v maps to 1+v; a syllable v^e maps to the binomial
expansion of (1+v)^e, which has integer coefficients for negative e as
well.  Valuations of the image decide membership in the lower central /
p-central series; the weighted valuation giving p degree 1 decides the
exponent-p series (for p >= 3).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb

from raag.errors import check_states
from raag.graph import Graph
from raag.linalg import rank_of_rows
from raag.series import Domain, DomainError, PCSeries, Z, invert_unit
from raag.words import GroupWord, Trace, ball, canonicalize_trace, enumerate_traces


def _syllable_image(v: str, e: int, g: Graph, domain: Domain, order: int) -> PCSeries:
    # (1+v)^e truncated; for e < 0 the generalized binomial coefficients
    # comb(e, k) = (-1)^k * comb(-e+k-1, k) are still integers.
    coeffs: dict[Trace, object] = {}
    for k in range(order):
        if e >= 0 and k > e:
            break
        c = comb(e, k) if e >= 0 else (-1) ** k * comb(-e + k - 1, k)
        coeffs[(v,) * k] = c
    return PCSeries(g, domain, order, coeffs)


def magnus(w: GroupWord, g: Graph, domain: Domain, order: int) -> PCSeries:
    out = PCSeries.one(g, domain, order)
    for s in w.syllables:
        out = out * _syllable_image(s.generator, s.exponent, g, domain, order)
    return out


def magnus_exp(w: GroupWord, g: Graph, order: int) -> PCSeries:
    """Image under the exponential variant v -> sum v^n/n! (rationals only)."""
    from fractions import Fraction

    from raag.series import Q, exp_series

    out = PCSeries.one(g, Q, order)
    for s in w.syllables:
        x = PCSeries.generator(s.generator, g, Q, order).scale(Fraction(s.exponent))
        out = out * exp_series(x)
    return out


# -- valuations --------------------------------------------------------


@dataclass(frozen=True)
class Valuation:
    """Least filtration level containing mu(w) - 1.

    `decided` is False when every visible term sits at the truncation
    bound, in which case `value` is only a lower bound.
    """

    value: int
    decided: bool

    def at_least(self, n: int) -> bool:
        return self.value >= n


def omega_valuation(w: GroupWord, g: Graph, domain: Domain, order: int) -> Valuation:
    x = magnus(w, g, domain, order) - PCSeries.one(g, domain, order)
    d = x.min_degree()
    return Valuation(d, d < x.order)


def _vp(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of zero")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def omega_p_valuation(w: GroupWord, g: Graph, p: int, order: int) -> Valuation:
    """Least weight len(trace) + v_p(coefficient) among nonconstant terms of
    mu(w) - 1 over Z.  Exact whenever the result is below the truncation
    order, because hidden terms have trace length >= order."""
    x = magnus(w, g, Z, order) - PCSeries.one(g, Z, order)
    best = order
    for t, c in x.coeffs.items():
        weight = len(t) + _vp(c, p)
        if weight < best:
            best = weight
    return Valuation(best, best < order)


def dimension_subgroup_membership(w: GroupWord, g: Graph, n: int,
                                  domain: Domain, order: int) -> str:
    """Three-valued answer to `w in delta_n` for the representation v -> 1+v:
    'in', 'out', or 'undecided' when the truncation cannot tell."""
    val = omega_valuation(w, g, domain, order)
    if val.decided:
        return "in" if val.value >= n else "out"
    return "in" if n <= order else "undecided"


# -- leading monomial in characteristic p ------------------------------


@dataclass(frozen=True)
class LeadingMonomial:
    trace: Trace
    exponents: tuple[int, ...]  # the p-power exponent of each syllable
    coefficient: int  # nonzero mod p


def leading_monomial_char_p(w: GroupWord, g: Graph, p: int) -> LeadingMonomial:
    """The unique monomial of mu(w) over F_p with maximal syllable count and
    minimal (p-power) exponents, read off the canonical form: the syllable
    v^e with e = p^s * l, p not dividing l, contributes v^{p^s} and a
    factor l to the coefficient."""
    if not w.syllables:
        raise ValueError("identity has no leading monomial")
    letters: list[str] = []
    exps: list[int] = []
    coeff = 1
    for s in w.syllables:
        e = abs(s.exponent)
        sv = _vp(e, p)
        q = p**sv
        ell = s.exponent // q
        letters.extend([s.generator] * q)
        exps.append(q)
        coeff = coeff * ell % p
    return LeadingMonomial(canonicalize_trace(letters, g), tuple(exps), coeff % p)


# -- graded span ranks -------------------------------------------------


def magnus_span_rank(g: Graph, r: int, order: int, domain: Domain,
                     samples: int = 20, seed: int = 0) -> list[int]:
    """For n = 1..order-1, the rank over `domain` of the span of degree-n
    components of n-fold products of (mu(g_i) - 1) with g_i in the ball of
    radius r.  All generator-only tuples are included (they already realize
    every trace once r >= 1); a deterministic sample of general ball tuples
    is added on top.
    """
    if domain.kind == "Z":
        raise DomainError("span rank needs a field domain")
    elements = [b for b in ball(g, r) if b.syllables]
    images = {b: magnus(b, g, domain, order) for b in elements}
    one = PCSeries.one(g, domain, order)
    gens = [b for b in elements if len(b.syllables) == 1
            and b.syllables[0].exponent == 1]
    rng = random.Random(seed)
    ranks: list[int] = []
    for n in range(1, order):
        rows: list[dict] = []
        # all products of n generator images
        stack: list[tuple[int, PCSeries]] = [(0, one)]
        while stack:
            depth, acc = stack.pop()
            if depth == n:
                part = acc.homogeneous_part(n)
                if part:
                    rows.append(part)
                continue
            for b in gens:
                nxt = acc * (images[b] - one)
                if nxt.coeffs:
                    stack.append((depth + 1, nxt))
            check_states(len(rows), "magnus_span_rank")
        # sampled products of general ball elements
        for _ in range(samples):
            acc = one
            for _ in range(n):
                acc = acc * (images[rng.choice(elements)] - one)
            part = acc.homogeneous_part(n)
            if part:
                rows.append(part)
        ranks.append(rank_of_rows(rows, domain,
                                  col_key=lambda t: tuple(g.index(v) for v in t)))
    return ranks


# -- desk-scale injectivity check --------------------------------------


def injectivity_witness(g: Graph, r: int, order: int, domain: Domain):
    """None if the truncated images of the ball of radius r are pairwise
    distinct, else a pair of distinct elements with equal image."""
    seen: dict = {}
    for b in ball(g, r):
        key = frozenset(magnus(b, g, domain, order).coeffs.items())
        if key in seen:
            return (seen[key], b)
        seen[key] = b
    return None
