"""The small free resolution on the clique basis, with its differential
and contracting homotopy, checked degree by degree.

Basis elements are pairs (clique, trace).  The differential peels
vertices off the clique (with alternating signs, the clique being read in
decreasing order) and multiplies them into the trace; the contraction
moves the least eligible front letter of the trace into the clique.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from raag.graph import Graph, enumerate_cliques
from raag.series import Domain, DomainError
from raag.words import Trace, canonicalize_trace, enumerate_traces

BasisKey = tuple[tuple[str, ...], Trace]  # (ascending clique, canonical trace)


class KoszulElement:
    __slots__ = ("graph", "domain", "order", "coeffs")

    def __init__(self, graph: Graph, domain: Domain, order: int,
                 coeffs: Mapping[BasisKey, object] | None = None):
        self.graph = graph
        self.domain = domain
        self.order = order
        clean: dict[BasisKey, object] = {}
        if coeffs:
            for (c, t), x in coeffs.items():
                if len(c) + len(t) >= order:
                    continue
                x = domain.coerce(x)
                if x != domain.zero:
                    clean[(c, t)] = x
        self.coeffs = clean

    @classmethod
    def basis(cls, clique, trace, graph: Graph, domain: Domain,
              order: int) -> "KoszulElement":
        c = graph.sort_vertices(clique)
        if not graph.is_clique(c):
            raise DomainError(f"{clique!r} is not a clique")
        t = canonicalize_trace(trace, graph)
        return cls(graph, domain, order, {(c, t): 1})

    def _check(self, other: "KoszulElement"):
        if (self.graph != other.graph or self.domain != other.domain
                or self.order != other.order):
            raise DomainError("mismatched graph, domain, or order")

    def __add__(self, other: "KoszulElement") -> "KoszulElement":
        self._check(other)
        d = self.domain
        acc = dict(self.coeffs)
        for k, x in other.coeffs.items():
            acc[k] = d.add(acc.get(k, d.zero), x)
        return KoszulElement(self.graph, d, self.order, acc)

    def __neg__(self) -> "KoszulElement":
        d = self.domain
        return KoszulElement(self.graph, d, self.order,
                             {k: d.neg(x) for k, x in self.coeffs.items()})

    def __sub__(self, other: "KoszulElement") -> "KoszulElement":
        return self + (-other)

    def __eq__(self, other) -> bool:
        return (isinstance(other, KoszulElement)
                and self.graph == other.graph and self.domain == other.domain
                and self.order == other.order and self.coeffs == other.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(
            f"{x}*[{''.join(c) or 'e'}|{''.join(t) or '1'}]"
            for (c, t), x in sorted(self.coeffs.items())
        )


def differential(x: KoszulElement) -> KoszulElement:
    g, d = x.graph, x.domain
    acc: dict[BasisKey, object] = {}
    for (c, t), coeff in x.coeffs.items():
        # c is ascending; the basis product is written in decreasing order,
        # so removing the j-th smallest vertex carries sign (-1)^j.
        for j, v in enumerate(c):
            key = (c[:j] + c[j + 1:], canonicalize_trace((v,) + t, g))
            val = d.mul(d.coerce((-1) ** j), coeff)
            acc[key] = d.add(acc.get(key, d.zero), val)
    return KoszulElement(g, d, x.order, acc)


def _front_movable(t: Trace, g: Graph) -> list[tuple[str, int]]:
    """Letters that commuting swaps can bring to the front of the trace,
    with the position of the occurrence that moves."""
    out = []
    for i, v in enumerate(t):
        if all(g.adjacent(u, v) for u in t[:i]):
            out.append((v, i))
    return out


def contraction(x: KoszulElement) -> KoszulElement:
    g, d = x.graph, x.domain
    acc: dict[BasisKey, object] = {}
    for (c, t), coeff in x.coeffs.items():
        bound = min((g.index(u) for u in c), default=len(g.vertices))
        best = None
        for v, i in _front_movable(t, g):
            if g.index(v) < bound and g.is_clique(c + (v,)):
                if best is None or g.index(v) < g.index(best[0]):
                    best = (v, i)
        if best is None:
            continue
        v, i = best
        key = (g.sort_vertices(c + (v,)),
               canonicalize_trace(t[:i] + t[i + 1:], g))
        acc[key] = d.add(acc.get(key, d.zero), coeff)
    return KoszulElement(g, d, x.order, acc)


def epsilon(x: KoszulElement) -> KoszulElement:
    """Projection onto the bidegree-(0, 0) summand."""
    key = ((), ())
    if key in x.coeffs:
        return KoszulElement(x.graph, x.domain, x.order, {key: x.coeffs[key]})
    return KoszulElement(x.graph, x.domain, x.order)


@dataclass(frozen=True)
class ResolutionReport:
    ok: bool
    checked: int
    counterexample: BasisKey | None = None
    reason: str | None = None

    def to_json_obj(self) -> dict:
        out: dict = {"ok": self.ok, "checked": self.checked}
        if not self.ok:
            out["counterexample"] = {
                "clique": "".join(self.counterexample[0]),
                "trace": "".join(self.counterexample[1]),
            }
            out["reason"] = self.reason
        return out


def verify_resolution(g: Graph, order: int, domain: Domain) -> ResolutionReport:
    """Check d.d = 0 and s.d + d.s = 1 - eps on every basis element of total
    degree < order; reports the first counterexample."""
    cliques = [c for c in enumerate_cliques(g) if len(c) < order]
    checked = 0
    for c in cliques:
        for n in range(order - len(c)):
            for t in enumerate_traces(g, n):
                x = KoszulElement.basis(c, t, g, domain, order)
                checked += 1
                if not differential(differential(x)).is_zero():
                    return ResolutionReport(False, checked, (c, t), "d^2 != 0")
                lhs = contraction(differential(x)) + differential(contraction(x))
                if lhs != x - epsilon(x):
                    return ResolutionReport(False, checked, (c, t),
                                            "sd + ds != 1 - eps")
    return ResolutionReport(True, checked)


def bigraded_ranks(g: Graph, order: int) -> dict[tuple[int, int], int]:
    """Rank of each (clique-degree, trace-degree) component with total
    degree < order."""
    out: dict[tuple[int, int], int] = {}
    for c in enumerate_cliques(g):
        if len(c) >= order:
            continue
        for n in range(order - len(c)):
            out[(len(c), n)] = out.get((len(c), n), 0) + len(enumerate_traces(g, n))
    return out
