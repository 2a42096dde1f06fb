"""The signed clique algebra: quadratic dual of the partially commuting
polynomial ring, and cohomology ring of the group.

Basis elements are cliques; a clique C = {v_0 < ... < v_{k-1}} stands for
the product of its vertices written in decreasing order, so multiplying
two basis elements picks up the parity of the merge that restores
decreasing order.
"""

from __future__ import annotations

from itertools import product as iproduct
from typing import Mapping

from raag.graph import Graph, clique_counts, enumerate_cliques
from raag.linalg import rank_of_rows
from raag.series import Domain, DomainError, Q
from raag.useries import USeries

CliqueKey = tuple[str, ...]  # sorted ascending in vertex order


class ExtElement:
    __slots__ = ("graph", "domain", "coeffs")

    def __init__(self, graph: Graph, domain: Domain,
                 coeffs: Mapping[CliqueKey, object] | None = None):
        self.graph = graph
        self.domain = domain
        clean: dict[CliqueKey, object] = {}
        if coeffs:
            for c, x in coeffs.items():
                key = graph.sort_vertices(c)
                if not graph.is_clique(key):
                    raise DomainError(f"{c!r} is not a clique")
                x = domain.coerce(x)
                if x != domain.zero:
                    clean[key] = domain.add(clean.get(key, domain.zero), x) \
                        if key in clean else x
        self.coeffs = {k: v for k, v in clean.items() if v != domain.zero}

    @classmethod
    def basis(cls, clique, graph: Graph, domain: Domain) -> "ExtElement":
        return cls(graph, domain, {tuple(clique): 1})

    @classmethod
    def generator(cls, v: str, graph: Graph, domain: Domain) -> "ExtElement":
        return cls.basis((v,), graph, domain)

    @classmethod
    def one(cls, graph: Graph, domain: Domain) -> "ExtElement":
        return cls.basis((), graph, domain)

    def _check(self, other: "ExtElement"):
        if self.graph != other.graph or self.domain != other.domain:
            raise DomainError("mismatched graph or domain")

    def __add__(self, other: "ExtElement") -> "ExtElement":
        self._check(other)
        d = self.domain
        acc = dict(self.coeffs)
        for k, c in other.coeffs.items():
            acc[k] = d.add(acc.get(k, d.zero), c)
        return ExtElement(self.graph, d, acc)

    def __neg__(self) -> "ExtElement":
        d = self.domain
        return ExtElement(self.graph, d, {k: d.neg(c) for k, c in self.coeffs.items()})

    def __sub__(self, other: "ExtElement") -> "ExtElement":
        return self + (-other)

    def scale(self, c) -> "ExtElement":
        d = self.domain
        c = d.coerce(c)
        return ExtElement(self.graph, d, {k: d.mul(c, x) for k, x in self.coeffs.items()})

    def __mul__(self, other: "ExtElement") -> "ExtElement":
        self._check(other)
        d, g = self.domain, self.graph
        acc: dict[CliqueKey, object] = {}
        for c1, x1 in self.coeffs.items():
            for c2, x2 in other.coeffs.items():
                res = _basis_product(c1, c2, g)
                if res is None:
                    continue
                key, sign = res
                val = d.mul(d.coerce(sign), d.mul(x1, x2))
                acc[key] = d.add(acc.get(key, d.zero), val)
        return ExtElement(self.graph, d, acc)

    def __eq__(self, other) -> bool:
        return (isinstance(other, ExtElement) and self.graph == other.graph
                and self.domain == other.domain and self.coeffs == other.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def to_json_obj(self) -> list[dict]:
        return [
            {"clique": "".join(k), "coeff": str(self.coeffs[k])}
            for k in sorted(self.coeffs, key=lambda c: (len(c), c))
        ]

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(
            f"{c}*{''.join(k) or '1'}" for k, c in sorted(self.coeffs.items())
        )


def _basis_product(c1: CliqueKey, c2: CliqueKey, g: Graph):
    """v_C1 * v_C2 in the clique basis: None for zero, else (union, sign)."""
    if set(c1) & set(c2):
        return None
    union = g.sort_vertices(c1 + c2)
    if not g.is_clique(union):
        return None
    desc = [g.index(v) for v in reversed(c1)] + [g.index(v) for v in reversed(c2)]
    inv = 0
    for i in range(len(desc)):
        for j in range(i + 1, len(desc)):
            if desc[i] < desc[j]:  # out of order for the descending target
                inv += 1
    return union, (-1) ** inv


def ext_mul(x: ExtElement, y: ExtElement) -> ExtElement:
    return x * y


def poincare_poly(g: Graph) -> USeries:
    """Clique polynomial: the coefficient of t^n counts the n-cliques."""
    counts = clique_counts(g)
    return USeries(counts, len(counts))


def quadratic_dual_check(g: Graph) -> bool:
    """The two quadratic relation spaces annihilate each other under the
    standard pairing on degree-2 tensors, with ranks summing to |V|^2."""
    V = g.vertices
    pairs = list(iproduct(V, V))
    col = {p: i for i, p in enumerate(pairs)}

    rel_r: list[dict] = []
    for e in g.edges:
        u, w = tuple(e)
        rel_r.append({col[(u, w)]: 1, col[(w, u)]: -1})
    rel_s: list[dict] = []
    for u, w in pairs:
        if u == w or not g.adjacent(u, w):
            rel_s.append({col[(u, w)]: 1})
    for e in g.edges:
        u, w = tuple(e)
        rel_s.append({col[(u, w)]: 1, col[(w, u)]: 1})

    for r in rel_r:
        for s in rel_s:
            dot = sum(r[c] * s[c] for c in set(r) & set(s))
            if dot != 0:
                return False
    total = rank_of_rows(rel_r, Q) + rank_of_rows(rel_s, Q)
    return total == len(V) ** 2
