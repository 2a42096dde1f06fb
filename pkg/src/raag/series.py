"""Truncated power series in partially commuting variables.

Elements are finite maps from canonical traces of length < N to nonzero
coefficients, over Z, Q, or F_p.  All arithmetic is exact; binary
operations insist on equal graph, domain and truncation order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping

from raag.errors import RaagError
from raag.graph import Graph, GraphMorphism
from raag.words import Trace, canonicalize_trace


class DomainError(RaagError, ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Domain:
    """Coefficient domain: Z, Q, or F_p with p prime."""

    kind: str  # "Z" | "Q" | "Fp"
    p: int | None = None

    def __post_init__(self):
        if self.kind not in ("Z", "Q", "Fp"):
            raise DomainError(f"unknown domain kind {self.kind!r}")
        if self.kind == "Fp":
            if self.p is None or not _is_prime(self.p) or self.p >= 2**31:
                raise DomainError(f"F_p needs a prime p < 2^31, got {self.p!r}")
        elif self.p is not None:
            raise DomainError("p is only meaningful for Fp")

    def coerce(self, x):
        if self.kind == "Z":
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise DomainError(f"{x} is not an integer")
                return x.numerator
            return int(x)
        if self.kind == "Q":
            return Fraction(x)
        if isinstance(x, Fraction):
            num = x.numerator % self.p
            den = x.denominator % self.p
            return (num * pow(den, -1, self.p)) % self.p
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p if self.kind == "Fp" else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.kind == "Fp" else a - b

    def neg(self, a):
        return (-a) % self.p if self.kind == "Fp" else -a

    def mul(self, a, b):
        return (a * b) % self.p if self.kind == "Fp" else a * b

    def is_unit(self, a) -> bool:
        if self.kind == "Z":
            return a in (1, -1)
        return a != self.coerce(0)

    def inv(self, a):
        if self.kind == "Z":
            if a not in (1, -1):
                raise DomainError(f"{a} is not a unit in Z")
            return a
        if self.kind == "Q":
            return Fraction(1) / a
        if a % self.p == 0:
            raise DomainError("division by zero in F_p")
        return pow(a, -1, self.p)

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)


Z = Domain("Z")
Q = Domain("Q")


def Fp(p: int) -> Domain:
    return Domain("Fp", p)


def _check_compatible(x: "PCSeries | TensorSeries", y: "PCSeries | TensorSeries"):
    if x.graph != y.graph or x.domain != y.domain or x.order != y.order:
        raise DomainError("mismatched graph, domain, or truncation order")


class PCSeries:
    """Element of the series ring, truncated below degree `order`."""

    __slots__ = ("graph", "domain", "order", "coeffs")

    def __init__(self, graph: Graph, domain: Domain, order: int,
                 coeffs: Mapping[Trace, object] | None = None):
        if order < 1:
            raise DomainError("truncation order must be >= 1")
        self.graph = graph
        self.domain = domain
        self.order = order
        clean: dict[Trace, object] = {}
        if coeffs:
            zero = domain.zero
            for t, c in coeffs.items():
                if len(t) >= order:
                    continue
                c = domain.coerce(c)
                if c != zero:
                    clean[t] = c
        self.coeffs = clean

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, graph: Graph, domain: Domain, order: int) -> "PCSeries":
        return cls(graph, domain, order)

    @classmethod
    def constant(cls, c, graph: Graph, domain: Domain, order: int) -> "PCSeries":
        return cls(graph, domain, order, {(): c})

    @classmethod
    def one(cls, graph: Graph, domain: Domain, order: int) -> "PCSeries":
        return cls.constant(1, graph, domain, order)

    @classmethod
    def generator(cls, v: str, graph: Graph, domain: Domain, order: int) -> "PCSeries":
        graph.index(v)
        return cls(graph, domain, order, {(v,): 1})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Iterable[str], object]],
                   graph: Graph, domain: Domain, order: int) -> "PCSeries":
        """Build from (letters, coefficient) pairs; letters need not be canonical."""
        acc: dict[Trace, object] = {}
        for letters, c in terms:
            t = canonicalize_trace(letters, graph)
            if len(t) >= order:
                continue
            acc[t] = domain.add(acc.get(t, domain.zero), domain.coerce(c))
        return cls(graph, domain, order, acc)

    # -- ring operations -----------------------------------------------

    def __add__(self, other: "PCSeries") -> "PCSeries":
        _check_compatible(self, other)
        acc = dict(self.coeffs)
        d = self.domain
        for t, c in other.coeffs.items():
            acc[t] = d.add(acc.get(t, d.zero), c)
        return PCSeries(self.graph, d, self.order, acc)

    def __sub__(self, other: "PCSeries") -> "PCSeries":
        return self + (-other)

    def __neg__(self) -> "PCSeries":
        d = self.domain
        return PCSeries(self.graph, d, self.order,
                        {t: d.neg(c) for t, c in self.coeffs.items()})

    def scale(self, c) -> "PCSeries":
        d = self.domain
        c = d.coerce(c)
        return PCSeries(self.graph, d, self.order,
                        {t: d.mul(c, x) for t, x in self.coeffs.items()})

    def __mul__(self, other: "PCSeries") -> "PCSeries":
        _check_compatible(self, other)
        d = self.domain
        acc: dict[Trace, object] = {}
        for t1, c1 in self.coeffs.items():
            for t2, c2 in other.coeffs.items():
                if len(t1) + len(t2) >= self.order:
                    continue
                t = canonicalize_trace(t1 + t2, self.graph)
                acc[t] = d.add(acc.get(t, d.zero), d.mul(c1, c2))
        return PCSeries(self.graph, d, self.order, acc)

    def __pow__(self, n: int) -> "PCSeries":
        if n < 0:
            return invert_unit(self) ** (-n)
        out = PCSeries.one(self.graph, self.domain, self.order)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return (isinstance(other, PCSeries)
                and self.graph == other.graph
                and self.domain == other.domain
                and self.order == other.order
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.domain, self.order, frozenset(self.coeffs.items())))

    # -- views ---------------------------------------------------------

    def coefficient(self, letters: Iterable[str]):
        t = canonicalize_trace(letters, self.graph)
        return self.coeffs.get(t, self.domain.zero)

    def constant_term(self):
        return self.coeffs.get((), self.domain.zero)

    def homogeneous_part(self, n: int) -> dict[Trace, object]:
        return {t: c for t, c in self.coeffs.items() if len(t) == n}

    def min_degree(self) -> int:
        """Least degree with a nonzero term, or `order` for the zero series."""
        if not self.coeffs:
            return self.order
        return min(len(t) for t in self.coeffs)

    def sorted_terms(self) -> list[tuple[Trace, object]]:
        g = self.graph
        return sorted(
            self.coeffs.items(),
            key=lambda item: (len(item[0]), tuple(g.index(v) for v in item[0])),
        )

    def to_json_obj(self) -> list[dict]:
        return [
            {"trace": "".join(t), "coeff": str(c)} for t, c in self.sorted_terms()
        ]

    def __repr__(self) -> str:
        terms = self.sorted_terms()
        if not terms:
            return "0"
        return " + ".join(f"{c}*{''.join(t) or '1'}" for t, c in terms)

    def map_domain(self, domain: Domain) -> "PCSeries":
        """Reinterpret coefficients in another domain (Z -> Q or Z -> F_p)."""
        return PCSeries(self.graph, domain, self.order,
                        {t: domain.coerce(c) for t, c in self.coeffs.items()})


# -- module-level operations ------------------------------------------


def invert_unit(x: PCSeries) -> PCSeries:
    """Inverse of a series whose constant term is a unit, by the geometric
    series on the augmentation-ideal part."""
    d = x.domain
    c0 = x.constant_term()
    if not d.is_unit(c0):
        raise DomainError(f"constant term {c0!r} is not invertible")
    c0_inv = d.inv(c0)
    u = x.scale(c0_inv) - PCSeries.one(x.graph, d, x.order)  # u in the ideal
    out = PCSeries.one(x.graph, d, x.order)
    pw = PCSeries.one(x.graph, d, x.order)
    sign = -1
    for _ in range(1, x.order):
        pw = pw * u
        if not pw.coeffs:
            break
        out = out + pw.scale(sign)
        sign = -sign
    return out.scale(c0_inv)


def exp_series(x: PCSeries) -> PCSeries:
    if x.domain.kind != "Q":
        raise DomainError("exp needs rational coefficients")
    if x.constant_term() != 0:
        raise DomainError("exp needs zero constant term")
    out = PCSeries.one(x.graph, x.domain, x.order)
    pw = PCSeries.one(x.graph, x.domain, x.order)
    for n in range(1, x.order):
        pw = pw * x
        if not pw.coeffs:
            break
        out = out + pw.scale(Fraction(1, factorial(n)))
    return out


def log_series(y: PCSeries) -> PCSeries:
    if y.domain.kind != "Q":
        raise DomainError("log needs rational coefficients")
    if y.constant_term() != 1:
        raise DomainError("log needs constant term 1")
    u = y - PCSeries.one(y.graph, y.domain, y.order)
    out = PCSeries.zero(y.graph, y.domain, y.order)
    pw = PCSeries.one(y.graph, y.domain, y.order)
    for n in range(1, y.order):
        pw = pw * u
        if not pw.coeffs:
            break
        out = out + pw.scale(Fraction((-1) ** (n + 1), n))
    return out


def augmentation(x: PCSeries):
    return x.constant_term()


def antipode(x: PCSeries) -> PCSeries:
    """The anti-automorphism sending each generator v to -v."""
    d = x.domain
    acc: dict[Trace, object] = {}
    for t, c in x.coeffs.items():
        rt = canonicalize_trace(tuple(reversed(t)), x.graph)
        val = d.mul(d.coerce((-1) ** len(t)), c)
        acc[rt] = d.add(acc.get(rt, d.zero), val)
    return PCSeries(x.graph, d, x.order, acc)


class TensorSeries:
    """Element of the (truncated) tensor square of the series ring."""

    __slots__ = ("graph", "domain", "order", "coeffs")

    def __init__(self, graph: Graph, domain: Domain, order: int,
                 coeffs: Mapping[tuple[Trace, Trace], object] | None = None):
        self.graph = graph
        self.domain = domain
        self.order = order
        clean: dict[tuple[Trace, Trace], object] = {}
        if coeffs:
            zero = domain.zero
            for (t1, t2), c in coeffs.items():
                if len(t1) + len(t2) >= order:
                    continue
                c = domain.coerce(c)
                if c != zero:
                    clean[(t1, t2)] = c
        self.coeffs = clean

    def __add__(self, other: "TensorSeries") -> "TensorSeries":
        _check_compatible(self, other)
        d = self.domain
        acc = dict(self.coeffs)
        for k, c in other.coeffs.items():
            acc[k] = d.add(acc.get(k, d.zero), c)
        return TensorSeries(self.graph, d, self.order, acc)

    def __neg__(self) -> "TensorSeries":
        d = self.domain
        return TensorSeries(self.graph, d, self.order,
                            {k: d.neg(c) for k, c in self.coeffs.items()})

    def __sub__(self, other: "TensorSeries") -> "TensorSeries":
        return self + (-other)

    def __mul__(self, other: "TensorSeries") -> "TensorSeries":
        _check_compatible(self, other)
        d, g = self.domain, self.graph
        acc: dict[tuple[Trace, Trace], object] = {}
        for (a1, b1), c1 in self.coeffs.items():
            for (a2, b2), c2 in other.coeffs.items():
                if len(a1) + len(a2) + len(b1) + len(b2) >= self.order:
                    continue
                k = (canonicalize_trace(a1 + a2, g), canonicalize_trace(b1 + b2, g))
                acc[k] = d.add(acc.get(k, d.zero), d.mul(c1, c2))
        return TensorSeries(self.graph, d, self.order, acc)

    def __eq__(self, other) -> bool:
        return (isinstance(other, TensorSeries)
                and self.graph == other.graph
                and self.domain == other.domain
                and self.order == other.order
                and self.coeffs == other.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(
            f"{c}*({''.join(a) or '1'}(x){''.join(b) or '1'})"
            for (a, b), c in sorted(self.coeffs.items())
        )


def tensor(x: PCSeries, y: PCSeries) -> TensorSeries:
    _check_compatible(x, y)
    d = x.domain
    acc: dict[tuple[Trace, Trace], object] = {}
    for t1, c1 in x.coeffs.items():
        for t2, c2 in y.coeffs.items():
            if len(t1) + len(t2) >= x.order:
                continue
            acc[(t1, t2)] = d.mul(c1, c2)
    return TensorSeries(x.graph, d, x.order, acc)


def coproduct(x: PCSeries) -> TensorSeries:
    """Algebra map determined by v -> v(x)1 + 1(x)v.

    On a trace it expands as a sum over subsets of letter positions, the
    chosen letters going left and the rest right.
    """
    d, g = x.domain, x.graph
    acc: dict[tuple[Trace, Trace], object] = {}
    for t, c in x.coeffs.items():
        k = len(t)
        for mask in range(1 << k):
            left = tuple(t[i] for i in range(k) if mask >> i & 1)
            right = tuple(t[i] for i in range(k) if not mask >> i & 1)
            key = (canonicalize_trace(left, g), canonicalize_trace(right, g))
            acc[key] = d.add(acc.get(key, d.zero), c)
    return TensorSeries(x.graph, d, x.order, acc)


def is_primitive(x: PCSeries) -> bool:
    one = PCSeries.one(x.graph, x.domain, x.order)
    return coproduct(x) == tensor(x, one) + tensor(one, x)


def is_grouplike(x: PCSeries) -> bool:
    return x.constant_term() == x.domain.one and coproduct(x) == tensor(x, x)


def induced_ring_map(m: GraphMorphism, x: PCSeries) -> PCSeries:
    """Letter substitution along a graph morphism, recanonicalized."""
    if m.source != x.graph:
        raise DomainError("series does not live over the morphism's source")
    return PCSeries.from_terms(
        ((tuple(m(v) for v in t), c) for t, c in x.coeffs.items()),
        m.target, x.domain, x.order,
    )
