"""Exact rank computation for sparse rows over Q or F_p.

Rows are dicts keyed by arbitrary hashable column labels with a total
order supplied by a key function; elimination keeps a pivot row per
column, reducing each incoming row against the pivots (deterministic:
pivot on the least remaining column).
"""

from __future__ import annotations

from typing import Callable, Hashable, Iterable

from raag.series import Domain, DomainError


def rank_of_rows(rows: Iterable[dict], domain: Domain,
                 col_key: Callable[[Hashable], object] = lambda c: c) -> int:
    if domain.kind == "Z":
        raise DomainError("rank needs a field; use Q or F_p")
    pivots: dict[Hashable, dict] = {}
    rank = 0
    for row in rows:
        r = {c: domain.coerce(v) for c, v in row.items() if domain.coerce(v) != domain.zero}
        while r:
            col = min(r, key=col_key)
            piv = pivots.get(col)
            if piv is None:
                inv = domain.inv(r[col])
                pivots[col] = {c: domain.mul(inv, v) for c, v in r.items()}
                rank += 1
                break
            factor = r[col]
            for c, v in piv.items():
                new = domain.sub(r.get(c, domain.zero), domain.mul(factor, v))
                if new == domain.zero:
                    r.pop(c, None)
                else:
                    r[c] = new
    return rank


def in_row_span(rows: list[dict], probe: dict, domain: Domain,
                col_key: Callable[[Hashable], object] = lambda c: c) -> bool:
    base = rank_of_rows(rows, domain, col_key)
    return rank_of_rows(rows + [probe], domain, col_key) == base
