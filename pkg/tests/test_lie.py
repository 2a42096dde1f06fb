import pytest

from raag.graph import complete_graph, empty_graph, path_graph
from raag.lie import (bracket_span_rank, lambda_dims, left_normed_brackets,
                      primitivity_check, restricted_span_rank,
                      series_rank_lcs, series_rank_restricted)
from raag.series import DomainError, Fp, Q

from conftest import SUITE, small_suite
from oracles import witt_rank

UPTO = 4


def test_free_group_ranks_are_witt():
    for d in (2, 3):
        g = empty_graph(d)
        got = series_rank_lcs(g, 5).values
        assert got == tuple(witt_rank(d, n) for n in range(1, 6))


def test_abelian_ranks():
    for d in (2, 3, 4):
        g = complete_graph(d)
        assert series_rank_lcs(g, 4).values == (d, 0, 0, 0)


def test_bracket_route_matches_series_route():
    for g in SUITE.values():
        series = series_rank_lcs(g, UPTO).values
        spans = tuple(bracket_span_rank(g, n, Q) for n in range(1, UPTO + 1))
        assert spans == series


def test_e2_reference_values():
    g = empty_graph(2)
    assert series_rank_lcs(g, 5).values == (2, 1, 2, 3, 6)


def test_restricted_routes_agree():
    for g in small_suite().values():
        for p in (2, 3):
            series = series_rank_restricted(g, p, UPTO).values
            spans = tuple(restricted_span_rank(g, n, p)
                          for n in range(1, UPTO + 1))
            assert spans == series


def test_restricted_is_sum_of_lcs_ranks():
    # d_n = sum of b_m over m * p^i = n
    for g in SUITE.values():
        for p in (2, 3, 5):
            b = series_rank_lcs(g, UPTO).values
            d = series_rank_restricted(g, p, UPTO).values
            for n in range(1, UPTO + 1):
                expect, m = 0, n
                while True:
                    expect += b[m - 1]
                    if m % p:
                        break
                    m //= p
                assert d[n - 1] == expect


def test_lambda_dims_partial_sums():
    for g in SUITE.values():
        b = series_rank_lcs(g, UPTO).values
        lam = lambda_dims(g, 3, UPTO).values
        assert lam == tuple(sum(b[:n]) for n in range(1, UPTO + 1))


def test_lambda_dims_constant_for_abelian():
    for d in (2, 3):
        assert lambda_dims(complete_graph(d), 5, 4).values == (d,) * 4


def test_lambda_dims_rejects_p2():
    with pytest.raises(DomainError):
        lambda_dims(path_graph(3), 2, 3)


def test_brackets_antisymmetry_baked_in():
    # degree-2 brackets over empty_graph(2): [a,[b]] = ab - ba
    g = empty_graph(2)
    exps = left_normed_brackets(g, 2)
    target = {("a", "b"): 1, ("b", "a"): -1}
    assert any(dict(e) == target for e in exps)


def test_commuting_bracket_vanishes():
    g = complete_graph(2)
    assert all(not dict(e) for e in left_normed_brackets(g, 2))
    assert bracket_span_rank(g, 2, Q) == 0


def test_primitivity():
    for g in small_suite().values():
        for n in (1, 2, 3):
            assert primitivity_check(g, n, n + 1) is None
