import random

from hypothesis import given, settings
from hypothesis import strategies as st

from raag.graph import complete_graph, empty_graph, path_graph
from raag.magnus import (dimension_subgroup_membership, injectivity_witness,
                         leading_monomial_char_p, magnus, magnus_exp,
                         magnus_span_rank, omega_p_valuation, omega_valuation)
from raag.series import Fp, Q, Z, is_grouplike
from raag.words import (IDENTITY, GroupWord, Syllable, ball, invert, multiply,
                        parse_word, reduce_word)

from conftest import random5_graph

P3 = path_graph(3)
R5 = random5_graph()

syllables_st = st.lists(
    st.tuples(st.sampled_from(["a", "b", "c", "d", "e"]),
              st.integers(min_value=-3, max_value=3).filter(lambda e: e != 0)),
    max_size=4,
)


def test_generator_image():
    x = magnus(parse_word("a", P3), P3, Z, 4)
    assert x.constant_term() == 1
    assert x.coefficient(("a",)) == 1
    assert len(x.sorted_terms()) == 2


def test_inverse_image_is_geometric_series():
    x = magnus(parse_word("a^-1", P3), P3, Z, 5)
    for k in range(5):
        assert x.coefficient(("a",) * k) == (-1) ** k


def test_positive_power_binomials():
    from math import comb
    x = magnus(parse_word("a^3", P3), P3, Z, 4)
    for k in range(4):
        assert x.coefficient(("a",) * k) == comb(3, k)


@settings(max_examples=40, deadline=None)
@given(syllables_st, syllables_st)
def test_multiplicative(s1, s2):
    w1 = reduce_word(s1, R5)
    w2 = reduce_word(s2, R5)
    prod = multiply(w1, w2, R5)
    m = lambda w: magnus(w, R5, Z, 4)
    assert m(prod) == m(w1) * m(w2)


@settings(max_examples=40, deadline=None)
@given(syllables_st)
def test_inverse_maps_to_inverse(sylls):
    w = reduce_word(sylls, R5)
    one = magnus(IDENTITY, R5, Z, 4)
    assert magnus(w, R5, Z, 4) * magnus(invert(w, R5), R5, Z, 4) == one


def test_magnus_exp_grouplike():
    w = parse_word("a^2 c^-1", P3)
    assert is_grouplike(magnus_exp(w, P3, 5))


def test_omega_valuation_examples():
    g = empty_graph(2)
    # [a,b] has valuation 2 in the free group
    comm = parse_word("a b a^-1 b^-1", g)
    v = omega_valuation(comm, g, Q, 6)
    assert v.decided and v.value == 2
    v = omega_valuation(parse_word("a", g), g, Q, 6)
    assert v.decided and v.value == 1
    v = omega_valuation(IDENTITY, g, Q, 6)
    assert not v.decided  # identity: valuation is +infinity at any order


def test_omega_p_valuation_weights_coefficients():
    g = empty_graph(2)
    # mu(a^2)-1 = 2a + a^2: over p=2 the weight of 2a is 1+1=2, of a^2 is 2
    v = omega_p_valuation(parse_word("a^2", g), g, 2, 6)
    assert v.decided and v.value == 2
    # over p=3, the 2a term has weight 1
    v = omega_p_valuation(parse_word("a^2", g), g, 3, 6)
    assert v.decided and v.value == 1


def test_dimension_subgroup_membership():
    g = empty_graph(2)
    comm = parse_word("a b a^-1 b^-1", g)
    assert dimension_subgroup_membership(comm, g, 2, Q, 6) == "in"
    assert dimension_subgroup_membership(comm, g, 3, Q, 6) == "out"
    assert dimension_subgroup_membership(IDENTITY, g, 5, Q, 6) == "in"
    # truncation order too low to decide for a trivial-looking element
    assert dimension_subgroup_membership(IDENTITY, g, 8, Q, 6) == "undecided"


def test_leading_monomial_simple_cases():
    g = empty_graph(2)
    # a^p over F_p: leading monomial a^p with coefficient 1
    for p in (2, 3, 5):
        lm = leading_monomial_char_p(parse_word(f"a^{p}", g), g, p)
        assert lm.trace == ("a",) * p and lm.coefficient % p == 1
    # a^6 = a^{2*3}: over F_3 leading monomial (a^3)^... s=1, l=2 -> a^3 coeff 2
    lm = leading_monomial_char_p(parse_word("a^6", g), g, 3)
    assert lm.trace == ("a",) * 3 and lm.coefficient % 3 == 2


def test_leading_monomial_matches_brute_force():
    rng = random.Random(7)
    words = list(ball(R5, 2))
    for _ in range(30):
        sylls = [(rng.choice(R5.vertices), rng.choice([-2, -1, 1, 2, 3]))
                 for _ in range(rng.randrange(1, 4))]
        words.append(reduce_word(sylls, R5))
    from oracles import leading_monomial_bruteforce
    for p in (2, 3):
        for w in words:
            if w == IDENTITY:
                continue
            lm = leading_monomial_char_p(w, R5, p)
            trace, coeff = leading_monomial_bruteforce(w, R5, p, len(lm.trace) + 2)
            assert trace == lm.trace
            assert coeff == lm.coefficient % p


def test_span_rank_equals_trace_count():
    from raag.words import enumerate_traces
    ranks = magnus_span_rank(P3, 2, 4, Q)
    assert ranks == [len(enumerate_traces(P3, n)) for n in range(1, 4)]


def test_injectivity_witness_none_at_safe_order():
    assert injectivity_witness(P3, 2, 6, Q) is None
    assert injectivity_witness(P3, 2, 6, Fp(2)) is None
