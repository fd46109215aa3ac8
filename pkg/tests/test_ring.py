from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dgb.ring import (
    ContextError,
    Monomial,
    Polynomial,
    Ranking,
    RingContext,
    ZeroPolynomialError,
    add,
    apply_shift,
    compare,
    leading_term,
    monomials_up_to,
    scale,
)
from util import mono, poly


def all_monomials(n, m, degree):
    return [Monomial(k, e) for k in range(m) for e in monomials_up_to(n, degree)]


def all_rankings(n, m):
    for scheme in ("degrevlex", "lex"):
        for order in permutations(range(n)):
            for indets in permutations(range(m)):
                yield Ranking(scheme, order, indets)


def unit(n, i):
    return tuple(int(j == i) for j in range(n))


def test_ring_context_validation():
    with pytest.raises(ValueError):
        RingContext(("x", "x"), ("u",))
    with pytest.raises(ValueError):
        RingContext((), ("u",))
    ctx = RingContext.generic(3, 2)
    assert (ctx.n, ctx.m) == (3, 2)


def test_compare_toric_degrees(ring4):
    ctx, r = ring4
    assert compare(r, mono(7, 0, 0, 0), mono(0, 2, 1, 0)) == 1
    assert compare(r, mono(0, 2, 1, 0), mono(7, 0, 0, 0)) == -1


def test_compare_reflexive(ring4):
    _, r = ring4
    u = mono(1, 2, 3, 4)
    assert compare(r, u, u) == 0


def test_compare_context_mismatch(ring4):
    _, r = ring4
    with pytest.raises(ContextError):
        compare(r, mono(1, 0, 0, 0), mono(1, 0))


def test_degrevlex_two_differences():
    ctx = RingContext.generic(2)
    r = Ranking.degrevlex(ctx)
    ms = [mono(0, 2), mono(2, 0), mono(1, 1)]
    assert sorted(ms, key=r.key, reverse=True) == [mono(2, 0), mono(1, 1), mono(0, 2)]


def test_degrevlex_tiebreak_is_reverse_lex():
    ctx = RingContext.generic(4)
    r = Ranking.degrevlex(ctx)
    # the last difference decides: smaller power of w ranks higher
    assert compare(r, mono(0, 4, 0, 0), mono(1, 0, 1, 2)) == 1


@pytest.mark.parametrize("n,m", [(1, 1), (2, 2), (3, 1), (3, 2)])
def test_ranking_axioms_exhaustive(n, m):
    monos = all_monomials(n, m, 3)
    for r in all_rankings(n, m):
        keys = {r.key(u) for u in monos}
        assert len(keys) == len(monos)  # strict total order
        for u in monos:
            for i in range(n):
                assert compare(r, u.shifted(unit(n, i)), u) == 1
        for u in monos:
            for v in monos:
                c = compare(r, u, v)
                assert c == -compare(r, v, u)
                for i in range(n):
                    s = unit(n, i)
                    assert compare(r, u.shifted(s), v.shifted(s)) == c


def test_orderly_and_elimination_properties():
    n, m = 3, 2
    monos = all_monomials(n, m, 3)
    for r in all_rankings(n, m):
        for u in monos:
            for v in monos:
                if r.scheme == "degrevlex" and u.degree > v.degree:
                    assert compare(r, u, v) == 1
                if r.scheme == "lex":
                    pu = r.indeterminate_order.index(u.indeterminate)
                    pv = r.indeterminate_order.index(v.indeterminate)
                    if pu < pv:
                        assert compare(r, u, v) == 1


def test_apply_shift_identity(toric):
    _, _, F = toric
    assert apply_shift((0, 0, 0, 0), F[2]) == F[2]


def test_apply_shift_toric_generator(toric):
    ctx, _, F = toric
    expected = poly(ctx, (1, (4, 1, 0, 0)), (-1, (1, 0, 1, 1)))
    assert apply_shift((1, 0, 0, 0), F[2]) == expected


def test_leading_term_examples(toric):
    ctx, r, F = toric
    assert leading_term(F[0], r) == (1, mono(7, 0, 0, 0))
    single = poly(ctx, (Fraction(-5, 3), (0, 1, 0, 2)))
    assert leading_term(single, r) == (Fraction(-5, 3), mono(0, 1, 0, 2))
    with pytest.raises(ZeroPolynomialError):
        leading_term(Polynomial.zero(ctx), r)


def test_leading_term_elimination():
    ctx = RingContext.generic(1, 2)
    r = Ranking.lex(ctx, indet_order=[1, 0])
    f = poly(ctx, (1, (1,), 0), (1, (0,), 1))
    assert leading_term(f, r) == (1, Monomial(1, (0,)))


def test_add_and_scale(toric):
    ctx, _, F = toric
    f = F[0]
    assert not add(f, scale(-1, f))
    assert not scale(0, f)
    first = add(poly(ctx, (1, (7, 0, 0, 0))), poly(ctx, (-1, (0, 2, 1, 0))))
    assert first == f


def test_polynomial_combines_duplicates():
    ctx = RingContext.generic(2)
    p = Polynomial(ctx, [(mono(1, 0), 1), (mono(1, 0), 1), (mono(1, 0), -2)])
    assert not p
    with pytest.raises(ContextError):
        Polynomial(ctx, {mono(1, 0, 0): 1})


def test_context_mismatch_add():
    a = Polynomial.monomial(RingContext.generic(2), 0, (1, 0))
    b = Polynomial.monomial(RingContext.generic(3), 0, (1, 0, 0))
    with pytest.raises(ContextError):
        a + b


# property tests over random polynomials, n <= 3

CTX = RingContext.generic(3, 2)
RANK = Ranking.degrevlex(CTX, order=[2, 0, 1], indet_order=[1, 0])

exps = st.tuples(*[st.integers(0, 4)] * 3)
terms = st.lists(
    st.tuples(st.integers(0, 1), exps, st.fractions(min_value=-5, max_value=5, max_denominator=7)),
    max_size=5,
)
polys = terms.map(lambda ts: Polynomial(CTX, [(Monomial(k, e), c) for k, e, c in ts]))


@given(polys, polys, exps)
def test_shift_is_additive(f, g, gamma):
    assert apply_shift(gamma, f + g) == apply_shift(gamma, f) + apply_shift(gamma, g)


@given(polys, exps, exps)
def test_shift_is_an_action(f, gamma, delta):
    total = tuple(a + b for a, b in zip(gamma, delta))
    assert apply_shift(gamma, apply_shift(delta, f)) == apply_shift(total, f)


@given(polys, exps)
def test_shift_commutes_with_lm(f, gamma):
    if f:
        assert apply_shift(gamma, f).lm(RANK) == f.lm(RANK).shifted(gamma)


@given(polys, polys, st.fractions(max_denominator=9))
@settings(max_examples=50)
def test_arithmetic_round_trip(f, g, c):
    assert (f + g) - g == f
    if c:
        assert scale(1 / c, scale(c, f)) == f
    assert all(v != 0 for v in (f + g).terms.values())
