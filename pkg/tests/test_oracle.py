from itertools import permutations

import pytest

from dgb import oracle
from dgb.engine import complete
from dgb.ring import ConstantField, Monomial, Ranking, RingContext, compare, monomials_up_to
from dgb.tools import extract_reduced_gb
from util import poly


def test_translation_of_toric_generator(toric):
    ctx, _, F = toric
    e = oracle.to_module(F[0])
    assert e == {(0, (7, 0, 0, 0)): 1, (0, (0, 2, 1, 0)): -1}
    assert oracle.components(e, 1) == [{(7, 0, 0, 0): 1, (0, 2, 1, 0): -1}]


def test_translation_round_trip():
    ctx = RingContext.generic(2, 3)
    f = poly(ctx, (2, (1, 0), 0), (-1, (0, 3), 2), (5, (0, 0), 1))
    assert oracle.from_module(oracle.to_module(f), ctx) == f
    comps = oracle.components(oracle.to_module(f), 3)
    assert comps[1] == {(0, 0): 5} and len(comps) == 3


def test_nontrivial_shift_rejected():
    class Shifting(ConstantField):
        trivial_shift = False

    ctx = RingContext(("x",), ("u",), Shifting())
    with pytest.raises(oracle.UnsupportedField):
        oracle.to_module(poly(ctx, (1, (1,))))


@pytest.mark.parametrize("scheme", ["degrevlex", "lex"])
def test_module_order_agrees_with_ranking(scheme):
    n, m = 3, 2
    monos = [Monomial(k, e) for k in range(m) for e in monomials_up_to(n, 4)]
    for order in permutations(range(n)):
        for indets in permutations(range(m)):
            r = Ranking(scheme, order, indets)
            mo = oracle.module_order_from_ranking(r)
            for u in monos[::3]:
                for v in monos:
                    got = mo.cmp((u.indeterminate, u.exponent), (v.indeterminate, v.exponent))
                    assert got == compare(r, u, v)


def test_singleton():
    ctx = RingContext.generic(2)
    r = Ranking.degrevlex(ctx)
    f = poly(ctx, (3, (1, 1)), (-6, (0, 1)))
    assert oracle.reduced_gb([f], r) == [f.monic(r)]


def test_toric_reduced_gb(toric):
    ctx, r, F = toric
    gb = oracle.reduced_gb(F, r)
    assert len(gb) == 4
    assert poly(ctx, (1, (0, 4, 0, 0)), (-1, (1, 0, 1, 2))) in gb


@pytest.mark.parametrize("idx", range(30))
def test_engine_agrees_with_oracle(idx, small_systems):
    _, r, F = small_systems[idx]
    assert extract_reduced_gb(complete(F, r)) == oracle.reduced_gb(F, r)
