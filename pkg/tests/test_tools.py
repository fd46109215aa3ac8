import random

import pytest

from dgb import oracle
from dgb.engine import Basis, complete
from dgb.ring import Polynomial, Ranking, RingContext
from dgb.testing import random_polynomial
from dgb.tools import (
    PreconditionError,
    extract_reduced_gb,
    full_reduce,
    is_member,
    minimal_heads,
    unique_reductor_count,
    verify,
)
from util import mono, poly


def toric_gb(ctx):
    return [
        poly(ctx, (1, (7, 0, 0, 0)), (-1, (0, 2, 1, 0))),
        poly(ctx, (1, (0, 4, 0, 0)), (-1, (1, 0, 1, 2))),
        poly(ctx, (1, (4, 0, 0, 1)), (-1, (0, 3, 0, 0))),
        poly(ctx, (1, (3, 1, 0, 0)), (-1, (0, 0, 1, 1))),
    ]


def test_verify_toric(toric):
    _, r, F = toric
    report = verify(complete(F, r), F)
    assert report.ok
    assert report.counterexample is None
    assert all(line.endswith("True") for line in report.lines())


def test_verify_singleton():
    ctx = RingContext.generic(3)
    f = poly(ctx, (1, (2, 0, 1)), (5, (0, 0, 0)))
    assert verify(complete([f], Ranking.degrevlex(ctx)), [f]).ok


def test_verify_flags_missing_element(toric):
    _, r, F = toric
    full = complete(F, r).basis
    # dropping theta_x^4 theta_y - ... breaks the Janet-like property
    broken = Basis.from_polys([g for g in full if g.lm(r) != mono(4, 1, 0, 0)], r)
    report = verify(broken, F)
    assert not report.condition4_ok
    g, beta, rem = report.counterexample
    assert rem and g in broken.elements.values() and sum(beta) == 1
    assert not report.ok


def test_verify_flags_uncovered_input(toric):
    ctx, r, F = toric
    basis = Basis.from_polys([F[0]], r)
    report = verify(basis, F)
    assert report.condition4_ok
    assert not report.coverage_ok
    assert F[1] in report.uncovered


def test_extract_reduced_gb_toric(toric):
    ctx, r, F = toric
    assert extract_reduced_gb(complete(F, r)) == sorted(
        toric_gb(ctx), key=lambda p: r.key(p.lm(r)), reverse=True
    )


def test_extract_reduced_gb_singleton():
    ctx = RingContext.generic(2, 2)
    r = Ranking.lex(ctx)
    f = poly(ctx, (2, (1, 1), 0), (4, (0, 3), 1))
    assert extract_reduced_gb(complete([f], r)) == [f.monic(r)]


def test_extract_reduced_gb_precondition(toric):
    _, r, F = toric
    with pytest.raises(PreconditionError):
        extract_reduced_gb(Basis.from_polys(F, r))


def test_is_member_toric(toric):
    ctx, r, F = toric
    G = complete(F, r)
    assert is_member(Polynomial.zero(ctx), G)
    assert is_member(toric_gb(ctx)[1], G)
    assert is_member(F[2].shift((2, 0, 3, 1)).scale(7) - F[0].shift((0, 1, 0, 0)), G)
    y = poly(ctx, (1, (0, 0, 0, 0)))
    assert not is_member(y, G)
    assert not oracle.member(y, F, r)


@pytest.mark.parametrize("seed", range(10))
def test_membership_invariant_under_scaling_and_shift(seed, toric):
    ctx, r, F = toric
    rng = random.Random(seed)
    G = complete(F, r)
    f = random_polynomial(rng, ctx, max_degree=6, max_terms=3)
    if rng.random() < 0.5:
        f = f + F[rng.randrange(3)].shift(tuple(rng.randint(0, 2) for _ in range(4)))
    expected = is_member(f, G)
    assert expected == oracle.member(f, F, r)
    gamma = tuple(rng.randint(0, 2) for _ in range(4))
    assert is_member(f.scale(rng.choice([-3, 2, 5])), G) == expected
    if expected:
        assert is_member(f.shift(gamma), G)


def test_full_reduce_and_minimal_heads(toric):
    ctx, r, F = toric
    assert not full_reduce(F[0].shift((1, 2, 0, 0)), F, r)
    heads = [g.lm(r) for g in minimal_heads(complete(F, r).basis, r)]
    assert mono(4, 1, 0, 0) not in heads and len(heads) == 4


def test_unique_reductor_count(toric):
    _, r, F = toric
    basis = complete(F, r).to_basis()
    rng = random.Random(3)
    for _ in range(300):
        u = mono(*(rng.randint(0, 9) for _ in range(4)))
        assert unique_reductor_count(basis, u) <= 1
