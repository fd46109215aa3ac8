"""Seeded random difference systems for tests and the acceptance suite."""

from __future__ import annotations

import random

from .ring import Monomial, Polynomial, Ranking, Rational, RingContext, monomials_up_to


def random_ranking(rng: random.Random, ctx: RingContext, scheme=None) -> Ranking:
    scheme = scheme or rng.choice(["degrevlex", "lex"])
    order = list(range(ctx.n))
    indets = list(range(ctx.m))
    rng.shuffle(order)
    rng.shuffle(indets)
    return Ranking(scheme, order, indets)


def random_polynomial(rng, ctx, max_degree=4, max_terms=4, coeffs=range(-3, 4)) -> Polynomial:
    """Possibly zero polynomial with up to ``max_terms`` terms."""
    exps = monomials_up_to(ctx.n, max_degree)
    nonzero = [c for c in coeffs if c]
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        u = Monomial(rng.randrange(ctx.m), rng.choice(exps))
        terms[u] = Rational(rng.choice(nonzero))
    return Polynomial(ctx, terms)


def random_system(rng, max_n=3, max_m=2, max_degree=4, max_gens=4, max_terms=4):
    """``(ctx, ranking, generators)`` with at least one nonzero generator."""
    ctx = RingContext.generic(rng.randint(1, max_n), rng.randint(1, max_m))
    r = random_ranking(rng, ctx)
    gens = [
        random_polynomial(rng, ctx, max_degree, max_terms)
        for _ in range(rng.randint(1, max_gens))
    ]
    return ctx, r, gens


def random_systems(count, seed=0, **kw):
    rng = random.Random(seed)
    return [random_system(rng, **kw) for _ in range(count)]


def toric_system():
    """The four-difference toric example: ``x^7 - y^2 z``, ``x^4 w - y^3``, ``x^3 y - z w``."""
    ctx = RingContext(("x", "y", "z", "w"), ("u",))
    r = Ranking.degrevlex(ctx)

    def binom(a, b):
        return Polynomial(ctx, {Monomial(0, a): 1, Monomial(0, b): -1})

    gens = [
        binom((7, 0, 0, 0), (0, 2, 1, 0)),
        binom((4, 0, 0, 1), (0, 3, 0, 0)),
        binom((3, 1, 0, 0), (0, 0, 1, 1)),
    ]
    return ctx, r, gens
