"""Linear difference polynomials over a ground difference field.

A monomial ``theta^mu o y^k`` is stored as ``Monomial(k, mu)`` with a 0-based
indeterminate index and an exponent tuple.  Coefficients live in a ground
difference field; the default is the rationals with trivial shift action.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Iterator, NamedTuple

ExponentVector = tuple  # tuple[int, ...], nonnegative

# gmpy2's mpq is ~10x faster than Fraction; DGB_PURE_PYTHON=1 forces Fraction.
if os.environ.get("DGB_PURE_PYTHON", "") not in ("", "0"):
    Rational = Fraction
else:
    try:
        from gmpy2 import mpq as Rational
    except ImportError:  # pragma: no cover
        Rational = Fraction


class ContextError(ValueError):
    """Objects from different rings were combined."""


class ZeroPolynomialError(ValueError):
    """An operation defined only on nonzero polynomials got zero."""


class ConstantField:
    """Exact rationals on which every shift acts as the identity."""

    trivial_shift = True

    def convert(self, a):
        return Rational(a)

    def shift(self, a, gamma: ExponentVector):
        return a

    def __eq__(self, other):
        return type(other) is type(self)

    def __hash__(self):
        return hash(type(self))

    def __repr__(self):
        return "ConstantField()"


@dataclass(frozen=True)
class RingContext:
    """Names of the differences theta_1..theta_n and indeterminates y^1..y^m."""

    difference_names: tuple
    indeterminate_names: tuple
    field: ConstantField = field(default_factory=ConstantField, compare=True)

    def __post_init__(self):
        object.__setattr__(self, "difference_names", tuple(self.difference_names))
        object.__setattr__(self, "indeterminate_names", tuple(self.indeterminate_names))
        if not self.difference_names or not self.indeterminate_names:
            raise ValueError("need at least one difference and one indeterminate")
        for names in (self.difference_names, self.indeterminate_names):
            if len(set(names)) != len(names):
                raise ValueError(f"duplicate names in {names}")

    @classmethod
    def generic(cls, n: int, m: int = 1) -> RingContext:
        """Ring with differences ``t1..tn`` and indeterminates ``y1..ym`` (or ``y``)."""
        diffs = tuple(f"t{i + 1}" for i in range(n))
        indets = ("y",) if m == 1 else tuple(f"y{j + 1}" for j in range(m))
        return cls(diffs, indets)

    @property
    def n(self) -> int:
        return len(self.difference_names)

    @property
    def m(self) -> int:
        return len(self.indeterminate_names)


class Monomial(NamedTuple):
    """``theta^exponent o y^indeterminate`` (0-based indeterminate)."""

    indeterminate: int
    exponent: ExponentVector

    @property
    def degree(self) -> int:
        return sum(self.exponent)

    def deg(self, i: int) -> int:
        return self.exponent[i]

    def shifted(self, gamma: ExponentVector) -> Monomial:
        return Monomial(self.indeterminate, tuple(a + b for a, b in zip(self.exponent, gamma)))

    def quotient(self, other: Monomial):
        """Return gamma with ``self = theta^gamma o other``, or None."""
        if self.indeterminate != other.indeterminate:
            return None
        gamma = tuple(a - b for a, b in zip(self.exponent, other.exponent))
        if min(gamma) < 0:
            return None
        return gamma


def total_degree(mu: ExponentVector) -> int:
    return sum(mu)


ORDERLY = "degrevlex"
ELIMINATION = "lex"
SCHEMES = (ORDERLY, ELIMINATION)


@dataclass(frozen=True)
class Ranking:
    """A ranking on difference monomials.

    ``degrevlex`` compares total degree, then reverse-lexicographically along
    ``difference_order`` (greatest difference first), then indeterminates.
    ``lex`` compares indeterminates first, then exponents lexicographically.
    Both orders list indices from greatest to smallest.
    """

    scheme: str
    difference_order: tuple
    indeterminate_order: tuple

    def __post_init__(self):
        if self.scheme not in SCHEMES:
            raise ValueError(f"unknown ranking scheme {self.scheme!r}")
        object.__setattr__(self, "difference_order", tuple(self.difference_order))
        object.__setattr__(self, "indeterminate_order", tuple(self.indeterminate_order))
        if sorted(self.difference_order) != list(range(len(self.difference_order))):
            raise ValueError("difference_order must be a permutation")
        if sorted(self.indeterminate_order) != list(range(len(self.indeterminate_order))):
            raise ValueError("indeterminate_order must be a permutation")

    @classmethod
    def degrevlex(cls, ctx: RingContext, order=None, indet_order=None) -> Ranking:
        return cls(ORDERLY, order or range(ctx.n), indet_order or range(ctx.m))

    @classmethod
    def lex(cls, ctx: RingContext, order=None, indet_order=None) -> Ranking:
        return cls(ELIMINATION, order or range(ctx.n), indet_order or range(ctx.m))

    @property
    def n(self) -> int:
        return len(self.difference_order)

    @cached_property
    def _indet_weight(self) -> dict:
        m = len(self.indeterminate_order)
        return {k: m - pos for pos, k in enumerate(self.indeterminate_order)}

    @cached_property
    def key(self) -> Callable[[Monomial], tuple]:
        """Flat integer sort key: ``key(u) > key(v)`` iff ``u`` ranks above ``v``."""
        perm = self.difference_order
        rev = tuple(reversed(perm))
        weight = self._indet_weight
        if self.scheme == ORDERLY:
            def key(u):
                e = u.exponent
                return (sum(e), *[-e[i] for i in rev], weight[u.indeterminate])
        else:
            def key(u):
                e = u.exponent
                return (weight[u.indeterminate], *[e[i] for i in perm])
        return key

    def check(self, ctx: RingContext) -> None:
        if self.n != ctx.n or len(self.indeterminate_order) != ctx.m:
            raise ContextError("ranking does not match ring")


def compare(r: Ranking, u: Monomial, v: Monomial) -> int:
    """Return -1, 0 or 1 as ``u`` ranks below, equal to or above ``v``."""
    if len(u.exponent) != len(v.exponent):
        raise ContextError("monomials from different rings")
    if u == v:
        return 0
    return 1 if r.key(u) > r.key(v) else -1


class Polynomial:
    """Immutable linear difference polynomial: a map monomial -> nonzero coefficient."""

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: RingContext, terms=None):
        self.ctx = ctx
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            conv = ctx.field.convert
            for mono, c in items:
                mono = Monomial(mono[0], tuple(mono[1]))
                if not 0 <= mono.indeterminate < ctx.m or len(mono.exponent) != ctx.n:
                    raise ContextError(f"monomial {mono} does not belong to ring")
                if min(mono.exponent, default=0) < 0:
                    raise ValueError(f"negative exponent in {mono}")
                c = clean.get(mono, 0) + conv(c)
                if c:
                    clean[mono] = c
                else:
                    clean.pop(mono, None)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ctx, terms: dict) -> Polynomial:
        # terms already canonical: Monomial keys, nonzero Fraction values
        p = cls.__new__(cls)
        p.ctx = ctx
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, ctx, k: int, mu, c=1) -> Polynomial:
        return cls(ctx, {Monomial(k, tuple(mu)): c})

    @classmethod
    def zero(cls, ctx) -> Polynomial:
        return cls._raw(ctx, {})

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator:
        return iter(self.terms.items())

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def _check(self, other: Polynomial):
        if self.ctx != other.ctx:
            raise ContextError("polynomials from different rings")

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                del out[mono]
        return Polynomial._raw(self.ctx, out)

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(self.ctx, {u: -c for u, c in self.terms.items()})

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def scale(self, c) -> Polynomial:
        c = self.ctx.field.convert(c)
        if not c:
            return Polynomial.zero(self.ctx)
        return Polynomial._raw(self.ctx, {u: c * a for u, a in self.terms.items()})

    def shift(self, gamma: ExponentVector) -> Polynomial:
        gamma = tuple(gamma)
        if len(gamma) != self.ctx.n or min(gamma) < 0:
            raise ContextError(f"bad shift exponent {gamma}")
        sh = self.ctx.field.shift
        return Polynomial._raw(
            self.ctx, {u.shifted(gamma): sh(c, gamma) for u, c in self.terms.items()}
        )

    def leading_term(self, r: Ranking):
        if not self.terms:
            raise ZeroPolynomialError("leading term of the zero polynomial")
        u = max(self.terms, key=r.key)
        return self.terms[u], u

    def lm(self, r: Ranking) -> Monomial:
        return self.leading_term(r)[1]

    def lc(self, r: Ranking):
        return self.leading_term(r)[0]

    def monic(self, r: Ranking) -> Polynomial:
        c = self.lc(r)
        if c == 1:
            return self
        inv = 1 / c
        return Polynomial._raw(self.ctx, {u: a * inv for u, a in self.terms.items()})

    def sorted_terms(self, r: Ranking) -> list:
        """Terms descending by ``r``."""
        return sorted(self.terms.items(), key=lambda t: r.key(t[0]), reverse=True)

    def __repr__(self):
        body = " + ".join(
            f"{c}*{self.ctx.indeterminate_names[u.indeterminate]}{list(u.exponent)}"
            for u, c in self.terms.items()
        )
        return f"Polynomial({body or '0'})"


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def scale(c, f: Polynomial) -> Polynomial:
    return f.scale(c)


def apply_shift(gamma: ExponentVector, f: Polynomial) -> Polynomial:
    return f.shift(gamma)


def leading_term(f: Polynomial, r: Ranking):
    """``(lc(f), lm(f))`` for nonzero ``f``."""
    return f.leading_term(r)


def monomials_up_to(n: int, degree: int) -> list:
    """All exponent vectors in ``n`` variables of total degree at most ``degree``."""
    out = [()]
    for _ in range(n):
        out = [e + (a,) for e in out for a in range(degree + 1) if sum(e) + a <= degree]
    return out


def canonical_basis(polys: Iterable[Polynomial], r: Ranking) -> list:
    """Monic copies sorted descending by leading monomial, then by the tail."""
    monic = [p.monic(r) for p in polys if p]
    return sorted(monic, key=lambda p: poly_sort_key(p, r), reverse=True)


def poly_sort_key(p: Polynomial, r: Ranking) -> tuple:
    """Total order on polynomials: descending term lists compared lexicographically."""
    return tuple((r.key(u), c) for u, c in p.sorted_terms(r))

