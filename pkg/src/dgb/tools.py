"""Reduced Groebner bases, ideal membership and basis verification."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .division import cones_overlap, j_divides
from .engine import Basis, normal_form
from .ring import Polynomial, Ranking, canonical_basis


class PreconditionError(ValueError):
    """Input basis does not satisfy the Janet-like characterization."""


@dataclass
class VerificationReport:
    condition4_ok: bool
    cone_disjointness_ok: bool
    coverage_ok: bool
    counterexample: Optional[tuple] = None  # (element, prolongation, remainder)
    uncovered: list = field(default_factory=list)
    overlapping: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.condition4_ok and self.cone_disjointness_ok and self.coverage_ok

    def lines(self) -> list:
        out = [
            f"condition4_ok = {self.condition4_ok}",
            f"cone_disjointness_ok = {self.cone_disjointness_ok}",
            f"coverage_ok = {self.coverage_ok}",
        ]
        if self.counterexample is not None:
            g, beta, rem = self.counterexample
            out.append(f"counterexample: shift {list(beta)} of {g!r} leaves {rem!r}")
        return out


def _as_basis(G, use_tree=True) -> Basis:
    if isinstance(G, Basis):
        return G
    return G.to_basis(use_tree)


def verify(G, F_input: Iterable[Polynomial] = (), use_tree: bool = True) -> VerificationReport:
    """Check every prolongation by a difference power J-reduces to zero.

    Also checks pairwise disjointness of the J-cones and that every input's
    leading monomial is a shift of some basis leading monomial.
    """
    basis = _as_basis(G, use_tree)
    r = basis.ranking
    counterexample = None
    for g, beta, prolongation in basis.prolongations():
        rem = normal_form(prolongation, basis)
        if rem:
            counterexample = (g, beta, rem)
            break

    records = list(basis.records.values())
    overlapping = [
        (a.owner, b.owner)
        for i, a in enumerate(records)
        for b in records[i + 1:]
        if cones_overlap(a, b)
    ]

    heads = list(basis.elements)
    uncovered = []
    for f in F_input:
        if not f:
            continue
        u = f.lm(r)
        if not any(u.quotient(v) is not None for v in heads):
            uncovered.append(f)

    return VerificationReport(
        condition4_ok=counterexample is None,
        cone_disjointness_ok=not overlapping,
        coverage_ok=not uncovered,
        counterexample=counterexample,
        uncovered=uncovered,
        overlapping=overlapping,
    )


def full_reduce(p: Polynomial, divisors: Iterable[Polynomial], r: Ranking) -> Polynomial:
    """Normal form of ``p`` under ordinary shift-division by ``divisors``.

    Every term is reduced, greatest first; among several divisors the one
    listed first wins.
    """
    divs = [(g.lm(r), g) for g in divisors if g]
    key = r.key
    h = dict(p.terms)
    heap = [(tuple(-x for x in key(u)), u) for u in h]
    heapq.heapify(heap)
    out = {}
    while heap:
        _, u = heapq.heappop(heap)
        b = h.pop(u, None)
        if b is None:
            continue
        for v, g in divs:
            gamma = u.quotient(v)
            if gamma is not None:
                break
        else:
            out[u] = b
            continue
        factor = b / g.terms[v]
        for w0, a in g.terms.items():
            if w0 == v:
                continue
            w = w0.shifted(gamma)
            c = h.get(w, 0) - factor * a
            if w not in h:
                heapq.heappush(heap, (tuple(-x for x in key(w)), w))
            if c:
                h[w] = c
            else:
                h.pop(w, None)
    return Polynomial._raw(p.ctx, out)


def tail_reduce(polys: Iterable[Polynomial], r: Ranking) -> list:
    """Monic copies whose tails are fully reduced modulo the whole set."""
    polys = [p.monic(r) for p in polys if p]
    out = []
    for i, p in enumerate(polys):
        c, u = p.leading_term(r)
        tail = Polynomial._raw(p.ctx, {v: a for v, a in p.terms.items() if v != u})
        rest = polys[:i] + polys[i + 1:]
        head = Polynomial._raw(p.ctx, {u: c})
        out.append(head + full_reduce(tail, rest, r))
    return canonical_basis(out, r)


def minimal_heads(polys: Iterable[Polynomial], r: Ranking) -> list:
    """Elements whose leading monomial is not a proper shift of another's."""
    polys = list(polys)
    heads = [p.lm(r) for p in polys]
    keep = []
    for p, u in zip(polys, heads):
        if not any(v != u and u.quotient(v) is not None for v in heads):
            keep.append(p)
    return keep


def extract_reduced_gb(G, check: bool = True) -> list:
    """Reduced Groebner basis of ``Id(G)`` from a completed Janet-like basis."""
    basis = _as_basis(G)
    if check:
        report = verify(basis)
        if not report.condition4_ok:
            raise PreconditionError("basis fails the Janet-like characterization")
    r = basis.ranking
    return tail_reduce(minimal_heads(basis.elements.values(), r), r)


def is_member(f: Polynomial, G) -> bool:
    """True iff ``f`` J-reduces to zero modulo the completed basis ``G``."""
    if not f:
        return True
    return not normal_form(f, _as_basis(G))


def unique_reductor_count(basis: Basis, u) -> int:
    """Number of basis elements whose leading monomial J-divides ``u``."""
    return sum(
        1 for g_lm, rec in basis.records.items() if j_divides(g_lm, rec, u) is not None
    )

