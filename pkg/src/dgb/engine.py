"""Completion to minimal Janet-like (or Janet) bases and J-normal forms."""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .division import (
    DIVISIONS,
    JANET_LIKE,
    JanetTree,
    classify,
    find_reductor,
)
from .ring import Monomial, Polynomial, Ranking, canonical_basis, poly_sort_key

log = logging.getLogger(__name__)

DEFAULT_MAX_ITER = 200_000


class ZeroIdealError(ValueError):
    """Every input polynomial was zero."""


class ResourceCapExceeded(RuntimeError):
    """Completion ran past its iteration cap."""


@dataclass
class Stats:
    reductions: int = 0
    normal_forms: int = 0
    prolongations: int = 0
    queue_peak: int = 0
    rounds: int = 0
    sweeps: int = 0

    def as_dict(self) -> dict:
        return dict(self.__dict__)


class Basis:
    """A set of monic polynomials with distinct leading monomials, indexed for J-reduction.

    Division records are recomputed whenever the set changes; the Janet tree
    is updated in place.  With ``use_tree=False`` reductors are found by a
    linear scan over the records.
    """

    def __init__(self, ranking: Ranking, division: str = JANET_LIKE, use_tree: bool = True):
        if division not in DIVISIONS:
            raise ValueError(f"unknown division {division!r}")
        self.ranking = ranking
        self.division = division
        self.elements = {}  # lm -> polynomial
        self.tree = JanetTree(ranking.n, ranking.difference_order, division) if use_tree else None
        self._records = None

    @classmethod
    def from_polys(cls, polys: Iterable[Polynomial], ranking: Ranking, division=JANET_LIKE, use_tree=True):
        basis = cls(ranking, division, use_tree)
        for p in polys:
            basis.add(p)
        return basis

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements.values())

    @property
    def records(self) -> dict:
        if self._records is None:
            self._records = classify(self.elements, self.ranking.difference_order, self.division)
        return self._records

    def add(self, p: Polynomial) -> Monomial:
        p = p.monic(self.ranking)
        u = p.lm(self.ranking)
        if u in self.elements:
            raise ValueError(f"leading monomial {u} already in basis")
        self.elements[u] = p
        if self.tree is not None:
            self.tree.insert(u, p)
        self._records = None
        return u

    def remove(self, u: Monomial) -> Polynomial:
        p = self.elements.pop(u)
        if self.tree is not None:
            self.tree.remove(u)
        self._records = None
        return p

    def reductor(self, u: Monomial):
        """``(g, gamma)`` with ``u = theta^gamma o lm(g)`` a J-shift, or None."""
        hit = find_reductor(self.tree, self.records, u)
        if hit is None:
            return None
        g_lm, gamma = hit
        return self.elements[g_lm], gamma

    def sorted(self) -> list:
        return canonical_basis(self.elements.values(), self.ranking)

    def prolongations(self) -> list:
        """``(g, beta, theta^beta o g)`` for every ``g`` and difference power ``beta``."""
        n = self.ranking.n
        out = []
        for g in self.sorted():
            rec = self.records[g.lm(self.ranking)]
            for beta in rec.difference_powers(n):
                out.append((g, beta, g.shift(beta)))
        return out


def normal_form(p: Polynomial, basis: Basis, stats: Optional[Stats] = None) -> Polynomial:
    """J-normal form of ``p`` modulo ``basis``.

    Monomials are visited from the greatest down.  A reduction only creates
    monomials below the one it eliminates, so a visited monomial is final.
    """
    r = basis.ranking
    key = r.key
    field_ = p.ctx.field
    h = dict(p.terms)
    heap = [(tuple(-x for x in key(u)), u) for u in h]
    heapq.heapify(heap)
    out = {}
    while heap:
        _, u = heapq.heappop(heap)
        b = h.pop(u, None)
        if b is None:
            continue
        found = basis.reductor(u)
        if found is None:
            out[u] = b
            continue
        g, gamma = found
        lm_g = Monomial(u.indeterminate, tuple(a - c for a, c in zip(u.exponent, gamma)))
        factor = b / field_.shift(g.terms[lm_g], gamma)
        for v, a in g.terms.items():
            if v == lm_g:
                continue
            w = v.shifted(gamma)
            c = h.get(w)
            delta = -factor * field_.shift(a, gamma)
            if c is None:
                h[w] = delta
                heapq.heappush(heap, (tuple(-x for x in key(w)), w))
            elif c + delta:
                h[w] = c + delta
            else:
                del h[w]
        if stats is not None:
            stats.reductions += 1
    if stats is not None:
        stats.normal_forms += 1
    return Polynomial._raw(p.ctx, out)


class _Queue:
    """Pending polynomials popped lowest leading monomial first, as a set."""

    def __init__(self, ranking: Ranking):
        self.ranking = ranking
        self.heap = []
        self.members = set()
        self.seq = 0
        self.peak = 0

    def __len__(self):
        return len(self.heap)

    def push(self, p: Polynomial) -> bool:
        if p in self.members:
            return False
        self.members.add(p)
        heapq.heappush(self.heap, (self.ranking.key(p.lm(self.ranking)), self.seq, p))
        self.seq += 1
        self.peak = max(self.peak, len(self.heap))
        return True

    def pop(self) -> Polynomial:
        _, _, p = heapq.heappop(self.heap)
        self.members.discard(p)
        return p


@dataclass
class BasisResult:
    basis: list
    ranking: Ranking
    division: str
    stats: Stats = field(default_factory=Stats)

    def __len__(self):
        return len(self.basis)

    def to_basis(self, use_tree: bool = True) -> Basis:
        return Basis.from_polys(self.basis, self.ranking, self.division, use_tree)

    def leading_monomials(self) -> list:
        return [g.lm(self.ranking) for g in self.basis]


def complete(
    F: Iterable[Polynomial],
    ranking: Ranking,
    division: str = JANET_LIKE,
    use_tree: bool = True,
    max_iter: int = DEFAULT_MAX_ITER,
    criteria: bool = False,
    repeat_prolongations: bool = False,
) -> BasisResult:
    """Minimal Janet-like basis (or Janet basis with ``division="janet"``) of ``Id(F)``.

    Inputs are made monic, deduplicated and sorted before completion so the
    output does not depend on the order of ``F``.  By default a prolongation
    is enqueued once per source element; ``repeat_prolongations=True`` re-adds
    all of them after every new basis element.  Either way the loop only ends
    once every prolongation of the final basis J-reduces to zero.
    """
    if criteria:
        raise NotImplementedError("Buchberger-style criteria are not part of this build")
    F = [p for p in F if p]
    if not F:
        raise ZeroIdealError("zero ideal input")
    ctx = F[0].ctx
    ranking.check(ctx)
    inputs = sorted(set(canonical_basis(F, ranking)), key=lambda p: poly_sort_key(p, ranking))

    stats = Stats()
    G = Basis(ranking, division, use_tree)
    G.add(inputs[0])
    Q = _Queue(ranking)
    for p in inputs[1:]:
        Q.push(p)

    steps = 0
    seen = set()  # (source polynomial, difference power) already enqueued
    while True:
        while Q:
            stats.rounds += 1
            h = Polynomial.zero(ctx)
            while Q and not h:
                steps += 1
                if steps > max_iter:
                    raise ResourceCapExceeded(
                        f"completion exceeded {max_iter} normal forms "
                        f"(basis size {len(G)}, queue {len(Q)})"
                    )
                h = normal_form(Q.pop(), G, stats)
            if not h:
                break
            h = h.monic(ranking)
            h_lm = h.lm(ranking)
            for u in [u for u in G.elements if u != h_lm and u.quotient(h_lm) is not None]:
                Q.push(G.remove(u))
            G.add(h)
            for g, beta, prolongation in G.prolongations():
                if not repeat_prolongations:
                    if (g, beta) in seen:
                        continue
                    seen.add((g, beta))
                stats.prolongations += 1
                Q.push(prolongation)
            log.debug("round %d: |G|=%d |Q|=%d", stats.rounds, len(G), len(Q))
        # skipped prolongations were reduced against an older G; recheck them all
        stale = [p for _, _, p in G.prolongations() if normal_form(p, G)]
        if not stale:
            break
        stats.sweeps += 1
        for p in stale:
            Q.push(p)
    stats.queue_peak = Q.peak
    return BasisResult(G.sorted(), ranking, division, stats)
