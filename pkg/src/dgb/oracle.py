"""Reference reduced Groebner bases of submodules of K[t_1..t_n]^m.

With constant coefficients, the linear difference ideal generated by F is the
submodule generated by F under ``theta^mu o y^k  ->  t^mu e_k``.  This module
runs textbook Buchberger on that translation.  It is deliberately naive and
shares nothing with the engine beyond the rational type; keep it that way so it can
serve as an independent check.
"""

from __future__ import annotations

import heapq
from functools import cmp_to_key

from .ring import Monomial, Polynomial, Ranking, Rational, RingContext


class UnsupportedField(TypeError):
    """The oracle only handles coefficient fields with trivial shift."""


class ModuleOrder:
    """Term order on ``(component, exponents)``.

    ``degrevlex``: total degree, then reverse lex along ``var_order``, then
    component (term over position).  ``lex``: component first (position over
    term), then lex along ``var_order``.  Orders list the greatest first.
    """

    def __init__(self, scheme, var_order, comp_order):
        self.scheme = scheme
        self.var_order = list(var_order)
        self.comp_rank = {c: len(comp_order) - i for i, c in enumerate(comp_order)}

    def cmp(self, a, b) -> int:
        (ca, ea), (cb, eb) = a, b
        if self.scheme == "degrevlex":
            da, db = sum(ea), sum(eb)
            if da != db:
                return 1 if da > db else -1
            for v in reversed(self.var_order):
                if ea[v] != eb[v]:
                    # smaller power of the last variable wins
                    return 1 if ea[v] < eb[v] else -1
            return _sign(self.comp_rank[ca] - self.comp_rank[cb])
        if ca != cb:
            return _sign(self.comp_rank[ca] - self.comp_rank[cb])
        for v in self.var_order:
            if ea[v] != eb[v]:
                return 1 if ea[v] > eb[v] else -1
        return 0


def _sign(x):
    return (x > 0) - (x < 0)


def module_order_from_ranking(r: Ranking) -> ModuleOrder:
    return ModuleOrder(r.scheme, r.difference_order, r.indeterminate_order)


# A module element is a dict {(component, exponent tuple): rational}; the
# component-vector view is provided by ``components``.


def to_module(f: Polynomial) -> dict:
    if not getattr(f.ctx.field, "trivial_shift", False):
        raise UnsupportedField("oracle needs a coefficient field with trivial shift")
    return {(u.indeterminate, tuple(u.exponent)): Rational(c) for u, c in f.terms.items()}


def from_module(e: dict, ctx: RingContext) -> Polynomial:
    return Polynomial(ctx, {Monomial(k, mu): c for (k, mu), c in e.items()})


def components(e: dict, m: int) -> list:
    """Vector of ``m`` polynomials, each a dict exponent -> coefficient."""
    out = [{} for _ in range(m)]
    for (k, mu), c in e.items():
        out[k][mu] = c
    return out


def _lead(e, order):
    return max(e, key=cmp_to_key(order.cmp))


def _divides(a, b):
    """Return exponent quotient b/a if a divides b (same component), else None."""
    (ca, ea), (cb, eb) = a, b
    if ca != cb:
        return None
    q = tuple(y - x for x, y in zip(ea, eb))
    return q if all(x >= 0 for x in q) else None


def _shift_term(t, q):
    return (t[0], tuple(x + y for x, y in zip(t[1], q)))


def _monic(e, order):
    c = e[_lead(e, order)]
    return {t: a / c for t, a in e.items()}


class _Desc:
    """Heap entry ordering terms greatest first."""

    __slots__ = ("t", "order")

    def __init__(self, t, order):
        self.t = t
        self.order = order

    def __lt__(self, other):
        return self.order.cmp(self.t, other.t) > 0


def reduce(f: dict, G: list, order: ModuleOrder) -> dict:
    """Full remainder of ``f`` modulo ``G`` (every term reduced)."""
    leads = [(_lead(g, order), g) for g in G]
    f = dict(f)
    heap = [_Desc(t, order) for t in f]
    heapq.heapify(heap)
    rem = {}
    while heap:
        t = heapq.heappop(heap).t
        c = f.pop(t, None)
        if c is None:
            continue
        for lt, g in leads:
            q = _divides(lt, t)
            if q is not None:
                break
        else:
            rem[t] = c
            continue
        factor = c / g[lt]
        for s, a in g.items():
            if s == lt:
                continue
            w = _shift_term(s, q)
            if w not in f:
                heapq.heappush(heap, _Desc(w, order))
            v = f.get(w, 0) - factor * a
            if v:
                f[w] = v
            else:
                f.pop(w, None)
    return rem


def _mul_term(e, c, q):
    return {_shift_term(t, q): c * a for t, a in e.items()}


def _sub(a, b):
    out = dict(a)
    for t, c in b.items():
        v = out.get(t, 0) - c
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return out


def _lcm(f, g, order):
    lf, lg = _lead(f, order), _lead(g, order)
    if lf[0] != lg[0]:
        return None
    return (lf[0], tuple(max(x, y) for x, y in zip(lf[1], lg[1])))


def _s_vector(f, g, order):
    lf, lg = _lead(f, order), _lead(g, order)
    lcm = _lcm(f, g, order)
    qf = tuple(x - y for x, y in zip(lcm[1], lf[1]))
    qg = tuple(x - y for x, y in zip(lcm[1], lg[1]))
    return _sub(_mul_term(f, 1 / f[lf], qf), _mul_term(g, 1 / g[lg], qg))


def buchberger_reduced_gb(F: list, order: ModuleOrder) -> list:
    """Unique reduced Groebner basis of the submodule generated by ``F``.

    Every S-vector is reduced (no criteria); pairs are taken lowest lcm first.
    """
    G = [_monic(f, order) for f in F if f]
    key = cmp_to_key(order.cmp)
    pairs = []

    def add_pairs(j):
        for i in range(j):
            lcm = _lcm(G[i], G[j], order)
            if lcm is not None:
                pairs.append((lcm, i, j))

    for j in range(len(G)):
        add_pairs(j)
    while pairs:
        best = min(range(len(pairs)), key=lambda k: key(pairs[k][0]))
        _, i, j = pairs.pop(best)
        r = reduce(_s_vector(G[i], G[j], order), G, order)
        if r:
            G.append(_monic(r, order))
            add_pairs(len(G) - 1)
    # minimize
    minimal = []
    for i, g in enumerate(G):
        lt = _lead(g, order)
        redundant = False
        for j, h in enumerate(G):
            if i == j:
                continue
            lh = _lead(h, order)
            if _divides(lh, lt) is not None and (lh != lt or j < i):
                redundant = True
                break
        if not redundant:
            minimal.append(g)
    # interreduce
    out = []
    for i, g in enumerate(minimal):
        lt = _lead(g, order)
        others = minimal[:i] + minimal[i + 1:]
        tail = {t: c for t, c in g.items() if t != lt}
        r = reduce(tail, others, order)
        r[lt] = g[lt]
        out.append(r)
    return sorted(out, key=lambda e: key(_lead(e, order)), reverse=True)


def is_member(f: dict, gb: list, order: ModuleOrder) -> bool:
    return not reduce(f, gb, order)


def reduced_gb(F, r: Ranking) -> list:
    """Oracle reduced basis of ``Id(F)`` as monic polynomials, descending by lm."""
    F = [f for f in F if f]
    ctx = F[0].ctx
    order = module_order_from_ranking(r)
    gb = buchberger_reduced_gb([to_module(f) for f in F], order)
    return [from_module(e, ctx) for e in gb]


def member(f: Polynomial, F, r: Ranking) -> bool:
    order = module_order_from_ranking(r)
    gb = buchberger_reduced_gb([to_module(g) for g in F if g], order)
    return is_member(to_module(f), gb, order)
