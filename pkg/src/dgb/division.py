"""Janet-like and Janet division on sets of leading monomials.

For every indeterminate the leading monomials are split into groups sharing an
exponent prefix along the difference order.  Within the group of prefix
length ``i`` the monomial ``u`` gets a difference power ``theta_i^s`` when some
group member has a larger ``deg_i``; ``s`` is the gap to the next larger
value.  Classical Janet division is the special case where every such power
is ``theta_i^1`` (``theta_i`` non-multiplicative).
"""

from __future__ import annotations

from bisect import bisect_right
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .ring import ExponentVector, Monomial

JANET_LIKE = "janet-like"
JANET = "janet"
DIVISIONS = (JANET_LIKE, JANET)


class DesyncError(RuntimeError):
    """Janet tree and division records disagree."""


@dataclass(frozen=True)
class DivisionRecord:
    """Difference powers of one leading monomial: ``powers[i] = s_i``."""

    owner: Monomial
    powers: dict = field(default_factory=dict, hash=False)

    def forbids(self, gamma: ExponentVector) -> bool:
        return any(gamma[i] >= s for i, s in self.powers.items())

    def difference_powers(self, n: int) -> list:
        """Difference powers as exponent vectors, ascending by index."""
        out = []
        for i in sorted(self.powers):
            beta = [0] * n
            beta[i] = self.powers[i]
            out.append(tuple(beta))
        return out


def _order(order, n):
    return tuple(range(n)) if order is None else tuple(order)


def _groups(U: Iterable[Monomial], order):
    """Yield ``(i, members)`` for each group ``[0, d_1..d_{i-1}]_k`` along ``order``."""
    by_indet = defaultdict(list)
    for u in U:
        by_indet[u.indeterminate].append(u)
    for members in by_indet.values():
        n = len(members[0].exponent)
        for level, i in enumerate(_order(order, n)):
            prefix_vars = _order(order, n)[:level]
            buckets = defaultdict(list)
            for u in members:
                buckets[tuple(u.exponent[j] for j in prefix_vars)].append(u)
            for group in buckets.values():
                yield i, group


def classify(U: Iterable[Monomial], order=None, division: str = JANET_LIKE) -> dict:
    """Map every monomial of ``U`` to its :class:`DivisionRecord`.

    ``order`` lists difference indices from the first to the last level of
    the group partition (the ranking's difference order).
    """
    if division not in DIVISIONS:
        raise ValueError(f"unknown division {division!r}")
    U = list(dict.fromkeys(U))
    if U and len({len(u.exponent) for u in U}) > 1:
        raise ValueError("monomials from different rings")
    powers = {u: {} for u in U}
    for i, group in _groups(U, order):
        values = sorted({u.exponent[i] for u in group})
        top = values[-1]
        for u in group:
            d = u.exponent[i]
            if d < top:
                if division == JANET:
                    powers[u][i] = 1
                else:
                    powers[u][i] = values[bisect_right(values, d)] - d
    return {u: DivisionRecord(u, p) for u, p in powers.items()}


def janet_multiplicative(U: Iterable[Monomial], order=None) -> dict:
    """Multiplicative difference indices of every monomial under Janet division."""
    U = list(dict.fromkeys(U))
    recs = classify(U, order, JANET)
    out = {}
    for u in U:
        n = len(u.exponent)
        out[u] = frozenset(i for i in range(n) if i not in recs[u].powers)
    return out


def j_divides(g_lm: Monomial, rec: DivisionRecord, u: Monomial) -> Optional[ExponentVector]:
    """``gamma`` with ``u = theta^gamma o g_lm`` and ``theta^gamma`` in J, else None."""
    gamma = u.quotient(g_lm)
    if gamma is None or rec.forbids(gamma):
        return None
    return gamma


def cone_box(rec: DivisionRecord) -> list:
    """Per-difference ``(low, high)`` bounds of the J-cone; ``high`` None means unbounded."""
    out = []
    for i, a in enumerate(rec.owner.exponent):
        s = rec.powers.get(i)
        out.append((a, None if s is None else a + s - 1))
    return out


def cones_overlap(r1: DivisionRecord, r2: DivisionRecord) -> bool:
    if r1.owner.indeterminate != r2.owner.indeterminate:
        return False
    for (lo1, hi1), (lo2, hi2) in zip(cone_box(r1), cone_box(r2)):
        if hi1 is not None and hi1 < lo2:
            return False
        if hi2 is not None and hi2 < lo1:
            return False
    return True


class _Node:
    __slots__ = ("keys", "children")

    def __init__(self):
        self.keys = []  # sorted exponent values
        self.children = {}

    def __eq__(self, other):
        return isinstance(other, _Node) and self.children == other.children


class JanetTree:
    """Trie over leading monomials used to find the J-reductor of a monomial.

    One trie per indeterminate; level ``j`` branches on the exponent of the
    ``j``-th difference of ``order``.  Siblings at a level form exactly one
    group of the partition, so the J-cone condition is decided per level.
    """

    def __init__(self, n: int, order=None, division: str = JANET_LIKE):
        if division not in DIVISIONS:
            raise ValueError(f"unknown division {division!r}")
        self.n = n
        self.order = _order(order, n)
        self.division = division
        self.roots = {}

    def __eq__(self, other):
        if not isinstance(other, JanetTree):
            return NotImplemented
        return (self.order, self.division, self.roots) == (
            other.order,
            other.division,
            other.roots,
        )

    def __len__(self):
        return sum(1 for _ in self.items())

    def __contains__(self, u: Monomial) -> bool:
        node = self.roots.get(u.indeterminate)
        for level, i in enumerate(self.order):
            if node is None:
                return False
            if level == self.n - 1:
                return u.exponent[i] in node.children
            node = node.children.get(u.exponent[i])
        return False

    def insert(self, u: Monomial, ref) -> None:
        if u in self:
            raise KeyError(f"{u} already in tree")
        node = self.roots.setdefault(u.indeterminate, _Node())
        for level, i in enumerate(self.order):
            d = u.exponent[i]
            if d not in node.children:
                node.keys.insert(bisect_right(node.keys, d), d)
                node.children[d] = _Node() if level < self.n - 1 else None
            if level < self.n - 1:
                node = node.children[d]
        node.children[u.exponent[self.order[-1]]] = ref

    def remove(self, u: Monomial) -> None:
        if u not in self:
            raise KeyError(f"{u} not in tree")
        path = []
        node = self.roots[u.indeterminate]
        for i in self.order:
            path.append((node, u.exponent[i]))
            node = node.children[u.exponent[i]]
        for node, d in reversed(path):
            child = node.children[d]
            if isinstance(child, _Node) and child.children:
                break
            del node.children[d]
            node.keys.remove(d)
        root = self.roots[u.indeterminate]
        if not root.children:
            del self.roots[u.indeterminate]

    def items(self):
        """Yield ``(monomial, ref)`` for every stored leaf."""
        for k, root in self.roots.items():
            stack = [(root, 0, [0] * self.n)]
            while stack:
                node, level, exps = stack.pop()
                i = self.order[level]
                for d in node.keys:
                    e = list(exps)
                    e[i] = d
                    if level == self.n - 1:
                        yield Monomial(k, tuple(e)), node.children[d]
                    else:
                        stack.append((node.children[d], level + 1, e))

    def find(self, u: Monomial):
        """Return ``(monomial, ref)`` of the unique J-divisor of ``u`` or None."""
        node = self.roots.get(u.indeterminate)
        if node is None:
            return None
        janet = self.division == JANET
        exps = [0] * self.n
        for level, i in enumerate(self.order):
            a = u.exponent[i]
            keys = node.keys
            pos = bisect_right(keys, a) - 1
            if pos < 0:
                return None
            d = keys[pos]
            # only the group maximum may be shifted by theta_i under Janet division
            if janet and d != a and pos != len(keys) - 1:
                return None
            exps[i] = d
            node = node.children[d]
        return Monomial(u.indeterminate, tuple(exps)), node


def tree_insert(tree: JanetTree, u: Monomial, ref) -> JanetTree:
    tree.insert(u, ref)
    return tree


def tree_remove(tree: JanetTree, u: Monomial) -> JanetTree:
    tree.remove(u)
    return tree


def linear_scan(records: dict, u: Monomial) -> list:
    """All ``(g_lm, gamma)`` with ``g_lm`` J-dividing ``u``, in record order."""
    out = []
    for g_lm, rec in records.items():
        gamma = j_divides(g_lm, rec, u)
        if gamma is not None:
            out.append((g_lm, gamma))
    return out


def find_reductor(tree: Optional[JanetTree], records: dict, u: Monomial):
    """``(g_lm, gamma)`` of the J-reductor of ``u``; linear scan when ``tree`` is None."""
    if tree is None:
        found = linear_scan(records, u)
        return found[0] if found else None
    hit = tree.find(u)
    if hit is None:
        return None
    g_lm, _ = hit
    rec = records.get(g_lm)
    if rec is None:
        raise DesyncError(f"tree leaf {g_lm} has no division record")
    gamma = j_divides(g_lm, rec, u)
    if gamma is None:
        raise DesyncError(f"tree leaf {g_lm} does not J-divide {u}")
    return g_lm, gamma
