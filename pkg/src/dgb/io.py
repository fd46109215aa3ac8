"""Line-oriented text format for difference systems.

    # toric example
    ring: differences = [x, y, z, w]  indeterminates = [u]
    rank: scheme = degrevlex  order = [x, y, z, w]  indet_order = [u]
    poly: u[7,0,0,0] - u[0,2,1,0]

A term is ``[<rational> '*'] <indet> '[' e1, ..., en ']'``; ``u[7,0,0,0]``
stands for ``theta_x^7 o u``.  ``#`` starts a comment.  The ``rank`` line is
optional and defaults to degrevlex in declaration order.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass

from .ring import Monomial, Polynomial, Ranking, Rational, RingContext


class ParseError(ValueError):
    def __init__(self, msg, line=None, col=None):
        self.msg = msg
        self.line = line
        self.col = col
        where = f"line {line}" if line is not None else "input"
        if col is not None:
            where += f", column {col}"
        super().__init__(f"{where}: {msg}")


class ZeroPolynomialWarning(UserWarning):
    pass


@dataclass
class SystemFile:
    ctx: RingContext
    ranking: Ranking
    polys: list


_NAME = r"[A-Za-z_][A-Za-z0-9_]*"
_LIST = re.compile(rf"(\w+)\s*=\s*\[([^\]]*)\]|(\w+)\s*=\s*({_NAME})")
_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<num>\d+(?:/\d+)?)"
    rf"|(?P<name>{_NAME})"
    r"|(?P<op>[-+*\[\],])"
    r")"
)


def _split_names(text, line, col):
    names = [s.strip() for s in text.split(",") if s.strip()]
    for nm in names:
        if not re.fullmatch(_NAME, nm):
            raise ParseError(f"bad name {nm!r}", line, col)
    return names


def _fields(body, line, offset):
    """Parse ``key = [a, b]`` / ``key = word`` pairs of a header line."""
    out = {}
    pos = 0
    for m in _LIST.finditer(body):
        gap = body[pos:m.start()].strip()
        if gap:
            raise ParseError(f"unexpected text {gap!r}", line, offset + pos + 1)
        col = offset + m.start() + 1
        if m.group(1):
            key, value = m.group(1), _split_names(m.group(2), line, col)
        else:
            key, value = m.group(3), m.group(4)
        if key in out:
            raise ParseError(f"duplicate field {key!r}", line, col)
        out[key] = (value, col)
        pos = m.end()
    rest = body[pos:].strip()
    if rest:
        raise ParseError(f"unexpected text {rest!r}", line, offset + pos + 1)
    return out


def _tokens(body, line, offset):
    pos = 0
    toks = []
    while pos < len(body):
        if not body[pos:].strip():
            break
        m = _TOKEN.match(body, pos)
        if not m or m.end() == pos:
            col = offset + pos + len(body[pos:]) - len(body[pos:].lstrip()) + 1
            raise ParseError(f"unexpected character {body[pos:].lstrip()[:1]!r}", line, col)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append((kind, m.group(kind), offset + start + 1))
        pos = m.end()
    return toks


def parse_poly(body: str, ctx: RingContext, line=None, offset=0) -> Polynomial:
    """Parse one polynomial expression (the text after ``poly:``)."""
    toks = _tokens(body, line, offset)
    indets = {nm: k for k, nm in enumerate(ctx.indeterminate_names)}
    terms = []
    i = 0
    end_col = offset + len(body) + 1

    def peek():
        return toks[i] if i < len(toks) else (None, None, end_col)

    def expect(kind, value=None):
        nonlocal i
        k, v, c = peek()
        if k != kind or (value is not None and v != value):
            want = value if value is not None else kind
            raise ParseError(f"expected {want!r}, found {v if v is not None else 'end of line'!r}", line, c)
        i += 1
        return v, c

    if not toks:
        raise ParseError("empty polynomial", line, offset + 1)
    first = True
    while i < len(toks) or first:
        sign = 1
        k, v, c = peek()
        if k == "op" and v in "+-":
            sign = -1 if v == "-" else 1
            i += 1
        elif not first:
            raise ParseError(f"expected '+' or '-', found {v!r}", line, c)
        first = False
        coeff = Rational(1)
        k, v, c = peek()
        if k == "num":
            num, den = (v.split("/") + ["1"])[:2]
            if int(den) == 0:
                raise ParseError("zero denominator", line, c)
            coeff = Rational(int(num), int(den))
            i += 1
            expect("op", "*")
        name, c = expect("name")
        if name not in indets:
            raise ParseError(f"unknown indeterminate {name!r}", line, c)
        _, bracket_col = expect("op", "[")
        exps = []
        while True:
            v, c = expect("num")
            if "/" in v:
                raise ParseError(f"exponent must be an integer, got {v!r}", line, c)
            exps.append(int(v))
            k, v, c = peek()
            if k == "op" and v == ",":
                i += 1
                continue
            expect("op", "]")
            break
        if len(exps) != ctx.n:
            raise ParseError(
                f"{name} has {len(exps)} exponents, ring has {ctx.n} differences",
                line,
                bracket_col,
            )
        terms.append((Monomial(indets[name], tuple(exps)), sign * coeff))
    return Polynomial(ctx, terms)


def parse_system(text: str) -> SystemFile:
    """Parse a system file; zero polynomials are dropped with a warning."""
    ctx = None
    ranking_fields = None
    polys = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        m = re.match(r"\s*(\w+)\s*:", line)
        if not m:
            raise ParseError("expected 'ring:', 'rank:' or 'poly:'", lineno, 1)
        kind, offset = m.group(1), m.end()
        body = line[offset:]
        if kind == "ring":
            if ctx is not None:
                raise ParseError("duplicate ring declaration", lineno, 1)
            f = _fields(body, lineno, offset)
            unknown = set(f) - {"differences", "indeterminates"}
            if unknown:
                raise ParseError(f"unknown ring field {sorted(unknown)[0]!r}", lineno, 1)
            if "differences" not in f or "indeterminates" not in f:
                raise ParseError("ring needs differences and indeterminates", lineno, 1)
            try:
                ctx = RingContext(tuple(f["differences"][0]), tuple(f["indeterminates"][0]))
            except ValueError as exc:
                raise ParseError(str(exc), lineno, 1) from None
        elif kind == "rank":
            if ranking_fields is not None:
                raise ParseError("duplicate rank declaration", lineno, 1)
            ranking_fields = (_fields(body, lineno, offset), lineno)
        elif kind == "poly":
            if ctx is None:
                raise ParseError("poly before ring declaration", lineno, 1)
            p = parse_poly(body, ctx, lineno, offset)
            if not p:
                warnings.warn(f"line {lineno}: polynomial is zero, ignored", ZeroPolynomialWarning, stacklevel=2)
                continue
            polys.append(p)
        else:
            raise ParseError(f"unknown declaration {kind!r}", lineno, m.start(1) + 1)
    if ctx is None:
        raise ParseError("missing ring declaration")
    ranking = _ranking(ctx, ranking_fields)
    if not polys:
        raise ParseError("no nonzero polynomials")
    return SystemFile(ctx, ranking, polys)


def _ranking(ctx, ranking_fields) -> Ranking:
    if ranking_fields is None:
        return Ranking.degrevlex(ctx)
    f, lineno = ranking_fields
    unknown = set(f) - {"scheme", "order", "indet_order"}
    if unknown:
        raise ParseError(f"unknown rank field {sorted(unknown)[0]!r}", lineno, 1)
    scheme, col = f.get("scheme", ("degrevlex", 1))
    if scheme not in ("degrevlex", "lex"):
        raise ParseError(f"unknown scheme {scheme!r}", lineno, col)

    def perm(key, names):
        if key not in f:
            return list(range(len(names)))
        value, col = f[key]
        if sorted(value) != sorted(names):
            raise ParseError(f"{key} must list each of {list(names)} once", lineno, col)
        return [names.index(nm) for nm in value]

    return Ranking(
        scheme,
        perm("order", ctx.difference_names),
        perm("indet_order", ctx.indeterminate_names),
    )


def _term(c, u: Monomial, ctx) -> str:
    name = ctx.indeterminate_names[u.indeterminate]
    mono = f"{name}[{','.join(map(str, u.exponent))}]"
    return mono if c == 1 else f"{c}*{mono}"


def format_poly(f: Polynomial, ctx: RingContext, r: Ranking) -> str:
    """Terms descending by ``r``; parses back to ``f`` exactly."""
    if not f:
        return "0"
    parts = []
    for u, c in f.sorted_terms(r):
        if not parts:
            parts.append(_term(c, u, ctx) if c > 0 else "- " + _term(-c, u, ctx))
        elif c > 0:
            parts.append("+ " + _term(c, u, ctx))
        else:
            parts.append("- " + _term(-c, u, ctx))
    return " ".join(parts)


def format_header(ctx: RingContext, r: Ranking) -> list:
    diffs = ", ".join(ctx.difference_names)
    indets = ", ".join(ctx.indeterminate_names)
    order = ", ".join(ctx.difference_names[i] for i in r.difference_order)
    indet_order = ", ".join(ctx.indeterminate_names[k] for k in r.indeterminate_order)
    return [
        f"ring: differences = [{diffs}]  indeterminates = [{indets}]",
        f"rank: scheme = {r.scheme}  order = [{order}]  indet_order = [{indet_order}]",
    ]


def format_system(ctx: RingContext, r: Ranking, polys) -> str:
    lines = format_header(ctx, r)
    lines += [f"poly: {format_poly(p, ctx, r)}" for p in polys]
    return "\n".join(lines) + "\n"
