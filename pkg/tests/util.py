from dgb.ring import Monomial, Polynomial


def mono(*exps, k=0):
    return Monomial(k, tuple(exps))


def poly(ctx, *terms):
    """``poly(ctx, (c, (e1, ..)), ...)`` or with ``(c, (e..), k)`` for indeterminate k."""
    out = {}
    for t in terms:
        c, e = t[0], t[1]
        k = t[2] if len(t) > 2 else 0
        out[Monomial(k, tuple(e))] = c
    return Polynomial(ctx, out)
