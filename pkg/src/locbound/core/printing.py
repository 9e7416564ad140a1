"""Text rendering of polynomials and field elements in the input grammar."""

from fractions import Fraction

from .scalar import is_rational, to_float


def var_names(arity):
    if arity <= 3:
        return ["x", "y", "z"][:arity]
    return [f"x{i + 1}" for i in range(arity)]


def format_scalar(c):
    if is_rational(c):
        c = Fraction(c)
        if c.denominator == 1:
            return str(c.numerator)
        return f"{c.numerator}/{c.denominator}"
    from .realalg import absolute

    a = absolute(c)
    if is_rational(a):
        return format_scalar(a)
    return a.to_text()


def _monomial(e, names):
    parts = []
    for k, name in zip(e, names):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_poly(p, names=None):
    names = names or var_names(p.arity)
    if not p.terms:
        return "0"
    out = []
    for e in sorted(p.terms, key=lambda e: (-sum(e), [-k for k in e])):
        c = p.terms[e]
        mono = _monomial(e, names)
        if is_rational(c):
            neg = c < 0
            a = -c if neg else c
            if mono and a == 1:
                body = mono
            elif mono:
                s = format_scalar(a)
                body = f"({s})*{mono}" if "/" in s else f"{s}*{mono}"
            else:
                body = format_scalar(a)
                if "/" in body:
                    body = f"({body})"
        else:
            neg = False
            s = f"({format_scalar(c)})"
            body = f"{s}*{mono}" if mono else s
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def approx(c, digits=12):
    return f"{to_float(c):.{digits}g}"
