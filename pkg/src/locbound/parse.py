"""Parser for rational functions, points, arcs and algebraic constants.

Grammar (whitespace is ignored)::

    expr  := term (("+" | "-") term)*
    term  := unary (("*" | "/") unary)*
    unary := ("-" | "+") unary | power
    power := atom ("^" unary)?
    atom  := NUMBER | NAME | "root" "(" expr "," expr "," expr ")"
           | "(" expr ("," expr)* ")"

Variables are ``x, y, z`` or ``x1, x2, ...``; ``t`` is the arc parameter.
Error positions are 1-based character columns; the end of the input is
column ``len(text) + 1``.
"""

import re
from fractions import Fraction

from .arcs import PuiseuxPoly, make_arc
from .core.realalg import compare, real_roots
from .core.scalar import as_fraction, is_rational, is_zero
from .errors import ParseError
from .ratfunc import RationalFunction

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")
_PLAIN = {"x": 0, "y": 1, "z": 2}
_INDEXED = re.compile(r"x(\d+)$")


def _tokens(text):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.end() == pos or not m.group(0).strip():
            break
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("num", int(m.group(1)), start + 1))
        elif m.group(2):
            out.append(("name", m.group(2), start + 1))
        else:
            ch = m.group(3)
            if ch not in "+-*/^(),":
                raise ParseError(f"unexpected character {ch!r}", start + 1, text)
            out.append((ch, ch, start + 1))
        pos = m.end()
    out.append(("end", None, len(text) + 1))
    return out


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {what}", tok[2], self.text)
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return ParseError(message, tok[2], self.text)

    def parse(self):
        node = self.expr()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return node

    def expr(self):
        node = self.term()
        while self.peek()[0] in "+-":
            op = self.take()
            node = ("add" if op[0] == "+" else "sub", node, self.term(), op[2])
        return node

    def term(self):
        node = self.unary()
        while self.peek()[0] in ("*", "/"):
            op = self.take()
            node = ("mul" if op[0] == "*" else "div", node, self.unary(), op[2])
        return node

    def unary(self):
        tok = self.peek()
        if tok[0] == "-":
            self.take()
            return ("neg", self.unary(), tok[2])
        if tok[0] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            op = self.take()
            return ("pow", base, self.unary(), op[2])
        return base

    def atom(self):
        tok = self.peek()
        if tok[0] == "num":
            self.take()
            return ("num", Fraction(tok[1]), tok[2])
        if tok[0] == "name":
            self.take()
            if tok[1] == "root":
                self.take("(")
                args = [self.expr()]
                while self.peek()[0] == ",":
                    self.take()
                    args.append(self.expr())
                self.take(")")
                if len(args) != 3:
                    raise ParseError("root takes (poly, lo, hi)", tok[2], self.text)
                return ("root", args, tok[2])
            return ("var", tok[1], tok[2])
        if tok[0] == "(":
            self.take()
            items = [self.expr()]
            while self.peek()[0] == ",":
                self.take()
                items.append(self.expr())
            self.take(")")
            if len(items) == 1:
                return items[0]
            return ("tuple", items, tok[2])
        if tok[0] == "end":
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {tok[1]!r}")


# -- evaluation --------------------------------------------------------------

def _names(node, acc):
    kind = node[0]
    if kind == "var":
        acc.append((node[1], node[2]))
    elif kind in ("add", "sub", "mul", "div", "pow"):
        _names(node[1], acc)
        _names(node[2], acc)
    elif kind == "neg":
        _names(node[1], acc)
    elif kind == "tuple":
        for it in node[1]:
            _names(it, acc)
    return acc  # names inside root(...) are local to the root


def _index(name):
    if name in _PLAIN:
        return _PLAIN[name], "plain"
    m = _INDEXED.match(name)
    if m and int(m.group(1)) >= 1:
        return int(m.group(1)) - 1, "indexed"
    return None, None


def infer_arity(names, text=None, minimum=2):
    """Smallest arity (at least ``minimum``) covering the variable names."""
    styles = set()
    top = -1
    for name, pos in names:
        i, style = _index(name)
        if i is None:
            raise ParseError(f"unknown variable {name!r}", pos, text)
        styles.add(style)
        top = max(top, i)
    if len(styles) > 1:
        raise ParseError("cannot mix x, y, z with x1, x2, ...", names[0][1], text)
    return max(minimum, top + 1)


class _Eval:
    def __init__(self, text, arity=None):
        self.text = text
        self.arity = arity

    def fail(self, message, pos):
        return ParseError(message, pos, self.text)

    # constants (field elements)
    def const(self, node):
        kind = node[0]
        if kind == "num":
            return node[1]
        if kind == "root":
            return self.root(node)
        if kind == "neg":
            return -self.const(node[1])
        if kind in ("add", "sub", "mul", "div"):
            a, b = self.const(node[1]), self.const(node[2])
            if kind == "add":
                return a + b
            if kind == "sub":
                return a - b
            if kind == "mul":
                return a * b
            if is_zero(b):
                raise self.fail("division by zero", node[3])
            return a / b
        if kind == "pow":
            n = self.exponent(node[2], integer=True)
            a = self.const(node[1])
            if n < 0:
                if is_zero(a):
                    raise self.fail("division by zero", node[3])
                return 1 / a ** (-n)
            return a ** n
        raise self.fail("expected a constant", _pos(node))

    def exponent(self, node, integer):
        e = self.const(node)
        if not is_rational(e):
            raise self.fail("exponent must be rational", _pos(node))
        e = as_fraction(e)
        if integer and e.denominator != 1:
            raise self.fail("exponent must be an integer", _pos(node))
        return int(e) if integer else e

    def root(self, node):
        poly, lo, hi = node[1]
        lo = self.const(lo)
        hi = self.const(hi)
        coeffs = self.univariate(poly)
        while coeffs and is_zero(coeffs[-1]):
            coeffs.pop()
        if len(coeffs) < 2:
            raise self.fail("root needs a nonconstant polynomial", node[2])
        hits = [r for r in real_roots(coeffs)
                if compare(r, lo) >= 0 and compare(r, hi) <= 0]
        if len(hits) != 1:
            raise self.fail(f"interval holds {len(hits)} roots, expected 1",
                            node[2])
        return hits[0]

    def univariate(self, node):
        """Dense coefficients of a polynomial in a single variable."""
        kind = node[0]
        if kind == "var":
            return [Fraction(0), Fraction(1)]
        if kind in ("num", "root"):
            return [self.const(node)]
        if kind == "neg":
            return [-c for c in self.univariate(node[1])]
        from .core import upoly

        if kind in ("add", "sub", "mul"):
            a = self.univariate(node[1])
            b = self.univariate(node[2])
            return {"add": upoly.add, "sub": upoly.sub, "mul": upoly.mul}[kind](a, b)
        if kind == "div":
            b = self.const(node[2])
            if is_zero(b):
                raise self.fail("division by zero", node[3])
            return [c / b for c in self.univariate(node[1])]
        if kind == "pow":
            n = self.exponent(node[2], integer=True)
            if n < 0:
                raise self.fail("negative exponent in a polynomial", node[3])
            return upoly.power(self.univariate(node[1]), n)
        raise self.fail("malformed polynomial", _pos(node))

    # rational functions
    def function(self, node):
        kind = node[0]
        n = self.arity
        if kind == "var":
            i, _ = _index(node[1])
            if i is None or i >= n:
                raise self.fail(f"unknown variable {node[1]!r}", node[2])
            return RationalFunction.var(i, n)
        if kind in ("num", "root"):
            return RationalFunction.const(self.const(node), n)
        if kind == "neg":
            return -self.function(node[1])
        if kind in ("add", "sub", "mul", "div"):
            a, b = self.function(node[1]), self.function(node[2])
            if kind == "add":
                return a + b
            if kind == "sub":
                return a - b
            if kind == "mul":
                return a * b
            if b.is_zero():
                raise self.fail("division by zero", node[3])
            return a / b
        if kind == "pow":
            e = self.exponent(node[2], integer=True)
            a = self.function(node[1])
            if e < 0:
                if a.is_zero():
                    raise self.fail("division by zero", node[3])
                return 1 / a ** (-e)
            return a ** e
        raise self.fail("a tuple is not a function", _pos(node))

    # arc entries
    def puiseux(self, node):
        kind = node[0]
        if kind == "var":
            if node[1] != "t":
                raise self.fail(f"arc entries use t, found {node[1]!r}", node[2])
            return PuiseuxPoly({1: 1})
        if kind in ("num", "root"):
            return PuiseuxPoly.const(self.const(node))
        if kind == "neg":
            return -self.puiseux(node[1])
        if kind in ("add", "sub", "mul"):
            a, b = self.puiseux(node[1]), self.puiseux(node[2])
            return a + b if kind == "add" else a - b if kind == "sub" else a * b
        if kind == "div":
            b = self.const(node[2])
            if is_zero(b):
                raise self.fail("division by zero", node[3])
            return self.puiseux(node[1]) * (1 / b)
        if kind == "pow":
            base = node[1]
            if base[0] == "var" and base[1] == "t":
                e = self.exponent(node[2], integer=False)
                if e < 0:
                    raise self.fail("negative exponent on t", node[3])
                return PuiseuxPoly({e: 1})
            e = self.exponent(node[2], integer=True)
            if e < 0:
                raise self.fail("negative exponent in an arc entry", node[3])
            return self.puiseux(base) ** e
        raise self.fail("malformed arc entry", _pos(node))


def _pos(node):
    return node[-1] if isinstance(node[-1], int) else 1


def _tree(text):
    if not isinstance(text, str):
        raise TypeError("expected text")
    return _Parser(text).parse()


def _uses_t(node):
    return any(name == "t" for name, _ in _names(node, []))


def parse_function(text, arity=None):
    node = _tree(text)
    if node[0] == "tuple":
        raise ParseError("expected a function, found a tuple", node[2], text)
    names = _names(node, [])
    inferred = infer_arity(names, text, 1 if arity is not None else 2)
    if arity is None:
        arity = inferred
    elif inferred > arity and names:
        raise ParseError(f"expression needs {inferred} variables", names[0][1], text)
    return _Eval(text, arity).function(node)


def parse_point(text):
    node = _tree(text)
    ev = _Eval(text)
    items = node[1] if node[0] == "tuple" else [node]
    return tuple(ev.const(it) for it in items)


def parse_arc(text):
    node = _tree(text)
    ev = _Eval(text)
    items = node[1] if node[0] == "tuple" else [node]
    return make_arc([ev.puiseux(it) for it in items])


def parse_constant(text):
    return _Eval(text).const(_tree(text))


def parse_expression(text, arity=None):
    """Function, point or arc, depending on the shape of ``text``."""
    node = _tree(text)
    if node[0] == "tuple":
        if _uses_t(node):
            return parse_arc(text)
        return parse_point(text)
    if _uses_t(node):
        return parse_arc(text)
    return parse_function(text, arity)
