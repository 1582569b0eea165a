"""Text syntax for scalars and linear combinations.

Scalar literals are integers, fractions ``a/b``, parameter powers ``p^k`` (k may
be negative), products, sums and parenthesised quotients.  The same expression
grammar is reused for linear combinations of basis names, where identifiers
other than the parameter denote basis vectors.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import lcm
from typing import Callable, Union

from homsuper.scalar import ONE, ZERO, Scalar, as_scalar, monomial

__all__ = ["ParseError", "parse_scalar", "parse_combo", "render_scalar", "render_combo"]


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.message = message
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f"line {line}, col {col}: " if col is not None else f"line {line}: "
        super().__init__(where + message)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")

Vector = dict  # basis name -> Scalar
Value = Union[Scalar, Vector]


class _Parser:
    def __init__(self, text: str, resolve: Callable[[str], Value], line: int | None, col0: int):
        self.text = text
        self.resolve = resolve
        self.line = line
        self.col0 = col0
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:  # only trailing whitespace left
                break
            start = m.start(m.lastindex)
            if m.group(1):
                self.tokens.append(("int", m.group(1), start))
            elif m.group(2):
                self.tokens.append(("ident", m.group(2), start))
            else:
                self.tokens.append(("op", m.group(3), start))
            pos = m.end()
        self.i = 0

    def error(self, msg: str, pos: int | None = None) -> ParseError:
        if pos is None:
            pos = self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text)
        return ParseError(msg, self.line, self.col0 + pos + 1)

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def accept(self, op: str) -> bool:
        tok = self.peek()
        if tok is not None and tok[0] == "op" and tok[1] == op:
            self.i += 1
            return True
        return False

    def expect(self, op: str) -> None:
        if not self.accept(op):
            raise self.error(f"expected {op!r}")

    def parse(self) -> Value:
        if not self.tokens:
            raise self.error("empty expression")
        v = self.expr()
        if self.peek() is not None:
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return v

    def expr(self) -> Value:
        v = self.term()
        while True:
            tok = self.peek()
            if self.accept("+"):
                v = self.combine(v, self.term(), 1, tok)
            elif self.accept("-"):
                v = self.combine(v, self.term(), -1, tok)
            else:
                return v

    def term(self) -> Value:
        v = self.factor()
        while True:
            tok = self.peek()
            if self.accept("*"):
                v = self.times(v, self.factor(), tok)
            elif self.accept("/"):
                rhs = self.factor()
                if isinstance(rhs, dict):
                    raise self.error("cannot divide by a basis vector", tok[2])
                if rhs.is_zero():
                    raise self.error("division by zero", tok[2])
                v = self.times(v, rhs.inverse(), tok)
            else:
                return v

    def factor(self) -> Value:
        if self.accept("-"):
            return self.times(as_scalar(-1), self.factor(), None)
        if self.accept("+"):
            return self.factor()
        base = self.atom()
        tok = self.peek()
        if self.accept("^"):
            k = self.exponent()
            if isinstance(base, dict):
                raise self.error("cannot raise a basis vector to a power", tok[2])
            if k < 0 and base.is_zero():
                raise self.error("division by zero", tok[2])
            return base**k
        return base

    def exponent(self) -> int:
        if self.accept("("):
            k = self.exponent()
            self.expect(")")
            return k
        sign = -1 if self.accept("-") else 1
        if sign == 1:
            self.accept("+")
        tok = self.peek()
        if tok is None or tok[0] != "int":
            raise self.error("expected integer exponent")
        self.i += 1
        return sign * int(tok[1])

    def atom(self) -> Value:
        tok = self.peek()
        if tok is None:
            raise self.error("unexpected end of expression")
        kind, text, pos = tok
        if kind == "int":
            self.i += 1
            return as_scalar(int(text))
        if kind == "ident":
            self.i += 1
            try:
                return self.resolve(text)
            except KeyError as exc:
                raise self.error(exc.args[0] if exc.args else f"unknown name {text!r}", pos) from None
        if self.accept("("):
            v = self.expr()
            self.expect(")")
            return v
        raise self.error(f"unexpected {text!r}")

    def combine(self, a: Value, b: Value, sign: int, tok) -> Value:
        if isinstance(a, dict) or isinstance(b, dict):
            a, b = self.as_vector(a, tok), self.as_vector(b, tok)
            out = dict(a)
            for k, c in b.items():
                out[k] = out.get(k, ZERO) + sign * c
            return {k: c for k, c in out.items() if c}
        return a + b if sign == 1 else a - b

    def as_vector(self, v: Value, tok) -> Vector:
        if isinstance(v, dict):
            return v
        if v.is_zero():
            return {}
        raise self.error("cannot add a scalar to a basis vector", tok[2] if tok else None)

    def times(self, a: Value, b: Value, tok) -> Value:
        if isinstance(a, dict) and isinstance(b, dict):
            raise self.error("product of two basis vectors", tok[2] if tok else None)
        if isinstance(a, dict):
            a, b = b, a
        if isinstance(b, dict):
            return {k: a * c for k, c in b.items() if not (a * c).is_zero()}
        return a * b


def parse_scalar(text: str, param: str | None = "p", *, line: int | None = None, col: int = 0) -> Scalar:
    """Parse a scalar literal in the parameter named ``param``."""

    def resolve(name: str) -> Value:
        if param is not None and name == param:
            return monomial(1, 1)
        raise KeyError(f"unknown symbol {name!r}")

    v = _Parser(text, resolve, line, col).parse()
    assert isinstance(v, Scalar)
    return v


def parse_combo(text: str, basis: set[str] | dict, param: str | None = None, *,
                line: int | None = None, col: int = 0) -> dict[str, Scalar]:
    """Parse a linear combination such as ``2*X - (1+q)/q*Y`` or ``0``."""

    def resolve(name: str) -> Value:
        if name in basis:
            return {name: ONE}
        if param is not None and name == param:
            return monomial(1, 1)
        raise KeyError(f"undeclared basis name {name!r}")

    p = _Parser(text, resolve, line, col)
    v = p.parse()
    if isinstance(v, Scalar):
        if v.is_zero():
            return {}
        raise p.error("expected a linear combination of basis names", 0)
    return v


# --- rendering ---


def _poly_str(coeffs: list[tuple[int, int]], param: str) -> str:
    """Render an integer polynomial given as (exponent, coefficient), highest first."""
    out = []
    for i, (e, c) in enumerate(coeffs):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            mono = param if e == 1 else f"{param}^{e}"
            body = mono if a == 1 else f"{a}*{mono}"
        if i == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(sign + body)
    return "".join(out)


def _primitive(d: dict[int, Fraction]) -> tuple[Fraction, list[tuple[int, int]]]:
    """Split a polynomial into rational content and a primitive integer polynomial
    with positive leading coefficient."""
    from math import gcd

    items = sorted(d.items(), reverse=True)
    m = lcm(*(c.denominator for _, c in items))
    ints = [(e, int(c * m)) for e, c in items]
    g = 0
    for _, c in ints:
        g = gcd(g, c)
    if ints[0][1] < 0:
        g = -g
    return Fraction(g, m), [(e, c // g) for e, c in ints]


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_scalar(s: Scalar, param: str = "p") -> str:
    """Render a scalar as a product-form literal that parses back to ``s``.

    Shape: ``c*(P)/((D)*p^k)`` with ``P`` and ``D`` primitive integer polynomials;
    trivial factors are omitted.
    """
    num = s.num
    if not num:
        return "0"
    den = s.den
    shift = min(num)
    content_n, pn = _primitive({e - shift: c for e, c in num.items()})
    content_d, pd = _primitive(den)
    c = content_n / content_d
    pk = max(0, -shift)
    if shift > 0:
        pn = [(e + shift, a) for e, a in pn]

    parts = []
    is_one_n = pn == [(0, 1)]
    if is_one_n:
        parts.append(_frac_str(c))
    else:
        if len(pn) == 1:
            pstr = _poly_str(pn, param)
        else:
            pstr = "(" + _poly_str(pn, param) + ")"
        if c == 1:
            parts.append(pstr)
        elif c == -1:
            parts.append("-" + pstr)
        else:
            parts.append(_frac_str(c) + "*" + pstr)
    text = parts[0]

    dens = []
    if pd != [(0, 1)]:
        dens.append("(" + _poly_str(pd, param) + ")")
    if pk:
        dens.append(param if pk == 1 else f"{param}^{pk}")
    if dens:
        if len(dens) == 1 and is_one_n and c.denominator != 1:
            text = "(" + text + ")"
        denom = dens[0] if len(dens) == 1 else "(" + "*".join(dens) + ")"
        text = f"{text}/{denom}"
    return text


def _is_negative(s: Scalar) -> bool:
    num = s.num
    return bool(num) and num[max(num)] < 0


def render_combo(terms: list[tuple[str, Scalar]], param: str = "p") -> str:
    """Render ``[(label, coeff), ...]`` as ``c1 * a + c2 * b``; zero renders as ``0``."""
    out = []
    for label, c in terms:
        if c.is_zero():
            continue
        neg = _is_negative(c)
        mag = render_scalar(-c if neg else c, param)
        body = label if mag == "1" else f"{mag} * {label}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out) if out else "0"
