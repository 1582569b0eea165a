"""Exact arithmetic in Q(p): univariate rational functions with Laurent numerators.

A :class:`Scalar` is stored in a canonical form

    value = num(p) / den(p)

where ``num`` is a Laurent polynomial (negative exponents allowed), ``den`` is an
ordinary polynomial with nonzero constant term and leading coefficient 1, and
``gcd(num, den) = 1``.  Two scalars are equal iff their stored forms agree.

Scalars do not carry the name of their parameter; the name lives with the
algebra (or file) that owns them and is supplied when rendering or parsing.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Mapping, Union

__all__ = [
    "Scalar",
    "EvaluationError",
    "ScalarLike",
    "as_scalar",
    "scalar_op",
    "eval_at",
    "q_number",
    "P",
    "ZERO",
    "ONE",
]

ScalarLike = Union["Scalar", int, Fraction]


class EvaluationError(ArithmeticError):
    """Raised when a scalar is evaluated at a pole (or at 0 with negative powers)."""


# --- dense polynomial helpers (lowest degree first, Fraction coefficients) ---


def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _divmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    if len(a) - 1 < db:
        return [], a
    q = [Fraction(0)] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        coef = a[k + db] / lead
        q[k] = coef
        if coef:
            for i, bi in enumerate(b):
                a[k + i] -= coef * bi
    return _trim(q), _trim(a[:db])


def _gcd(a: list, b: list) -> list:
    while b:
        a, b = b, _divmod(a, b)[1]
    lead = a[-1]
    return [c / lead for c in a]


def _dense(d: Mapping[int, Fraction], shift: int) -> list:
    out = [Fraction(0)] * (max(d) - shift + 1)
    for e, c in d.items():
        out[e - shift] = c
    return out


def _sparse(c: list, shift: int = 0) -> dict:
    return {i + shift: v for i, v in enumerate(c) if v}


def _add(a: Mapping[int, Fraction], b: Mapping[int, Fraction], sign: int = 1) -> dict:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + sign * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _mul(a: Mapping[int, Fraction], b: Mapping[int, Fraction]) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


_UNIT = ((0, Fraction(1)),)


class Scalar:
    """Element of Q(p) in canonical form.  Immutable."""

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, num: Mapping[int, ScalarLike] | int | Fraction = 0,
                 den: Mapping[int, ScalarLike] | None = None):
        if isinstance(num, (int, Rational)):
            num = {0: num} if num else {}
        n = {int(e): Fraction(c) for e, c in num.items() if c}
        if den is None:
            self._set(n, {0: Fraction(1)})
            return
        d = {int(e): Fraction(c) for e, c in den.items() if c}
        if not d:
            raise ZeroDivisionError("scalar with zero denominator")
        self._set(*_normalize(n, d))

    def _set(self, num: dict, den: dict) -> None:
        self._num = tuple(sorted(num.items()))
        self._den = tuple(sorted(den.items()))
        self._hash = None

    @classmethod
    def _raw(cls, num: dict, den: dict) -> "Scalar":
        s = cls.__new__(cls)
        s._set(num, den)
        return s

    # --- accessors ---

    @property
    def num(self) -> dict[int, Fraction]:
        return dict(self._num)

    @property
    def den(self) -> dict[int, Fraction]:
        return dict(self._den)

    def is_zero(self) -> bool:
        return not self._num

    def is_laurent(self) -> bool:
        """True when the denominator is 1, i.e. the value is a Laurent polynomial."""
        return self._den == _UNIT

    def is_constant(self) -> bool:
        return self.is_laurent() and all(e == 0 for e, _ in self._num)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a rational constant")
        return self._num[0][1] if self._num else Fraction(0)

    # --- arithmetic ---

    def __add__(self, other: ScalarLike) -> "Scalar":
        other = as_scalar(other)
        if self._den == other._den:
            num = _add(dict(self._num), dict(other._num))
            if self._den == _UNIT:
                return Scalar._raw(num, {0: Fraction(1)})
            return Scalar(num, dict(self._den))
        num = _add(_mul(dict(self._num), dict(other._den)), _mul(dict(other._num), dict(self._den)))
        return Scalar(num, _mul(dict(self._den), dict(other._den)))

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar._raw({e: -c for e, c in self._num}, dict(self._den))

    def __pos__(self) -> "Scalar":
        return self

    def __sub__(self, other: ScalarLike) -> "Scalar":
        return self + (-as_scalar(other))

    def __rsub__(self, other: ScalarLike) -> "Scalar":
        return as_scalar(other) - self

    def __mul__(self, other: ScalarLike) -> "Scalar":
        if isinstance(other, (int, Rational)) and not isinstance(other, Scalar):
            if not other:
                return ZERO
            c = Fraction(other)
            return Scalar._raw({e: v * c for e, v in self._num}, dict(self._den))
        other = as_scalar(other)
        if not self._num or not other._num:
            return ZERO
        num = _mul(dict(self._num), dict(other._num))
        if self._den == _UNIT and other._den == _UNIT:
            return Scalar._raw(num, {0: Fraction(1)})
        return Scalar(num, _mul(dict(self._den), dict(other._den)))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self._num:
            raise ZeroDivisionError("division by zero scalar")
        return Scalar(dict(self._den), dict(self._num))

    def __truediv__(self, other: ScalarLike) -> "Scalar":
        return self * as_scalar(other).inverse()

    def __rtruediv__(self, other: ScalarLike) -> "Scalar":
        return as_scalar(other) * self.inverse()

    def __pow__(self, k: int) -> "Scalar":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # --- comparison / hashing ---

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Scalar):
            return self._num == other._num and self._den == other._den
        if isinstance(other, (int, Rational)):
            return self == as_scalar(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._num, self._den))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._num)

    # --- evaluation / display ---

    def __call__(self, v: ScalarLike) -> Fraction:
        return eval_at(self, v)

    def render(self, param: str = "p") -> str:
        from homsuper.literal import render_scalar

        return render_scalar(self, param)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Scalar({self.render()!r})"


def _normalize(num: dict, den: dict) -> tuple[dict, dict]:
    if not num:
        return {}, {0: Fraction(1)}
    a = min(num)
    b = min(den)
    n0 = _dense(num, a)
    d0 = _dense(den, b)
    if len(d0) > 1 and len(n0) > 1:
        g = _gcd(n0, d0)
        if len(g) > 1:
            n0 = _divmod(n0, g)[0]
            d0 = _divmod(d0, g)[0]
    lead = d0[-1]
    if lead != 1:
        n0 = [c / lead for c in n0]
        d0 = [c / lead for c in d0]
    return _sparse(n0, a - b), _sparse(d0)


def as_scalar(x: ScalarLike) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Rational)):
        if not x:
            return ZERO
        return Scalar._raw({0: Fraction(x)}, {0: Fraction(1)})
    raise TypeError(f"cannot interpret {x!r} as a Scalar")


def monomial(coeff: ScalarLike, k: int) -> Scalar:
    """``coeff * p**k`` for a rational ``coeff``."""
    c = Fraction(coeff)
    return Scalar._raw({k: c} if c else {}, {0: Fraction(1)})


ZERO = Scalar._raw({}, {0: Fraction(1)})
ONE = Scalar._raw({0: Fraction(1)}, {0: Fraction(1)})
P = Scalar._raw({1: Fraction(1)}, {0: Fraction(1)})

_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
}


def scalar_op(kind: str, a: ScalarLike, b: ScalarLike) -> Scalar:
    """Apply one of ``add``, ``sub``, ``mul``, ``div`` to two scalars."""
    try:
        op = _OPS[kind]
    except KeyError:
        raise ValueError(f"unknown scalar operation {kind!r}") from None
    return op(as_scalar(a), as_scalar(b))


def _horner(coeffs: Iterable[tuple[int, Fraction]], v: Fraction) -> Fraction:
    return sum((c * v**e for e, c in coeffs), Fraction(0))


def eval_at(a: ScalarLike, v: ScalarLike) -> Fraction:
    """Exact value of ``a`` at ``p = v``."""
    a = as_scalar(a)
    v = Fraction(v)
    if v == 0 and any(e < 0 for e, _ in a._num):
        raise EvaluationError("negative power of the parameter evaluated at 0")
    d = _horner(a._den, v)
    if d == 0:
        raise EvaluationError(f"pole at p = {v}")
    return _horner(a._num, v) / d


@lru_cache(maxsize=None)
def q_number(n: int) -> Scalar:
    """The q-number ``(1 - p**n) / (1 - p)`` in canonical form.

    For ``n >= 0`` this is ``1 + p + ... + p**(n-1)``; for ``n < 0`` it is
    ``-(p**-1 + ... + p**n)``.
    """
    if n >= 0:
        return Scalar._raw({k: Fraction(1) for k in range(n)}, {0: Fraction(1)})
    return Scalar._raw({k: Fraction(-1) for k in range(n, 0)}, {0: Fraction(1)})
