"""Sigma-derivations on the Laurent-Grassmann superalgebra and the q-deformed Witt superalgebra.

The superalgebra is ``A = Q(p)[t, t^-1] + theta Q(p)[t, t^-1]`` with ``theta^2 = 0``
and ``t theta = theta t``.  Only monomial-diagonal endomorphisms and
derivations are supported, which covers every map used here; all checks run on
a finite window of exponents, so "pass" means verified on that window.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Iterator, Mapping

from homsuper.graded import UnsupportedInputError
from homsuper.report import DEFAULT_MAX_VIOLATIONS, UNDETERMINED, CheckReport
from homsuper.scalar import ONE, ZERO, P, Scalar, ScalarLike, as_scalar, q_number

__all__ = [
    "LGElement",
    "MonomialEndo",
    "DiagonalDerivation",
    "QhlConfig",
    "WittGenerator",
    "lg_multiply",
    "apply_endo",
    "apply_derivation",
    "check_sigma_derivation",
    "check_hls_conditions",
    "hls_bracket",
    "check_qhl_identity",
    "qwitt_bracket",
    "qwitt_alpha",
    "check_qwitt_hom_lie",
    "check_bracket_oracle",
    "qhl_residual",
    "qwitt_generators",
    "qwitt_jacobi_residual",
    "X",
    "G",
    "qwitt_config",
    "parse_window",
]


def _clean(d: Mapping[int, ScalarLike]) -> dict[int, Scalar]:
    out = {}
    for n, c in d.items():
        c = as_scalar(c)
        if c:
            out[int(n)] = c
    return out


def _acc(target: dict[int, Scalar], n: int, c: Scalar) -> None:
    v = target.get(n, ZERO) + c
    if v:
        target[n] = v
    else:
        target.pop(n, None)


class LGElement:
    """``sum even[n] t^n + sum odd[n] theta t^n``."""

    __slots__ = ("even", "odd")

    def __init__(self, even: Mapping[int, ScalarLike] | None = None, odd: Mapping[int, ScalarLike] | None = None):
        self.even = _clean(even or {})
        self.odd = _clean(odd or {})

    @classmethod
    def t(cls, n: int, coeff: ScalarLike = ONE) -> "LGElement":
        return cls({n: coeff})

    @classmethod
    def theta_t(cls, n: int, coeff: ScalarLike = ONE) -> "LGElement":
        return cls(odd={n: coeff})

    def is_zero(self) -> bool:
        return not self.even and not self.odd

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_homogeneous(self) -> bool:
        return not (self.even and self.odd)

    @property
    def parity(self) -> int:
        if not self.is_homogeneous():
            raise UnsupportedInputError("element is not homogeneous")
        return 1 if self.odd else 0

    def __add__(self, other: "LGElement") -> "LGElement":
        return self._axpy(other, ONE)

    def __sub__(self, other: "LGElement") -> "LGElement":
        return self._axpy(other, -ONE)

    def __neg__(self) -> "LGElement":
        return self.scale(-1)

    def _axpy(self, other: "LGElement", a: ScalarLike) -> "LGElement":
        a = as_scalar(a)
        out = LGElement()
        out.even, out.odd = dict(self.even), dict(self.odd)
        for n, c in other.even.items():
            _acc(out.even, n, a * c)
        for n, c in other.odd.items():
            _acc(out.odd, n, a * c)
        return out

    def scale(self, a: ScalarLike) -> "LGElement":
        a = as_scalar(a)
        return LGElement({n: a * c for n, c in self.even.items()}, {n: a * c for n, c in self.odd.items()})

    __rmul__ = scale

    def __mul__(self, other):
        if isinstance(other, LGElement):
            return lg_multiply(self, other)
        return self.scale(other)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LGElement):
            return self.even == other.even and self.odd == other.odd
        if other == 0:
            return self.is_zero()
        return NotImplemented

    def __hash__(self) -> int:
        return hash((frozenset(self.even.items()), frozenset(self.odd.items())))

    def terms(self) -> list[tuple[str, Scalar]]:
        out = [(_mono_label(0, n), c) for n, c in sorted(self.even.items())]
        out += [(_mono_label(1, n), c) for n, c in sorted(self.odd.items())]
        return out

    def __repr__(self) -> str:
        from homsuper.literal import render_combo

        return f"LGElement({render_combo(self.terms())})"


def _mono_label(parity: int, n: int) -> str:
    t = "1" if n == 0 else ("t" if n == 1 else f"t^{n}")
    if parity == 0:
        return t
    return "theta" if n == 0 else f"theta*{t}"


def lg_multiply(a: LGElement, b: LGElement) -> LGElement:
    """Product in A: exponents add, ``theta^2 = 0``, ``t`` and ``theta`` commute."""
    out = LGElement()
    for (n, c), (m, d) in product(a.even.items(), b.even.items()):
        _acc(out.even, n + m, c * d)
    for (n, c), (m, d) in product(a.even.items(), b.odd.items()):
        _acc(out.odd, n + m, c * d)
    for (n, c), (m, d) in product(a.odd.items(), b.even.items()):
        _acc(out.odd, n + m, c * d)
    return out


@dataclass(frozen=True)
class MonomialEndo:
    """``t^n -> s_t^n t^n`` and ``theta t^n -> s_theta s_t^n theta t^n``."""

    s_t: Scalar
    s_theta: Scalar

    def __post_init__(self):
        object.__setattr__(self, "s_t", as_scalar(self.s_t))
        object.__setattr__(self, "s_theta", as_scalar(self.s_theta))
        if not self.s_t:
            raise ValueError("the image of t must be invertible")

    @classmethod
    def identity(cls) -> "MonomialEndo":
        return cls(ONE, ONE)

    def even_scale(self, n: int) -> Scalar:
        return self.s_t**n

    def odd_scale(self, n: int) -> Scalar:
        return self.s_theta * self.s_t**n

    def __call__(self, a: LGElement) -> LGElement:
        return apply_endo(self, a)


@dataclass(frozen=True)
class DiagonalDerivation:
    """``t^n -> d_even(n) t^n`` and ``theta t^n -> d_odd(n) theta t^n``."""

    d_even: Callable[[int], ScalarLike]
    d_odd: Callable[[int], ScalarLike]
    parity: int = 0
    name: str = "D"

    def __call__(self, a: LGElement) -> LGElement:
        return apply_derivation(self, a)

    @classmethod
    def qwitt(cls) -> "DiagonalDerivation":
        """``d_t + theta d_theta``: ``t^n -> {n} t^n``, ``theta t^n -> {n+1} theta t^n``."""
        return cls(q_number, lambda n: q_number(n + 1), 0, "qwitt")

    @classmethod
    def classical(cls) -> "DiagonalDerivation":
        """``t d/dt``: ``t^n -> n t^n`` on both parts."""
        return cls(lambda n: n, lambda n: n, 0, "classical")


def apply_endo(s: MonomialEndo, a: LGElement) -> LGElement:
    return LGElement({n: s.even_scale(n) * c for n, c in a.even.items()},
                     {n: s.odd_scale(n) * c for n, c in a.odd.items()})


def apply_derivation(d: DiagonalDerivation, a: LGElement) -> LGElement:
    return LGElement({n: as_scalar(d.d_even(n)) * c for n, c in a.even.items()},
                     {n: as_scalar(d.d_odd(n)) * c for n, c in a.odd.items()})


@dataclass(frozen=True)
class QhlConfig:
    sigma: MonomialEndo
    delta_map: DiagonalDerivation
    delta_scalar: Scalar = field(default=ONE)

    def __post_init__(self):
        object.__setattr__(self, "delta_scalar", as_scalar(self.delta_scalar))


def qwitt_config(delta: ScalarLike = ONE) -> QhlConfig:
    """sigma(t) = p t, sigma(theta) = p theta, and Delta = d_t + theta d_theta."""
    return QhlConfig(MonomialEndo(P, P), DiagonalDerivation.qwitt(), delta)


def parse_window(text: str) -> range:
    """Inclusive ``lo:hi``."""
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise ValueError(f"window must look like lo:hi, got {text!r}") from None
    if hi < lo:
        raise ValueError(f"empty window {text!r}")
    return range(lo, hi + 1)


def _window(window: Iterable[int] | str) -> list[int]:
    w = list(parse_window(window) if isinstance(window, str) else window)
    if not w:
        raise ValueError("empty window")
    return w


def _monomials(window: list[int]) -> Iterator[LGElement]:
    for n in window:
        yield LGElement.t(n)
    for n in window:
        yield LGElement.theta_t(n)


def _label(a: LGElement) -> str:
    (label, _), = a.terms()
    return label


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def check_sigma_derivation(cfg: QhlConfig, window: Iterable[int] | str, *,
                           max_violations: int = DEFAULT_MAX_VIOLATIONS) -> CheckReport:
    """``D(ab) = D(a) b + (-1)^{i|a|} sigma(a) D(b)`` on all monomial pairs of the window."""
    mons = list(_monomials(_window(window)))
    s, d = cfg.sigma, cfg.delta_map
    report = CheckReport("sigma-derivation", examined=len(mons) ** 2, max_violations=max_violations)
    for a, b in product(mons, repeat=2):
        lhs = d(lg_multiply(a, b))
        rhs = lg_multiply(d(a), b)._axpy(lg_multiply(s(a), d(b)), _sign(d.parity * a.parity))
        r = lhs - rhs
        if r:
            report.add((_label(a), _label(b)), r, r.terms())
    return report.finish()


def check_hls_conditions(cfg: QhlConfig, window: Iterable[int] | str, *,
                         max_violations: int = DEFAULT_MAX_VIOLATIONS) -> CheckReport:
    """Check ``Delta(sigma(a)) = delta sigma(Delta(a))`` on the window and certify
    ``sigma(Ann Delta) in Ann Delta`` by finding a monomial ``t^n`` whose image is a unit."""
    w = _window(window)
    mons = list(_monomials(w))
    s, d = cfg.sigma, cfg.delta_map
    report = CheckReport("hls-conditions", examined=len(mons), max_violations=max_violations)
    bad = 0
    for a in mons:
        r = d(s(a)) - s(d(a)).scale(cfg.delta_scalar)
        if r:
            bad += 1
            report.add(("HLSCond2", _label(a)), r, r.terms())
    report.details["HLSCond2"] = "pass" if not bad else f"fail on {bad} of {len(mons)} monomials"
    unit = next((n for n in w if as_scalar(d.d_even(n))), None)
    report.finish()
    if unit is not None:
        report.details["HLSCond1"] = (
            f"pass (Delta({_mono_label(0, unit)}) is a unit, so Ann Delta = 0)")
    else:
        report.details["HLSCond1"] = "undetermined (no monomial in the window maps to a unit)"
        if report.passed:
            report.status = UNDETERMINED
    return report


def hls_bracket(cfg: QhlConfig, a: LGElement, b: LGElement) -> LGElement:
    """Coefficient ``c`` of ``[a.Delta, b.Delta] = c.Delta``:
    ``sigma(a) Delta(b) - (-1)^{|a||b|} sigma(b) Delta(a)``."""
    if not (a.is_homogeneous() and b.is_homogeneous()):
        raise UnsupportedInputError("bracket arguments must be homogeneous")
    s, d = cfg.sigma, cfg.delta_map
    return lg_multiply(s(a), d(b))._axpy(lg_multiply(s(b), d(a)), -_sign(a.parity * b.parity))


def _homogeneous_parts(a: LGElement) -> list[LGElement]:
    return [part for part in (LGElement(a.even), LGElement(odd=a.odd)) if part]


def _bracket(cfg: QhlConfig, a: LGElement, b: LGElement) -> LGElement:
    """Bilinear extension of :func:`hls_bracket` over homogeneous components."""
    out = LGElement()
    for x in _homogeneous_parts(a):
        for y in _homogeneous_parts(b):
            out = out + hls_bracket(cfg, x, y)
    return out


def qhl_residual(cfg: QhlConfig, a: LGElement, b: LGElement, c: LGElement) -> LGElement:
    """Cyclic sum of ``(-1)^{|a||c|}([sigma(a).D, [b.D, c.D]] + delta [a.D, [b.D, c.D]])``."""
    out = LGElement()
    for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
        inner = hls_bracket(cfg, y, z)
        term = _bracket(cfg, cfg.sigma(x), inner) + _bracket(cfg, x, inner).scale(cfg.delta_scalar)
        out = out._axpy(term, _sign(x.parity * z.parity))
    return out


def check_qhl_identity(cfg: QhlConfig, window: Iterable[int] | str, *,
                       max_violations: int = DEFAULT_MAX_VIOLATIONS) -> CheckReport:
    mons = list(_monomials(_window(window)))
    report = CheckReport("qhl-identity", examined=len(mons) ** 3, max_violations=max_violations)
    for a, b, c in product(mons, repeat=3):
        r = qhl_residual(cfg, a, b, c)
        if r:
            report.add((_label(a), _label(b), _label(c)), r, r.terms())
    return report.finish()


# --- q-deformed Witt superalgebra ---


@dataclass(frozen=True, order=True)
class WittGenerator:
    """``X_n = t^n.Delta`` (even) or ``G_n = theta t^n.Delta`` (odd)."""

    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in ("X", "G"):
            raise ValueError("generator kind must be 'X' or 'G'")

    @property
    def parity(self) -> int:
        return 0 if self.kind == "X" else 1

    def to_lg(self) -> LGElement:
        return LGElement.t(self.index) if self.kind == "X" else LGElement.theta_t(self.index)

    def __str__(self) -> str:
        return f"{self.kind}_{self.index}"


def X(n: int) -> WittGenerator:
    return WittGenerator("X", n)


def G(n: int) -> WittGenerator:
    return WittGenerator("G", n)


WittVector = dict  # WittGenerator -> Scalar


def qwitt_bracket(g: WittGenerator, h: WittGenerator) -> WittVector:
    """Closed-form brackets of the q-deformed Witt superalgebra."""
    n, m = g.index, h.index
    if g.kind == "X" and h.kind == "X":
        c, out = q_number(m) - q_number(n), X(n + m)
    elif g.kind == "X" and h.kind == "G":
        c, out = P**n * q_number(m + 1) - P ** (m + 1) * q_number(n), G(n + m)
    elif g.kind == "G" and h.kind == "X":
        c, out = -(P**m * q_number(n + 1) - P ** (n + 1) * q_number(m)), G(n + m)
    else:
        return {}
    return {out: c} if c else {}


def qwitt_alpha(g: WittGenerator) -> Scalar:
    """Eigenvalue of the twisting map: ``1 + p^n`` on ``X_n``, ``1 + p^(n+1)`` on ``G_n``."""
    return ONE + P ** (g.index + g.parity)


def _wadd(target: dict, v: Mapping, a: Scalar) -> None:
    for g, c in v.items():
        w = target.get(g, ZERO) + a * c
        if w:
            target[g] = w
        else:
            target.pop(g, None)


def _wbracket(g: WittGenerator, v: Mapping) -> dict:
    out: dict = {}
    for h, c in v.items():
        _wadd(out, qwitt_bracket(g, h), c)
    return out


def _wterms(v: Mapping) -> list[tuple[str, Scalar]]:
    return [(str(g), v[g]) for g in sorted(v)]


def qwitt_generators(window: Iterable[int] | str) -> list[WittGenerator]:
    w = _window(window)
    return [X(n) for n in w] + [G(n) for n in w]


def qwitt_jacobi_residual(x: WittGenerator, y: WittGenerator, z: WittGenerator) -> dict:
    """``(-1)^{|x||z|}[alpha(x), [y, z]]`` summed cyclically."""
    out: dict = {}
    for u, v, w in ((x, y, z), (z, x, y), (y, z, x)):
        inner = qwitt_bracket(v, w)
        if inner:
            _wadd(out, _wbracket(u, inner), qwitt_alpha(u) * _sign(u.parity * w.parity))
    return out


def _as_generator_coeffs(c: LGElement) -> dict:
    out = {}
    for n, v in c.even.items():
        out[X(n)] = v
    for n, v in c.odd.items():
        out[G(n)] = v
    return out


def check_qwitt_hom_lie(window: Iterable[int] | str, *, max_violations: int = DEFAULT_MAX_VIOLATIONS,
                        oracle: bool = True) -> CheckReport:
    """Graded skew-symmetry and the graded Hom-Jacobi identity on all generators
    with indices in the window, plus agreement of the closed-form brackets with
    the sigma-derivation bracket."""
    gens = qwitt_generators(window)
    report = CheckReport("qwitt-hom-lie", max_violations=max_violations)
    skew_bad = jac_bad = oracle_bad = 0
    for g, h in product(gens, repeat=2):
        r = dict(qwitt_bracket(g, h))
        _wadd(r, qwitt_bracket(h, g), as_scalar(_sign(g.parity * h.parity)))
        if r:
            skew_bad += 1
            report.add(("skew", str(g), str(h)), r, _wterms(r))
    for t in product(gens, repeat=3):
        r = qwitt_jacobi_residual(*t)
        if r:
            jac_bad += 1
            report.add(tuple(str(g) for g in t), r, _wterms(r))
    report.examined = len(gens) ** 2 + len(gens) ** 3
    if oracle:
        agree = check_bracket_oracle(window, max_violations=max_violations)
        oracle_bad = agree.violation_count
        report.merge(agree)
    report.details["skew-symmetry"] = f"{skew_bad} of {len(gens) ** 2} pairs violate"
    report.details["hom-jacobi"] = f"{jac_bad} of {len(gens) ** 3} triples violate"
    if oracle:
        report.details["bracket-oracle"] = f"{oracle_bad} of {len(gens) ** 2} pairs disagree"
    return report.finish()


def check_bracket_oracle(window: Iterable[int] | str, cfg: QhlConfig | None = None, *,
                         max_violations: int = DEFAULT_MAX_VIOLATIONS) -> CheckReport:
    """``qwitt_bracket(g, h)`` against the sigma-derivation bracket of the
    corresponding monomials, read back as generator coefficients."""
    cfg = cfg or qwitt_config()
    gens = qwitt_generators(window)
    report = CheckReport("qwitt-bracket-oracle", examined=len(gens) ** 2, max_violations=max_violations)
    for g, h in product(gens, repeat=2):
        closed = qwitt_bracket(g, h)
        derived = _as_generator_coeffs(hls_bracket(cfg, g.to_lg(), h.to_lg()))
        r = dict(closed)
        _wadd(r, derived, -ONE)
        if r:
            report.add(("oracle", str(g), str(h)), r, _wterms(r))
    return report.finish()
