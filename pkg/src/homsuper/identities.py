"""Exhaustive identity checkers for Hom-superalgebras.

All identities involved are multilinear, so every checker runs over ordered
tuples of basis vectors only.  Residuals are exact elements; a check passes
iff every residual is zero.
"""

from __future__ import annotations

import random
from enum import Enum
from fractions import Fraction
from itertools import product

from homsuper.graded import (
    Element,
    EvenMap,
    HomSuperAlgebra,
    Kind,
    Perm3,
    StructureError,
    SuperAlgebra,
    SuperBasis,
    UnsupportedInputError,
    alpha_associator,
    multiply,
    permutation_parity,
    supercommutator,
)
from homsuper.report import DEFAULT_MAX_VIOLATIONS, CheckReport
from homsuper.scalar import Scalar, monomial

__all__ = [
    "SubgroupId",
    "check_hom_associative_super",
    "check_hom_leibniz",
    "check_hom_lie_super",
    "hom_jacobi_residual",
    "associator_expansion_residual",
    "s_combination",
    "check_hom_lie_admissible",
    "g_residual",
    "check_g_hom_associative",
    "check_morphism",
    "random_even_algebra",
]


class SubgroupId(Enum):
    """The six subgroups of S3.  G2 algebras are Hom-Vinberg, G3 Hom-pre-Lie."""

    G1 = (Perm3.ID,)
    G2 = (Perm3.ID, Perm3.S1)
    G3 = (Perm3.ID, Perm3.S2)
    G4 = (Perm3.ID, Perm3.S2S1S2)
    G5 = (Perm3.ID, Perm3.S1S2, Perm3.S2S1)
    G6 = tuple(Perm3)

    @property
    def members(self) -> tuple[Perm3, ...]:
        return self.value

    @classmethod
    def parse(cls, text: str) -> "SubgroupId":
        try:
            return cls[text.upper()]
        except KeyError:
            raise ValueError(f"unknown subgroup {text!r}; expected one of G1..G6") from None


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def _vectors(basis: SuperBasis) -> list[Element]:
    return [Element.basis_vector(i) for i in range(len(basis))]


def _index(basis: SuperBasis, x: int | str) -> int:
    if isinstance(x, str):
        return basis.index(x)
    if not 0 <= x < len(basis):
        raise StructureError(f"index {x} out of range")
    return x


def _names(basis: SuperBasis, idx) -> tuple[str, ...]:
    return tuple(basis.names[i] for i in idx)


def _record(report: CheckReport, basis: SuperBasis, idx, residual: Element) -> None:
    if residual:
        report.add(_names(basis, idx), residual, residual.terms(basis))


def _triples(n: int):
    return product(range(n), repeat=3)


def check_hom_associative_super(H: HomSuperAlgebra, *, max_violations: int = DEFAULT_MAX_VIOLATIONS) -> CheckReport:
    """``mu(alpha(x), mu(y, z)) = mu(mu(x, y), alpha(z))`` on all basis triples."""
    n = H.algebra.dim
    e = _vectors(H.basis)
    report = CheckReport("hom-assoc", examined=n**3, max_violations=max_violations)
    for t in _triples(n):
        _record(report, H.basis, t, alpha_associator(H, *(e[i] for i in t)))
    return report.finish()


def check_hom_leibniz(H: HomSuperAlgebra, *, max_violations: int = DEFAULT_MAX_VIOLATIONS) -> CheckReport:
    """``[[x, y], alpha(z)] = [[x, z], alpha(y)] + [alpha(x), [y, z]]`` (ungraded algebras only)."""
    if any(H.basis.parities):
        raise UnsupportedInputError("Hom-Leibniz identity is only defined for purely even algebras")
    A, a = H.algebra, H.alpha
    n = A.dim
    e = _vectors(H.basis)
    report = CheckReport("hom-leibniz", examined=n**3, max_violations=max_violations)
    for i, j, k in _triples(n):
        x, y, z = e[i], e[j], e[k]
        lhs = multiply(A, multiply(A, x, y), a(z))
        rhs = multiply(A, multiply(A, x, z), a(y)) + multiply(A, a(x), multiply(A, y, z))
        _record(report, H.basis, (i, j, k), lhs - rhs)
    return report.finish()


def hom_jacobi_residual(H: HomSuperAlgebra, x: int | str, y: int | str, z: int | str) -> Element:
    """Cyclic sum ``(-1)^{|x||z|} [alpha(x), [y, z]]`` over basis vectors x, y, z."""
    A, a = H.algebra, H.alpha
    i, j, k = (_index(H.basis, v) for v in (x, y, z))
    p = H.basis.parities
    out = Element()
    for u, v, w in ((i, j, k), (k, i, j), (j, k, i)):
        inner = A.entry(v, w)
        if inner:
            term = multiply(A, a.columns[u], inner)
            out = out._axpy(term, _sign(p[u] * p[w]))
    return out


def check_hom_lie_super(H: HomSuperAlgebra, *, max_violations: int = DEFAULT_MAX_VIOLATIONS) -> CheckReport:
    """Graded skew-symmetry on all basis pairs and the graded Hom-Jacobi identity on all triples.

    ``examined`` counts pairs and triples.
    """
    A = H.algebra
    n = A.dim
    p = H.basis.parities
    report = CheckReport("hom-lie-super", examined=n * n + n**3, max_violations=max_violations)
    skew_bad = 0
    for i, j in product(range(n), repeat=2):
        r = A.entry(i, j)._axpy(A.entry(j, i), _sign(p[i] * p[j]))
        if r:
            skew_bad += 1
            _record(report, H.basis, (i, j), r)
    jac_bad = 0
    for t in _triples(n):
        r = hom_jacobi_residual(H, *t)
        if r:
            jac_bad += 1
            _record(report, H.basis, t, r)
    report.details["skew-symmetry"] = f"{skew_bad} of {n * n} pairs violate"
    report.details["hom-jacobi"] = f"{jac_bad} of {n**3} triples violate"
    return report.finish()


def associator_expansion_residual(H: HomSuperAlgebra, x: int | str, y: int | str, z: int | str) -> Element:
    """Hom-Jacobi expression of the supercommutator minus its signed six-term
    associator expansion.  Zero for every Hom-superalgebra."""
    i, j, k = (_index(H.basis, v) for v in (x, y, z))
    px, py, pz = (H.basis.parity(v) for v in (i, j, k))
    lhs = hom_jacobi_residual(HomSuperAlgebra(supercommutator(H.algebra), H.alpha), i, j, k)
    e = _vectors(H.basis)
    X, Y, Z = e[i], e[j], e[k]

    def as_(a, b, c):
        return alpha_associator(H, a, b, c)

    rhs = (
        as_(X, Y, Z).scale(_sign(px * pz))
        + as_(Y, Z, X).scale(_sign(py * px))
        + as_(Z, X, Y).scale(_sign(pz * py))
        - as_(X, Z, Y).scale(_sign(px * pz + py * pz))
        - as_(Z, Y, X).scale(_sign(px * py + py * pz))
        - as_(Y, X, Z).scale(_sign(px * py + px * pz))
    )
    return lhs - rhs


def s_combination(H: HomSuperAlgebra, x: int, y: int, z: int) -> Element:
    """``S(x,y,z) = (-1)^{|x||z|} as(x,y,z) + (-1)^{|y||x|} as(y,z,x) + (-1)^{|z||y|} as(z,x,y)``."""
    e = _vectors(H.basis)
    px, py, pz = (H.basis.parity(v) for v in (x, y, z))
    X, Y, Z = e[x], e[y], e[z]
    return (
        alpha_associator(H, X, Y, Z).scale(_sign(px * pz))
        + alpha_associator(H, Y, Z, X).scale(_sign(py * px))
        + alpha_associator(H, Z, X, Y).scale(_sign(pz * py))
    )


def check_hom_lie_admissible(H: HomSuperAlgebra, mode: str = "jacobi", *,
                             max_violations: int = DEFAULT_MAX_VIOLATIONS) -> CheckReport:
    """Hom-Lie admissibility of a product.

    ``mode="jacobi"`` checks the supercommutator directly; ``mode="s-criterion"``
    checks ``S(x,y,z) = (-1)^{|x||y|+|x||z|+|y||z|} S(x,z,y)`` on every triple.
    """
    n = H.algebra.dim
    if mode == "jacobi":
        inner = check_hom_lie_super(HomSuperAlgebra(supercommutator(H.algebra), H.alpha),
                                    max_violations=max_violations)
        inner.check = "admissible[jacobi]"
        return inner
    if mode != "s-criterion":
        raise ValueError(f"unknown admissibility mode {mode!r}")
    p = H.basis.parities
    report = CheckReport("admissible[s-criterion]", examined=n**3, max_violations=max_violations)
    for i, j, k in _triples(n):
        r = s_combination(H, i, j, k) - s_combination(H, i, k, j).scale(
            _sign(p[i] * p[j] + p[i] * p[k] + p[j] * p[k]))
        _record(report, H.basis, (i, j, k), r)
    return report.finish()


def g_residual(H: HomSuperAlgebra, G: SubgroupId, x: int | str, y: int | str, z: int | str) -> Element:
    """Signed, parity-weighted sum of associators over the permutations in ``G``."""
    idx = tuple(_index(H.basis, v) for v in (x, y, z))
    e = _vectors(H.basis)
    pars = tuple(H.basis.parity(v) for v in idx)
    out = Element()
    for tau in G.members:
        a, b, c = tau.act(idx)
        term = alpha_associator(H, e[a], e[b], e[c])
        out = out._axpy(term, tau.sign * _sign(permutation_parity(tau, pars)))
    return out


def check_g_hom_associative(H: HomSuperAlgebra, G: SubgroupId | str, *,
                            max_violations: int = DEFAULT_MAX_VIOLATIONS) -> CheckReport:
    if isinstance(G, str):
        G = SubgroupId.parse(G)
    n = H.algebra.dim
    report = CheckReport(f"g-assoc:{G.name}", examined=n**3, max_violations=max_violations)
    for t in _triples(n):
        _record(report, H.basis, t, g_residual(H, G, *t))
    return report.finish()


def check_morphism(f: EvenMap, A: HomSuperAlgebra, B: HomSuperAlgebra, *,
                   max_violations: int = DEFAULT_MAX_VIOLATIONS) -> CheckReport:
    """``f(x) f(y) = f(xy)`` on basis pairs and ``f o alpha_A = alpha_B o f`` on basis vectors."""
    if f.basis != A.basis or f.target != B.basis:
        raise StructureError("map does not go from the first algebra's basis to the second's")
    n = A.algebra.dim
    report = CheckReport("morphism", examined=n * n + n, max_violations=max_violations)
    tb = B.basis
    for i, j in product(range(n), repeat=2):
        r = multiply(B.algebra, f.columns[i], f.columns[j]) - f(A.algebra.entry(i, j))
        if r:
            report.add((A.basis.names[i], A.basis.names[j]), r, r.terms(tb))
    for i in range(n):
        r = f(A.alpha.columns[i]) - B.alpha(f.columns[i])
        if r:
            report.add((A.basis.names[i],), r, r.terms(tb))
    return report.finish()


# --- random algebras for property tests ---


def _random_scalar(rng: random.Random, *, symbolic: bool, coeff_range: int) -> Scalar:
    c = Fraction(rng.randint(-coeff_range, coeff_range), rng.choice((1, 1, 1, 2, 3)))
    if symbolic and c and rng.random() < 0.3:
        return monomial(c, rng.randint(-2, 2)) + rng.randint(-1, 1)
    return monomial(c, 0)


def random_even_algebra(rng: random.Random, dim: int | None = None, *, density: float = 0.5,
                        symbolic: bool = False, coeff_range: int = 3,
                        kind: Kind = Kind.PRODUCT) -> HomSuperAlgebra:
    """Random even product table with a random even twisting map.

    Coefficients are small rationals (Laurent monomials in ``p`` when
    ``symbolic``); evenness holds by construction.  Not meant to satisfy any
    identity.
    """
    n = dim if dim is not None else rng.randint(1, 4)
    pars = tuple(rng.randint(0, 1) for _ in range(n))
    basis = SuperBasis(tuple(f"e{i + 1}" for i in range(n)), pars)
    table = {}
    for i, j in product(range(n), repeat=2):
        want = (pars[i] + pars[j]) % 2
        coords = {k: _random_scalar(rng, symbolic=symbolic, coeff_range=coeff_range)
                  for k in range(n) if pars[k] == want and rng.random() < density}
        v = Element(coords)
        if v:
            table[(i, j)] = v
    cols = {i: Element({k: _random_scalar(rng, symbolic=symbolic, coeff_range=coeff_range)
                        for k in range(n) if pars[k] == pars[i] and rng.random() < 0.7})
            for i in range(n)}
    algebra = SuperAlgebra(basis, table, kind, "p" if symbolic else None, "random")
    return HomSuperAlgebra(algebra, EvenMap(basis, cols))
