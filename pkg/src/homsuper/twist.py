"""Yau twisting of Lie superalgebras and the builtin example algebras."""

from __future__ import annotations

from itertools import product

from homsuper.graded import Element, EvenMap, HomSuperAlgebra, Kind, SuperAlgebra, SuperBasis, multiply
from homsuper.identities import _index, _record, _sign, check_hom_lie_super
from homsuper.report import DEFAULT_MAX_VIOLATIONS, CheckReport
from homsuper.scalar import P, ScalarLike, as_scalar

__all__ = [
    "TwistError",
    "BUILTIN_IDS",
    "check_endomorphism",
    "yau_twist",
    "builtin",
    "osp12",
    "osp12_alpha",
    "jacobi_defect",
]


class TwistError(ValueError):
    """The hypotheses of the twist construction do not hold; ``report`` says where."""

    def __init__(self, message: str, report: CheckReport):
        super().__init__(message)
        self.report = report


def check_endomorphism(alpha: EvenMap, A: SuperAlgebra, *,
                       max_violations: int = DEFAULT_MAX_VIOLATIONS) -> CheckReport:
    """``alpha([x, y]) = [alpha(x), alpha(y)]`` on all basis pairs."""
    n = A.dim
    report = CheckReport("endomorphism", examined=n * n, max_violations=max_violations)
    for i, j in product(range(n), repeat=2):
        lhs = alpha(A.entry(i, j))
        rhs = multiply(A, alpha.columns[i], alpha.columns[j])
        _record(report, A.basis, (i, j), lhs - rhs)
    return report.finish()


def yau_twist(A: SuperAlgebra, alpha: EvenMap, *, validate: bool = True) -> HomSuperAlgebra:
    """The Hom-Lie superalgebra with bracket ``alpha([x, y])`` and twisting map ``alpha``.

    Raises :class:`TwistError` when ``A`` is not a Lie superalgebra or ``alpha``
    is not an endomorphism of it.
    """
    if validate:
        lie = check_hom_lie_super(HomSuperAlgebra.untwisted(A))
        if not lie:
            raise TwistError("input is not a Lie superalgebra", lie)
        endo = check_endomorphism(alpha, A)
        if not endo:
            raise TwistError("map is not an endomorphism of the bracket", endo)
    table = {ij: alpha(v) for ij, v in A.table.items()}
    out = SuperAlgebra(A.basis, table, Kind.BRACKET, A.param, A.name)
    return HomSuperAlgebra(out, alpha)


def jacobi_defect(A: SuperAlgebra, x: int | str, y: int | str, z: int | str) -> Element:
    """``(-1)^{|x||z|}[x,[y,z]] + (-1)^{|z||y|}[z,[x,y]] + (-1)^{|y||x|}[y,[z,x]]``."""
    i, j, k = (_index(A.basis, v) for v in (x, y, z))
    p = A.basis.parities
    out = Element()
    for u, v, w in ((i, j, k), (k, i, j), (j, k, i)):
        out = out._axpy(multiply(A, Element.basis_vector(u), A.entry(v, w)), _sign(p[u] * p[w]))
    return out


# --- builtins ---

OSP12_BASIS = SuperBasis(("H", "X", "Y", "F", "G"), (0, 0, 0, 1, 1))

OSP12_RELATIONS = {
    ("H", "X"): {"X": 2},
    ("H", "Y"): {"Y": -2},
    ("X", "Y"): {"H": 1},
    ("Y", "G"): {"F": 1},
    ("X", "F"): {"G": 1},
    ("H", "F"): {"F": -1},
    ("H", "G"): {"G": 1},
    ("G", "F"): {"H": 1},
    ("G", "G"): {"X": -2},
    ("F", "F"): {"Y": 2},
}


def osp12() -> SuperAlgebra:
    return SuperAlgebra.from_relations(OSP12_BASIS, OSP12_RELATIONS, Kind.BRACKET, complete=True, name="osp12")


def osp12_alpha(lam: ScalarLike = P) -> EvenMap:
    """``X -> lam^2 X, Y -> lam^-2 Y, H -> H, F -> lam^-1 F, G -> lam G``."""
    lam = as_scalar(lam)
    return EvenMap.diagonal(OSP12_BASIS, {"H": 1, "X": lam**2, "Y": lam**-2, "F": lam**-1, "G": lam})


def _abelian2() -> SuperAlgebra:
    return SuperAlgebra(SuperBasis(("x", "y"), (0, 1)), {}, Kind.BRACKET, name="abelian2")


def _affine3() -> SuperAlgebra:
    basis = SuperBasis(("e1", "e2", "e3"), (0, 0, 1))
    return SuperAlgebra.from_relations(basis, {("e1", "e2"): {"e1": 1}}, Kind.BRACKET,
                                       complete=True, name="affine3")


BUILTIN_IDS = ("osp12", "osp12-lambda", "abelian2", "affine3")


def builtin(name: str) -> HomSuperAlgebra:
    """One of ``osp12``, ``osp12-lambda``, ``abelian2``, ``affine3``.

    ``abelian2`` and ``affine3`` are Hom-Lie for any twisting map; they come
    with the identity.
    """
    if name == "osp12":
        return HomSuperAlgebra.untwisted(osp12())
    if name == "osp12-lambda":
        A = osp12()
        A.param = "lambda"
        H = yau_twist(A, osp12_alpha())
        H.algebra.name = "osp12_lambda"
        return H
    if name == "abelian2":
        return HomSuperAlgebra.untwisted(_abelian2())
    if name == "affine3":
        return HomSuperAlgebra.untwisted(_affine3())
    raise ValueError(f"unknown builtin {name!r}; expected one of {', '.join(BUILTIN_IDS)}")
