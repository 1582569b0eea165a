import random
from fractions import Fraction
from itertools import product

import pytest
import sympy

from conftest import SYM_P, sympy_equal, to_sympy
from homsuper.graded import Element, EvenMap, HomSuperAlgebra, SuperAlgebra
from homsuper.identities import check_hom_lie_super, check_morphism
from homsuper.scalar import ONE, P, eval_at
from homsuper.twist import (
    OSP12_BASIS,
    OSP12_RELATIONS,
    TwistError,
    builtin,
    check_endomorphism,
    jacobi_defect,
    osp12,
    osp12_alpha,
    yau_twist,
)

NAMES = OSP12_BASIS.names
PAR = dict(zip(NAMES, OSP12_BASIS.parities))
lam = P

# twisted brackets as printed, in the basis order (H, X, Y, F, G)
PRINTED_TWISTED = {
    ("H", "X"): ("X", 2 * lam**2),
    ("H", "Y"): ("Y", -2 / lam**2),
    ("X", "Y"): ("H", ONE),
    ("Y", "G"): ("F", 1 / lam),
    ("X", "F"): ("G", lam),
    ("H", "F"): ("F", -1 / lam),
    ("H", "G"): ("G", lam),
    ("G", "F"): ("H", ONE),
    ("G", "G"): ("X", -2 * lam**2),
    ("F", "F"): ("Y", 2 / lam**2),
}


def vec(name, c=ONE):
    return Element({NAMES.index(name): c})


def sympy_twisted_table():
    """Twisted bracket built independently in sympy: alpha scales applied to the relations."""
    L = SYM_P
    scale = {"H": 1, "X": L**2, "Y": L**-2, "F": 1 / L, "G": L}
    table = {}
    for (a, b), rhs in OSP12_RELATIONS.items():
        (c, k), = rhs.items()
        table[(a, b)] = {c: k * scale[c]}
        sgn = -1 if PAR[a] * PAR[b] == 0 else 1
        if (b, a) not in OSP12_RELATIONS and a != b:
            table[(b, a)] = {c: sgn * k * scale[c]}
    return table


def sympy_defect(x, y, z):
    t = sympy_twisted_table()

    def br(u, v):
        out = {}
        for a, ca in u.items():
            for b, cb in v.items():
                for c, cc in t.get((a, b), {}).items():
                    out[c] = out.get(c, 0) + ca * cb * cc
        return out

    def add(acc, vecd, s):
        for k, c in vecd.items():
            acc[k] = acc.get(k, 0) + s * c

    acc = {}
    for u, v, w in ((x, y, z), (z, x, y), (y, z, x)):
        add(acc, br({u: 1}, br({v: 1}, {w: 1})), (-1) ** (PAR[u] * PAR[w]))
    return {k: sympy.cancel(c) for k, c in acc.items() if sympy.cancel(c) != 0}


def test_osp12_builtin_table():
    A = osp12()
    assert A.entry(0, 1) == vec("X", 2)
    assert A.entry(4, 3) == vec("H")
    assert A.entry(3, 4) == vec("H")  # [F,G] = [G,F] for two odd elements
    assert A.entry(1, 0) == vec("X", -2)
    nonzero_pairs = {tuple(sorted(ij)) for ij in A.table}
    assert len(nonzero_pairs) == 10


def test_affine3_builtin():
    H = builtin("affine3")
    assert H.algebra.entry(0, 1) == Element({0: 1})
    assert H.algebra.entry(1, 0) == Element({0: -1})
    assert all(2 not in ij for ij in H.algebra.table)
    assert H.alpha.is_identity()


def test_builtins_hom_lie(corpus):
    for H in corpus:
        assert check_hom_lie_super(H).passed, H.name


def test_endomorphism_examples():
    A = osp12()
    assert check_endomorphism(EvenMap.identity(OSP12_BASIS), A).passed
    assert check_endomorphism(osp12_alpha(), A).passed
    bad = EvenMap.diagonal(OSP12_BASIS, {"Y": 2})
    r = check_endomorphism(bad, A)
    assert not r.passed
    assert ("X", "Y") in r.violating_inputs()
    v = next(v for v in r.violations if v.inputs == ("X", "Y"))
    assert v.residual == vec("H", -1)


def test_twist_by_identity_is_noop(corpus):
    for H in corpus:
        if not H.alpha.is_identity():
            continue
        T = yau_twist(H.algebra, EvenMap.identity(H.basis))
        assert T.algebra.same_table(H.algebra)


def test_twisted_osp_matches_printed_table(osp12_lambda):
    A = osp12_lambda.algebra
    for (a, b), (c, k) in PRINTED_TWISTED.items():
        assert A.entry(NAMES.index(a), NAMES.index(b)) == vec(c, k), (a, b)
    printed_pairs = {frozenset(ab) for ab in PRINTED_TWISTED}
    for (i, j) in A.table:
        assert frozenset((NAMES[i], NAMES[j])) in printed_pairs


def test_twisted_osp_matches_sympy_table(osp12_lambda):
    A = osp12_lambda.algebra
    t = sympy_twisted_table()
    for i, j in product(range(5), repeat=2):
        got = {NAMES[k]: to_sympy(c) for k, c in A.entry(i, j)}
        want = t.get((NAMES[i], NAMES[j]), {})
        assert got.keys() == want.keys()
        assert all(sympy_equal(got[k], want[k]) for k in got)


def test_abelian2_twist():
    H = builtin("abelian2")
    alpha = EvenMap.diagonal(H.basis, {"x": 3, "y": P})
    T = yau_twist(H.algebra, alpha)
    assert not T.algebra.table
    assert check_hom_lie_super(T).passed


@pytest.mark.parametrize("value", [Fraction(2), Fraction(-3), Fraction(1, 2), Fraction(5, 7)])
def test_twist_soundness_rational_lambda(value):
    T = yau_twist(osp12(), osp12_alpha(value))
    assert check_hom_lie_super(T).passed


def _random_affine_endo(rng):
    # even endomorphisms of [e1,e2]=e1: e1 -> a e1, e2 -> b e1 + e2 (a != 0) or e1 -> 0, e2 -> b e1 + c e2
    a, b = rng.randint(-3, 3), rng.randint(-3, 3)
    d = rng.randint(-3, 3)
    from homsuper.twist import _affine3
    B = _affine3().basis
    return EvenMap(B, {0: Element({0: a}), 1: Element({0: b, 1: 1}), 2: Element({2: d})})


def test_twist_soundness_affine_corpus():
    rng = random.Random(3)
    A = builtin("affine3").algebra
    for _ in range(20):
        alpha = _random_affine_endo(rng)
        assert check_endomorphism(alpha, A).passed
        assert check_hom_lie_super(yau_twist(A, alpha)).passed


def test_twist_rejects_non_lie():
    B = OSP12_BASIS
    A = SuperAlgebra(B, {(0, 1): vec("X")})
    with pytest.raises(TwistError) as exc:
        yau_twist(A, EvenMap.identity(B))
    assert not exc.value.report.passed


def test_twist_rejects_non_endomorphism():
    with pytest.raises(TwistError) as exc:
        yau_twist(osp12(), EvenMap.diagonal(OSP12_BASIS, {"Y": 2}))
    assert exc.value.report.check == "endomorphism"


def test_family_specialises_to_osp12(osp12_lambda, osp12):
    for i, j in product(range(5), repeat=2):
        got = osp12_lambda.algebra.entry(i, j)
        want = osp12.algebra.entry(i, j)
        assert {k: eval_at(c, 1) for k, c in got} == {k: c.constant_value() for k, c in want}


def test_defect_zero_on_lie(osp12):
    for t in product(range(5), repeat=3):
        assert jacobi_defect(osp12.algebra, *t) == Element()


def test_defect_hff(osp12_lambda):
    d = jacobi_defect(osp12_lambda.algebra, "H", "F", "F")
    assert d == vec("Y", 4 * (lam - 1) / lam**4)
    assert d.render(OSP12_BASIS, "lambda") == "4*(lambda-1)/lambda^4 * Y"
    assert eval_at(d[2], 1) == 0
    assert eval_at(d[2], 2) == Fraction(1, 4)


def test_defect_xyh_lands_on_h(osp12_lambda):
    d = jacobi_defect(osp12_lambda.algebra, "X", "Y", "H")
    assert d == vec("H", 2 * (1 - lam**4) / lam**2)
    assert d[2] == 0


@pytest.mark.parametrize("triple", [("H", "F", "F"), ("X", "Y", "H"), ("X", "F", "G"), ("Y", "G", "G")])
def test_defect_matches_sympy(osp12_lambda, triple):
    d = jacobi_defect(osp12_lambda.algebra, *triple)
    want = sympy_defect(*triple)
    got = {NAMES[k]: to_sympy(c) for k, c in d}
    assert got.keys() == want.keys()
    assert all(sympy_equal(got[k], want[k]) for k in got)


def test_non_lie_certificate(osp12_lambda):
    H = HomSuperAlgebra.untwisted(osp12_lambda.algebra)
    r = check_hom_lie_super(H, max_violations=10**6)
    assert not r.passed
    by_input = {v.inputs: v.residual for v in r.violations}
    for t in (("H", "F", "F"), ("X", "Y", "H")):
        res = by_input[t]
        assert len(res) == 1
        (_, c), = res
        assert c != 0 and eval_at(c, 1) == 0


def test_morphism_transport():
    A = osp12()
    a = osp12_alpha()
    T = yau_twist(A, a)
    assert check_morphism(EvenMap.identity(OSP12_BASIS), T, T).passed
    # f = alpha_2 commutes with alpha_lambda and alpha_3
    f = osp12_alpha(2)
    T2 = yau_twist(A, osp12_alpha(3))
    assert f.compose(osp12_alpha(3)) == osp12_alpha(3).compose(f)
    assert check_morphism(f, T2, T2).passed
    Tl = yau_twist(A, a)
    assert check_morphism(f, Tl, Tl).passed
