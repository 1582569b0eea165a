import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homsuper.graded import (
    Element,
    EvenMap,
    HomSuperAlgebra,
    Kind,
    Perm3,
    StructureError,
    SuperAlgebra,
    SuperBasis,
    alpha_associator,
    apply_map,
    check_even_structure,
    multiply,
    permutation_parity,
    supercommutator,
)
from homsuper.identities import random_even_algebra
from homsuper.scalar import P, Scalar
from homsuper.twist import osp12_alpha

EF = SuperBasis(("e", "f"), (0, 1))


def vec(A, **coeffs):
    return Element({A.basis.index(k): v for k, v in coeffs.items()})


def test_multiply_examples(osp12):
    A = osp12.algebra
    assert multiply(A, vec(A, H=1), vec(A, X=1)) == vec(A, X=2)
    assert multiply(A, vec(A, F=1), vec(A, F=1)) == vec(A, Y=2)
    assert multiply(A, vec(A, H=3, F=1), Element()) == Element()


def test_multiply_out_of_range(osp12):
    with pytest.raises(StructureError):
        multiply(osp12.algebra, Element({7: 1}), Element({0: 1}))


def test_apply_map_examples(osp12):
    A = osp12.algebra
    a = osp12_alpha()
    x = vec(A, H=2, F=P)
    assert apply_map(EvenMap.identity(A.basis), x) == x
    assert apply_map(a, vec(A, X=1)) == vec(A, X=P**2)
    assert apply_map(a, vec(A, F=1)) == vec(A, F=1 / P)


def test_even_map_rejects_odd_component():
    with pytest.raises(StructureError):
        EvenMap(EF, {0: Element({1: 1})})


def test_supercommutator_examples():
    comm = SuperAlgebra(SuperBasis(("a", "b"), (0, 0)), {(0, 1): Element({0: 1}), (1, 0): Element({0: 1})})
    assert supercommutator(comm).table == {}

    odd_square = SuperAlgebra(EF, {(1, 1): Element({0: 1})})
    assert supercommutator(odd_square).entry(1, 1) == Element({0: 2})

    left = SuperAlgebra(EF, {(0, 1): Element({1: 1})})
    br = supercommutator(left)
    assert br.kind is Kind.BRACKET
    assert br.entry(0, 1) == Element({1: 1})
    assert br.entry(1, 0) == Element({1: -1})


@pytest.mark.parametrize("seed", range(20))
def test_supercommutator_graded_skew(seed):
    H = random_even_algebra(random.Random(seed), symbolic=True)
    br = supercommutator(H.algebra)
    par = H.basis.parities
    for i, j in product(range(H.algebra.dim), repeat=2):
        sign = -1 if par[i] * par[j] else 1
        assert br.entry(i, j) + br.entry(j, i).scale(sign) == Element()


def test_alpha_associator_one_dim():
    B = SuperBasis(("e",), (0,))
    e = Element({0: 1})
    # mu(e, e) = e, alpha = c * id: as = (c - c) e
    A = SuperAlgebra(B, {(0, 0): e})
    c = 3 + P
    H = HomSuperAlgebra(A, EvenMap(B, {0: e.scale(c)}))
    assert alpha_associator(H, e, e, e) == Element()
    # mu(e, e) = 2e with alpha = id: mu(e, 2e) - mu(2e, e) = 0
    H2 = HomSuperAlgebra.untwisted(SuperAlgebra(B, {(0, 0): e.scale(2)}))
    assert alpha_associator(H2, e, e, e) == Element()


def test_alpha_associator_brute_force():
    B = SuperBasis(("a", "b"), (0, 0))
    A = SuperAlgebra(B, {(0, 0): Element({1: 1}), (1, 0): Element({0: 2})})
    H = HomSuperAlgebra(A, EvenMap(B, {0: Element({0: 5}), 1: Element({1: 1})}))
    a = Element({0: 1})
    # mu(5a, mu(a, a)) - mu(mu(a, a), 5a) = mu(5a, b) - mu(b, 5a) = 0 - 10a
    assert alpha_associator(H, a, a, a) == Element({0: -10})


def test_permutation_parity_examples():
    assert all(permutation_parity(Perm3.ID, t) == 0 for t in product((0, 1), repeat=3))
    assert permutation_parity(Perm3.S1, (1, 1, 0)) == 1
    assert permutation_parity(Perm3.S2S1S2, (1, 1, 1)) == 1


def test_perm_action_and_signs():
    x = ("x1", "x2", "x3")
    assert Perm3.S1.act(x) == ("x2", "x1", "x3")
    assert Perm3.S2.act(x) == ("x1", "x3", "x2")
    assert Perm3.S1S2.act(x) == Perm3.S1.act(Perm3.S2.act(x))
    assert Perm3.S2S1.act(x) == Perm3.S2.act(Perm3.S1.act(x))
    assert Perm3.S2S1S2.act(x) == Perm3.S2.act(Perm3.S1.act(Perm3.S2.act(x)))
    for tau in Perm3:
        inversions = sum(1 for a in range(3) for b in range(a + 1, 3) if tau.positions[a] > tau.positions[b])
        assert tau.sign == (-1) ** inversions


def test_permutation_parity_is_additive():
    # |(tau2 after tau1)(x)| = |tau1(x)| + |tau2(tau1 x)| for all 36 pairs and 8 parity triples
    for t1, t2 in product(Perm3, repeat=2):
        for pars in product((0, 1), repeat=3):
            composed = t1.then(t2)
            assert composed.act(pars) == t2.act(t1.act(pars))
            lhs = permutation_parity(composed, pars)
            rhs = (permutation_parity(t1, pars) + permutation_parity(t2, t1.act(pars))) % 2
            assert lhs == rhs


def test_check_even_structure(osp12):
    assert check_even_structure(osp12.algebra).passed
    assert check_even_structure(SuperAlgebra(EF)).passed
    bad = SuperAlgebra(EF, {(0, 0): Element({1: 1})})
    r = check_even_structure(bad)
    assert not r.passed
    assert r.violating_inputs() == [("e", "e", "f")]


small = st.integers(-3, 3)


@st.composite
def elements(draw, n):
    return Element({i: draw(small) for i in range(n)})


@given(st.integers(0, 50), st.data())
@settings(max_examples=40, deadline=None)
def test_bilinearity(seed, data):
    H = random_even_algebra(random.Random(seed), symbolic=True)
    n = H.algebra.dim
    x, x2, y = (data.draw(elements(n)) for _ in range(3))
    c = data.draw(small) + P
    A = H.algebra
    assert multiply(A, x + x2, y) == multiply(A, x, y) + multiply(A, x2, y)
    assert multiply(A, y, x + x2) == multiply(A, y, x) + multiply(A, y, x2)
    assert multiply(A, x.scale(c), y) == multiply(A, x, y).scale(c)
    assert apply_map(H.alpha, x + x2.scale(c)) == apply_map(H.alpha, x) + apply_map(H.alpha, x2).scale(c)


def test_element_homogeneity(osp12):
    A = osp12.algebra
    assert vec(A, H=1, X=2).is_homogeneous(A.basis)
    assert not vec(A, H=1, F=2).is_homogeneous(A.basis)
    assert Element({0: Scalar(0)}) == Element()
