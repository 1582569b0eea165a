"""Finite-dimensional Z2-graded algebras given by structure constants.

Elements are sparse coordinate maps over an ordered :class:`SuperBasis`.  A
:class:`SuperAlgebra` stores the product (or bracket) of every ordered pair of
basis vectors; missing entries are zero.  Twisting maps are :class:`EvenMap`
matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Mapping, Sequence

from homsuper.literal import render_combo
from homsuper.report import CheckReport
from homsuper.scalar import ONE, ZERO, Scalar, ScalarLike, as_scalar

__all__ = [
    "StructureError",
    "UnsupportedInputError",
    "SuperBasis",
    "Element",
    "SuperAlgebra",
    "EvenMap",
    "HomSuperAlgebra",
    "Perm3",
    "multiply",
    "apply_map",
    "supercommutator",
    "alpha_associator",
    "permutation_parity",
    "check_even_structure",
]


class StructureError(ValueError):
    """Inconsistent dimensions, indices or gradings."""


class UnsupportedInputError(ValueError):
    """Input outside the class of algebras an operation is defined for."""


@dataclass(frozen=True)
class SuperBasis:
    names: tuple[str, ...]
    parities: tuple[int, ...]

    def __post_init__(self):
        if len(self.names) != len(self.parities):
            raise StructureError("names and parities differ in length")
        if len(set(self.names)) != len(self.names):
            raise StructureError("duplicate basis name")
        if any(p not in (0, 1) for p in self.parities):
            raise StructureError("parities must be 0 or 1")

    @classmethod
    def of(cls, entries: Iterable[tuple[str, int]]) -> "SuperBasis":
        entries = list(entries)
        return cls(tuple(n for n, _ in entries), tuple(int(p) for _, p in entries))

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise StructureError(f"unknown basis name {name!r}") from None

    def parity(self, i: int) -> int:
        return self.parities[i]


class Element:
    """Sparse vector: basis index -> nonzero Scalar."""

    __slots__ = ("coords",)

    def __init__(self, coords: Mapping[int, ScalarLike] | None = None):
        c = {}
        for i, v in (coords or {}).items():
            v = as_scalar(v)
            if v:
                c[int(i)] = v
        self.coords: dict[int, Scalar] = c

    @classmethod
    def basis_vector(cls, i: int, coeff: ScalarLike = ONE) -> "Element":
        return cls({i: coeff})

    def __iter__(self) -> Iterator[tuple[int, Scalar]]:
        return iter(sorted(self.coords.items()))

    def __getitem__(self, i: int) -> Scalar:
        return self.coords.get(i, ZERO)

    def __len__(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return not self.coords

    __bool__ = lambda self: bool(self.coords)  # noqa: E731

    def parities(self, basis: SuperBasis) -> set[int]:
        return {basis.parity(i) for i in self.coords}

    def is_homogeneous(self, basis: SuperBasis) -> bool:
        return len(self.parities(basis)) <= 1

    def _axpy(self, other: "Element", a: ScalarLike) -> "Element":
        out = dict(self.coords)
        for i, v in other.coords.items():
            w = out.get(i, ZERO) + a * v
            if w:
                out[i] = w
            else:
                out.pop(i, None)
        e = Element.__new__(Element)
        e.coords = out
        return e

    def __add__(self, other: "Element") -> "Element":
        return self._axpy(other, 1)

    def __sub__(self, other: "Element") -> "Element":
        return self._axpy(other, -1)

    def __neg__(self) -> "Element":
        return self.scale(-1)

    def scale(self, a: ScalarLike) -> "Element":
        a = as_scalar(a)
        if not a:
            return Element()
        e = Element.__new__(Element)
        e.coords = {i: a * v for i, v in self.coords.items()}
        return e

    def __rmul__(self, a: ScalarLike) -> "Element":
        return self.scale(a)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Element):
            return self.coords == other.coords
        if other == 0:
            return not self.coords
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.coords.items()))

    def terms(self, basis: SuperBasis) -> list[tuple[str, Scalar]]:
        return [(basis.names[i], c) for i, c in self]

    def render(self, basis: SuperBasis, param: str = "p") -> str:
        return render_combo(self.terms(basis), param)

    def __repr__(self) -> str:
        return f"Element({dict(self)!r})"


class Kind(str, Enum):
    PRODUCT = "product"
    BRACKET = "bracket"


@dataclass
class SuperAlgebra:
    """Even bilinear product or bracket on a super vector space.

    ``table[(i, j)]`` is the product of basis vectors ``i`` and ``j``.
    """

    basis: SuperBasis
    table: dict[tuple[int, int], Element] = field(default_factory=dict)
    kind: Kind = Kind.PRODUCT
    param: str | None = None
    name: str = "algebra"

    def __post_init__(self):
        self.kind = Kind(self.kind)
        n = len(self.basis)
        clean = {}
        for (i, j), v in self.table.items():
            if not (0 <= i < n and 0 <= j < n) or any(not 0 <= k < n for k in v.coords):
                raise StructureError(f"table entry {(i, j)} out of range")
            if v:
                clean[(i, j)] = v
        self.table = clean

    @property
    def dim(self) -> int:
        return len(self.basis)

    def entry(self, i: int, j: int) -> Element:
        return self.table.get((i, j), _ZERO_ELEMENT)

    def vector(self, name: str, coeff: ScalarLike = ONE) -> Element:
        return Element.basis_vector(self.basis.index(name), coeff)

    @classmethod
    def from_relations(cls, basis: SuperBasis, relations: Mapping[tuple[str, str], Mapping[str, ScalarLike]],
                       kind: Kind | str = Kind.BRACKET, *, complete: bool = False,
                       param: str | None = None, name: str = "algebra") -> "SuperAlgebra":
        """Build a table from ``{(a, b): {c: coeff}}``.

        With ``complete=True`` (brackets only) the reversed pair is filled in by
        graded skew-symmetry.
        """
        table: dict[tuple[int, int], Element] = {}
        for (a, b), combo in relations.items():
            i, j = basis.index(a), basis.index(b)
            v = Element({basis.index(c): x for c, x in combo.items()})
            table[(i, j)] = v
            if complete:
                sign = -1 if basis.parity(i) * basis.parity(j) else 1
                table.setdefault((j, i), v.scale(-sign))
        return cls(basis, table, kind, param, name)

    def as_kind(self, kind: Kind | str) -> "SuperAlgebra":
        return SuperAlgebra(self.basis, dict(self.table), Kind(kind), self.param, self.name)

    def same_table(self, other: "SuperAlgebra") -> bool:
        return self.basis == other.basis and self.table == other.table


_ZERO_ELEMENT = Element()


class EvenMap:
    """Linear map given by ``matrix[k][i]`` = coefficient of basis ``k`` in the image of ``i``."""

    def __init__(self, basis: SuperBasis, columns: Mapping[int, Element] | None = None, *,
                 target: SuperBasis | None = None, check: bool = True):
        self.basis = basis
        self.target = target if target is not None else basis
        self.columns: dict[int, Element] = {}
        for i in range(len(basis)):
            col = (columns or {}).get(i, _ZERO_ELEMENT)
            if any(not 0 <= k < len(self.target) for k in col.coords):
                raise StructureError("map image index out of range")
            self.columns[i] = col
        if check:
            bad = self.parity_violations()
            if bad:
                i, k = bad[0]
                raise StructureError(
                    f"map is not even: image of {basis.names[i]} has a component on {self.target.names[k]}")

    @classmethod
    def identity(cls, basis: SuperBasis) -> "EvenMap":
        return cls(basis, {i: Element.basis_vector(i) for i in range(len(basis))})

    @classmethod
    def diagonal(cls, basis: SuperBasis, scales: Mapping[str, ScalarLike]) -> "EvenMap":
        cols = {i: Element.basis_vector(i, scales.get(n, ONE)) for i, n in enumerate(basis.names)}
        return cls(basis, cols)

    @classmethod
    def from_matrix(cls, basis: SuperBasis, matrix: Sequence[Sequence[ScalarLike]], *,
                    target: SuperBasis | None = None) -> "EvenMap":
        tgt = target if target is not None else basis
        cols = {i: Element({k: matrix[k][i] for k in range(len(tgt))}) for i in range(len(basis))}
        return cls(basis, cols, target=target)

    def matrix(self) -> list[list[Scalar]]:
        return [[self.columns[i][k] for i in range(len(self.basis))] for k in range(len(self.target))]

    def parity_violations(self) -> list[tuple[int, int]]:
        return [(i, k) for i, col in self.columns.items() for k in col.coords
                if self.target.parity(k) != self.basis.parity(i)]

    def __call__(self, x: Element) -> Element:
        return apply_map(self, x)

    def compose(self, other: "EvenMap") -> "EvenMap":
        """``self o other``."""
        return EvenMap(other.basis, {i: self(other.columns[i]) for i in other.columns},
                       target=self.target, check=False)

    def is_identity(self) -> bool:
        return self.basis == self.target and all(
            col == Element.basis_vector(i) for i, col in self.columns.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EvenMap):
            return NotImplemented
        return self.basis == other.basis and self.target == other.target and self.columns == other.columns

    def __repr__(self) -> str:
        return f"EvenMap({self.matrix()!r})"


@dataclass
class HomSuperAlgebra:
    algebra: SuperAlgebra
    alpha: EvenMap

    def __post_init__(self):
        if self.alpha.basis != self.algebra.basis or self.alpha.target != self.algebra.basis:
            raise StructureError("twisting map and algebra have different bases")

    @classmethod
    def untwisted(cls, algebra: SuperAlgebra) -> "HomSuperAlgebra":
        return cls(algebra, EvenMap.identity(algebra.basis))

    @property
    def basis(self) -> SuperBasis:
        return self.algebra.basis

    @property
    def kind(self) -> Kind:
        return self.algebra.kind

    @property
    def param(self) -> str | None:
        return self.algebra.param

    @property
    def name(self) -> str:
        return self.algebra.name


def multiply(A: SuperAlgebra, x: Element, y: Element) -> Element:
    """Bilinear extension of the structure-constant table."""
    n = A.dim
    out = Element()
    for i, a in x.coords.items():
        if not 0 <= i < n:
            raise StructureError(f"index {i} out of range")
        for j, b in y.coords.items():
            if not 0 <= j < n:
                raise StructureError(f"index {j} out of range")
            v = A.table.get((i, j))
            if v is not None:
                out = out._axpy(v, a * b)
    return out


def apply_map(m: EvenMap, x: Element) -> Element:
    out = Element()
    for i, a in x.coords.items():
        if i not in m.columns:
            raise StructureError(f"index {i} outside the domain of the map")
        out = out._axpy(m.columns[i], a)
    return out


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def supercommutator(A: SuperAlgebra) -> SuperAlgebra:
    """``[x, y] = xy - (-1)^{|x||y|} yx`` on basis pairs.

    The table is read as a product whatever its declared kind.
    """
    par = A.basis.parities
    table = {}
    for i in range(A.dim):
        for j in range(A.dim):
            v = A.entry(i, j)._axpy(A.entry(j, i), -_sign(par[i] * par[j]))
            if v:
                table[(i, j)] = v
    return SuperAlgebra(A.basis, table, Kind.BRACKET, A.param, A.name)


def alpha_associator(H: HomSuperAlgebra, x1: Element, x2: Element, x3: Element) -> Element:
    """``mu(alpha(x1), mu(x2, x3)) - mu(mu(x1, x2), alpha(x3))``."""
    A, a = H.algebra, H.alpha
    return multiply(A, a(x1), multiply(A, x2, x3)) - multiply(A, multiply(A, x1, x2), a(x3))


class Perm3(Enum):
    """Elements of S3 acting on argument triples, ``tau(x1, x2, x3) = (x_tau(1), x_tau(2), x_tau(3))``.

    Values are (word, positions, sign); compositions read right to left, so
    ``S1S2`` applies ``sigma2`` first.
    """

    ID = ("id", (0, 1, 2), 1)
    S1 = ("sigma1", (1, 0, 2), -1)
    S2 = ("sigma2", (0, 2, 1), -1)
    S1S2 = ("sigma1 sigma2", (2, 0, 1), 1)
    S2S1 = ("sigma2 sigma1", (1, 2, 0), 1)
    S2S1S2 = ("sigma2 sigma1 sigma2", (2, 1, 0), -1)

    @property
    def word(self) -> str:
        return self.value[0]

    @property
    def positions(self) -> tuple[int, int, int]:
        return self.value[1]

    @property
    def sign(self) -> int:
        return self.value[2]

    def act(self, triple: Sequence):
        return tuple(triple[k] for k in self.positions)

    def then(self, other: "Perm3") -> "Perm3":
        """The permutation ``other o self`` (apply ``self`` first)."""
        composed = tuple(self.positions[k] for k in other.positions)
        return _BY_POSITIONS[composed]


_BY_POSITIONS = {p.positions: p for p in Perm3}


def permutation_parity(tau: Perm3, parities: Sequence[int]) -> int:
    """Parity |tau(x1, x2, x3)| of a permutation applied to an argument triple.

    Defined by |sigma_i(x)| = |x_i||x_{i+1}| and additivity along the word.
    """
    a, b, c = parities
    return {
        Perm3.ID: 0,
        Perm3.S1: a * b,
        Perm3.S2: b * c,
        Perm3.S1S2: b * c + a * c,
        Perm3.S2S1: a * b + a * c,
        Perm3.S2S1S2: b * c + a * c + a * b,
    }[tau] % 2


def check_even_structure(A: SuperAlgebra) -> CheckReport:
    """Every product of homogeneous basis vectors lands in the expected parity."""
    report = CheckReport("even-structure", examined=A.dim * A.dim)
    par = A.basis.parities
    for (i, j) in sorted(A.table):
        want = (par[i] + par[j]) % 2
        for k, c in A.table[(i, j)]:
            if par[k] != want:
                names = A.basis.names
                report.add((names[i], names[j], names[k]), Element.basis_vector(k, c),
                           [(names[k], c)])
    return report.finish()
