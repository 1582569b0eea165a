"""Reading and writing algebra-definition files.

Example::

    algebra affine3
    basis e1 : even
    basis e2 : even
    basis e3 : odd
    bracket e1 e2 = e1
    bracket e2 e1 = -e1
    alpha e1 = 2*e1

Lines: ``algebra NAME`` (first), ``param NAME``, ``basis NAME : even|odd``,
``mul A B = combo`` or ``bracket A B = combo``, ``alpha A = combo``.  ``#``
starts a comment.  Unlisted table entries are zero, unlisted alpha lines are
the identity.
"""

from __future__ import annotations

import re

from homsuper.graded import (
    Element,
    EvenMap,
    HomSuperAlgebra,
    Kind,
    StructureError,
    SuperAlgebra,
    SuperBasis,
    check_even_structure,
)
from homsuper.literal import ParseError, parse_combo, render_combo
from homsuper.report import CheckReport

__all__ = ["AlgebraFileError", "parse_algebra_file", "export_algebra", "parse_map_file", "export_map"]

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_KEYWORDS = {"algebra", "param", "basis", "mul", "bracket", "alpha", "map", "even", "odd"}


class AlgebraFileError(ParseError):
    """Parse error; ``report`` is set when the table failed the evenness check."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None,
                 report: CheckReport | None = None):
        super().__init__(message, line, col)
        self.report = report


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


def _words(text: str, lineno: int) -> list[tuple[str, int]]:
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", text)]


def _ident(word: tuple[str, int], lineno: int, what: str) -> str:
    text, col = word
    if not _IDENT.match(text) or text in _KEYWORDS:
        raise AlgebraFileError(f"invalid {what} {text!r}", lineno, col)
    return text


def _split_eq(line: str, lineno: int) -> tuple[str, str, int]:
    if line.count("=") != 1:
        raise AlgebraFileError("expected exactly one '='", lineno, (line.find("=") + 1) or len(line))
    lhs, rhs = line.split("=")
    return lhs, rhs, len(lhs) + 1


def parse_algebra_file(text: str) -> HomSuperAlgebra:
    name = None
    param = None
    entries: list[tuple[str, str]] = []
    parities: list[int] = []
    names: list[str] = []
    vocab = None
    pending_entries: list[tuple[int, str, str, str, int]] = []
    pending_alpha: list[tuple[int, str, str, int]] = []
    seen_pairs: dict[tuple[str, str], int] = {}
    seen_alpha: dict[str, int] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        words = _words(line, lineno)
        key = words[0][0]
        if name is None:
            if key != "algebra" or len(words) != 2:
                raise AlgebraFileError("file must start with 'algebra NAME'", lineno, words[0][1])
            name = _ident(words[1], lineno, "algebra name")
            continue
        if key == "algebra":
            raise AlgebraFileError("only one 'algebra' header per file", lineno, words[0][1])
        if key == "param":
            if len(words) != 2:
                raise AlgebraFileError("expected 'param NAME'", lineno, words[0][1])
            if param is not None:
                raise AlgebraFileError("at most one parameter per algebra", lineno, words[0][1])
            param = _ident(words[1], lineno, "parameter name")
            if param in names:
                raise AlgebraFileError(f"parameter {param!r} clashes with a basis name", lineno, words[1][1])
        elif key == "basis":
            m = re.match(r"\s*basis\s+(\S+)\s*:\s*(\S+)\s*$", line)
            if not m:
                raise AlgebraFileError("expected 'basis NAME : even|odd'", lineno, words[0][1])
            bname = _ident((m.group(1), m.start(1) + 1), lineno, "basis name")
            if bname in names:
                raise AlgebraFileError(f"duplicate basis name {bname!r}", lineno, m.start(1) + 1)
            if bname == param:
                raise AlgebraFileError(f"basis name {bname!r} clashes with the parameter", lineno, m.start(1) + 1)
            if m.group(2) not in ("even", "odd"):
                raise AlgebraFileError(f"parity must be 'even' or 'odd', got {m.group(2)!r}", lineno,
                                       m.start(2) + 1)
            names.append(bname)
            parities.append(0 if m.group(2) == "even" else 1)
        elif key in ("mul", "bracket"):
            if vocab is not None and vocab != key:
                raise AlgebraFileError("a file uses either 'mul' or 'bracket' lines, not both", lineno, 1)
            vocab = key
            lhs, rhs, col = _split_eq(line, lineno)
            lw = _words(lhs, lineno)
            if len(lw) != 3:
                raise AlgebraFileError(f"expected '{key} A B = combination'", lineno, words[0][1])
            a, b = lw[1][0], lw[2][0]
            for w in lw[1:]:
                _ident(w, lineno, "basis name")
            if (a, b) in seen_pairs:
                raise AlgebraFileError(f"entry for ({a}, {b}) already given on line {seen_pairs[(a, b)]}",
                                       lineno, lw[1][1])
            seen_pairs[(a, b)] = lineno
            pending_entries.append((lineno, a, b, rhs, col))
            entries.append((a, b))
            for w in lw[1:]:
                if w[0] not in names:
                    raise AlgebraFileError(f"undeclared basis name {w[0]!r}", lineno, w[1])
        elif key == "alpha":
            lhs, rhs, col = _split_eq(line, lineno)
            lw = _words(lhs, lineno)
            if len(lw) != 2:
                raise AlgebraFileError("expected 'alpha A = combination'", lineno, words[0][1])
            a = _ident(lw[1], lineno, "basis name")
            if a not in names:
                raise AlgebraFileError(f"undeclared basis name {a!r}", lineno, lw[1][1])
            if a in seen_alpha:
                raise AlgebraFileError(f"alpha of {a!r} already given on line {seen_alpha[a]}", lineno, lw[1][1])
            seen_alpha[a] = lineno
            pending_alpha.append((lineno, a, rhs, col))
        else:
            raise AlgebraFileError(f"unknown statement {key!r}", lineno, words[0][1])

    if name is None:
        raise AlgebraFileError("empty file: expected 'algebra NAME'", 1, 1)
    basis = SuperBasis(tuple(names), tuple(parities))
    index = {n: i for i, n in enumerate(names)}

    table = {}
    for lineno, a, b, rhs, col in pending_entries:
        combo = parse_combo(rhs, index, param, line=lineno, col=col)
        table[(index[a], index[b])] = Element({index[k]: c for k, c in combo.items()})
    kind = Kind.BRACKET if vocab == "bracket" else Kind.PRODUCT
    algebra = SuperAlgebra(basis, table, kind, param, name)

    cols = {i: Element.basis_vector(i) for i in range(len(names))}
    alpha_lines = {}
    for lineno, a, rhs, col in pending_alpha:
        combo = parse_combo(rhs, index, param, line=lineno, col=col)
        cols[index[a]] = Element({index[k]: c for k, c in combo.items()})
        alpha_lines[index[a]] = lineno

    even = check_even_structure(algebra)
    if not even:
        v = even.violations[0]
        i, j = index[v.inputs[0]], index[v.inputs[1]]
        lineno = seen_pairs.get((v.inputs[0], v.inputs[1]))
        raise AlgebraFileError(
            f"entry ({names[i]}, {names[j]}) has a component on {v.inputs[2]} of the wrong parity",
            lineno, None, report=even)
    try:
        alpha = EvenMap(basis, cols)
    except StructureError as exc:
        bad = EvenMap(basis, cols, check=False).parity_violations()[0][0]
        raise AlgebraFileError(str(exc), alpha_lines.get(bad)) from None
    return HomSuperAlgebra(algebra, alpha)


def export_algebra(H: HomSuperAlgebra) -> str:
    """Render in the algebra-file format; every nonzero table entry is written out."""
    A = H.algebra
    param = A.param or "p"
    b = A.basis
    lines = [f"algebra {A.name}"]
    if A.param:
        lines.append(f"param {A.param}")
    for n, par in zip(b.names, b.parities):
        lines.append(f"basis {n} : {'odd' if par else 'even'}")
    word = "bracket" if A.kind is Kind.BRACKET else "mul"
    for (i, j) in sorted(A.table):
        lines.append(f"{word} {b.names[i]} {b.names[j]} = {A.table[(i, j)].render(b, param)}")
    for i, col in H.alpha.columns.items():
        if col != Element.basis_vector(i):
            lines.append(f"alpha {b.names[i]} = {col.render(b, param)}")
    return "\n".join(lines) + "\n"


def parse_map_file(text: str, source: SuperBasis, target: SuperBasis | None = None,
                   keyword: str = "alpha", default_identity: bool = True) -> tuple[EvenMap, str | None]:
    """Parse ``param NAME`` and ``<keyword> A = combination`` lines into an even map.

    Unlisted basis vectors go to themselves (``default_identity``) or to zero.
    Returns the map and the declared parameter name, if any.
    """
    target = target if target is not None else source
    src = {n: i for i, n in enumerate(source.names)}
    tgt = {n: i for i, n in enumerate(target.names)}
    param = None
    cols = {}
    lines_of = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        words = _words(line, lineno)
        key = words[0][0]
        if key == "param":
            if len(words) != 2:
                raise AlgebraFileError("expected 'param NAME'", lineno, words[0][1])
            if param is not None:
                raise AlgebraFileError("at most one parameter per file", lineno, words[0][1])
            param = _ident(words[1], lineno, "parameter name")
        elif key == keyword:
            lhs, rhs, col = _split_eq(line, lineno)
            lw = _words(lhs, lineno)
            if len(lw) != 2:
                raise AlgebraFileError(f"expected '{keyword} A = combination'", lineno, words[0][1])
            a = lw[1][0]
            if a not in src:
                raise AlgebraFileError(f"undeclared basis name {a!r}", lineno, lw[1][1])
            if src[a] in cols:
                raise AlgebraFileError(f"image of {a!r} given twice", lineno, lw[1][1])
            combo = parse_combo(rhs, tgt, param, line=lineno, col=col)
            cols[src[a]] = Element({tgt[k]: c for k, c in combo.items()})
            lines_of[src[a]] = lineno
        else:
            raise AlgebraFileError(f"unknown statement {key!r}", lineno, words[0][1])
    if default_identity:
        if source != target:
            raise StructureError("identity default needs equal bases")
        for i in range(len(source)):
            cols.setdefault(i, Element.basis_vector(i))
    try:
        return EvenMap(source, cols, target=target), param
    except StructureError as exc:
        bad = EvenMap(source, cols, target=target, check=False).parity_violations()[0][0]
        raise AlgebraFileError(str(exc), lines_of.get(bad)) from None


def export_map(m: EvenMap, param: str | None = None, keyword: str = "alpha") -> str:
    lines = [f"param {param}"] if param else []
    for i, col in m.columns.items():
        lines.append(f"{keyword} {m.basis.names[i]} = {render_combo(col.terms(m.target), param or 'p')}")
    return "\n".join(lines) + "\n"
