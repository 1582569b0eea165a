import random

import pytest
import sympy

from homsuper.identities import random_even_algebra
from homsuper.scalar import Scalar
from homsuper.twist import builtin

SYM_P = sympy.Symbol("p")


def to_sympy(s: Scalar):
    num = sum(sympy.Rational(c.numerator, c.denominator) * SYM_P**e for e, c in s.num.items())
    den = sum(sympy.Rational(c.numerator, c.denominator) * SYM_P**e for e, c in s.den.items())
    return num / den


def sympy_equal(a, b) -> bool:
    # cancel() can leave unevaluated rational sums such as -1/4 + 1/4
    num, _ = sympy.fraction(sympy.together(a - b))
    return sympy.expand(num) == 0


def random_corpus(count: int, seed: int = 0, **kw):
    rng = random.Random(seed)
    return [random_even_algebra(rng, symbolic=(k % 3 == 0), **kw) for k in range(count)]


@pytest.fixture(scope="session")
def osp12():
    return builtin("osp12")


@pytest.fixture(scope="session")
def osp12_lambda():
    return builtin("osp12-lambda")


@pytest.fixture(scope="session")
def corpus():
    return [builtin(name) for name in ("osp12", "osp12-lambda", "abelian2", "affine3")]


# one summary line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
