"""Tabulate the Jacobi defects of the twisted osp(1,2) bracket with the identity map.

Prints every nonzero defect in formal lambda and its value at a few rational
points; all of them vanish at lambda = 1.
"""

import argparse
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from homsuper.scalar import EvaluationError, eval_at
from homsuper.twist import OSP12_BASIS, builtin, jacobi_defect


@dataclass
class Config:
    points: tuple[Fraction, ...] = field(default_factory=lambda: (Fraction(1), Fraction(2), Fraction(-1)))
    ordered: bool = False  # all ordered triples instead of one per unordered set


def run(cfg: Config) -> list[tuple[tuple[str, str, str], str, list[str]]]:
    A = builtin("osp12-lambda").algebra
    names = OSP12_BASIS.names
    rows = []
    seen = set()
    for t in product(names, repeat=3):
        key = t if cfg.ordered else tuple(sorted(t, key=names.index))
        if key in seen:
            continue
        seen.add(key)
        d = jacobi_defect(A, *t)
        if d.is_zero():
            continue
        values = []
        for v in cfg.points:
            try:
                vals = {names[k]: eval_at(c, v) for k, c in d}
                values.append(" + ".join(f"{c}*{n}" for n, c in vals.items() if c) or "0")
            except EvaluationError:
                values.append("pole")
        rows.append((t, d.render(OSP12_BASIS, "lambda"), values))
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--points", default="1,2,-1", help="comma-separated rational lambda values")
    ap.add_argument("--ordered", action="store_true")
    args = ap.parse_args()
    cfg = Config(tuple(Fraction(x) for x in args.points.split(",")), args.ordered)
    rows = run(cfg)
    header = " | ".join(f"lambda={v}" for v in cfg.points)
    print(f"{'triple':<12} {'defect':<40} {header}")
    for t, text, values in rows:
        print(f"{'(' + ','.join(t) + ')':<12} {text:<40} {' | '.join(values)}")
    print(f"{len(rows)} nonzero defects")


if __name__ == "__main__":
    main()
