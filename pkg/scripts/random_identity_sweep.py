"""Run every identity checker over a batch of random even Hom-superalgebras and
count how often each holds, plus the subgroup implications into admissibility."""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from homsuper.identities import (
    SubgroupId,
    check_g_hom_associative,
    check_hom_associative_super,
    check_hom_lie_admissible,
    random_even_algebra,
)


@dataclass
class Config:
    count: int = 200
    seed: int = 0
    max_dim: int = 3
    density: float = 0.3


def run(cfg: Config) -> Counter:
    rng = random.Random(cfg.seed)
    tally: Counter = Counter()
    for _ in range(cfg.count):
        H = random_even_algebra(rng, rng.randint(1, cfg.max_dim), density=cfg.density)
        adm = check_hom_lie_admissible(H).passed
        tally["admissible"] += adm
        tally["hom-assoc"] += check_hom_associative_super(H).passed
        for G in SubgroupId:
            ok = check_g_hom_associative(H, G).passed
            tally[G.name] += ok
            tally["implication-broken"] += ok and not adm
        tally["modes-disagree"] += adm != check_hom_lie_admissible(H, "s-criterion").passed
    return tally


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-dim", type=int, default=3)
    ap.add_argument("--density", type=float, default=0.3)
    args = ap.parse_args()
    cfg = Config(args.count, args.seed, args.max_dim, args.density)
    tally = run(cfg)
    for key in ("hom-assoc", *(g.name for g in SubgroupId), "admissible", "implication-broken", "modes-disagree"):
        print(f"{key:<20}{tally[key]:>6} / {cfg.count}")


if __name__ == "__main__":
    main()
