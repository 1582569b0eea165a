"""Time the q-Witt checks over growing symmetric windows."""

import argparse
import time
from dataclasses import dataclass

from homsuper.scalar import P
from homsuper.sigma import (
    check_bracket_oracle,
    check_hls_conditions,
    check_qhl_identity,
    check_qwitt_hom_lie,
    check_sigma_derivation,
    qwitt_config,
)


@dataclass
class Config:
    max_radius: int = 3
    delta_p: bool = False  # use delta = p, which breaks the second condition
    skip_identity: bool = False


def sweep(cfg: Config):
    qcfg = qwitt_config(P if cfg.delta_p else 1)
    checks = [
        ("sigma-derivation", lambda w: check_sigma_derivation(qcfg, w)),
        ("hls-conditions", lambda w: check_hls_conditions(qcfg, w)),
        ("bracket-oracle", lambda w: check_bracket_oracle(w, qcfg)),
        ("qwitt-hom-lie", lambda w: check_qwitt_hom_lie(w, oracle=False)),
    ]
    if not cfg.skip_identity:
        checks.append(("qhl-identity", lambda w: check_qhl_identity(qcfg, w)))
    for r in range(1, cfg.max_radius + 1):
        window = range(-r, r + 1)
        for name, fn in checks:
            start = time.perf_counter()
            rep = fn(window)
            yield r, name, rep.status, rep.violation_count, rep.examined, time.perf_counter() - start


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-radius", type=int, default=3)
    ap.add_argument("--delta-p", action="store_true")
    ap.add_argument("--skip-identity", action="store_true")
    args = ap.parse_args()
    cfg = Config(args.max_radius, args.delta_p, args.skip_identity)
    print(f"{'window':<10}{'check':<18}{'status':<8}{'violations':>11}{'examined':>10}{'seconds':>9}")
    for r, name, status, bad, examined, secs in sweep(cfg):
        print(f"{f'[-{r},{r}]':<10}{name:<18}{status:<8}{bad:>11}{examined:>10}{secs:>9.2f}")


if __name__ == "__main__":
    main()
