"""How often random functions give minimal codes, over GF(2), GF(3) and GF(5).

The same generator layout is used for every prime; only p = 3 has a Walsh shortcut,
so everything here goes through the weight criterion on the built code.
"""
import argparse
import random
from dataclasses import dataclass

from minimalcodes.field import weight_distribution
from minimalcodes.minimality import ab_verdict, is_minimal_weight_criterion
from minimalcodes.ternary import FieldFunction, build_cf_general, equals_linear_form


@dataclass
class Config:
    trials: int = 40
    seed: int = 1
    cases: tuple = ((2, 4), (2, 6), (3, 3), (5, 2))


def random_function(rng: random.Random, p: int, m: int) -> FieldFunction:
    while True:
        f = FieldFunction(p, m, tuple([0] + [rng.randrange(p) for _ in range(p**m - 1)]))
        if not equals_linear_form(f):
            return f


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=Config.trials)
    parser.add_argument("--seed", type=int, default=Config.seed)
    args = parser.parse_args()
    cfg = Config(trials=args.trials, seed=args.seed)
    rng = random.Random(cfg.seed)

    print(f"{'p':>2} {'m':>2} {'n':>5} {'minimal':>8} {'ab hits':>8}")
    for p, m in cfg.cases:
        minimal = ab_hits = 0
        for _ in range(cfg.trials):
            code = build_cf_general(random_function(rng, p, m))
            minimal += bool(is_minimal_weight_criterion(code).minimal)
            ab_hits += bool(ab_verdict(weight_distribution(code), p).minimal)
        print(f"{p:>2} {m:>2} {p**m - 1:>5} {minimal:>5}/{cfg.trials:<3} {ab_hits:>5}")


if __name__ == "__main__":
    main()
