"""Rebuild the two worked g_(m,k) codes and run every checker on them, with timings."""
import argparse
import time
from dataclasses import dataclass

from minimalcodes.field import weight_distribution
from minimalcodes.minimality import (
    ab_verdict,
    is_minimal_definitional,
    is_minimal_weight_criterion,
    two_weight_verdict,
)
from minimalcodes.ternary import (
    build_cf,
    distribution_from_walsh,
    distribution_gmk_closed,
    is_minimal_walsh,
    make_gmk,
)


@dataclass
class Config:
    cases: tuple = ((5, 2), (7, 2))
    # pair scans over 3^(m+1) codewords get slow past m = 5
    max_m_for_pair_scans: int = 5
    threads: int = 1


def timed(fn, *args, **kwargs):
    start = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - start


def run_case(cfg: Config, m: int, k: int) -> None:
    f = make_gmk(m, k)
    code = build_cf(f)
    print(f"g_({m},{k}): n={code.n} k={code.k}")

    enumerated, t_enum = timed(weight_distribution, code, threads=cfg.threads)
    walsh, t_walsh = timed(distribution_from_walsh, f)
    closed = distribution_gmk_closed(m, k)
    print(f"  enumerator   {enumerated}")
    print(f"  enumeration  {t_enum:7.3f}s   walsh route {t_walsh:7.3f}s   all equal: {enumerated == walsh == closed}")
    print(f"  w_min={enumerated.w_min} w_max={enumerated.w_max}  3*w_min <= 2*w_max: {3 * enumerated.w_min <= 2 * enumerated.w_max}")

    checks = [("ab", lambda: ab_verdict(enumerated, 3)), ("two-weight", lambda: two_weight_verdict(enumerated, 3))]
    checks.append(("walsh", lambda: is_minimal_walsh(f, threads=cfg.threads)))
    if m <= cfg.max_m_for_pair_scans:
        checks.append(("weights", lambda: is_minimal_weight_criterion(code, threads=cfg.threads)))
        checks.append(("definitional", lambda: is_minimal_definitional(code, threads=cfg.threads)))
    for name, fn in checks:
        verdict, elapsed = timed(fn)
        print(f"  {name:<13} {verdict.status:<13} {elapsed:7.3f}s")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--max-m-for-pair-scans", type=int, default=5)
    args = parser.parse_args()
    cfg = Config(threads=args.threads, max_m_for_pair_scans=args.max_m_for_pair_scans)
    for m, k in cfg.cases:
        run_case(cfg, m, k)


if __name__ == "__main__":
    main()
