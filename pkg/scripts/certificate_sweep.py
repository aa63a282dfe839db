"""Tabulate gmk certificates over a range of (m, k), with the closed-form weights."""
import argparse
from dataclasses import dataclass
from fractions import Fraction

from minimalcodes.ternary import gmk_certificate


@dataclass
class Config:
    m_min: int = 5
    m_max: int = 14


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--m-min", type=int, default=Config.m_min)
    parser.add_argument("--m-max", type=int, default=Config.m_max)
    args = parser.parse_args()
    cfg = Config(args.m_min, args.m_max)

    print(f"{'m':>3} {'k':>3} {'n':>8} {'dim':>4} {'w_min':>7} {'w_max':>8} {'ratio':>8}  <=2/3  gap")
    for m in range(max(cfg.m_min, 5), cfg.m_max + 1):
        for k in range(2, (m - 1) // 2 + 1):
            c = gmk_certificate(m, k)
            ratio = float(Fraction(c.w_min, c.w_max))
            agree = (c.w_min, c.w_max) == (c.closed_form_w_min, c.closed_form_w_max)
            flag = "yes" if c.ratio_at_most_two_thirds else "no"
            gap = "ok" if c.weight_gap_ok else "fails"
            note = "" if agree else "  closed form disagrees"
            print(f"{m:>3} {k:>3} {c.n:>8} {c.dim:>4} {c.w_min:>7} {c.w_max:>8} {ratio:>8.4f}  {flag:<5}  {gap}{note}")


if __name__ == "__main__":
    main()
