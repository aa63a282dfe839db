"""Exact Krawtchouk and Lloyd polynomial values at integer points.

``K_t(x, m) = sum_j (-1)^j (q-1)^(t-j) C(x, j) C(m-x, t-j)`` and
``Psi_k(x, m) = K_0 + ... + K_k``. Python integers are unbounded, so every
value is exact; there is no wraparound to guard against.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from minimalcodes.field import FieldVector, message_digits


def binom(n: int, k: int) -> int:
    """``C(n, k)`` with the summation convention ``C(n, k) = 0`` outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


@dataclass(frozen=True)
class KrawtchoukParams:
    q: int
    m: int
    t: int
    x: int

    def __post_init__(self):
        if self.q < 2:
            raise ValueError(f"q must be >= 2, got {self.q}")
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if not 0 <= self.t <= self.m:
            raise ValueError(f"degree t={self.t} outside [0, {self.m}]")
        if not 0 <= self.x <= self.m:
            raise ValueError(f"argument x={self.x} outside [0, {self.m}]")


@lru_cache(maxsize=1 << 16)
def krawtchouk(q: int, m: int, t: int, x: int) -> int:
    p = KrawtchoukParams(q, m, t, x)
    return sum(
        (-1) ** j * (p.q - 1) ** (t - j) * binom(x, j) * binom(m - x, t - j)
        for j in range(t + 1)
    )


def lloyd(q: int, m: int, k: int, x: int) -> int:
    """Partial sum ``K_0(x, m) + ... + K_k(x, m)``."""
    KrawtchoukParams(q, m, k, x)
    return sum(krawtchouk(q, m, t, x) for t in range(k + 1))


@lru_cache(maxsize=32)
def _space(q: int, m: int) -> tuple[np.ndarray, np.ndarray]:
    pts = message_digits(np.arange(q**m, dtype=np.int64), q, m)
    return pts, np.count_nonzero(pts, axis=1)


def vectors_of_weight(q: int, m: int, t: int) -> np.ndarray:
    """Every vector of GF(q)^m with exactly ``t`` nonzero entries, one per row."""
    pts, wt = _space(q, m)
    return pts[wt == t]


def character_sum_oracle(u: FieldVector, t: int) -> int:
    """Brute-force ``sum over wt(v) = t of zeta_q^(u.v)`` as an exact integer.

    Tallies ``u.v mod q`` over all weight-``t`` vectors ``v``. The sum is an
    integer exactly when the nonzero residue classes are equally populated,
    in which case it equals ``count[0] - count[1]``.
    """
    q, m = u.q, len(u)
    if not 0 <= t <= m:
        raise ValueError(f"t={t} outside [0, {m}]")
    dots = (vectors_of_weight(q, m, t) @ np.array(u.entries, dtype=np.int64)) % q
    counts = [int(c) for c in np.bincount(dots, minlength=q)]
    if len(set(counts[1:])) > 1:
        raise ArithmeticError(f"unequal nonzero residue counts {counts[1:]}")
    return counts[0] - counts[1]
