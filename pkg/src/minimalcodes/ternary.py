"""Codes ``C_f = {(u f(x) + v.x)_{x != 0}}`` from functions on GF(p)^m.

For ``p = 3`` the weights of ``C_f`` are read off the Walsh spectrum of
``f``. Complex arithmetic never appears: with
``N0(w) = #{x : f(x) = w.x}`` the real part satisfies
``2 Re f^(w) = 3 N0(w) - 3^m``, and every formula below is stated for that
doubled integer.

Points of GF(p)^m are indexed by reading ``x`` as an ``m``-digit base-``p``
integer with the first coordinate most significant. Codeword coordinates
run over ``x = 1 .. p^m - 1`` in that order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from minimalcodes._parallel import chunk_ranges, first_hit, map_chunks
from minimalcodes.field import LinearCode, PrimeField, WeightDistribution, digits_to_index, message_digits
from minimalcodes.krawtchouk import binom, lloyd
from minimalcodes.minimality import Method, MinimalityVerdict

_CELLS = 1 << 22


@dataclass(frozen=True)
class FieldFunction:
    """Value table of ``f: GF(p)^m -> GF(p)`` with ``f(0) = 0``."""

    p: int
    m: int
    values: tuple[int, ...]

    def __post_init__(self):
        PrimeField(self.p)
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        vals = tuple(int(v) for v in self.values)
        if len(vals) != self.p**self.m:
            raise ValueError(f"table must have {self.p}^{self.m} = {self.p**self.m} entries, got {len(vals)}")
        if any(v < 0 or v >= self.p for v in vals):
            raise ValueError(f"values must be residues mod {self.p}")
        if vals[0] != 0:
            raise ValueError("f(0) must be 0")
        object.__setattr__(self, "values", vals)

    @classmethod
    def ternary(cls, m: int, values: Sequence[int]) -> "FieldFunction":
        return cls(3, m, tuple(values))

    @property
    def size(self) -> int:
        return self.p**self.m

    def array(self) -> np.ndarray:
        return np.array(self.values, dtype=np.int64)

    def __call__(self, x: Sequence[int]) -> int:
        return self.values[int(digits_to_index(np.array(x, dtype=np.int64) % self.p, self.p))]


def points(p: int, m: int) -> np.ndarray:
    """All of GF(p)^m as rows of digits, in index order."""
    return message_digits(np.arange(p**m, dtype=np.int64), p, m)


def _require_ternary(f: FieldFunction) -> None:
    if f.p != 3:
        raise ValueError(f"Walsh machinery needs p = 3, got p = {f.p}")


@dataclass(frozen=True)
class WalshTable:
    """Doubled real parts ``2 Re f^(w)`` indexed like the points of GF(3)^m."""

    m: int
    doubled_re: tuple[int, ...]

    def __post_init__(self):
        full = 3**self.m
        if len(self.doubled_re) != full:
            raise ValueError("table length must be 3^m")
        for d in self.doubled_re:
            if (d + full) % 3 or abs(d) > 2 * full:
                raise ValueError(f"corrupted Walsh entry {d}")

    def __getitem__(self, w: int) -> int:
        return self.doubled_re[w]

    def array(self) -> np.ndarray:
        return np.array(self.doubled_re, dtype=np.int64)


def walsh_table(f: FieldFunction, threads: int = 1) -> WalshTable:
    _require_ternary(f)
    pts = points(3, f.m)
    vals = f.array()
    full = f.size

    def part(rng: range) -> np.ndarray:
        dots = (pts[rng.start:rng.stop] @ pts.T) % 3
        return np.count_nonzero(dots == vals[None, :], axis=1)

    n0 = np.concatenate(map_chunks(part, chunk_ranges(full, max(1, _CELLS // full)), threads))
    return WalshTable(f.m, tuple(int(v) for v in 3 * n0 - full))


def dimension_ok(f: FieldFunction, table: WalshTable | None = None) -> bool:
    """True iff ``f`` is not a linear form ``w.x``; then ``C_f`` has dimension ``m + 1``."""
    table = table or walsh_table(f)
    return max(table.doubled_re) < 2 * f.size


def _cf_rows(f: FieldFunction) -> list[list[int]]:
    pts = points(f.p, f.m)[1:]
    return [list(f.values[1:])] + [list(pts[:, i]) for i in range(f.m)]


def build_cf(f: FieldFunction) -> LinearCode:
    """The ternary ``[3^m - 1, m + 1]`` code of ``f``."""
    _require_ternary(f)
    if not dimension_ok(f):
        raise ValueError("f equals a linear form; C_f would lose a dimension")
    return LinearCode.from_rows(3, _cf_rows(f))


def equals_linear_form(f: FieldFunction) -> bool:
    """Compare ``f`` against the table of every linear form ``w.x`` directly."""
    pts = points(f.p, f.m)
    vals = f.array()
    step = max(1, _CELLS // f.size)
    for start in range(0, f.size, step):
        forms = (pts[start:start + step] @ pts.T) % f.p
        if (forms == vals[None, :]).all(axis=1).any():
            return True
    return False


def build_cf_general(f: FieldFunction) -> LinearCode:
    """The ``[p^m - 1, m + 1]`` code of ``f`` over any prime field.

    No spectral shortcut exists here; minimality has to be decided by the
    pair-scan checkers.
    """
    if equals_linear_form(f):
        raise ValueError("f equals a linear form; C_f would lose a dimension")
    return LinearCode.from_rows(f.p, _cf_rows(f))


def distribution_from_walsh(f: FieldFunction, table: WalshTable | None = None) -> WeightDistribution:
    """Weight distribution of ``C_f`` from the Walsh spectrum, without enumeration."""
    _require_ternary(f)
    table = table or walsh_table(f)
    if not dimension_ok(f, table):
        raise ValueError("f equals a linear form")
    full = f.size
    base = full - full // 3
    doubled = table.array()
    pts = points(3, f.m)
    neg = digits_to_index((-pts) % 3, 3)
    if np.any(doubled % 3):
        raise ArithmeticError("Walsh entries not divisible by 3")
    counts = {0: 1}
    counts[base] = counts.get(base, 0) + full - 1
    # u = 1 reads f^(-v), u = 2 reads f^(v)
    for d in np.concatenate([doubled[neg], doubled]):
        w = base - int(d) // 3
        counts[w] = counts.get(w, 0) + 1
    return WeightDistribution(counts)


def is_minimal_walsh(f: FieldFunction, table: WalshTable | None = None, threads: int = 1) -> MinimalityVerdict:
    """Minimality of ``C_f`` from triples ``w1 + w2 + w3 = 0`` of distinct points.

    With ``D = 2 Re f^`` the code is minimal iff no such triple has
    ``D(w1) + D(w2) - 2 D(w3) == 2*3^m`` or ``D(w1) + D(w2) + D(w3) == 2*3^m``.
    Ordered pairs ``(w1, w2)`` are scanned so each point of a triple takes
    the ``w3`` slot.
    """
    _require_ternary(f)
    table = table or walsh_table(f, threads)
    if not dimension_ok(f, table):
        raise ValueError("f equals a linear form")
    full = f.size
    target = 2 * full
    doubled = table.array()
    pts = points(3, f.m)
    idx = np.arange(full)
    step = max(1, _CELLS // (full * f.m))

    def scan(rng: range):
        d1 = pts[rng.start:rng.stop, None, :]
        i3 = digits_to_index((-d1 - pts[None, :, :]) % 3, 3)
        i1 = idx[rng.start:rng.stop, None]
        i2 = idx[None, :]
        distinct = (i1 != i2) & (i3 != i1) & (i3 != i2)
        s12 = doubled[i1] + doubled[i2]
        d3 = doubled[i3]
        bad = distinct & ((s12 - 2 * d3 == target) | (s12 + d3 == target))
        rows, cols = np.nonzero(bad)
        if rows.size == 0:
            return None
        a, b = int(rows[0]) + rng.start, int(cols[0])
        return a, b, int(i3[rows[0], cols[0]])

    found = first_hit(scan, chunk_ranges(full, step), threads)
    if found is None:
        return MinimalityVerdict(True, Method.WALSH)
    triple = tuple(tuple(int(e) for e in pts[i]) for i in found)
    return MinimalityVerdict(False, Method.WALSH, triple=triple)


def make_gmk(m: int, k: int) -> FieldFunction:
    """Indicator (into GF(3)) of the nonzero points of weight at most ``k``."""
    if m < 1 or not 1 <= k <= m:
        raise ValueError(f"need 1 <= k <= m, got m={m}, k={k}")
    wt = np.count_nonzero(points(3, m), axis=1)
    return FieldFunction.ternary(m, ((wt >= 1) & (wt <= k)).astype(int).tolist())


def s_size(m: int, k: int) -> int:
    """Number of nonzero points of GF(3)^m with weight at most ``k``."""
    return sum(2**j * binom(m, j) for j in range(1, k + 1))


def distribution_gmk_closed(m: int, k: int) -> WeightDistribution:
    """Closed-form weight distribution of ``C_{g(m,k)}`` via Lloyd polynomials."""
    if m < 1 or not 1 <= k <= m:
        raise ValueError(f"need 1 <= k <= m, got m={m}, k={k}")
    base = 3**m - 3 ** (m - 1)
    counts = {0: 1}

    def add(w: int, c: int) -> None:
        counts[w] = counts.get(w, 0) + c

    for i in range(1, m + 1):
        add(base + lloyd(3, m, k, i) - 1, 2 ** (i + 1) * binom(m, i))
    add(s_size(m, k), 2)
    add(base, 3**m - 1)
    return WeightDistribution(counts)


@dataclass(frozen=True)
class GmkParams:
    """Parameter range where ``C_{g(m,k)}`` is proven minimal."""

    m: int
    k: int

    def __post_init__(self):
        if self.m < 5:
            raise ValueError(f"m must be >= 5, got {self.m}")
        if not 2 <= self.k <= (self.m - 1) // 2:
            raise ValueError(f"k must satisfy 2 <= k <= {(self.m - 1) // 2}, got {self.k}")

    @property
    def n(self) -> int:
        return 3**self.m - 1

    @property
    def dim(self) -> int:
        return self.m + 1

    @property
    def d(self) -> int:
        return s_size(self.m, self.k)


@dataclass(frozen=True)
class GmkCertificate:
    m: int
    k: int
    n: int
    dim: int
    d: int
    w_min: int
    w_max: int
    ratio_at_most_two_thirds: bool
    ratio_strictly_below: bool
    weight_gap_ok: bool
    closed_form_w_min: int
    closed_form_w_max: int

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "n": self.n,
            "dim": self.dim,
            "d": self.d,
            "wmin": self.w_min,
            "wmax": self.w_max,
            "ratio_le_2_3": self.ratio_at_most_two_thirds,
            "ratio_lt_2_3": self.ratio_strictly_below,
            "weight_gap_ok": self.weight_gap_ok,
            "closed_form_wmin": self.closed_form_w_min,
            "closed_form_wmax": self.closed_form_w_max,
        }


def gmk_certificate(m: int, k: int) -> GmkCertificate:
    """Integer checks of the parameters and the ``w_min / w_max <= 2/3`` flag for ``C_{g(m,k)}``."""
    params = GmkParams(m, k)
    d = params.d
    tail = 2**k * binom(m - 1, k)
    w_max = 3**m - 3 ** (m - 1) + tail - 1
    rhs = 2 * (3**m - 3 ** (m - 1)) + 2 * tail - 2
    # rules out the sum condition on triples through w = 0
    gap_ok = all(d != -2 * (lloyd(3, m, k, i) - 1) for i in range(1, m + 1))
    closed = distribution_gmk_closed(m, k)
    return GmkCertificate(
        m=m,
        k=k,
        n=params.n,
        dim=params.dim,
        d=d,
        w_min=d,
        w_max=w_max,
        ratio_at_most_two_thirds=3 * d <= rhs,
        ratio_strictly_below=3 * d < 2 * w_max,
        weight_gap_ok=gap_ok,
        closed_form_w_min=closed.w_min,
        closed_form_w_max=closed.w_max,
    )
