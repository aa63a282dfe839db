"""Decision procedures for minimality of a linear code.

Two exact checkers scan pairs of codewords:

* ``is_minimal_definitional`` looks for a codeword whose support contains
  the support of an independent codeword.
* ``is_minimal_weight_criterion`` looks for an independent pair with
  ``sum_c wt(a + c b) == (q-1) wt(a) - wt(b)``, using weights only.

Two cheap screens are sufficient conditions only and never prove
non-minimality: the two-weight test and the ``w_min / w_max > (q-1)/q`` ratio.

Both scans run over canonical message representatives (first nonzero digit
equal to 1). Covering and the weight identity are invariant under scaling
either codeword, and the representative of a scalar class is its smallest
message index, so the first violation among representatives is also the
first violation among all ordered pairs.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from minimalcodes._parallel import chunk_ranges, first_hit, map_chunks
from minimalcodes.field import (
    FieldVector,
    LinearCode,
    WeightDistribution,
    combine,
    digits_to_index,
    message_digits,
)

# a-rows per scan chunk is sized so chunk * R * k stays near this many cells
_SCAN_CELLS = 1 << 22


class Method(str, enum.Enum):
    DEFINITIONAL = "definitional"
    WEIGHT_CRITERION = "weight_criterion"
    TWO_WEIGHT = "two_weight"
    AB_RATIO = "ab_ratio"
    WALSH = "walsh"


class Screen(str, enum.Enum):
    MINIMAL = "minimal"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class MinimalityVerdict:
    """Outcome of one checker.

    ``minimal`` is ``None`` when a sufficient-condition screen fails, which
    says nothing either way. ``witness`` is ``(a, b)`` with ``b`` covered by
    ``a`` and independent of it; ``witness_index`` gives their message
    indices. The Walsh checker reports the offending ``triple`` instead.
    """

    minimal: Optional[bool]
    method: Method
    witness: Optional[tuple[FieldVector, FieldVector]] = None
    witness_index: Optional[tuple[int, int]] = None
    triple: Optional[tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]] = None

    @property
    def status(self) -> str:
        if self.minimal is None:
            return "inconclusive"
        return "minimal" if self.minimal else "not_minimal"


def cover_by_weights(a: FieldVector, b: FieldVector) -> bool:
    """Decide ``b`` covered by ``a`` from Hamming weights alone."""
    q = a.q
    lhs = sum(combine(a, c, b).weight() for c in range(1, q))
    return lhs == (q - 1) * a.weight() - b.weight()


def canonical_messages(q: int, k: int) -> np.ndarray:
    """Message indices whose first nonzero digit is 1, ascending."""
    digits = message_digits(np.arange(q**k, dtype=np.int64), q, k)
    nz = digits != 0
    has = nz.any(axis=1)
    lead = digits[np.arange(len(digits)), np.argmax(nz, axis=1)]
    return np.nonzero(has & (lead == 1))[0]


def codeword_weights(code: LinearCode, threads: int = 1) -> np.ndarray:
    """Hamming weight of every codeword, indexed by message."""

    def part(rng: range) -> np.ndarray:
        return np.count_nonzero(code.block(rng.start, rng.stop), axis=1)

    return np.concatenate(map_chunks(part, chunk_ranges(code.size, code.block_rows()), threads))


def _not_minimal(code: LinearCode, method: Method, ia: int, ib: int) -> MinimalityVerdict:
    return MinimalityVerdict(
        False, method, (code.codeword(ia), code.codeword(ib)), (ia, ib)
    )


def is_minimal_definitional(code: LinearCode, threads: int = 1) -> MinimalityVerdict:
    """Scan pairs for a codeword covering an independent codeword, via supports."""
    reps = canonical_messages(code.q, code.k)
    supp = code.at(reps) != 0
    present = supp.astype(np.float64)
    absent = 1.0 - present
    r = len(reps)
    step = max(1, _SCAN_CELLS // max(1, r * 4))

    def scan(rng: range):
        # outside[a, b] = |supp(b) \ supp(a)|; exact in float64 since <= n
        outside = absent[rng.start:rng.stop] @ present.T
        hit = outside == 0
        hit[np.arange(len(rng)), np.arange(rng.start, rng.stop)] = False
        rows, cols = np.nonzero(hit)
        if rows.size == 0:
            return None
        return int(rows[0]) + rng.start, int(cols[0])

    found = first_hit(scan, chunk_ranges(r, step), threads)
    if found is None:
        return MinimalityVerdict(True, Method.DEFINITIONAL)
    return _not_minimal(code, Method.DEFINITIONAL, int(reps[found[0]]), int(reps[found[1]]))


def is_minimal_weight_criterion(code: LinearCode, threads: int = 1) -> MinimalityVerdict:
    """Check ``sum_c wt(a + c b) != (q-1) wt(a) - wt(b)`` for all independent pairs."""
    q, k = code.q, code.k
    weights = codeword_weights(code, threads)
    reps = canonical_messages(q, k)
    digits = message_digits(reps, q, k)
    rep_w = weights[reps]
    r = len(reps)
    step = max(1, _SCAN_CELLS // max(1, r * k))

    def scan(rng: range):
        da = digits[rng.start:rng.stop, None, :]
        total = np.zeros((len(rng), r), dtype=np.int64)
        for c in range(1, q):
            total += weights[digits_to_index((da + c * digits[None, :, :]) % q, q)]
        target = (q - 1) * rep_w[rng.start:rng.stop, None] - rep_w[None, :]
        hit = total == target
        hit[np.arange(len(rng)), np.arange(rng.start, rng.stop)] = False
        rows, cols = np.nonzero(hit)
        if rows.size == 0:
            return None
        return int(rows[0]) + rng.start, int(cols[0])

    found = first_hit(scan, chunk_ranges(r, step), threads)
    if found is None:
        return MinimalityVerdict(True, Method.WEIGHT_CRITERION)
    return _not_minimal(code, Method.WEIGHT_CRITERION, int(reps[found[0]]), int(reps[found[1]]))


def two_weight_sufficient(q: int, w1: int, w2: int) -> Screen:
    """Minimal if ``j*w1 != (j-1)*w2`` for every ``2 <= j <= q``."""
    if w1 <= 0 or w1 >= w2:
        raise ValueError(f"need 0 < w1 < w2, got w1={w1}, w2={w2}")
    if all(j * w1 != (j - 1) * w2 for j in range(2, q + 1)):
        return Screen.MINIMAL
    return Screen.INCONCLUSIVE


def ashikhmin_barg(dist: WeightDistribution, q: int) -> Screen:
    """Minimal if ``w_min / w_max > (q-1)/q``, compared by cross-multiplication."""
    if not dist.nonzero_weights:
        raise ValueError("distribution has no nonzero weight")
    if q * dist.w_min > (q - 1) * dist.w_max:
        return Screen.MINIMAL
    return Screen.INCONCLUSIVE


def _screen_verdict(screen: Screen, method: Method) -> MinimalityVerdict:
    return MinimalityVerdict(True if screen is Screen.MINIMAL else None, method)


def two_weight_verdict(dist: WeightDistribution, q: int) -> MinimalityVerdict:
    """Apply the two-weight screen; codes without exactly two nonzero weights are inconclusive."""
    ws = dist.nonzero_weights
    if len(ws) != 2:
        return MinimalityVerdict(None, Method.TWO_WEIGHT)
    return _screen_verdict(two_weight_sufficient(q, ws[0], ws[1]), Method.TWO_WEIGHT)


def ab_verdict(dist: WeightDistribution, q: int) -> MinimalityVerdict:
    return _screen_verdict(ashikhmin_barg(dist, q), Method.AB_RATIO)
