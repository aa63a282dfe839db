"""Prime-field vectors and linear codes with exhaustive enumeration.

Everything here works with canonical residues in ``[0, q)``. Codewords are
enumerated in a fixed order: message ``i`` (``0 <= i < q**k``) is read as a
``k``-digit base-``q`` integer whose most significant digit multiplies the
first generator row.
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

import numpy as np

from minimalcodes._parallel import chunk_ranges, map_chunks

# rows * n budget for one numpy block of codewords
_BLOCK_CELLS = 1 << 22


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    d = 3
    while d * d <= q:
        if q % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """GF(q) for a prime ``q``."""

    q: int

    def __post_init__(self):
        if not isinstance(self.q, (int, np.integer)) or not is_prime(int(self.q)):
            raise ValueError(f"field order must be prime, got {self.q!r}")
        object.__setattr__(self, "q", int(self.q))

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def neg(self, a: int) -> int:
        return (-a) % self.q

    def inv(self, a: int) -> int:
        if a % self.q == 0:
            raise ZeroDivisionError("0 has no inverse in GF(q)")
        return pow(a, -1, self.q)

    def nonzero(self) -> range:
        return range(1, self.q)


@dataclass(frozen=True)
class FieldVector:
    field: PrimeField
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        if not entries:
            raise ValueError("vectors must have length >= 1")
        q = self.field.q
        if any(e < 0 or e >= q for e in entries):
            raise ValueError(f"entries must be canonical residues mod {q}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, q: int | PrimeField, entries: Sequence[int]) -> "FieldVector":
        """Build a vector, reducing ``entries`` mod ``q``."""
        fld = q if isinstance(q, PrimeField) else PrimeField(q)
        return cls(fld, tuple(int(e) % fld.q for e in entries))

    @classmethod
    def zero(cls, q: int | PrimeField, n: int) -> "FieldVector":
        return cls.of(q, [0] * n)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @property
    def q(self) -> int:
        return self.field.q

    def weight(self) -> int:
        return sum(1 for e in self.entries if e)

    def support(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self.entries) if e)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def scale(self, c: int) -> "FieldVector":
        q = self.q
        return FieldVector(self.field, tuple((c * e) % q for e in self.entries))

    def __add__(self, other: "FieldVector") -> "FieldVector":
        return combine(self, 1, other)

    def __neg__(self) -> "FieldVector":
        return self.scale(-1)

    def __sub__(self, other: "FieldVector") -> "FieldVector":
        return combine(self, -1, other)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"


def _check_pair(a: FieldVector, b: FieldVector) -> None:
    if a.field != b.field:
        raise ValueError(f"field mismatch: GF({a.q}) vs GF({b.q})")
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")


def cap(a: FieldVector, b: FieldVector) -> FieldVector:
    """Keep ``a_i`` where ``a_i == b_i != 0``, zero elsewhere."""
    _check_pair(a, b)
    return FieldVector(a.field, tuple(x if x == y and x else 0 for x, y in zip(a, b)))


def covers(a: FieldVector, b: FieldVector) -> bool:
    """True iff ``support(b)`` is contained in ``support(a)``."""
    _check_pair(a, b)
    return all(x or not y for x, y in zip(a, b))


def combine(a: FieldVector, c: int, b: FieldVector) -> FieldVector:
    """Return ``a + c*b``."""
    _check_pair(a, b)
    q = a.q
    c %= q
    return FieldVector(a.field, tuple((x + c * y) % q for x, y in zip(a, b)))


def linearly_independent(a: FieldVector, b: FieldVector) -> bool:
    """Two vectors are dependent iff one is zero or ``b`` is a multiple of ``a``."""
    _check_pair(a, b)
    if a.is_zero() or b.is_zero():
        return False
    return all(a.scale(c) != b for c in a.field.nonzero())


def rank_mod_p(rows: np.ndarray, q: int) -> int:
    """Rank over GF(q) by Gaussian elimination."""
    m = np.array(rows, dtype=np.int64) % q
    if m.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    nrows, ncols = m.shape
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        pivots = np.nonzero(m[rank:, col])[0]
        if pivots.size == 0:
            continue
        piv = rank + int(pivots[0])
        if piv != rank:
            m[[rank, piv]] = m[[piv, rank]]
        m[rank] = (m[rank] * pow(int(m[rank, col]), -1, q)) % q
        others = np.nonzero(m[:, col])[0]
        others = others[others != rank]
        if others.size:
            m[others] = (m[others] - np.outer(m[others, col], m[rank])) % q
        rank += 1
    return rank


def message_digits(indices: np.ndarray, q: int, k: int) -> np.ndarray:
    """Base-``q`` digits of message indices, most significant first."""
    idx = np.asarray(indices, dtype=np.int64)
    out = np.empty(idx.shape + (k,), dtype=np.int64)
    rest = idx.copy()
    for j in range(k - 1, -1, -1):
        out[..., j] = rest % q
        rest //= q
    return out


def digits_to_index(digits: np.ndarray, q: int) -> np.ndarray:
    k = digits.shape[-1]
    powers = q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return digits @ powers


@dataclass(frozen=True)
class LinearCode:
    """A ``[n, k]`` code given by a full-rank generator matrix."""

    field: PrimeField
    generator: tuple[tuple[int, ...], ...]
    _matrix: np.ndarray = dataclasses.field(init=False, repr=False, compare=False)

    def __post_init__(self):
        q = self.field.q
        rows = tuple(tuple(int(e) for e in row) for row in self.generator)
        if not rows:
            raise ValueError("a code needs at least one generator row")
        n = len(rows[0])
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("generator rows must share a positive length")
        if any(e < 0 or e >= q for r in rows for e in r):
            raise ValueError(f"generator entries must be residues mod {q}")
        mat = np.array(rows, dtype=np.int64)
        if rank_mod_p(mat, q) != len(rows):
            raise ValueError("generator rows are linearly dependent")
        mat.setflags(write=False)
        object.__setattr__(self, "generator", rows)
        object.__setattr__(self, "_matrix", mat)

    @classmethod
    def from_rows(cls, q: int | PrimeField, rows: Sequence[Sequence[int]]) -> "LinearCode":
        fld = q if isinstance(q, PrimeField) else PrimeField(q)
        return cls(fld, tuple(tuple(int(e) % fld.q for e in r) for r in rows))

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def n(self) -> int:
        return len(self.generator[0])

    @property
    def k(self) -> int:
        return len(self.generator)

    @property
    def size(self) -> int:
        return self.q ** self.k

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    def encode(self, message: Sequence[int]) -> FieldVector:
        msg = np.array(message, dtype=np.int64) % self.q
        if msg.shape != (self.k,):
            raise ValueError(f"message must have length {self.k}")
        return FieldVector(self.field, tuple((msg @ self._matrix) % self.q))

    def codeword(self, index: int) -> FieldVector:
        """Codeword for message index ``index`` in enumeration order."""
        if not 0 <= index < self.size:
            raise IndexError(index)
        return self.encode(message_digits(np.array(index), self.q, self.k))

    def block(self, start: int, stop: int) -> np.ndarray:
        """Codewords for message indices ``start..stop-1`` as a 2-d array."""
        digits = message_digits(np.arange(start, stop, dtype=np.int64), self.q, self.k)
        return (digits @ self._matrix) % self.q

    def at(self, indices) -> np.ndarray:
        """Codewords for the given message indices as a 2-d array."""
        digits = message_digits(np.asarray(indices, dtype=np.int64), self.q, self.k)
        return (digits @ self._matrix) % self.q

    def block_rows(self) -> int:
        return max(1, _BLOCK_CELLS // self.n)


def enumerate_codewords(code: LinearCode) -> Iterator[FieldVector]:
    """Yield all ``q**k`` codewords in message order."""
    step = code.block_rows()
    for start in range(0, code.size, step):
        for row in code.block(start, min(start + step, code.size)):
            yield FieldVector(code.field, tuple(int(e) for e in row))


@dataclass(frozen=True)
class WeightDistribution:
    """Exact map weight -> number of codewords, keys ascending, counts positive."""

    counts: Mapping[int, int]

    def __post_init__(self):
        clean = {int(w): int(c) for w, c in sorted(self.counts.items()) if c}
        if any(w < 0 for w in clean) or any(c < 0 for c in clean.values()):
            raise ValueError("weights and counts must be nonnegative")
        object.__setattr__(self, "counts", clean)

    @classmethod
    def from_weights(cls, weights) -> "WeightDistribution":
        counts: dict[int, int] = {}
        for w in weights:
            counts[int(w)] = counts.get(int(w), 0) + 1
        return cls(counts)

    def __eq__(self, other):
        if isinstance(other, WeightDistribution):
            return self.counts == other.counts
        if isinstance(other, Mapping):
            return self.counts == {int(w): int(c) for w, c in other.items() if c}
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.counts.items()))

    def __getitem__(self, w: int) -> int:
        return self.counts.get(w, 0)

    def items(self):
        return self.counts.items()

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def nonzero_weights(self) -> list[int]:
        return [w for w in self.counts if w > 0]

    @property
    def w_min(self) -> int:
        ws = self.nonzero_weights
        if not ws:
            raise ValueError("distribution has no nonzero weight")
        return ws[0]

    @property
    def w_max(self) -> int:
        ws = self.nonzero_weights
        if not ws:
            raise ValueError("distribution has no nonzero weight")
        return ws[-1]

    def __str__(self) -> str:
        return " + ".join(f"{c}z^{w}" if w else str(c) for w, c in self.counts.items())


def weight_distribution(code: LinearCode, threads: int = 1) -> WeightDistribution:
    """Count codeword weights by enumerating every codeword."""
    n = code.n

    def count(rng: range) -> np.ndarray:
        words = code.block(rng.start, rng.stop)
        return np.bincount(np.count_nonzero(words, axis=1), minlength=n + 1)

    parts = map_chunks(count, chunk_ranges(code.size, code.block_rows()), threads)
    hist = np.sum(parts, axis=0)
    return WeightDistribution({w: int(c) for w, c in enumerate(hist) if c})
