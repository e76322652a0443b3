"""Linear algebra over GF(2) with int bitsets.

A vector of length ``d`` is stored as a Python int. Coordinate 0 is the
most significant bit (bit ``d - 1``), so ``format(bits, "0{d}b")`` prints
coordinates left to right and prepending coordinates never moves the
existing bits.

Subspaces are kept in reduced row echelon form with pivots ordered left to
right. Two subspaces are equal as sets iff their rows are equal, so the
dataclass equality is set equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import DimensionError, ParseError


@dataclass(frozen=True)
class BitVec:
    len: int
    bits: int

    def __post_init__(self):
        if self.len < 0:
            raise DimensionError("negative length")
        if self.bits < 0 or self.bits >> self.len:
            raise DimensionError("bits do not fit in %d coordinates" % self.len)

    @classmethod
    def zero(cls, n: int) -> "BitVec":
        return cls(n, 0)

    @classmethod
    def unit(cls, n: int, k: int) -> "BitVec":
        return cls(n, 1 << (n - 1 - k))

    @classmethod
    def from_bits(cls, seq: Iterable[int]) -> "BitVec":
        seq = list(seq)
        value = 0
        for b in seq:
            if b not in (0, 1, True, False):
                raise ValueError("not a bit: %r" % (b,))
            value = (value << 1) | int(b)
        return cls(len(seq), value)

    @classmethod
    def from_str(cls, text: str) -> "BitVec":
        if text.strip("01"):
            raise ValueError("bitstring may only contain 0 and 1: %r" % text)
        return cls(len(text), int(text, 2) if text else 0)

    def __getitem__(self, k: int) -> int:
        if not 0 <= k < self.len:
            raise IndexError(k)
        return (self.bits >> (self.len - 1 - k)) & 1

    def __iter__(self) -> Iterator[int]:
        for k in range(self.len):
            yield (self.bits >> (self.len - 1 - k)) & 1

    def __len__(self) -> int:
        return self.len

    def __add__(self, other: "BitVec") -> "BitVec":
        return add(self, other)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __str__(self) -> str:
        return format(self.bits, "0%db" % self.len) if self.len else ""

    def __repr__(self) -> str:
        return "BitVec(%r)" % str(self)


def add(a: BitVec, b: BitVec) -> BitVec:
    if a.len != b.len:
        raise DimensionError("length mismatch: %d vs %d" % (a.len, b.len))
    return BitVec(a.len, a.bits ^ b.bits)


def rref(rows: Iterable[int]) -> list:
    """Reduced row echelon form of int rows, pivots descending (leftmost first).

    Zero and dependent rows are dropped.
    """
    pivots = {}
    for v in rows:
        for p, r in pivots.items():
            if (v >> p) & 1:
                v ^= r
        if not v:
            continue
        top = v.bit_length() - 1
        for p, r in pivots.items():
            if (r >> top) & 1:
                pivots[p] = r ^ v
        pivots[top] = v
    return [pivots[p] for p in sorted(pivots, reverse=True)]


def _reduce(v: int, rows: Sequence[int]) -> int:
    # rows must be in RREF
    for r in rows:
        if (v >> (r.bit_length() - 1)) & 1:
            v ^= r
    return v


@dataclass(frozen=True)
class Subspace:
    """Linear subspace of B^ambient, stored as RREF int rows.

    Build instances with :func:`span` (or the ``zero``/``full`` helpers);
    the constructor trusts its input.
    """

    ambient: int
    rows: tuple

    @classmethod
    def zero(cls, d: int) -> "Subspace":
        return cls(d, ())

    @classmethod
    def full(cls, d: int) -> "Subspace":
        return cls(d, tuple(1 << k for k in range(d - 1, -1, -1)))

    @property
    def dimension(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> list:
        """Coordinate index of each row's leading 1."""
        return [self.ambient - r.bit_length() for r in self.rows]

    def basis(self) -> list:
        return [BitVec(self.ambient, r) for r in self.rows]

    def reduce(self, v: int) -> int:
        return _reduce(v, self.rows)

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def elements(self) -> Iterator[int]:
        """Every member as an int; 2**dimension of them."""
        for mask in range(1 << len(self.rows)):
            acc = 0
            for k, r in enumerate(self.rows):
                if (mask >> k) & 1:
                    acc ^= r
            yield acc

    def __str__(self) -> str:
        return emit_basis(self)


def _bits_of(v, ambient: int) -> int:
    if isinstance(v, BitVec):
        if v.len != ambient:
            raise DimensionError("vector of length %d in ambient %d" % (v.len, ambient))
        return v.bits
    if v < 0 or v >> ambient:
        raise DimensionError("vector does not fit ambient %d" % ambient)
    return v


def span(vectors: Iterable, ambient: int) -> Subspace:
    """RREF basis of the span of ``vectors`` (BitVecs or ints)."""
    return Subspace(ambient, tuple(rref(_bits_of(v, ambient) for v in vectors)))


def contains(V: Subspace, v) -> bool:
    return V.reduce(_bits_of(v, V.ambient)) == 0


def _check_same(V: Subspace, W: Subspace) -> None:
    if V.ambient != W.ambient:
        raise DimensionError("ambient mismatch: %d vs %d" % (V.ambient, W.ambient))


def sum(V: Subspace, W: Subspace) -> Subspace:  # noqa: A001
    _check_same(V, W)
    return Subspace(V.ambient, tuple(rref(V.rows + W.rows)))


def _zassenhaus(V: Subspace, W: Subspace) -> list:
    # Rows are (sum-part << d) | V-part; a V row is (v, v), a W row is (w, 0).
    d = V.ambient
    return rref([(v << d) | v for v in V.rows] + [w << d for w in W.rows])


def intersect(V: Subspace, W: Subspace) -> Subspace:
    """V ∩ W by Zassenhaus block elimination over 2d columns."""
    _check_same(V, W)
    d = V.ambient
    block = _zassenhaus(V, W)
    inter = [r for r in block if not r >> d]
    return Subspace(d, tuple(rref(inter)))


@dataclass(frozen=True)
class AffineSpace:
    """The coset ``offset + space``; offset is reduced against the pivots."""

    offset: int
    space: Subspace

    def __post_init__(self):
        _bits_of(self.offset, self.space.ambient)
        object.__setattr__(self, "offset", self.space.reduce(self.offset))

    @property
    def ambient(self) -> int:
        return self.space.ambient

    @property
    def offset_vec(self) -> BitVec:
        return BitVec(self.ambient, self.offset)

    def __contains__(self, v) -> bool:
        return self.space.reduce(_bits_of(v, self.ambient) ^ self.offset) == 0

    def elements(self) -> Iterator[int]:
        for e in self.space.elements():
            yield e ^ self.offset


def coset(offset, space: Subspace) -> AffineSpace:
    return AffineSpace(_bits_of(offset, space.ambient), space)


def affine_intersect(A: Optional[AffineSpace], B: Optional[AffineSpace]) -> Optional[AffineSpace]:
    """Intersection of two cosets; ``None`` stands for the empty set.

    ``v+V`` meets ``w+W`` iff ``v+w = a+b`` for some a in V, b in W; the
    V-part ``a`` is read off the Zassenhaus rows used while reducing v+w.
    """
    if A is None or B is None:
        return None
    _check_same(A.space, B.space)
    d = A.ambient
    block = _zassenhaus(A.space, B.space)
    t = _reduce((A.offset ^ B.offset) << d, block)
    if t >> d:
        return None
    inter = Subspace(d, tuple(rref(r for r in block if not r >> d)))
    return AffineSpace(A.offset ^ (t & ((1 << d) - 1)), inter)


def extend_free(V: Subspace, k: int) -> Subspace:
    """Prepend ``k`` unconstrained coordinates to V."""
    if k < 0:
        raise ValueError("k must be non-negative")
    d = V.ambient
    units = tuple(1 << (d + j) for j in range(k - 1, -1, -1))
    return Subspace(d + k, units + V.rows)


def extend_zero(v: BitVec, k: int) -> BitVec:
    """Prepend ``k`` zero coordinates to v."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return BitVec(v.len + k, v.bits)


def prepend(bit: int, v: int, length: int) -> int:
    """Int form of the vector ``(bit, v)`` where v has ``length`` coordinates."""
    return (bit << length) | v


def permute(V: Subspace, source) -> Subspace:
    """Reorder coordinates: new coordinate k is old coordinate ``source[k]``."""
    d = V.ambient
    if sorted(source) != list(range(d)):
        raise ValueError("not a permutation of 0..%d" % (d - 1))
    rows = []
    for r in V.rows:
        out = 0
        for k in source:
            out = (out << 1) | ((r >> (d - 1 - k)) & 1)
        rows.append(out)
    return span(rows, d)


def emit_basis(V: Subspace) -> str:
    lines = ["n %d" % V.ambient, "dim %d" % V.dimension]
    lines += [str(b) for b in V.basis()]
    return "\n".join(lines) + "\n"


def parse_basis(text: str) -> Subspace:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) < 2:
        raise ParseError("basis text needs 'n' and 'dim' lines")
    try:
        tag_n, n = lines[0].split()
        tag_d, k = lines[1].split()
        n, k = int(n), int(k)
    except ValueError:
        raise ParseError("malformed header", 1) from None
    if tag_n != "n" or tag_d != "dim":
        raise ParseError("expected 'n <ambient>' then 'dim <k>'", 1)
    rows = lines[2:]
    if len(rows) != k:
        raise ParseError("dim %d but %d rows" % (k, len(rows)))
    vecs = []
    for lineno, row in enumerate(rows, start=3):
        if len(row) != n or row.strip("01"):
            raise ParseError("bad row %r" % row, lineno)
        vecs.append(int(row, 2) if n else 0)
    V = span(vecs, n)
    if list(V.rows) != vecs:
        raise ParseError("rows are not a canonical RREF basis")
    return V
