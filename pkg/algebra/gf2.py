"""Vectors over GF(2) stored as bit masks."""
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from errors import DomainError, PreconditionError

MAX_DIMENSION = 32


@dataclass(frozen=True, order=True)
class GF2Vec:
    """Bit i of `bits` is coordinate i."""
    bits: int
    dimension: int

    def __post_init__(self):
        if not 0 <= self.dimension <= MAX_DIMENSION:
            raise DomainError(f"dimension must be in [0, {MAX_DIMENSION}], got {self.dimension}")
        if not 0 <= self.bits < (1 << self.dimension):
            raise DomainError(f"{self.bits} does not fit in dimension {self.dimension}")

    def __add__(self, other: "GF2Vec") -> "GF2Vec":
        if self.dimension != other.dimension:
            raise DomainError(f"dimension mismatch: {self.dimension} vs {other.dimension}")
        return GF2Vec(self.bits ^ other.bits, self.dimension)

    __sub__ = __add__

    @classmethod
    def basis(cls, i: int, dimension: int) -> "GF2Vec":
        return cls(1 << i, dimension)

    @classmethod
    def ones(cls, dimension: int) -> "GF2Vec":
        return cls((1 << dimension) - 1, dimension)

    def is_zero(self) -> bool:
        return self.bits == 0

    def weight(self) -> int:
        return self.bits.bit_count()

    def __str__(self) -> str:
        return format(self.bits, f"0{self.dimension}b") if self.dimension else "()"


def hamming_distance(a: GF2Vec, b: GF2Vec) -> int:
    return (a + b).weight()


def vector_sum(vectors: Iterable[GF2Vec], dimension: int) -> GF2Vec:
    total = 0
    for v in vectors:
        total ^= v.bits
    return GF2Vec(total, dimension)


def rank(vectors: Iterable[int]) -> int:
    """Rank of a set of bit-mask vectors (XOR basis insertion)."""
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


def zero_sum_subsets(colors: Sequence[GF2Vec], max_size: int) -> list[tuple[GF2Vec, ...]]:
    """
    Every non-empty subset of at most max_size colors whose sum is zero.

    Args:
        colors: Distinct nonzero vectors of one dimension
        max_size: Largest subset size considered

    Returns:
        Subsets (each sorted by bits) ordered by size, then lexicographically
    """
    if len({c.bits for c in colors}) != len(colors):
        raise PreconditionError("colors must be distinct")
    if any(c.is_zero() for c in colors):
        raise PreconditionError("colors must be nonzero")
    ordered = sorted(colors)
    found = []
    for size in range(1, min(max_size, len(ordered)) + 1):
        for subset in combinations(ordered, size):
            total = 0
            for c in subset:
                total ^= c.bits
            if total == 0:
                found.append(subset)
    return found
