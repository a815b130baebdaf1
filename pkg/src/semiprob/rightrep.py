"""Right regular representation: inner right translations x -> xa, their
row-monomial 0/1 matrices, and the kernel relation theta."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import FiniteSemigroup
from .errors import DimensionMismatch, InvalidSpec
from .relations import Partition, probability_of_partition


@dataclass(frozen=True)
class TranslationMap:
    images: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.images[x]

    def then(self, other: "TranslationMap") -> "TranslationMap":
        """Apply ``self`` first, then ``other`` (right action)."""
        return TranslationMap(tuple(other.images[y] for y in self.images))


@dataclass(frozen=True)
class RightMatrix:
    """Strictly row-monomial 0/1 matrix, stored as the column index of the
    single 1 in each row."""

    cols: tuple[int, ...]

    def __post_init__(self):
        n = len(self.cols)
        if any(not 0 <= c < n for c in self.cols):
            raise InvalidSpec(f"row-monomial column indices out of range: {self.cols!r}")

    @classmethod
    def from_dense(cls, bits) -> "RightMatrix":
        cols = []
        for row in bits:
            ones = [j for j, v in enumerate(row) if v]
            if len(ones) != 1 or any(v not in (0, 1) for v in row):
                raise InvalidSpec(f"row {list(row)!r} is not strictly monomial")
            cols.append(ones[0])
        return cls(tuple(cols))

    @property
    def size(self) -> int:
        return len(self.cols)

    def dense(self) -> list[list[int]]:
        n = len(self.cols)
        return [[int(c == y) for y in range(n)] for c in self.cols]

    def __matmul__(self, other: "RightMatrix") -> "RightMatrix":
        return matrix_product(self, other)


def rho(S: FiniteSemigroup, a: int) -> TranslationMap:
    return TranslationMap(S.column(a))


def right_matrix(S: FiniteSemigroup, a: int) -> RightMatrix:
    return RightMatrix(S.column(a))


def matrix_product(M1: RightMatrix, M2: RightMatrix) -> RightMatrix:
    # Boolean product of row-monomial matrices is composition of the column maps.
    if M1.size != M2.size:
        raise DimensionMismatch(f"{M1.size}x{M1.size} times {M2.size}x{M2.size}")
    return RightMatrix(tuple(M2.cols[z] for z in M1.cols))


def theta(S: FiniteSemigroup) -> Partition:
    """Group elements by identical columns (equal right translations)."""
    return Partition.from_labels(S.column(a) for a in S.elements)


def p_theta(S: FiniteSemigroup) -> Fraction:
    return probability_of_partition(theta(S))


def is_left_reductive(S: FiniteSemigroup) -> bool:
    return theta(S).is_identity()
