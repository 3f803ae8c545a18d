"""Integer partitions in multiplicity form and their signed power-sum weights.

A partition of ``n`` is stored as ``(part size, multiplicity)`` pairs, i.e.
``n = 1*m_1 + 2*m_2 + ...``; the length of a partition is the total number
of parts ``sum(m_i)``.  Enumeration order is descending lexicographic on the
sorted part lists, so coefficient tables and reports are byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterator


@dataclass(frozen=True)
class PartitionM:
    """A partition of ``target`` in multiplicity form.

    ``parts`` holds ``(size, multiplicity)`` pairs with strictly increasing
    sizes and multiplicities >= 1; zero multiplicities are never stored.
    """

    parts: tuple[tuple[int, int], ...]
    target: int

    def __post_init__(self):
        total = 0
        previous = 0
        for size, mult in self.parts:
            if size <= previous:
                raise ValueError("part sizes must be strictly increasing")
            if mult < 1:
                raise ValueError("multiplicities must be >= 1")
            total += size * mult
            previous = size
        if total != self.target:
            raise ValueError(f"parts sum to {total}, expected {self.target}")

    @classmethod
    def from_part_list(cls, sizes: Iterator[int] | list[int]) -> "PartitionM":
        counts: dict[int, int] = {}
        total = 0
        for size in sizes:
            counts[size] = counts.get(size, 0) + 1
            total += size
        return cls(tuple(sorted(counts.items())), total)

    def multiplicities(self) -> dict[int, int]:
        return dict(self.parts)

    def length(self) -> int:
        """Number of parts counted with multiplicity."""
        return sum(mult for _, mult in self.parts)


def _descending_part_lists(n: int, max_part: int) -> Iterator[list[int]]:
    # Nonincreasing part lists in descending lexicographic order.
    if n == 0:
        yield []
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _descending_part_lists(n - first, first):
            yield [first, *rest]


def enumerate_partitions(n: int) -> list[PartitionM]:
    """All partitions of ``n``, descending-lexicographic on sorted part lists.

    ``n = 0`` yields exactly the empty partition.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    return [PartitionM.from_part_list(parts) for parts in _descending_part_lists(n, n)]


def waring_coefficient(k: int, lam: PartitionM) -> int:
    """Signed weight of a partition in the power-sum expansion of degree ``k``.

    Returns ``(-1)**(k - l) * k * (l-1)! / prod(m_i!)`` where ``l`` is the
    partition length.  The quotient is always an integer; a non-integer
    result would mean an implementation bug and raises ArithmeticError.
    """
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    if lam.target != k:
        raise ValueError(f"partition targets {lam.target}, expected {k}")
    length = lam.length()
    value = Fraction(k * factorial(length - 1))
    for _, mult in lam.parts:
        value /= factorial(mult)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integer weight {value} for partition {lam}")
    return (-1) ** (k - length) * int(value)
