"""Integer partitions: construction, enumeration and class-function helpers."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache, total_ordering
from math import factorial
from typing import Iterable, Iterator

from .exceptions import PreconditionError

__all__ = [
    "Partition",
    "EMPTY",
    "partitions_of",
    "partitions_up_to",
    "multiplicity",
    "cycle_counts",
    "z_value",
    "contains",
    "parse_partition",
]


@total_ordering
class Partition:
    """A weakly decreasing sequence of positive integers.

    Trailing zeros are dropped on construction, so ``Partition([2, 1, 0])``
    equals ``Partition([2, 1])``. Partitions hash and compare by value and are
    totally ordered by weight first, then reverse-lexicographically (so
    ``(4) < (3, 1) < (2, 2)``).
    """

    __slots__ = ("parts", "_hash")

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(x < 1 for x in parts):
            raise ValueError(f"partition parts must be nonnegative: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "_hash", hash(parts))

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """1-based part lookup; parts beyond the length are 0."""
        if i < 1:
            raise IndexError(f"part index must be >= 1, got {i}")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        """The first ``n`` parts, zero-padded."""
        if n < len(self.parts):
            raise PreconditionError(f"{self} has more than {n} parts")
        return self.parts + (0,) * (n - len(self.parts))

    def _key(self):
        return (self.weight, tuple(-x for x in self.parts))

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __eq__(self, other) -> bool:
        if isinstance(other, Partition):
            return self.parts == other.parts
        return NotImplemented

    def __lt__(self, other) -> bool:
        if isinstance(other, Partition):
            return self._key() < other._key()
        return NotImplemented

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def __str__(self) -> str:
        if not self.parts:
            return "()"
        return "(" + ",".join(map(str, self.parts)) + ")"

    def to_json(self) -> list[int]:
        return list(self.parts)

    @classmethod
    def from_json(cls, data) -> "Partition":
        return cls(data)


EMPTY = Partition()


def _generate(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _generate(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise PreconditionError(f"cannot partition a negative integer: {n}")
    return tuple(Partition(p) for p in _generate(n, n))


def partitions_up_to(max_weight: int) -> list[Partition]:
    """All partitions of weight ``0..max_weight``, ordered by weight."""
    return [lam for n in range(max_weight + 1) for lam in partitions_of(n)]


def multiplicity(lam: Partition, i: int) -> int:
    """Number of parts of ``lam`` equal to ``i``."""
    if i < 1:
        raise PreconditionError(f"multiplicity index must be >= 1, got {i}")
    return sum(1 for x in lam.parts if x == i)


def cycle_counts(lam: Partition) -> dict[int, int]:
    """Map ``k -> lam(k)`` over the distinct parts of ``lam``."""
    return dict(Counter(lam.parts))


def z_value(lam: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type ``lam``."""
    z = 1
    for i, m in Counter(lam.parts).items():
        z *= i**m * factorial(m)
    return z


def contains(nu: Partition, lam: Partition) -> bool:
    """True iff ``nu`` fits inside ``lam`` (``nu_i <= lam_i`` for every i)."""
    if len(nu) > len(lam):
        return False
    return all(a <= b for a, b in zip(nu.parts, lam.parts))


def parse_partition(text: str) -> Partition:
    """Parse command-line syntax: ``"2,1"``; ``""`` or ``"0"`` is the empty partition."""
    text = text.strip()
    if text in ("", "0"):
        return EMPTY
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None
    if any(x < 1 for x in parts):
        raise ValueError(f"malformed partition {text!r}: parts must be positive")
    return Partition(parts)
