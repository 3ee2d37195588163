"""Irreducible characters of the symmetric group via Murnaghan-Nakayama.

Border strips are removed on the beta-set (abacus) of the shape: a strip of
length ``k`` corresponds to sliding one bead from ``b`` down to ``b - k`` onto
an empty position, with sign ``(-1)**(beads strictly between)``.
"""

from __future__ import annotations

import threading

from .exceptions import PreconditionError
from .partitions import EMPTY, Partition

__all__ = ["CharacterCache", "character", "default_cache"]


def _strip_removals(shape: tuple[int, ...], k: int):
    """Yield ``(sign, new_shape)`` for every border strip of length ``k``."""
    length = len(shape)
    beta = [shape[i] + length - 1 - i for i in range(length)]
    occupied = set(beta)
    for idx, b in enumerate(beta):
        target = b - k
        if target < 0 or target in occupied:
            continue
        between = sum(1 for c in beta if target < c < b)
        new_beta = sorted(beta[:idx] + [target] + beta[idx + 1:], reverse=True)
        new_shape = tuple(new_beta[i] - (length - 1 - i) for i in range(length))
        yield (-1) ** between, Partition(new_shape)


class CharacterCache:
    """Memo table of ``chi^lam(alpha)`` keyed on (shape, cycle type).

    The recursion removes the largest remaining cycle first, so every
    intermediate state is itself a (shape, cycle type) pair of equal weight
    and lands in the same table. Writes are serialized by a lock; reads after
    warm-up are plain dict lookups.
    """

    def __init__(self):
        self._table: dict[tuple[Partition, Partition], int] = {(EMPTY, EMPTY): 1}
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._table)

    def __contains__(self, key) -> bool:
        return key in self._table

    def items(self):
        with self._lock:
            return list(self._table.items())

    def __call__(self, lam: Partition, alpha: Partition) -> int:
        if lam.weight != alpha.weight:
            raise PreconditionError(
                f"character needs |lambda| = |alpha|, got {lam.weight} and {alpha.weight}"
            )
        return self._lookup(lam, alpha)

    def _lookup(self, lam: Partition, alpha: Partition) -> int:
        key = (lam, alpha)
        cached = self._table.get(key)
        if cached is not None:
            return cached
        k = alpha.parts[0]
        rest = Partition(alpha.parts[1:])
        value = 0
        for sign, smaller in _strip_removals(lam.parts, k):
            value += sign * self._lookup(smaller, rest)
        with self._lock:
            self._table[key] = value
        return value


default_cache = CharacterCache()


def character(lam: Partition, alpha: Partition, cache: CharacterCache | None = None) -> int:
    """Value of the irreducible character ``chi^lam`` on cycle type ``alpha``."""
    return (default_cache if cache is None else cache)(lam, alpha)
