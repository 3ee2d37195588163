"""Tracy-Widom expression ``T^{lam mu}`` as an exact polynomial.

The product of the two half-strip matrices is never formed. Its ``(i, j)``
entry collapses to the finite sum :func:`tw_entry`, which only depends on the
two shifted indices.
"""

from __future__ import annotations

from functools import lru_cache

from .exceptions import PreconditionError
from .partitions import EMPTY, Partition
from .symfunc import SymPoly, complete_h, determinant

__all__ = [
    "tw_entry",
    "tw_matrix",
    "tw_poly",
    "default_size",
    "tw_relation_check",
    "tw_hook_determinant",
]


@lru_cache(maxsize=None)
def tw_entry(r: int, s: int) -> SymPoly:
    """``sum_{k=0}^{min(r,s)} h_{r-k} * ht_{s-k}``."""
    if r < 0 or s < 0:
        raise PreconditionError(f"tw_entry needs r, s >= 0, got ({r}, {s})")
    total = SymPoly()
    for k in range(min(r, s) + 1):
        total = total + complete_h(r - k) * complete_h(s - k, tilde=True)
    return total


def default_size(lam: Partition, mu: Partition) -> int:
    return max(lam.length, mu.length, 1)


def tw_matrix(lam: Partition, mu: Partition, d: int) -> list[list[SymPoly]]:
    """The ``d x d`` matrix whose determinant is ``T^{lam mu}``.

    Entry ``(i, j)`` (1-based) is ``tw_entry(j - 1 + lam_{d+1-j}, i - 1 + mu_{d+1-i})``.
    """
    if d < max(lam.length, mu.length):
        raise PreconditionError(
            f"matrix size {d} is below max(length) = {max(lam.length, mu.length)}"
        )
    return [
        [
            tw_entry(j - 1 + lam.part(d + 1 - j), i - 1 + mu.part(d + 1 - i))
            for j in range(1, d + 1)
        ]
        for i in range(1, d + 1)
    ]


def tw_poly(lam: Partition, mu: Partition, d: int | None = None) -> SymPoly:
    """``T^{lam mu}``; any admissible ``d`` gives the same polynomial."""
    if d is None:
        d = default_size(lam, mu)
    return _tw_poly(lam, mu, d)


@lru_cache(maxsize=None)
def _tw_poly(lam: Partition, mu: Partition, d: int) -> SymPoly:
    return determinant(tw_matrix(lam, mu, d))


def _row(n: int) -> Partition:
    return Partition((n,)) if n else EMPTY


def tw_relation_check(r: int, s: int) -> bool:
    """Check ``T^{(r)(s)} = h_r ht_s + T^{(r-1)(s-1)}`` exactly."""
    if r < 1 or s < 1:
        raise PreconditionError(f"tw_relation_check needs r, s >= 1, got ({r}, {s})")
    lhs = tw_poly(_row(r), _row(s))
    rhs = tw_poly(_row(r), EMPTY) * tw_poly(EMPTY, _row(s)) + tw_poly(_row(r - 1), _row(s - 1))
    return lhs == rhs


def tw_hook_determinant(lam: Partition, mu: Partition, d: int) -> SymPoly:
    """``det( T^{(lam_i + d - i)(mu_j + d - j)} )_{i,j <= d}``.

    Equals ``T^{lam mu}`` for every admissible ``d``.
    """
    if d < max(lam.length, mu.length):
        raise PreconditionError(
            f"matrix size {d} is below max(length) = {max(lam.length, mu.length)}"
        )
    rows = [
        [tw_poly(_row(lam.part(i) + d - i), _row(mu.part(j) + d - j)) for j in range(1, d + 1)]
        for i in range(1, d + 1)
    ]
    return determinant(rows)
