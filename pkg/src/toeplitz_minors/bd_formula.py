"""Bump-Diaconis expression ``B^{lam mu}`` as an exact polynomial.

The double average over ``S_m x S_p`` is evaluated as a sum over pairs of
conjugacy classes, since every factor depends only on cycle counts.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .characters import character
from .partitions import Partition, cycle_counts, partitions_of, z_value
from .symfunc import Monomial, SymPoly

__all__ = ["laguerre", "f_factor", "f_factor_laguerre", "bd_poly", "binomial"]


def binomial(x: int, j: int) -> int:
    """``C(x, j)`` for any integer ``x`` (falling-factorial definition), ``j >= 0``."""
    if j < 0:
        return 0
    if x >= 0:
        return comb(x, j)
    num = 1
    for i in range(j):
        num *= x - i
    return num // factorial(j)


def laguerre(n: int, alpha: int, t: SymPoly) -> SymPoly:
    """Generalized Laguerre polynomial ``L_n^(alpha)`` evaluated at a polynomial."""
    if n < 0:
        raise ValueError(f"Laguerre degree must be >= 0, got {n}")
    out = SymPoly()
    power = SymPoly.constant(1)
    neg_t = -t
    for k in range(n + 1):
        out = out + power * Fraction(binomial(n + alpha, n - k), factorial(k))
        power = power * neg_t
    return out


def _pk_power(k: int, plain_exp: int, tilde_exp: int) -> Monomial:
    return Monomial(
        ((k, plain_exp),) if plain_exp else (),
        ((k, tilde_exp),) if tilde_exp else (),
    )


@lru_cache(maxsize=None)
def f_factor(k: int, a: int, b: int) -> SymPoly:
    """Closed form of ``F_k`` for ``a`` k-cycles on one side and ``b`` on the other.

    ``sum_i k^i i! C(max, i) C(min, i) p_k^(a-i) pt_k^(b-i)``.
    """
    if k < 1:
        raise ValueError(f"cycle length must be >= 1, got {k}")
    lo, hi = min(a, b), max(a, b)
    terms = {
        _pk_power(k, a - i, b - i): k**i * factorial(i) * comb(hi, i) * comb(lo, i)
        for i in range(lo + 1)
    }
    return SymPoly(terms)


def f_factor_laguerre(k: int, a: int, b: int) -> SymPoly:
    """``F_k`` through the Laguerre case split; reference form for checking :func:`f_factor`."""
    p = SymPoly.var(k)
    pt = SymPoly.var(k, tilde=True)
    arg = -(p * pt) / k
    if a >= b:
        return k**b * factorial(b) * laguerre(b, a - b, arg) * p ** (a - b)
    return k**a * factorial(a) * laguerre(a, b - a, arg) * pt ** (b - a)


@lru_cache(maxsize=None)
def bd_poly(lam: Partition, mu: Partition) -> SymPoly:
    """``B^{lam mu}`` summed over conjugacy-class pairs ``(alpha, beta)``.

    Each pair contributes ``chi^lam(alpha) chi^mu(beta) / (z_alpha z_beta)``
    times the product of ``F_k`` over cycle lengths present in either class.
    """
    total = SymPoly()
    for alpha in partitions_of(lam.weight):
        chi_a = character(lam, alpha)
        if not chi_a:
            continue
        ca = cycle_counts(alpha)
        for beta in partitions_of(mu.weight):
            chi_b = character(mu, beta)
            if not chi_b:
                continue
            cb = cycle_counts(beta)
            prod = SymPoly.constant(Fraction(chi_a * chi_b, z_value(alpha) * z_value(beta)))
            for k in sorted(set(ca) | set(cb)):
                prod = prod * f_factor(k, ca.get(k, 0), cb.get(k, 0))
            total = total + prod
    return total
