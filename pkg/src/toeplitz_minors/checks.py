"""Exact identity sweeps over all partition pairs up to a weight bound."""

from __future__ import annotations

from dataclasses import dataclass

from .bd_formula import bd_poly
from .partitions import EMPTY, Partition, contains, partitions_up_to
from .symfunc import SymPoly, delta, schur, skew_schur
from .tw_formula import tw_poly

__all__ = ["PairResult", "identity_check", "delta_check", "skew_sum"]


@dataclass(frozen=True)
class PairResult:
    check: str
    lam: Partition
    mu: Partition
    passed: bool

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "lambda": self.lam.to_json(),
            "mu": self.mu.to_json(),
            "passed": self.passed,
        }


def _pairs(max_weight: int):
    parts = partitions_up_to(max_weight)
    for lam in parts:
        for mu in parts:
            yield lam, mu


def identity_check(max_weight: int) -> list[PairResult]:
    """``bd_poly(lam, mu) == tw_poly(lam, mu)`` for all ``|lam|, |mu| <= max_weight``."""
    return [
        PairResult("bd=tw", lam, mu, bd_poly(lam, mu) == tw_poly(lam, mu))
        for lam, mu in _pairs(max_weight)
    ]


def skew_sum(lam: Partition, mu: Partition) -> SymPoly:
    """``sum_nu s_{lam/nu} * st_{mu/nu}`` over ``nu`` inside both."""
    total = SymPoly()
    for nu in partitions_up_to(min(lam.weight, mu.weight)):
        if contains(nu, lam) and contains(nu, mu):
            total = total + skew_schur(lam, nu) * skew_schur(mu, nu, tilde=True)
    return total


def delta_check(max_weight: int) -> list[PairResult]:
    """Both derivative identities plus ``Delta(s_lam st_mu) = sum_nu s_{lam/nu} st_{mu/nu}``."""
    results = []
    for lam, mu in _pairs(max_weight):
        bd = bd_poly(lam, mu)
        results.append(
            PairResult("bd-derivative", lam, mu, delta(bd_poly(lam, EMPTY) * bd_poly(EMPTY, mu)) == bd)
        )
        tw = tw_poly(lam, mu)
        results.append(
            PairResult("tw-derivative", lam, mu, delta(tw_poly(lam, EMPTY) * tw_poly(EMPTY, mu)) == tw)
        )
        results.append(
            PairResult(
                "skew-expansion",
                lam,
                mu,
                delta(schur(lam) * schur(mu, tilde=True)) == skew_sum(lam, mu),
            )
        )
    return results
