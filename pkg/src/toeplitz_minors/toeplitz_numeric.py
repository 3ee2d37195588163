"""Floating-point channel: Toeplitz minors of a concrete symbol and their ratios.

The symbol is ``sigma(t) = exp(sum_k p_k t^k / k + pt_k t^-k / k)`` with
finitely many nonzero ``p_k``, ``pt_k`` (a :class:`SymbolSpec`). Its Fourier
coefficients come from the Wiener-Hopf factors: ``h`` and ``ht`` by the
power-sum recurrence, then ``d`` by convolution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _kernels
from .bd_formula import bd_poly
from .exceptions import PreconditionError, SingularDenominatorError, TruncationRangeError
from .partitions import EMPTY, Partition
from .symfunc import SymbolSpec, evaluate
from .tw_formula import tw_poly

__all__ = [
    "FourierData",
    "CrossCheckReport",
    "h_coeffs",
    "d_coeffs",
    "default_truncation",
    "minor_indices",
    "minor_matrix",
    "log_det",
    "ratio_sequence",
    "cross_check",
]

GUARD_TERMS = 32
PIVOT_RTOL = 1e-14
DET_FLOOR = 1e-300


@dataclass(frozen=True, eq=False)
class FourierData:
    """``h_0..h_N``, ``ht_0..ht_N`` and ``d_m`` for ``|m| <= N``.

    ``d`` is stored densely with ``d[m + N] = d_m``.
    """

    h: np.ndarray
    h_tilde: np.ndarray
    d: np.ndarray
    truncation_error: float

    @property
    def N(self) -> int:
        return self.h.shape[0] - 1

    def coefficient(self, m: int) -> complex:
        if abs(m) > self.N:
            raise TruncationRangeError(m, self.N)
        return complex(self.d[m + self.N])

    def d_map(self) -> dict[int, complex]:
        return {m: complex(self.d[m + self.N]) for m in range(-self.N, self.N + 1)}


def _support(spec: SymbolSpec, tilde: bool) -> np.ndarray:
    return np.asarray(spec.p_tilde if tilde else spec.p, dtype=np.complex128)


def h_coeffs(spec: SymbolSpec, N: int, tilde: bool = False, kernels=None) -> np.ndarray:
    """Taylor coefficients ``h_0..h_N`` of ``exp(sum_k p_k t^k / k)``."""
    if N < 0:
        raise PreconditionError(f"truncation N must be >= 0, got {N}")
    kernels = kernels or _kernels.KERNELS
    return kernels.h_recurrence(_support(spec, tilde), N)


def d_coeffs(spec: SymbolSpec, N: int, kernels=None) -> FourierData:
    """Fourier coefficients of ``sigma`` from the product of its Wiener-Hopf factors."""
    kernels = kernels or _kernels.KERNELS
    h = h_coeffs(spec, N + 1, kernels=kernels)
    ht = h_coeffs(spec, N + 1, tilde=True, kernels=kernels)
    # the extra coefficient only feeds the truncation heuristic
    err = abs(h[N + 1]) + abs(ht[N + 1])
    h, ht = h[: N + 1].copy(), ht[: N + 1].copy()
    return FourierData(h, ht, kernels.d_convolution(h, ht), float(err))


def default_truncation(lam: Partition, mu: Partition, n: int) -> int:
    return n + max(lam.part(1), mu.part(1)) + GUARD_TERMS


def minor_indices(lam: Partition, mu: Partition, n: int) -> np.ndarray:
    """Integer matrix ``lam_i - mu_j - i + j`` (1-based ``i``, ``j``)."""
    if n < max(lam.length, mu.length):
        raise PreconditionError(f"n = {n} is below max(length) = {max(lam.length, mu.length)}")
    lam_v = np.array(lam.padded(n), dtype=np.int64)
    mu_v = np.array(mu.padded(n), dtype=np.int64)
    idx = np.arange(n, dtype=np.int64)
    return lam_v[:, None] - mu_v[None, :] - idx[:, None] + idx[None, :]


def minor_matrix(fd: FourierData, lam: Partition, mu: Partition, n: int) -> np.ndarray:
    """``M_n^{lam mu}`` with entries ``d_{lam_i - mu_j - i + j}``."""
    idx = minor_indices(lam, mu, n)
    if idx.size:
        worst = idx.flat[np.argmax(np.abs(idx))]
        if abs(worst) > fd.N:
            raise TruncationRangeError(int(worst), fd.N)
    return fd.d[idx + fd.N]


def log_det(matrix: np.ndarray, kernels=None) -> tuple[float, complex, float]:
    """``(log|det|, phase, min |pivot|)`` by LU with partial pivoting."""
    kernels = kernels or _kernels.KERNELS
    return kernels.lu_logdet(matrix)


def _ratio(fd: FourierData, lam: Partition, mu: Partition, n: int, kernels) -> complex:
    base = minor_matrix(fd, EMPTY, EMPTY, n)
    log_den, phase_den, min_pivot = kernels.lu_logdet(base)
    scale = np.abs(base).sum(axis=1).max()
    if log_den < math.log(DET_FLOOR) or min_pivot < PIVOT_RTOL * scale:
        raise SingularDenominatorError(n, f"min pivot {min_pivot:.3e}, matrix norm {scale:.3e}")
    if lam == EMPTY and mu == EMPTY:
        return 1.0 + 0.0j
    log_num, phase_num, _ = kernels.lu_logdet(minor_matrix(fd, lam, mu, n))
    if phase_num == 0:
        return 0.0j
    return complex(math.exp(log_num - log_den) * (phase_num / phase_den))


def ratio_sequence(
    spec: SymbolSpec,
    lam: Partition,
    mu: Partition,
    n_values: Sequence[int],
    N: int | None = None,
    kernels=None,
) -> list[complex]:
    """``det M_n^{lam mu} / det M_n`` for each requested ``n``."""
    kernels = kernels or _kernels.KERNELS
    n_values = list(n_values)
    for n in n_values:
        if n < max(lam.length, mu.length, 1):
            raise PreconditionError(f"n = {n} is below max(length(lam), length(mu), 1)")
    if not n_values:
        return []
    if N is None:
        N = default_truncation(lam, mu, max(n_values))
    fd = d_coeffs(spec, N, kernels=kernels)
    return [_ratio(fd, lam, mu, n, kernels) for n in n_values]


def _pair(z: complex) -> list[float]:
    return [z.real, z.imag]


@dataclass(frozen=True)
class CrossCheckReport:
    """The three computations of the limiting ratio side by side."""

    lam: Partition
    mu: Partition
    n: int
    ratio_numeric: complex
    bd_value: complex
    tw_value: complex
    max_discrepancy: float
    converged: bool

    def to_json(self) -> dict:
        return {
            "lambda": self.lam.to_json(),
            "mu": self.mu.to_json(),
            "n": self.n,
            "ratio_numeric": _pair(self.ratio_numeric),
            "bd_value": _pair(self.bd_value),
            "tw_value": _pair(self.tw_value),
            "max_discrepancy": self.max_discrepancy,
            "converged": self.converged,
        }

    @classmethod
    def from_json(cls, data: dict) -> "CrossCheckReport":
        return cls(
            lam=Partition(data["lambda"]),
            mu=Partition(data["mu"]),
            n=int(data["n"]),
            ratio_numeric=complex(*data["ratio_numeric"]),
            bd_value=complex(*data["bd_value"]),
            tw_value=complex(*data["tw_value"]),
            max_discrepancy=float(data["max_discrepancy"]),
            converged=bool(data["converged"]),
        )


def cross_check(
    spec: SymbolSpec, lam: Partition, mu: Partition, n: int, tol: float, kernels=None
) -> CrossCheckReport:
    """Compare the determinant ratio at size ``n`` with both exact formulas."""
    if not tol > 0:
        raise PreconditionError(f"tolerance must be positive, got {tol}")
    ratio = ratio_sequence(spec, lam, mu, [n], kernels=kernels)[0]
    bd = evaluate(bd_poly(lam, mu), spec)
    tw = evaluate(tw_poly(lam, mu), spec)
    worst = max(abs(ratio - bd), abs(ratio - tw), abs(bd - tw))
    return CrossCheckReport(lam, mu, n, ratio, bd, tw, float(worst), bool(worst <= tol))
