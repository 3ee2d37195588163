"""Hot numeric kernels in a numba and a pure-numpy flavour.

The ``h`` recurrence and the LU log-determinant are jitted. The ``d``
convolution is ``np.convolve`` in both sets, since numpy's compiled routine
beats a jitted loop.

The numba versions are used when numba imports and the environment variable
``TOEPLITZ_MINORS_NUMBA`` is not set to ``0``/``false``/``off``. Both flavours
are always importable (``NUMPY_KERNELS`` / ``NUMBA_KERNELS``) so benchmarks
and tests can compare them.
"""

from __future__ import annotations

import os
from types import SimpleNamespace

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is optional
    numba = None

_FLAG = "TOEPLITZ_MINORS_NUMBA"


def _numba_requested() -> bool:
    return os.environ.get(_FLAG, "1").strip().lower() not in ("0", "false", "off", "no")


# pure numpy


def h_recurrence_numpy(p: np.ndarray, n_max: int) -> np.ndarray:
    """``h_0..h_{n_max}`` from ``n h_n = sum_{k=1}^{n} p_k h_{n-k}``."""
    h = np.zeros(n_max + 1, dtype=np.complex128)
    h[0] = 1.0
    K = p.shape[0]
    for n in range(1, n_max + 1):
        m = min(n, K)
        # h[n-1], h[n-2], ..., h[n-m]
        h[n] = np.dot(p[:m], h[n - m:n][::-1]) / n
    return h


def d_convolution_numpy(h: np.ndarray, h_tilde: np.ndarray) -> np.ndarray:
    """``d_m = sum_j h_{m+j} ht_j`` for ``|m| <= N``, stored at offset ``m + N``."""
    return np.convolve(h, h_tilde[::-1])


def lu_logdet_numpy(a: np.ndarray) -> tuple[float, complex, float]:
    """LU with partial pivoting; returns ``(log|det|, det/|det|, min |pivot|)``.

    An exactly zero pivot column gives ``(-inf, 0, 0)``. The input is not
    modified.
    """
    u = np.array(a, dtype=np.complex128, copy=True)
    n = u.shape[0]
    log_abs = 0.0
    phase = 1.0 + 0.0j
    min_pivot = np.inf
    for k in range(n):
        col = np.abs(u[k:, k])
        piv = k + int(np.argmax(col))
        if col[piv - k] == 0.0:
            return -np.inf, 0.0j, 0.0
        if piv != k:
            u[[k, piv]] = u[[piv, k]]
            phase = -phase
        pivot = u[k, k]
        mag = abs(pivot)
        log_abs += np.log(mag)
        phase *= pivot / mag
        min_pivot = min(min_pivot, mag)
        if k + 1 < n:
            factors = u[k + 1:, k] / pivot
            u[k + 1:, k + 1:] -= np.outer(factors, u[k, k + 1:])
    return float(log_abs), complex(phase), float(min_pivot)


NUMPY_KERNELS = SimpleNamespace(
    name="numpy",
    h_recurrence=h_recurrence_numpy,
    d_convolution=d_convolution_numpy,
    lu_logdet=lu_logdet_numpy,
)


# numba

NUMBA_KERNELS = None

if numba is not None:
    _jit = numba.njit(cache=True, nogil=True)

    @_jit
    def h_recurrence_numba(p, n_max):
        h = np.zeros(n_max + 1, dtype=np.complex128)
        h[0] = 1.0
        K = p.shape[0]
        for n in range(1, n_max + 1):
            acc = 0.0j
            for k in range(1, min(n, K) + 1):
                acc += p[k - 1] * h[n - k]
            h[n] = acc / n
        return h

    @_jit
    def _lu_logdet_numba(a):
        u = a.copy()
        n = u.shape[0]
        log_abs = 0.0
        phase = 1.0 + 0.0j
        min_pivot = np.inf
        for k in range(n):
            piv = k
            best = abs(u[k, k])
            for i in range(k + 1, n):
                v = abs(u[i, k])
                if v > best:
                    best = v
                    piv = i
            if best == 0.0:
                return -np.inf, 0.0j, 0.0
            if piv != k:
                for j in range(n):
                    tmp = u[k, j]
                    u[k, j] = u[piv, j]
                    u[piv, j] = tmp
                phase = -phase
            pivot = u[k, k]
            log_abs += np.log(best)
            phase *= pivot / best
            if best < min_pivot:
                min_pivot = best
            for i in range(k + 1, n):
                f = u[i, k] / pivot
                if f != 0.0:
                    for j in range(k + 1, n):
                        u[i, j] -= f * u[k, j]
        return log_abs, phase, min_pivot

    def lu_logdet_numba(a: np.ndarray) -> tuple[float, complex, float]:
        log_abs, phase, min_pivot = _lu_logdet_numba(np.ascontiguousarray(a, dtype=np.complex128))
        return float(log_abs), complex(phase), float(min_pivot)

    NUMBA_KERNELS = SimpleNamespace(
        name="numba",
        h_recurrence=h_recurrence_numba,
        # np.convolve is already compiled and beats a jitted loop at every size here
        d_convolution=d_convolution_numpy,
        lu_logdet=lu_logdet_numba,
    )


def select(use_numba: bool | None = None) -> SimpleNamespace:
    """Kernel set to use: numba when available and requested, else numpy."""
    if use_numba is None:
        use_numba = _numba_requested()
    if use_numba and NUMBA_KERNELS is not None:
        return NUMBA_KERNELS
    return NUMPY_KERNELS


KERNELS = select()
