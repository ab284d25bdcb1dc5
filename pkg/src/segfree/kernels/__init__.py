"""Deterministic numeric kernels used by every other module.

Two interchangeable backends provide the hot kernels (matrix products
and row softmax): a compiled extension (``_ckern``, built from Cython)
and a numpy fallback (``_numpy``). The backend is selected at import
time; set ``SEGFREE_KERNELS=python`` or ``=compiled`` to force one, or
call :func:`use_backend` at runtime (the dispatch functions are pure,
so swapping is safe between calls).

The cold linear-algebra helpers (:func:`sqrtm_spd`, :func:`mean_cov`)
have a single numpy implementation.
"""

from __future__ import annotations

import os

import numpy as np

from segfree.errors import DimensionError, DomainError, InsufficientDataError
from segfree.kernels import _numpy

try:
    from segfree.kernels import _ckern
except ImportError:
    _ckern = None

_BACKENDS = {"python": _numpy}
if _ckern is not None:
    _BACKENDS["compiled"] = _ckern


def _select_default():
    requested = os.environ.get("SEGFREE_KERNELS", "auto")
    if requested == "auto":
        return _BACKENDS.get("compiled", _numpy)
    if requested not in _BACKENDS:
        raise ImportError(
            f"kernel backend {requested!r} unavailable; have {sorted(_BACKENDS)}"
        )
    return _BACKENDS[requested]


_impl = _select_default()


def backend_name() -> str:
    return _impl.NAME


def available_backends() -> list[str]:
    return sorted(_BACKENDS)


def use_backend(name: str) -> str:
    """Switch the active backend; returns the previously active name."""
    global _impl
    if name not in _BACKENDS:
        raise ValueError(f"unknown backend {name!r}; have {sorted(_BACKENDS)}")
    previous = _impl.NAME
    _impl = _BACKENDS[name]
    return previous


def _as_matrix(x, name):
    m = np.ascontiguousarray(x, dtype=np.float64)
    if m.ndim != 2:
        raise DimensionError(f"{name} must be 2-D, got shape {m.shape}")
    return m


def matmul(a, b) -> np.ndarray:
    a = _as_matrix(a, "a")
    b = _as_matrix(b, "b")
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"matmul: inner dims differ, {a.shape} x {b.shape}")
    return _impl.matmul(a, b)


def matmul_nt(a, b) -> np.ndarray:
    """a @ b.T"""
    a = _as_matrix(a, "a")
    b = _as_matrix(b, "b")
    if a.shape[1] != b.shape[1]:
        raise DimensionError(f"matmul_nt: inner dims differ, {a.shape} x {b.shape}^T")
    return _impl.matmul_nt(a, b)


def matmul_tn(a, b) -> np.ndarray:
    """a.T @ b"""
    a = _as_matrix(a, "a")
    b = _as_matrix(b, "b")
    if a.shape[0] != b.shape[0]:
        raise DimensionError(f"matmul_tn: inner dims differ, {a.shape}^T x {b.shape}")
    return _impl.matmul_tn(a, b)


def softmax_rows(m) -> np.ndarray:
    """Row-wise softmax with max-subtraction; rows sum to 1."""
    m = _as_matrix(m, "m")
    if np.isnan(m).any():
        raise DomainError("softmax_rows: NaN entries")
    return _impl.softmax_rows(m)


def sqrtm_spd(sigma, *, eig_floor: float = -1e-10) -> np.ndarray:
    """Principal square root of a symmetric PSD matrix.

    Uses a symmetric eigendecomposition; eigenvalues in
    ``[eig_floor, 0)`` are clamped to zero, anything below raises.
    """
    sigma = _as_matrix(sigma, "sigma")
    d = sigma.shape[0]
    if sigma.shape[1] != d:
        raise DimensionError(f"sqrtm_spd: matrix must be square, got {sigma.shape}")
    scale = max(1.0, np.abs(sigma).max())
    if np.abs(sigma - sigma.T).max() > 1e-8 * scale:
        raise DomainError("sqrtm_spd: matrix is not symmetric")
    sym = 0.5 * (sigma + sigma.T)
    w, v = np.linalg.eigh(sym)
    if w.min() < eig_floor * scale:
        raise DomainError(f"sqrtm_spd: eigenvalue {w.min():.3e} below tolerance")
    root = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.T
    return 0.5 * (root + root.T)


def mean_cov(x) -> tuple[np.ndarray, np.ndarray]:
    """Column mean and unbiased (N-1) covariance of an N x d sample matrix."""
    x = _as_matrix(x, "x")
    n = x.shape[0]
    if n < 2:
        raise InsufficientDataError(f"mean_cov: need at least 2 rows, got {n}")
    mean = x.mean(axis=0)
    centered = x - mean
    cov = matmul_tn(centered, centered) / (n - 1)
    return mean, 0.5 * (cov + cov.T)
