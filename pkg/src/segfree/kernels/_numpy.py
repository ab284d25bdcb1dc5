"""Numpy implementations of the hot kernels.

Used when the compiled extension is unavailable or explicitly disabled.
Semantics match ``_ckern`` to within last-bit rounding (accumulation
order differs between BLAS and the compiled loops).
"""

import numpy as np

NAME = "python"


def matmul(a, b):
    return a @ b


def matmul_nt(a, b):
    """a @ b.T without materializing the transpose."""
    return a @ b.T


def matmul_tn(a, b):
    """a.T @ b without materializing the transpose."""
    return a.T @ b


def softmax_rows(m):
    shifted = m - m.max(axis=1, keepdims=True)
    e = np.exp(shifted)
    return e / e.sum(axis=1, keepdims=True)
