# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the matmul/softmax inner loops.

Plain C loops over float64 memoryviews; no BLAS, so the accumulation
order is fixed and results are reproducible across builds.
"""

import numpy as np

from libc.math cimport exp

NAME = "compiled"


def matmul(double[:, ::1] a, double[:, ::1] b):
    cdef Py_ssize_t m = a.shape[0], k = a.shape[1], n = b.shape[1]
    out_arr = np.empty((m, n), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t i, j, p
    cdef double acc
    for i in range(m):
        for j in range(n):
            acc = 0.0
            for p in range(k):
                acc += a[i, p] * b[p, j]
            out[i, j] = acc
    return out_arr


def matmul_nt(double[:, ::1] a, double[:, ::1] b):
    """a @ b.T for row-major operands."""
    cdef Py_ssize_t m = a.shape[0], k = a.shape[1], n = b.shape[0]
    out_arr = np.empty((m, n), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t i, j, p
    cdef double acc
    for i in range(m):
        for j in range(n):
            acc = 0.0
            for p in range(k):
                acc += a[i, p] * b[j, p]
            out[i, j] = acc
    return out_arr


def matmul_tn(double[:, ::1] a, double[:, ::1] b):
    """a.T @ b for row-major operands."""
    cdef Py_ssize_t m = a.shape[1], k = a.shape[0], n = b.shape[1]
    out_arr = np.zeros((m, n), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t i, j, p
    for p in range(k):
        for i in range(m):
            for j in range(n):
                out[i, j] += a[p, i] * b[p, j]
    return out_arr


def softmax_rows(double[:, ::1] m):
    cdef Py_ssize_t rows = m.shape[0], cols = m.shape[1]
    out_arr = np.empty((rows, cols), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t i, j
    cdef double mx, s
    for i in range(rows):
        mx = m[i, 0]
        for j in range(1, cols):
            if m[i, j] > mx:
                mx = m[i, j]
        s = 0.0
        for j in range(cols):
            out[i, j] = exp(m[i, j] - mx)
            s += out[i, j]
        for j in range(cols):
            out[i, j] /= s
    return out_arr
