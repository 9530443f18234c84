# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled sweep kernel: strict argmax of vx*cos(phi) + vy*sin(phi) over a
grid of angles.  Mirrors _sweep_fallback.py operation for operation."""

from libc.math cimport cos, sin, fabs

import numpy as np

BACKEND = "compiled"


cdef inline Py_ssize_t _argmax_one(double phi, double[::1] vx, double[::1] vy,
                                   double rel_tol) nogil:
    cdef double c = cos(phi)
    cdef double s = sin(phi)
    cdef double best = vx[0] * c + vy[0] * s
    cdef Py_ssize_t best_j = 0
    cdef double second = -1e308
    cdef double val, thr
    cdef Py_ssize_t j
    for j in range(1, vx.shape[0]):
        val = vx[j] * c + vy[j] * s
        if val > best:
            second = best
            best = val
            best_j = j
        elif val > second:
            second = val
    thr = fabs(best)
    if thr < 1.0:
        thr = 1.0
    if vx.shape[0] > 1 and best - second <= rel_tol * thr:
        return -1
    return best_j


def argmax_at(double phi, double[::1] vx, double[::1] vy, double rel_tol):
    """Index of the strict argmax at one angle, or -1 on a tie."""
    return _argmax_one(phi, vx, vy, rel_tol)


def argmax_grid(double[::1] phis, double[::1] vx, double[::1] vy, double rel_tol):
    out_arr = np.empty(phis.shape[0], dtype=np.int64)
    cdef long[::1] out = out_arr
    cdef Py_ssize_t i
    with nogil:
        for i in range(phis.shape[0]):
            out[i] = _argmax_one(phis[i], vx, vy, rel_tol)
    return out_arr
