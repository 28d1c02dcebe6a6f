# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled group-aggregation kernels.

Semantics must stay bit-for-bit identical to ``_pykernels``: every
accumulator receives its addends in increasing row order, all arithmetic is
plain IEEE double precision, and no reassociation is performed.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def group_sums(double[:, ::1] values, cnp.intp_t[::1] codes, Py_ssize_t n_groups):
    """Sum rows of ``values`` by group code. Returns an (n_groups, k) array."""
    cdef Py_ssize_t n = values.shape[0]
    cdef Py_ssize_t k = values.shape[1]
    out_arr = np.zeros((n_groups, k), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t i, j, g
    with nogil:
        for i in range(n):
            g = codes[i]
            for j in range(k):
                out[g, j] += values[i, j]
    return out_arr


def demean(double[:, ::1] values, cnp.intp_t[::1] codes, Py_ssize_t n_groups,
           double[::1] weights=None):
    """Subtract (optionally weighted) group means from ``values`` in place.

    Returns the largest absolute subtracted mean, the convergence measure for
    alternating projections. Empty groups are skipped.
    """
    cdef Py_ssize_t n = values.shape[0]
    cdef Py_ssize_t k = values.shape[1]
    sums_arr = np.zeros((n_groups, k), dtype=np.float64)
    denom_arr = np.zeros(n_groups, dtype=np.float64)
    cdef double[:, ::1] sums = sums_arr
    cdef double[::1] denom = denom_arr
    cdef Py_ssize_t i, j, g
    cdef double w, m
    cdef double max_change = 0.0
    with nogil:
        if weights is None:
            for i in range(n):
                g = codes[i]
                denom[g] += 1.0
                for j in range(k):
                    sums[g, j] += values[i, j]
        else:
            for i in range(n):
                g = codes[i]
                w = weights[i]
                denom[g] += w
                for j in range(k):
                    sums[g, j] += w * values[i, j]
        for g in range(n_groups):
            if denom[g] > 0.0:
                for j in range(k):
                    m = sums[g, j] / denom[g]
                    sums[g, j] = m
                    if m > max_change:
                        max_change = m
                    elif -m > max_change:
                        max_change = -m
            else:
                for j in range(k):
                    sums[g, j] = 0.0
        for i in range(n):
            g = codes[i]
            for j in range(k):
                values[i, j] -= sums[g, j]
    return max_change
