# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled all-pairs intersection test for paraxial segments."""

import numpy as np
cimport numpy as cnp

ctypedef cnp.int64_t i64


cdef Py_ssize_t _vv(const i64[:] y, const i64[:] lo, const i64[:] hi, i64[:, :] out, bint fill):
    cdef Py_ssize_t n = y.shape[0], i, j, k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if y[i] == y[j] and lo[i] <= hi[j] and lo[j] <= hi[i]:
                if fill:
                    out[k, 0] = i
                    out[k, 1] = j
                k += 1
    return k


cdef Py_ssize_t _ve(const i64[:] y, const i64[:] lo, const i64[:] hi,
                    const i64[:] x, const i64[:] ylo, const i64[:] yhi,
                    i64[:, :] out, bint fill):
    cdef Py_ssize_t nv = y.shape[0], ne = x.shape[0], i, j, k = 0
    for j in range(ne):
        for i in range(nv):
            if ylo[j] < y[i] < yhi[j] and lo[i] <= x[j] <= hi[i]:
                if fill:
                    out[k, 0] = j
                    out[k, 1] = i
                k += 1
    return k


def naive_pairs(vy, vlo, vhi, ex, elo, ehi):
    """Index pairs (bar, bar), (edge, edge) and (edge, bar) that intersect."""
    cdef const i64[:] a = np.ascontiguousarray(vy, dtype=np.int64)
    cdef const i64[:] b = np.ascontiguousarray(vlo, dtype=np.int64)
    cdef const i64[:] c = np.ascontiguousarray(vhi, dtype=np.int64)
    cdef const i64[:] d = np.ascontiguousarray(ex, dtype=np.int64)
    cdef const i64[:] e = np.ascontiguousarray(elo, dtype=np.int64)
    cdef const i64[:] f = np.ascontiguousarray(ehi, dtype=np.int64)
    dummy = np.zeros((0, 2), dtype=np.int64)
    # open intervals with integer ends overlap iff the doubled, shrunken closed ones do
    cdef i64[:] e_in = 2 * np.asarray(e) + 1
    cdef i64[:] f_in = 2 * np.asarray(f) - 1
    vv = np.zeros((_vv(a, b, c, dummy, False), 2), dtype=np.int64)
    _vv(a, b, c, vv, True)
    ee = np.zeros((_vv(d, e_in, f_in, dummy, False), 2), dtype=np.int64)
    _vv(d, e_in, f_in, ee, True)
    ve = np.zeros((_ve(a, b, c, d, e, f, dummy, False), 2), dtype=np.int64)
    _ve(a, b, c, d, e, f, ve, True)
    return vv, ee, ve
