# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled lowest-term kernel for the arc-family scan (int64 only).

Same contract as ``_scan_py.lowest_terms``; the caller guarantees that no
intermediate value overflows 64-bit integers.
"""

import numpy as np

cdef long long NONE = 9223372036854775807


def lowest_terms(exps, coefs, opt_w, opt_pow, long long start,
                 long long stop):
    cdef const long long[:, :] E = np.ascontiguousarray(exps, dtype=np.int64)
    cdef const long long[:] C = np.ascontiguousarray(coefs, dtype=np.int64)
    cdef const long long[:] OW = np.ascontiguousarray(opt_w, dtype=np.int64)
    cdef const long long[:, :] OP = np.ascontiguousarray(opt_pow,
                                                         dtype=np.int64)
    cdef Py_ssize_t M = E.shape[0], n = E.shape[1], n_opt = OW.shape[0]
    cdef Py_ssize_t B = stop - start
    orders_arr = np.full(B, NONE, dtype=np.int64)
    leads_arr = np.zeros(B, dtype=np.int64)
    cdef long long[:] orders = orders_arr
    cdef long long[:] leads = leads_arr
    w_arr = np.empty(M, dtype=np.int64)
    v_arr = np.empty(M, dtype=np.int64)
    o_arr = np.empty(n, dtype=np.int64)
    cdef long long[:] W = w_arr
    cdef long long[:] V = v_arr
    cdef long long[:] opt = o_arr
    cdef Py_ssize_t b, m, i
    cdef long long k, w, s, v, best
    for b in range(B):
        k = start + b
        for i in range(n - 1, -1, -1):
            opt[i] = k % n_opt
            k = k // n_opt
        for m in range(M):
            w = 0
            v = C[m]
            for i in range(n):
                w += OW[opt[i]] * E[m, i]
                v *= OP[opt[i], E[m, i]]
            W[m] = w
            V[m] = v
            if v == 0:
                W[m] = NONE
        while True:
            best = NONE
            for m in range(M):
                if W[m] < best:
                    best = W[m]
            if best == NONE:
                break
            s = 0
            for m in range(M):
                if W[m] == best:
                    s += V[m]
                    W[m] = NONE
            if s != 0:
                orders[b] = best
                leads[b] = s
                break
    return orders_arr, leads_arr
