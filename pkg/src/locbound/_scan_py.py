"""Vectorized lowest-term kernel for the arc-family scan (numpy fallback).

For every arc index in ``[start, stop)`` the kernel finds the smallest
weight whose monomial values do not cancel, and the value sum at that
weight.  Arc ``k`` uses option ``(k // n_opt**(n-1-i)) % n_opt`` in
coordinate ``i``.  With ``dtype=object`` the same code runs on Python
integers, which is the exact route used when int64 could overflow.
"""

import numpy as np

NONE = np.iinfo(np.int64).max


def _decode(start, stop, n, n_opt):
    k = np.arange(start, stop, dtype=np.int64)
    out = np.empty((stop - start, n), dtype=np.int64)
    for i in range(n - 1, -1, -1):
        out[:, i] = k % n_opt
        k = k // n_opt
    return out


def lowest_terms(exps, coefs, opt_w, opt_pow, start, stop, dtype=np.int64):
    exps = np.asarray(exps, dtype=np.int64)
    n = exps.shape[1]
    n_opt = len(opt_w)
    opts = _decode(start, stop, n, n_opt)
    opt_w = np.asarray(opt_w, dtype=np.int64)
    opt_pow = np.asarray(opt_pow, dtype=dtype)
    coefs = np.asarray(coefs, dtype=dtype)
    B = stop - start
    W = np.zeros((B, len(coefs)), dtype=np.int64)
    V = np.broadcast_to(coefs, (B, len(coefs))).copy()
    for i in range(n):
        oi = opts[:, i]
        W += np.outer(opt_w[oi], exps[:, i])
        V = V * opt_pow[oi[:, None], exps[None, :, i]]
    orders = np.full(B, NONE, dtype=np.int64)
    leads = np.zeros(B, dtype=dtype)
    pending = np.ones(B, dtype=bool)
    active = V != 0
    while True:
        Wm = np.where(active, W, NONE)
        w = Wm.min(axis=1)
        live = pending & (w != NONE)
        if not live.any():
            break
        mask = (Wm == w[:, None]) & live[:, None]
        s = np.where(mask, V, 0).sum(axis=1)
        hit = live & (s != 0)
        orders[hit] = w[hit]
        leads[hit] = s[hit]
        pending &= ~hit
        active &= ~mask
    return orders, leads
