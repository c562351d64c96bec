# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled twins of the numpy kernels in ``fallback``; same contracts."""

import numpy as np

cimport numpy as cnp

NEG = -(1 << 60)
DOM_INF = 30_000


def oracle_row_step(dp, tab):
    cdef cnp.int64_t[::1] dpv = dp
    cdef cnp.uint8_t[::1] dead = tab.dead_u8
    cdef cnp.int64_t[::1] forbid = tab.forbid
    cdef cnp.int64_t[::1] pc = tab.pc
    cdef cnp.int64_t[::1] compl_ = tab.compl
    cdef int w = tab.w
    cdef Py_ssize_t n = 1 << w
    cdef Py_ssize_t size = n * n
    cdef cnp.int64_t neg = NEG
    g_arr = np.full(size, neg, dtype=np.int64)
    cdef cnp.int64_t[::1] g = g_arr
    cdef Py_ssize_t s, b, idx, off, S, c, bit, step
    cdef cnp.int64_t v
    for s in range(size):
        if dead[s]:
            continue
        v = dpv[s]
        idx = ((s & (n - 1)) << w) | <Py_ssize_t> forbid[s]
        if v > g[idx]:
            g[idx] = v
    for bit in range(w):
        step = 1 << bit
        for b in range(n):
            off = b << w
            for S in range(n):
                if S & step:
                    if g[off + (S ^ step)] > g[off + S]:
                        g[off + S] = g[off + (S ^ step)]
    out_arr = np.empty(size, dtype=np.int64)
    cdef cnp.int64_t[::1] out = out_arr
    for b in range(n):
        off = b << w
        for c in range(n):
            out[off + c] = g[off + compl_[c]] + pc[c]
    return out_arr


cdef void _dom_cell_step(cnp.int16_t[::1] src, cnp.int16_t[::1] dst,
                         Py_ssize_t j, Py_ssize_t size) noexcept nogil:
    cdef Py_ssize_t p_j = 1
    cdef Py_ssize_t t
    for t in range(j):
        p_j *= 3
    cdef Py_ssize_t p_jm1 = p_j // 3
    cdef Py_ssize_t nhi = size // (p_j * 3)
    cdef Py_ssize_t hi, base_hi, base, tgt_c, tgt_s, k
    cdef int a, l, l2, skip_a
    cdef cnp.int16_t v, v2
    for hi in range(nhi):
        base_hi = hi * p_j * 3
        for a in range(3):
            for l in range(3):
                l2 = 1 if l == 2 else l
                base = base_hi + a * p_j + l * p_jm1
                tgt_c = base_hi + l2 * p_jm1
                if a != 2:
                    skip_a = 1 if (a == 0 or l == 0) else 2
                    tgt_s = base_hi + skip_a * p_j + l * p_jm1
                    for k in range(p_jm1):
                        v = src[tgt_c + k] + 1
                        v2 = src[tgt_s + k]
                        if v2 < v:
                            v = v2
                        dst[base + k] = v
                else:
                    for k in range(p_jm1):
                        dst[base + k] = src[tgt_c + k] + 1


cdef void _dom_cell_step0(cnp.int16_t[::1] src, cnp.int16_t[::1] dst,
                          Py_ssize_t size) noexcept nogil:
    cdef Py_ssize_t hi, base
    cdef cnp.int16_t v, v2
    for hi in range(size // 3):
        base = hi * 3
        v = src[base] + 1  # choose the cell
        v2 = src[base + 1]  # skip; above chosen -> dominated
        dst[base] = v if v < v2 else v2
        v2 = src[base + 2]  # skip; above unchosen -> left open
        dst[base + 1] = v if v < v2 else v2
        dst[base + 2] = v  # above still open: choosing is forced
    return


def dom_backward_row(values, int w):
    cdef Py_ssize_t size = values.shape[0]
    buf1 = np.empty(size, dtype=np.int16)
    buf2 = np.empty(size, dtype=np.int16)
    src = values
    dst = buf1
    cdef Py_ssize_t j
    for j in range(w - 1, 0, -1):
        _dom_cell_step(src, dst, j, size)
        if src is values:
            src, dst = buf1, buf2
        else:
            src, dst = dst, src
    _dom_cell_step0(src, dst, size)
    return dst
