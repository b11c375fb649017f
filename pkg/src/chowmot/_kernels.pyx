# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled truncated monomial kernels.

Monomials are addressed by their mixed-radix index in the box
``0 <= e_i <= caps[i]`` and accumulated densely.  Coefficients stay in C
``long long`` when the worst-case sum provably fits, else Python ints.
"""
from libc.stdlib cimport malloc, calloc, free

cdef Py_ssize_t DENSE_LIMIT = 1 << 22


cdef int _fill_exps(list exps, Py_ssize_t k, int *buf) except -1:
    cdef Py_ssize_t i, j
    cdef tuple e
    for i in range(len(exps)):
        e = <tuple>exps[i]
        for j in range(k):
            buf[i * k + j] = <int>e[j]
    return 0


def truncated_mul(caps, list a_exps, list a_nums, list b_exps, list b_nums):
    """Multiply two integer-coefficient polynomials modulo ``h_i^(caps[i]+1)``."""
    cdef Py_ssize_t k = len(caps)
    cdef Py_ssize_t na = len(a_exps), nb = len(b_exps)
    cdef Py_ssize_t i, j, t, size = 1, idx
    cdef int x
    cdef int *cap = NULL
    cdef Py_ssize_t *stride = NULL
    cdef int *ea = NULL
    cdef int *eb = NULL
    cdef Py_ssize_t *ia = NULL
    cdef Py_ssize_t *ib = NULL
    cdef long long *acc = NULL
    cdef long long *va = NULL
    cdef long long *vb = NULL
    cdef bint small
    cdef list obj_acc
    cdef dict out = {}

    if na == 0 or nb == 0:
        return out
    for t in range(k):
        size *= <Py_ssize_t>caps[t] + 1
    if size > DENSE_LIMIT:
        from chowmot._kernels_py import truncated_mul as slow
        return slow(caps, a_exps, a_nums, b_exps, b_nums)

    bits_a = max(abs(c) for c in a_nums).bit_length()
    bits_b = max(abs(c) for c in b_nums).bit_length()
    small = bits_a + bits_b + min(na, nb).bit_length() < 62

    cap = <int *>malloc((k + 1) * sizeof(int))
    stride = <Py_ssize_t *>malloc((k + 1) * sizeof(Py_ssize_t))
    ea = <int *>malloc((na * k + 1) * sizeof(int))
    eb = <int *>malloc((nb * k + 1) * sizeof(int))
    ia = <Py_ssize_t *>malloc(na * sizeof(Py_ssize_t))
    ib = <Py_ssize_t *>malloc(nb * sizeof(Py_ssize_t))
    try:
        if not (cap and stride and ea and eb and ia and ib):
            raise MemoryError()
        idx = 1
        for t in range(k - 1, -1, -1):
            cap[t] = <int>caps[t]
            stride[t] = idx
            idx *= cap[t] + 1
        _fill_exps(a_exps, k, ea)
        _fill_exps(b_exps, k, eb)
        for i in range(na):
            idx = 0
            for t in range(k):
                idx += ea[i * k + t] * stride[t]
            ia[i] = idx
        for j in range(nb):
            idx = 0
            for t in range(k):
                idx += eb[j * k + t] * stride[t]
            ib[j] = idx

        if small:
            acc = <long long *>calloc(size, sizeof(long long))
            va = <long long *>malloc(na * sizeof(long long))
            vb = <long long *>malloc(nb * sizeof(long long))
            if not (acc and va and vb):
                raise MemoryError()
            for i in range(na):
                va[i] = a_nums[i]
            for j in range(nb):
                vb[j] = b_nums[j]
            for i in range(na):
                for j in range(nb):
                    for t in range(k):
                        x = ea[i * k + t] + eb[j * k + t]
                        if x > cap[t]:
                            break
                    else:
                        acc[ia[i] + ib[j]] += va[i] * vb[j]
            for idx in range(size):
                if acc[idx] != 0:
                    out[_decode(idx, k, stride)] = acc[idx]
        else:
            obj_acc = [0] * size
            for i in range(na):
                ca = a_nums[i]
                for j in range(nb):
                    for t in range(k):
                        x = ea[i * k + t] + eb[j * k + t]
                        if x > cap[t]:
                            break
                    else:
                        idx = ia[i] + ib[j]
                        obj_acc[idx] = obj_acc[idx] + ca * b_nums[j]
            for idx in range(size):
                c = obj_acc[idx]
                if c:
                    out[_decode(idx, k, stride)] = c
    finally:
        free(cap)
        free(stride)
        free(ea)
        free(eb)
        free(ia)
        free(ib)
        free(acc)
        free(va)
        free(vb)
    return out


cdef tuple _decode(Py_ssize_t idx, Py_ssize_t k, Py_ssize_t *stride):
    cdef Py_ssize_t t
    cdef list e = [0] * k
    for t in range(k):
        e[t] = idx // stride[t]
        idx -= (idx // stride[t]) * stride[t]
    return tuple(e)
