# cython: language_level=3
"""Compiled twin of skeincalc._kernel_py: same contract, lower loop overhead.

Coefficients stay arbitrary-precision Python ints; only the index loops are
compiled."""


def mul_reduce(a, b, tuple table):
    cdef Py_ssize_t phi = len(a)
    cdef Py_ssize_t i, j, k
    cdef list c = [0] * (2 * phi - 1)
    cdef object ai, bj, ck, ri
    cdef tuple row
    for i in range(phi):
        ai = a[i]
        if ai:
            for j in range(phi):
                bj = b[j]
                if bj:
                    c[i + j] = c[i + j] + ai * bj
    cdef list out = c[:phi]
    for k in range(phi, 2 * phi - 1):
        ck = c[k]
        if ck:
            row = <tuple> table[k - phi]
            for i in range(phi):
                ri = row[i]
                if ri:
                    out[i] = out[i] + ck * ri
    return out
