"""Pure-Python fallback for the hot coefficient-vector kernel.

The compiled twin (skeincalc._ckernel, built from _ckernel.pyx) provides the
same function with identical semantics; skeincalc._backend picks one at
import time.
"""


def mul_reduce(a, b, table):
    """Product of two power-basis vectors, reduced into the basis.

    ``a`` and ``b`` are equal-length sequences of ints.  ``table[k]`` holds
    the power-basis coefficients of x**(phi + k) modulo the cyclotomic
    polynomial, so the tail of the convolution folds back without any
    polynomial division.  Returns a list of length ``len(a)``.
    """
    phi = len(a)
    c = [0] * (2 * phi - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    c[i + j] += ai * bj
    out = c[:phi]
    for k in range(phi, 2 * phi - 1):
        ck = c[k]
        if ck:
            for i, ri in enumerate(table[k - phi]):
                if ri:
                    out[i] += ck * ri
    return out
