# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled chain-count kernel; 64-bit arithmetic with overflow detection."""
from libc.stdlib cimport malloc, free

cdef extern from *:
    bint mul_overflow "__builtin_mul_overflow" (long long a, long long b, long long *res) nogil
    bint add_overflow "__builtin_add_overflow" (long long a, long long b, long long *res) nogil


def chain_counts(parents, Py_ssize_t jmax):
    """Same contract as ``_chain_py.chain_counts``.

    Raises OverflowError when an intermediate count leaves int64 range.
    """
    cdef Py_ssize_t w = len(parents)
    cdef Py_ssize_t width = jmax + 1
    cdef Py_ssize_t v, t, u
    cdef long long s
    cdef long long *prod
    cdef long long *a
    cdef long long *par
    cdef bint overflow = False
    if w == 0:
        return [1] * width
    prod = <long long *> malloc(w * width * sizeof(long long))
    a = <long long *> malloc(width * sizeof(long long))
    par = <long long *> malloc(w * sizeof(long long))
    if prod == NULL or a == NULL or par == NULL:
        free(prod); free(a); free(par)
        raise MemoryError()
    try:
        for v in range(w):
            par[v] = parents[v]
        with nogil:
            for v in range(w * width):
                prod[v] = 1
            for v in range(w):
                a[0] = 0
                s = 0
                for t in range(1, width):
                    if add_overflow(s, prod[v * width + t - 1], &s):
                        overflow = True
                        break
                    a[t] = s
                if overflow:
                    break
                u = par[v]
                if u >= 0:
                    for t in range(width):
                        if mul_overflow(prod[u * width + t], a[t], &prod[u * width + t]):
                            overflow = True
                            break
                    if overflow:
                        break
        if overflow:
            raise OverflowError("chain count exceeds int64")
        return [a[t] for t in range(width)]
    finally:
        free(prod); free(a); free(par)
