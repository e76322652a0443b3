# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled shift-scan kernels for the exhaustive oracle.

``table`` holds one uint64 code per input x (equal codes iff equal outputs).
"""

from libc.stdint cimport uint64_t


cdef bint _invariant(const uint64_t[::1] table, Py_ssize_t size, Py_ssize_t s) nogil:
    cdef Py_ssize_t x
    for x in range(size):
        if table[x ^ s] != table[x]:
            return False
    return True


def invariant_shifts(const uint64_t[::1] table):
    """Every s (ascending) with table[x ^ s] == table[x] for all x."""
    cdef Py_ssize_t size = table.shape[0]
    cdef Py_ssize_t s
    out = []
    for s in range(size):
        if _invariant(table, size, s):
            out.append(s)
    return out


def shift_exists(const uint64_t[::1] table, int n, Py_ssize_t prefix, int k):
    """Is some nonzero invariant s found whose top k bits equal ``prefix``?"""
    cdef Py_ssize_t size = table.shape[0]
    cdef Py_ssize_t base = prefix << (n - k)
    cdef Py_ssize_t low, s
    for low in range(<Py_ssize_t>1 << (n - k)):
        s = base | low
        if s != 0 and _invariant(table, size, s):
            return True
    return False
