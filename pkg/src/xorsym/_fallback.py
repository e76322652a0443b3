"""Numpy versions of the compiled shift-scan kernels."""

import numpy as np


def invariant_shifts(table):
    table = np.ascontiguousarray(table, dtype=np.uint64)
    idx = np.arange(table.shape[0])
    return [s for s in range(table.shape[0]) if np.array_equal(table[idx ^ s], table)]


def shift_exists(table, n, prefix, k):
    table = np.ascontiguousarray(table, dtype=np.uint64)
    idx = np.arange(table.shape[0])
    base = prefix << (n - k)
    for low in range(1 << (n - k)):
        s = base | low
        if s and np.array_equal(table[idx ^ s], table):
            return True
    return False
