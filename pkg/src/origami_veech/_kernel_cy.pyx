# cython: boundscheck=False, wraparound=False, language_level=3
"""Compiled permutation kernels (hot inner loop of Schreier-Sims)."""

from cpython cimport array
import array

cdef array.array _TEMPLATE = array.array("i", [])


def compose(int[::1] p, int[::1] q):
    """Return r with r[i] = p[q[i]] (q applied first)."""
    cdef Py_ssize_t n = q.shape[0]
    cdef array.array out = array.clone(_TEMPLATE, n, zero=False)
    cdef int[::1] o = out
    cdef Py_ssize_t i
    for i in range(n):
        o[i] = p[q[i]]
    return out


def invert(int[::1] p):
    """Return the inverse permutation of p."""
    cdef Py_ssize_t n = p.shape[0]
    cdef array.array out = array.clone(_TEMPLATE, n, zero=False)
    cdef int[::1] o = out
    cdef Py_ssize_t i
    for i in range(n):
        o[p[i]] = i
    return out
