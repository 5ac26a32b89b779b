# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled word kernels; see ``_pykernels`` for the reference semantics.

Limited to graphs with at most 64 vertices (one ``uint64`` mask per vertex);
the dispatcher in ``words`` falls back to Python for larger graphs.
"""

from libc.stdlib cimport malloc, free
from libc.stdint cimport uint64_t

BACKEND = "cython"
MAX_VERTICES = 64


cdef uint64_t* _masks(adj) except NULL:
    cdef Py_ssize_t n = len(adj), i
    cdef uint64_t* m = <uint64_t*> malloc((n if n > 0 else 1) * sizeof(uint64_t))
    if m == NULL:
        raise MemoryError()
    for i in range(n):
        m[i] = <uint64_t> (adj[i] & 0xFFFFFFFFFFFFFFFF)
    return m


cdef int* _codes(codes, Py_ssize_t* n_out) except NULL:
    cdef Py_ssize_t n = len(codes), i
    cdef int* a = <int*> malloc((n if n > 0 else 1) * sizeof(int))
    if a == NULL:
        raise MemoryError()
    for i in range(n):
        a[i] = codes[i]
    n_out[0] = n
    return a


def reduce_codes(codes, adj, bint coxeter):
    cdef Py_ssize_t n, i, k, j, top = 0
    cdef int c, d, v, u
    cdef bint cancelled
    cdef uint64_t mask
    cdef int* a = _codes(codes, &n)
    cdef uint64_t* m
    cdef int* out
    try:
        m = _masks(adj)
    except MemoryError:
        free(a)
        raise
    out = <int*> malloc((n if n > 0 else 1) * sizeof(int))
    try:
        for i in range(n):
            c = a[i]
            v = c >> 1
            mask = m[v]
            cancelled = False
            k = top - 1
            while k >= 0:
                d = out[k]
                u = d >> 1
                if u == v:
                    if coxeter or d != c:
                        for j in range(k, top - 1):
                            out[j] = out[j + 1]
                        top -= 1
                        cancelled = True
                    break
                if not ((mask >> u) & 1):
                    break
                k -= 1
            if not cancelled:
                out[top] = c
                top += 1
        return [out[i] for i in range(top)]
    finally:
        free(out)
        free(m)
        free(a)


def can_append(codes, int c, adj, bint coxeter):
    cdef Py_ssize_t k
    cdef int v = c >> 1, d, u
    cdef uint64_t mask = <uint64_t> (adj[v] & 0xFFFFFFFFFFFFFFFF)
    for k in range(len(codes) - 1, -1, -1):
        d = codes[k]
        u = d >> 1
        if u == v:
            return not (coxeter or d != c)
        if not ((mask >> u) & 1):
            return True
    return True


def find_cancellation(codes, adj, bint coxeter):
    cdef Py_ssize_t n, i, j
    cdef int c, d, v, u
    cdef uint64_t mask
    cdef int* a = _codes(codes, &n)
    cdef uint64_t* m
    try:
        m = _masks(adj)
    except MemoryError:
        free(a)
        raise
    try:
        for i in range(n):
            c = a[i]
            v = c >> 1
            mask = m[v]
            for j in range(i + 1, n):
                d = a[j]
                u = d >> 1
                if u == v:
                    if coxeter or d != c:
                        return (i, j)
                    break
                if not ((mask >> u) & 1):
                    break
        return None
    finally:
        free(m)
        free(a)


def normal_form_codes(codes, adj):
    cdef Py_ssize_t n, k, best_pos, left
    cdef int c, v, best
    cdef uint64_t allowed
    cdef int* a = _codes(codes, &n)
    cdef uint64_t* m
    cdef char* used
    try:
        m = _masks(adj)
    except MemoryError:
        free(a)
        raise
    used = <char*> malloc((n if n > 0 else 1) * sizeof(char))
    out = []
    try:
        for k in range(n):
            used[k] = 0
        left = n
        while left > 0:
            allowed = <uint64_t> 0xFFFFFFFFFFFFFFFF
            best = -1
            best_pos = -1
            for k in range(n):
                if used[k]:
                    continue
                c = a[k]
                v = c >> 1
                if ((allowed >> v) & 1) and (best < 0 or c < best):
                    best = c
                    best_pos = k
                allowed &= m[v]
                if allowed == 0:
                    break
            used[best_pos] = 1
            left -= 1
            out.append(best)
        return out
    finally:
        free(used)
        free(m)
        free(a)
