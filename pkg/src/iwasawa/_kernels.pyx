# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hot loops in :mod:`iwasawa._pykernels`."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def inversions(tuple word):
    cdef Py_ssize_t n = len(word), a, b
    cdef long count = 0, x
    for a in range(n):
        x = word[a]
        for b in range(a + 1, n):
            if x > <long>word[b]:
                count += 1
    return count


def first_descent(tuple word):
    cdef Py_ssize_t i, n = len(word)
    for i in range(n - 1):
        if <long>word[i] > <long>word[i + 1]:
            return i
    return -1


def last_descent(tuple word):
    cdef Py_ssize_t i, n = len(word)
    for i in range(n - 2, -1, -1):
        if <long>word[i] > <long>word[i + 1]:
            return i
    return -1


def descents(tuple word):
    cdef Py_ssize_t i, n = len(word)
    return [i for i in range(n - 1) if <long>word[i] > <long>word[i + 1]]


def rank_mod_p(matrix, long p):
    arr = np.array(matrix, dtype=np.int64) % p
    if arr.ndim != 2 or arr.size == 0:
        return 0
    cdef cnp.int64_t[:, :] m = arr
    cdef Py_ssize_t rows = m.shape[0], cols = m.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef cnp.int64_t inv, f, tmp
    for c in range(cols):
        piv = -1
        for i in range(r, rows):
            if m[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                tmp = m[r, j]
                m[r, j] = m[piv, j]
                m[piv, j] = tmp
        inv = pow(int(m[r, c]), -1, p)
        for j in range(cols):
            m[r, j] = m[r, j] * inv % p
        for i in range(rows):
            if i != r and m[i, c] != 0:
                f = m[i, c]
                for j in range(c, cols):
                    m[i, j] = (m[i, j] - f * m[r, j]) % p
                    if m[i, j] < 0:
                        m[i, j] += p
        r += 1
        if r == rows:
            break
    return r
