"""Pure-Python versions of the hot loops. Used when the compiled module is absent."""

import numpy as np


def inversions(word):
    n = len(word)
    count = 0
    for a in range(n):
        x = word[a]
        for b in range(a + 1, n):
            if x > word[b]:
                count += 1
    return count


def first_descent(word):
    """Position of the leftmost adjacent pair with word[i] > word[i+1], or -1."""
    for i in range(len(word) - 1):
        if word[i] > word[i + 1]:
            return i
    return -1


def last_descent(word):
    for i in range(len(word) - 2, -1, -1):
        if word[i] > word[i + 1]:
            return i
    return -1


def descents(word):
    return [i for i in range(len(word) - 1) if word[i] > word[i + 1]]


def rank_mod_p(matrix, p):
    """Rank over F_p by Gaussian elimination (matrix is copied)."""
    m = np.array(matrix, dtype=np.int64) % p
    if m.ndim != 2 or m.size == 0:
        return 0
    rows, cols = m.shape
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if m[i, c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        inv = pow(int(m[r, c]), -1, p)
        m[r] = m[r] * inv % p
        for i in range(rows):
            if i != r and m[i, c]:
                m[i] = (m[i] - m[i, c] * m[r]) % p
        r += 1
        if r == rows:
            break
    return r
