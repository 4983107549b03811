"""Square matrices with polynomial entries in formal variables ``t, u``.

A :class:`PolyMatrix` is stored as a map from exponent pairs ``(a, b)`` to
coefficient matrices, i.e. ``M = sum_{a,b} t^a u^b M_ab``.  Coefficients are
numpy object arrays so exact ``int`` and ``Fraction`` entries both work.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

import numpy as np


def _clean(terms):
    return {k: v for k, v in terms.items() if np.any(v != 0)}


class PolyMatrix:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms = _clean(terms or {})

    @classmethod
    def identity(cls, n):
        return cls(n, {(0, 0): np.identity(n, dtype=np.int64)})

    @classmethod
    def constant(cls, m):
        m = _normalise(m)
        return cls(m.shape[0], {(0, 0): m})

    @classmethod
    def exp_nilpotent(cls, x, monomial=(1, 0), scalar=1):
        """exp(s * t^a u^b * X) for a nilpotent integer matrix X.

        Raises ``ArithmeticError`` if X is not nilpotent within its size.
        """
        x = np.asarray(x, dtype=object)
        n = x.shape[0]
        a, b = monomial
        terms = {(0, 0): np.identity(n, dtype=object) * 1}
        power = np.identity(n, dtype=object) * 1
        k = 0
        while True:
            k += 1
            power = power.dot(x)
            if not np.any(power != 0):
                break
            if k > n:
                raise ArithmeticError("matrix is not nilpotent")
            coeff = Fraction(scalar) ** k / factorial(k)
            term = power * coeff
            terms[(a * k, b * k)] = terms.get((a * k, b * k), 0) + term
        return cls(n, {key: _normalise(v) for key, v in terms.items()})

    def nilpotency_terms(self) -> int:
        return len(self.terms)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        out = {}
        for (a1, b1), m1 in self.terms.items():
            for (a2, b2), m2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                prod = m1.dot(m2)
                if key in out:
                    out[key] = out[key] + prod
                else:
                    out[key] = prod
        return PolyMatrix(self.n, out)

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return PolyMatrix(self.n, out)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, c):
        if isinstance(c, Fraction) and c.denominator != 1:
            return PolyMatrix(self.n, {k: _normalise(v.astype(object) * c) for k, v in self.terms.items()})
        return PolyMatrix(self.n, {k: v * int(c) for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix) or other.n != self.n:
            return NotImplemented
        return not (self - other).terms

    __hash__ = None

    def coefficient(self, a, b):
        return self.terms.get((a, b), np.zeros((self.n, self.n), dtype=object))

    def total_degrees(self):
        return sorted({a + b for a, b in self.terms})

    def evaluate(self, t, u=0):
        out = np.zeros((self.n, self.n), dtype=object)
        for (a, b), m in self.terms.items():
            out = out + m.astype(object) * (Fraction(t) ** a * Fraction(u) ** b)
        return _normalise(out)

    def is_integral(self) -> bool:
        for m in self.terms.values():
            for x in m.flat:
                if isinstance(x, Fraction) and x.denominator != 1:
                    return False
        return True

    def first_difference(self, other):
        """First (monomial, row, col, left, right) where two matrices differ, or None."""
        d = self - other
        for key in sorted(d.terms):
            m = d.terms[key]
            idx = np.argwhere(m != 0)[0]
            r, c = int(idx[0]), int(idx[1])
            return key, r, c, self.coefficient(*key)[r, c], other.coefficient(*key)[r, c]
        return None


_SMALL = 1 << 40


def _normalise(m):
    """Integral entries become an int64 array; anything else stays exact objects."""
    m = np.array(m, dtype=object)
    integral = True
    for idx, x in np.ndenumerate(m):
        if isinstance(x, Fraction):
            if x.denominator == 1:
                m[idx] = int(x)
            else:
                integral = False
        elif not isinstance(x, (int, np.integer)):
            integral = False
    if integral and all(abs(int(x)) < _SMALL for x in m.flat):
        return m.astype(np.int64)
    return m


def determinant(m) -> Fraction:
    """Exact determinant by fraction-free elimination on an object matrix."""
    a = [[Fraction(x) for x in row] for row in np.asarray(m, dtype=object)]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            if a[r][c]:
                f = a[r][c] / a[c][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det
