"""Finite irreducible root systems in the simple-root basis.

Roots are tuples of integers (coordinates with respect to the simple roots).
Nodes are numbered as in Bourbaki and the Cartan matrix follows the
convention ``A[i][j] = <delta_j, delta_i^vee>``, so that the pairing of a
root ``r`` with the i-th simple coroot is ``sum_j r[j] * A[i][j]``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .errors import CartanTypeError, RootError

Root = tuple

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


@dataclass(frozen=True, order=True)
class CartanType:
    series: str
    rank: int

    def __post_init__(self):
        s, n = self.series, self.rank
        if not isinstance(n, int) or n < 1:
            raise CartanTypeError(f"rank must be a positive integer, got {n!r}")
        if s in _MIN_RANK:
            ok = n >= _MIN_RANK[s]
        elif s == "E":
            ok = n in (6, 7, 8)
        elif s == "F":
            ok = n == 4
        elif s == "G":
            ok = n == 2
        else:
            raise CartanTypeError(f"unknown series {s!r}")
        if not ok:
            raise CartanTypeError(f"no irreducible root system of type {s}{n}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*_?\s*(\d+)\s*", str(text))
        if not m:
            raise CartanTypeError(f"cannot parse Cartan type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.series}{self.rank}"


def _edges(t: CartanType):
    """Dynkin edges as (i, j, bond) with i the long end when bond > 1 (0-based)."""
    s, n = t.series, t.rank
    if s == "A":
        return [(i, i + 1, 1) for i in range(n - 1)]
    if s == "B":
        return [(i, i + 1, 1) for i in range(n - 2)] + [(n - 2, n - 1, 2)]
    if s == "C":
        return [(i, i + 1, 1) for i in range(n - 2)] + [(n - 1, n - 2, 2)]
    if s == "D":
        return [(i, i + 1, 1) for i in range(n - 2)] + [(n - 3, n - 1, 1)]
    if s == "E":
        # Bourbaki: 1-3-4-5-6-7-8 with node 2 attached to node 4
        chain = [0, 2] + list(range(3, n))
        return [(chain[k], chain[k + 1], 1) for k in range(len(chain) - 1)] + [(1, 3, 1)]
    if s == "F":
        return [(0, 1, 1), (1, 2, 2), (2, 3, 1)]
    if s == "G":
        return [(1, 0, 3)]
    raise CartanTypeError(s)


def cartan_matrix(t: CartanType) -> tuple:
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, bond in _edges(t):
        # i long, j short: <delta_j, delta_i^vee> = -1, <delta_i, delta_j^vee> = -bond
        a[i][j] = -1
        a[j][i] = -bond
    return tuple(tuple(row) for row in a)


def _root_lengths(a) -> tuple:
    """Squared lengths d_i of the simple roots, scaled so the shortest is 1."""
    n = len(a)
    d = [None] * n
    d[0] = Fraction(1)
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(n):
            if j != i and a[i][j] != 0 and d[j] is None:
                # d_i a_ij = d_j a_ji
                d[j] = d[i] * a[i][j] / a[j][i]
                todo.append(j)
    m = min(d)
    return tuple(int(x / m) for x in d)


@dataclass(frozen=True)
class RootSystem:
    cartan_type: CartanType
    cartan_matrix: tuple
    simple_roots: tuple
    positive_roots: tuple
    highest_root: Root
    coxeter_number: int
    lengths: tuple            # squared lengths of simple roots, shortest = 1
    _index: dict = field(repr=False, compare=False)

    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    @cached_property
    def negative_roots(self) -> tuple:
        return tuple(neg(r) for r in self.positive_roots)

    @cached_property
    def roots(self) -> tuple:
        return self.positive_roots + self.negative_roots

    def index(self, r) -> int:
        """Position of ``r`` in :attr:`roots` (positive roots first)."""
        try:
            return self._index[tuple(r)]
        except KeyError:
            raise RootError(f"{tuple(r)} is not a root of {self.cartan_type}") from None

    def is_root(self, r) -> bool:
        return tuple(r) in self._index

    def height(self, r) -> int:
        return height(r)

    def pairing(self, r, i: int) -> int:
        """<r, delta_i^vee>."""
        if not 0 <= i < self.rank:
            raise IndexError(f"simple index {i} out of range for rank {self.rank}")
        row = self.cartan_matrix[i]
        return sum(c * row[j] for j, c in enumerate(r))

    def inner(self, x, y) -> Fraction:
        """W-invariant form, normalised so short roots have squared length 1."""
        a, d = self.cartan_matrix, self.lengths
        n = self.rank
        s = Fraction(0)
        for i in range(n):
            if x[i]:
                for j in range(n):
                    if y[j]:
                        s += Fraction(x[i] * y[j] * d[i] * a[i][j], 2)
        return s

    def norm2(self, r) -> int:
        v = self.inner(r, r)
        assert v.denominator == 1
        return int(v)

    def coroot_pairing(self, r, a) -> int:
        """<r, a^vee> for an arbitrary root a."""
        v = 2 * self.inner(r, a) / self.inner(a, a)
        assert v.denominator == 1
        return int(v)

    def coroot_coords(self, a) -> tuple:
        """Coordinates of a^vee in the basis of simple coroots."""
        na = self.norm2(a)
        out = []
        for i, c in enumerate(a):
            v = Fraction(c * self.lengths[i], na)
            assert v.denominator == 1
            out.append(int(v))
        return tuple(out)

    def root_string(self, a, b) -> tuple:
        """(p, q) with p, q maximal such that b - p a and b + q a are roots."""
        a, b = tuple(a), tuple(b)
        self.index(a)
        self.index(b)
        if b == a or b == neg(a):
            raise RootError("root string undefined for b = +-a")
        p = 0
        while self.is_root(add(b, scale(a, -(p + 1)))):
            p += 1
        q = 0
        while self.is_root(add(b, scale(a, q + 1))):
            q += 1
        return p, q

    def reflect(self, a, r) -> Root:
        """s_a(r) = r - <r, a^vee> a."""
        return add(tuple(r), scale(tuple(a), -self.coroot_pairing(r, a)))

    def simple_reflect(self, i: int, r) -> Root:
        k = self.pairing(r, i)
        r = list(r)
        r[i] -= k
        return tuple(r)

    def apply_word(self, word, r) -> Root:
        """s_{i_1} ... s_{i_k}(r) for a word of 0-based simple indices."""
        for i in reversed(word):
            r = self.simple_reflect(i, r)
        return tuple(r)

    def is_positive(self, r) -> bool:
        return all(c >= 0 for c in r) and any(r)

    def summable(self, a, b) -> bool:
        return self.is_root(add(a, b))


def height(r) -> int:
    return sum(r)


def add(x, y) -> Root:
    return tuple(a + b for a, b in zip(x, y))


def scale(x, k: int) -> Root:
    return tuple(k * a for a in x)


def neg(x) -> Root:
    return tuple(-a for a in x)


def _positive_roots(a) -> list:
    n = len(a)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    level = list(simple)
    out = list(simple)
    while level:
        nxt = []
        for r in level:
            for i in range(n):
                s = simple[i]
                p = 0
                while True:
                    cand = add(r, scale(s, -(p + 1)))
                    if cand in found:
                        p += 1
                    else:
                        break
                pair = sum(r[j] * a[i][j] for j in range(n))
                q = p - pair
                if q > 0:
                    up = add(r, s)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        nxt.sort()
        out.extend(nxt)
        level = nxt
    return out


def build_root_system(t) -> RootSystem:
    if isinstance(t, str):
        t = CartanType.parse(t)
    a = cartan_matrix(t)
    pos = _positive_roots(a)
    pos.sort(key=lambda r: (height(r), neg(r)))
    theta = pos[-1]
    tops = [r for r in pos if height(r) == height(theta)]
    if len(tops) != 1:
        raise RootError("highest root is not unique")  # cannot happen for irreducible types
    simple = tuple(tuple(int(i == j) for j in range(t.rank)) for i in range(t.rank))
    allr = tuple(pos) + tuple(neg(r) for r in pos)
    return RootSystem(
        cartan_type=t,
        cartan_matrix=a,
        simple_roots=simple,
        positive_roots=tuple(pos),
        highest_root=theta,
        coxeter_number=1 + height(theta),
        lengths=_root_lengths(a),
        _index={r: k for k, r in enumerate(allr)},
    )


def expected_positive_count(t: CartanType) -> int:
    n = t.rank
    return {
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
        "E": {6: 36, 7: 63, 8: 120}.get(n),
        "F": 24,
        "G": 6,
    }[t.series]


def format_root(r) -> str:
    return "(" + ",".join(str(c) for c in r) + ")"
