"""Truncated noncommutative power series over Z/p^K with a weighted-degree filtration.

A word is a tuple of generator indices; the empty tuple is the unit.  Every
generator carries a positive integer weight, and an :class:`NCPoly` keeps only
words of total weight at most its truncation bound, i.e. it lives in the
quotient by ``Fil^{bound+1}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import factorial

from .errors import PrecisionError


@dataclass(frozen=True)
class Context:
    """Coefficient ring Z/p^K together with generator weights and a truncation bound."""

    p: int
    K: int
    weights: tuple
    bound: int

    @property
    def modulus(self) -> int:
        return self.p ** self.K

    def weight(self, word) -> int:
        w = self.weights
        return sum(w[i] for i in word)

    def with_precision(self, K) -> "Context":
        return Context(self.p, K, self.weights, self.bound)

    def with_bound(self, bound) -> "Context":
        return Context(self.p, self.K, self.weights, bound)

    def describe(self) -> dict:
        return {"p": self.p, "precision": self.K, "bound": self.bound, "weights": list(self.weights)}


def word_key(word):
    """Stable order: length first, then lexicographic."""
    return len(word), word


class NCPoly:
    """Element of Z/p^K<<X_1..X_d>> modulo Fil^{bound+1}. Treat as immutable."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: Context, terms=None):
        self.ctx = ctx
        mod = ctx.modulus
        out = {}
        if terms:
            for w, c in terms.items():
                w = tuple(w)
                c %= mod
                if c and ctx.weight(w) <= ctx.bound:
                    out[w] = c
        self.terms = out

    @classmethod
    def one(cls, ctx):
        return cls(ctx, {(): 1})

    @classmethod
    def zero(cls, ctx):
        return cls(ctx)

    @classmethod
    def gen(cls, ctx, i, coeff=1):
        return cls(ctx, {(i,): coeff})

    @classmethod
    def word(cls, ctx, w, coeff=1):
        return cls(ctx, {tuple(w): coeff})

    def _check(self, other):
        if not isinstance(other, NCPoly):
            raise TypeError(f"cannot combine NCPoly with {type(other).__name__}")
        if other.ctx != self.ctx:
            raise ValueError(f"ring mismatch: {self.ctx.describe()} vs {other.ctx.describe()}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return NCPoly(self.ctx, out)

    def __neg__(self):
        return NCPoly(self.ctx, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return NCPoly(self.ctx, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return mul(self, other)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        if not self.terms:
            return "NCPoly(0)"
        parts = [f"{c}*{list(w)}" for w, c in sorted(self.terms.items(), key=lambda kv: word_key(kv[0]))]
        return "NCPoly(" + " + ".join(parts) + ")"

    def coefficient(self, word) -> int:
        return self.terms.get(tuple(word), 0)

    def constant_term(self) -> int:
        return self.terms.get((), 0)

    def homogeneous_part(self, n):
        w = self.ctx.weight
        return NCPoly(self.ctx, {k: c for k, c in self.terms.items() if w(k) == n})

    def reduce_mod_p(self) -> "NCPoly":
        return self.change_precision(1)

    def change_precision(self, K) -> "NCPoly":
        return NCPoly(self.ctx.with_precision(K), self.terms)

    def to_json(self) -> dict:
        items = sorted(self.terms.items(), key=lambda kv: word_key(kv[0]))
        return {
            "ring": {"p": self.ctx.p, "precision": self.ctx.K},
            "bound": self.ctx.bound,
            "terms": [{"word": list(w), "coeff": c} for w, c in items],
        }

    @classmethod
    def from_json(cls, data, weights) -> "NCPoly":
        ctx = Context(data["ring"]["p"], data["ring"]["precision"], tuple(weights), data["bound"])
        return cls(ctx, {tuple(t["word"]): t["coeff"] for t in data["terms"]})

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))


def weighted_degree(word, weights) -> int:
    return sum(weights[i] for i in word)


def mul(f: NCPoly, g: NCPoly) -> NCPoly:
    """Concatenation product, dropping words above the truncation bound."""
    f._check(g)
    ctx = f.ctx
    wt = ctx.weight
    bound = ctx.bound
    mod = ctx.modulus
    gw = [(w, c, wt(w)) for w, c in g.terms.items()]
    out = {}
    for w1, c1 in f.terms.items():
        k1 = wt(w1)
        if k1 > bound:
            continue
        for w2, c2, k2 in gw:
            if k1 + k2 <= bound:
                key = w1 + w2
                out[key] = (out.get(key, 0) + c1 * c2) % mod
    return NCPoly(ctx, out)


def reduce_mod_fil(f: NCPoly, n: int) -> NCPoly:
    """Drop every word of weight > n (work modulo Fil^{n+1})."""
    if n >= f.ctx.bound:
        return f
    return NCPoly(f.ctx.with_bound(n), f.terms)


def product(factors, ctx) -> NCPoly:
    out = NCPoly.one(ctx)
    for x in factors:
        out = out * x
    return out


# ---------------------------------------------------------------------------
# p-adic arithmetic

def vp(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("v_p(0) is infinite")
    n = abs(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def sp(n: int, p: int) -> int:
    """Base-p digit sum."""
    s = 0
    while n:
        n, r = divmod(n, p)
        s += r
    return s


def vp_factorial(n: int, p: int) -> int:
    """v_p(n!) = (n - s_p(n)) / (p - 1)."""
    return (n - sp(n, p)) // (p - 1)


def vp_and_sp(n: int, p: int) -> tuple:
    if n < 1:
        raise ValueError("n must be positive")
    return vp(n, p), sp(n, p)


@dataclass(frozen=True)
class PadicScalar:
    """An element of Z_p known modulo p^precision."""

    residue: int
    precision: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "residue", self.residue % self.p ** self.precision)

    @classmethod
    def from_int(cls, x, p, precision):
        return cls(x, precision, p)

    @classmethod
    def one_plus_p_power(cls, k, p, precision):
        """(1 + p)^k for any integer k (negative powers via the modular inverse)."""
        mod = p ** precision
        return cls(pow(1 + p, k, mod), precision, p)

    def __add__(self, other):
        if not isinstance(other, PadicScalar) or other.p != self.p:
            return NotImplemented
        prec = min(self.precision, other.precision)
        return PadicScalar(self.residue + other.residue, prec, self.p)

    def to_int(self) -> int:
        return self.residue


def binom_padic(M: PadicScalar, m: int, K: int) -> int:
    """C(M, m) mod p^K, computed exactly from M known mod p^(K + v_p(m!))."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return 1 % (M.p ** K)
    p = M.p
    v = vp_factorial(m, p)
    need = K + v
    if M.precision < need:
        raise PrecisionError(
            f"C(M, {m}) mod {p}^{K} needs M to precision {need}, have {M.precision}"
        )
    mod = p ** need
    num = 1
    for k in range(m):
        num = num * (M.residue - k) % mod
    f = factorial(m)
    unit = f // p ** v
    assert num % p ** v == 0
    return (num // p ** v) * pow(unit, -1, p ** K) % p ** K


def one_plus_pow(i: int, M: PadicScalar, ctx: Context) -> NCPoly:
    """(1 + X_i)^M = sum_m C(M, m) X_i^m, truncated at the ctx bound."""
    w = ctx.weights[i]
    terms = {}
    m = 0
    while m * w <= ctx.bound:
        terms[(i,) * m] = binom_padic(M, m, ctx.K)
        m += 1
    return NCPoly(ctx, terms)


def working_precision(K: int, N: int, p: int) -> int:
    """Precision that keeps every binomial with m <= N exact mod p^K."""
    return K + N // (p - 1) + 1
