"""Chevalley basis, commutator constants and exact checks of the group relations.

Structure constants follow the extraspecial-pair convention: positive roots
are totally ordered by (height, reversed coordinates) as in
:func:`iwasawa.roots.build_root_system`; for every non-simple positive root the
extraspecial pair gets ``N = +(p + 1)``, everything else is forced by the
standard identities together with ``N(-a, -b) = -N(a, b)``.

Group elements are modelled in the adjoint representation, where
``x_a(t) = exp(t ad e_a)`` is a polynomial matrix because ``ad e_a`` is
nilpotent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

import numpy as np

from .errors import ConsistencyError, RootError
from .polymatrix import PolyMatrix, _normalise, determinant
from .roots import RootSystem, add, neg, scale

SIGN_CONVENTION = "extraspecial-pairs:+(p+1);order=height,reverse-lex;N(-a,-b)=-N(a,b)"

#: Full Jacobi check is skipped above this adjoint dimension unless forced.
JACOBI_AUTO_LIMIT = 80


def _structure_constants(rs: RootSystem) -> dict:
    pos = rs.positive_roots
    rank_of = {r: k for k, r in enumerate(pos)}
    norm = {r: rs.inner(r, r) for r in rs.roots}
    npos = {}

    def n_any(a, b):
        s = add(a, b)
        if not rs.is_root(s):
            return 0
        pa, pb = rs.is_positive(a), rs.is_positive(b)
        if pa and pb:
            return npos[(a, b)]
        if not pa and not pb:
            return -npos[(neg(a), neg(b))]
        c = neg(s)
        # a + b + c = 0: N(a,b)/|c|^2 = N(b,c)/|a|^2 = N(c,a)/|b|^2
        if rs.is_positive(b) == rs.is_positive(c):
            v = norm[c] / norm[a] * n_any(b, c)
        else:
            v = norm[c] / norm[b] * n_any(c, a)
        assert v.denominator == 1
        return int(v)

    for xi in pos:
        special = [
            (a, add(xi, neg(a)))
            for a in pos
            if rs.is_root(add(xi, neg(a)))
            and rs.is_positive(add(xi, neg(a)))
            and rank_of[a] < rank_of[add(xi, neg(a))]
        ]
        if not special:
            continue
        special.sort(key=lambda pr: rank_of[pr[0]])
        g, d = special[0]
        npos[(g, d)] = rs.root_string(g, d)[0] + 1
        npos[(d, g)] = -npos[(g, d)]
        ng, nd = neg(g), neg(d)
        for a, b in special[1:]:
            total = Fraction(0)
            if rs.is_root(add(b, ng)):
                total += Fraction(n_any(b, ng) * n_any(a, nd)) / norm[add(b, ng)]
            if rs.is_root(add(a, ng)):
                total += Fraction(n_any(ng, a) * n_any(b, nd)) / norm[add(a, ng)]
            v = norm[xi] * total / npos[(g, d)]
            assert v.denominator == 1, (a, b, v)
            npos[(a, b)] = int(v)
            npos[(b, a)] = -int(v)

    table = {}
    for a in rs.roots:
        for b in rs.roots:
            if rs.is_root(add(a, b)):
                table[(a, b)] = n_any(a, b)
    return table


@dataclass(frozen=True)
class ChevalleyBasis:
    """Chevalley basis {e_a : a in Phi} u {h_i} of the split Lie algebra.

    Basis vectors are indexed as ``rs.index(a)`` for ``e_a`` and
    ``len(rs.roots) + i`` for ``h_i``.
    """

    root_system: RootSystem
    structure_constants: dict
    sign_convention: str = SIGN_CONVENTION
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def dim(self) -> int:
        rs = self.root_system
        return len(rs.roots) + rs.rank

    def N(self, a, b) -> int:
        return self.structure_constants.get((tuple(a), tuple(b)), 0)

    def e(self, a) -> int:
        return self.root_system.index(a)

    def h(self, i) -> int:
        return len(self.root_system.roots) + i

    def bracket(self, x: int, y: int) -> dict:
        """[b_x, b_y] for basis indices, as {index: coefficient}."""
        rs = self.root_system
        nr = len(rs.roots)
        if x >= nr and y >= nr:
            return {}
        if x >= nr:
            out = self.bracket(y, x)
            return {k: -v for k, v in out.items()}
        a = rs.roots[x]
        if y >= nr:
            k = -rs.pairing(a, y - nr)
            return {x: k} if k else {}
        b = rs.roots[y]
        if b == neg(a):
            return {nr + i: m for i, m in enumerate(rs.coroot_coords(a)) if m}
        s = add(a, b)
        if rs.is_root(s):
            return {rs.index(s): self.N(a, b)}
        return {}

    def ad(self, x: int) -> np.ndarray:
        key = ("ad", x)
        if key not in self._cache:
            m = np.zeros((self.dim, self.dim), dtype=np.int64)
            for y in range(self.dim):
                for k, v in self.bracket(x, y).items():
                    m[k, y] = v
            m.setflags(write=False)
            self._cache[key] = m
        return self._cache[key]

    def ad_root(self, a) -> np.ndarray:
        return self.ad(self.e(a))

    def check_jacobi(self):
        """Return the first basis pair (x, y) with ad[x,y] != [ad x, ad y], or None."""
        for x in range(self.dim):
            ax = self.ad(x)
            for y in range(x + 1, self.dim):
                ay = self.ad(y)
                lhs = np.zeros((self.dim, self.dim), dtype=np.int64)
                for k, v in self.bracket(x, y).items():
                    lhs = lhs + v * self.ad(k)
                if not np.array_equal(lhs, ax @ ay - ay @ ax):
                    return x, y
        return None


def build_chevalley_basis(rs: RootSystem, verify="auto") -> ChevalleyBasis:
    cb = ChevalleyBasis(rs, _structure_constants(rs))
    for (a, b), n in cb.structure_constants.items():
        p = rs.root_string(a, b)[0]
        if abs(n) != p + 1:
            raise ConsistencyError(f"|N{a, b}| = {abs(n)} but p + 1 = {p + 1}")
    if verify is True or (verify == "auto" and cb.dim <= JACOBI_AUTO_LIMIT):
        bad = cb.check_jacobi()
        if bad is not None:
            raise ConsistencyError(f"Jacobi identity fails on basis pair {bad}")
    return cb


# ---------------------------------------------------------------------------
# group elements in the adjoint representation

_VARS = {"t": (1, 0), "u": (0, 1)}


def adjoint_exp(cb: ChevalleyBasis, a, t="t", scalar=1) -> PolyMatrix:
    """x_a(s) = exp(s ad e_a) with s = scalar * t (t a formal variable or a number)."""
    x = cb.ad_root(a)
    if isinstance(t, str):
        return PolyMatrix.exp_nilpotent(x, _VARS[t], scalar)
    return PolyMatrix.exp_nilpotent(x, (0, 0), Fraction(t) * Fraction(scalar))


def _x(cb, a, monomial, scalar) -> PolyMatrix:
    return PolyMatrix.exp_nilpotent(cb.ad_root(a), monomial, scalar)


def torus_adjoint(cb: ChevalleyBasis, coords, v) -> np.ndarray:
    """Adjoint action of prod_i h_{delta_i}(v)^{coords[i]}: diagonal, e_g -> v^<g, .> e_g."""
    rs = cb.root_system
    v = Fraction(v)
    diag = []
    for g in rs.roots:
        k = sum(c * rs.pairing(g, i) for i, c in enumerate(coords))
        diag.append(v ** k)
    diag.extend([Fraction(1)] * rs.rank)
    m = np.zeros((cb.dim, cb.dim), dtype=object)
    for i, x in enumerate(diag):
        m[i, i] = x
    return m


def steinberg_h(cb: ChevalleyBasis, a, v) -> np.ndarray:
    """h_a(v) = w_a(v) w_a(1)^{-1} with w_a(v) = x_a(v) x_{-a}(-1/v) x_a(v), evaluated exactly."""
    v = Fraction(v)

    def w(s):
        return (
            adjoint_exp(cb, a, s).evaluate(0)
            .dot(adjoint_exp(cb, neg(a), -1 / s).evaluate(0))
            .dot(adjoint_exp(cb, a, s).evaluate(0))
        )

    # w_a(1)^{-1} = w_a(-1)
    w1_inv = w(Fraction(-1)).astype(object)
    return w(v).astype(object).dot(w1_inv)


def _factor_order(rs, a, b):
    pairs = []
    for i in range(1, 5):
        for j in range(1, 5):
            g = add(scale(a, i), scale(b, j))
            if rs.is_root(g):
                pairs.append((i, j))
    pairs.sort(key=lambda ij: (ij[0] + ij[1], ij[0]))
    return pairs


def commutator_constants(cb: ChevalleyBasis, a, b) -> dict:
    """c_ij with [x_a(t), x_b(u)] = prod_{i,j>0} x_{ia+jb}(c_ij t^i u^j).

    The product runs over increasing i + j (then i).  Constants are read off
    the exact commutator matrix one total degree at a time.
    """
    rs = cb.root_system
    a, b = tuple(a), tuple(b)
    if add(a, b) == tuple(0 for _ in a):
        raise RootError("commutator constants are undefined for b = -a")
    key = ("comm", a, b)
    if key in cb._cache:
        return dict(cb._cache[key])
    comm = (
        _x(cb, a, (1, 0), 1) @ _x(cb, b, (0, 1), 1) @ _x(cb, a, (1, 0), -1) @ _x(cb, b, (0, 1), -1)
    )
    order = _factor_order(rs, a, b)
    table = {}
    rest = comm
    for deg in sorted({i + j for i, j in order}):
        for i, j in [ij for ij in order if sum(ij) == deg]:
            g = add(scale(a, i), scale(b, j))
            adg = cb.ad_root(g)
            coeff = rest.coefficient(i, j)
            r, c = (int(k) for k in np.argwhere(adg != 0)[0])
            val = Fraction(int(coeff[r, c]), int(adg[r, c]))
            if val.denominator != 1 or not np.array_equal(coeff, adg * int(val)):
                raise ConsistencyError(f"t^{i} u^{j} part of [x_{a}, x_{b}] is not a multiple of ad e_{g}")
            if val:
                table[(i, j)] = int(val)
        for i, j in [ij for ij in order if sum(ij) == deg]:
            if (i, j) in table:
                g = add(scale(a, i), scale(b, j))
                rest = _x(cb, g, (i, j), -table[(i, j)]) @ rest
        for (x, y) in rest.terms:
            if 0 < x + y <= deg:
                raise ConsistencyError(f"unexpected t^{x} u^{y} term in [x_{a}, x_{b}]")
    if rest != PolyMatrix.identity(cb.dim):
        raise ConsistencyError(f"commutator of x_{a}, x_{b} not exhausted by root factors")
    cb._cache[key] = dict(table)
    return table


# ---------------------------------------------------------------------------
# verification

@dataclass
class CheckResult:
    name: str
    instance: str
    passed: bool
    witness: object = None

    def to_dict(self):
        w = self.witness
        return {"name": self.name, "instance": self.instance, "passed": bool(self.passed),
                "witness": None if w is None else str(w)}


EVAL_POINTS = (2, 3, 5, 7, 11)


def _compare(name, inst, lhs: PolyMatrix, rhs: PolyMatrix):
    diff = lhs.first_difference(rhs)
    return CheckResult(name, inst, diff is None, diff)


def verify_group_relation(cb: ChevalleyBasis, which: str, a=None, b=None, points=EVAL_POINTS) -> CheckResult:
    """Exact check of one Chevalley group relation instance.

    ``Diag``: a, b roots, with h_a built from w_a and compared for commutation.
    ``Diag-uni``: a a simple index or root (torus side), b a root.
    ``Uni-1``, ``Uni-2``: ordered root pairs.
    ``Uni-3``: a a positive root, b the prime p.
    """
    rs = cb.root_system
    if which == "Diag":
        a, b = tuple(a), tuple(b)
        inst = f"h{a}, h{b}"
        for v in points[:3]:
            for w in points[:3]:
                x = steinberg_h(cb, a, v)
                y = steinberg_h(cb, b, w)
                if not np.all(x.dot(y) == y.dot(x)):
                    return CheckResult(which, inst, False, (v, w))
        return CheckResult(which, inst, True)
    if which == "Diag-uni":
        coords = rs.coroot_coords(rs.simple_roots[a]) if isinstance(a, int) else rs.coroot_coords(tuple(a))
        b = tuple(b)
        k = sum(c * rs.pairing(b, i) for i, c in enumerate(coords))
        inst = f"h{a if isinstance(a, int) else tuple(a)}, x{b}"
        xu = adjoint_exp(cb, b, "u")
        for v in points:
            d = torus_adjoint(cb, coords, v)
            dinv = torus_adjoint(cb, coords, 1 / Fraction(v))
            conj = PolyMatrix(cb.dim, {key: d.dot(m.astype(object)).dot(dinv) for key, m in xu.terms.items()})
            rhs = adjoint_exp(cb, b, "u", Fraction(v) ** k)
            res = _compare(which, inst, conj, rhs)
            if not res.passed:
                res.witness = (v, res.witness)
                return res
        return CheckResult(which, inst, True)
    if which == "Uni-1":
        a, b = tuple(a), tuple(b)
        s = add(a, b)
        if not any(s) or rs.is_root(s):
            raise RootError("Uni-1 needs a + b != 0 and a + b not a root")
        xa, xb = adjoint_exp(cb, a, "t"), adjoint_exp(cb, b, "u")
        return _compare(which, f"x{a}, x{b}", xa @ xb, xb @ xa)
    if which == "Uni-2":
        a, b = tuple(a), tuple(b)
        if not rs.is_root(add(a, b)):
            raise RootError("Uni-2 needs a + b to be a root")
        inst = f"x{a}, x{b}"
        table = commutator_constants(cb, a, b)
        factors = [(add(scale(a, i), scale(b, j)), (i, j), c) for (i, j), c in
                   sorted(table.items(), key=lambda kv: (sum(kv[0]), kv[0][0]))]
        xa, xb = adjoint_exp(cb, a, "t"), adjoint_exp(cb, b, "u")
        rhs = PolyMatrix.identity(cb.dim)
        for g, mono, c in factors:
            rhs = rhs @ _x(cb, g, mono, c)
        rhs = rhs @ xb @ xa
        res = _compare(which, inst, xa @ xb, rhs)
        if not res.passed:
            return res
        # independent pointwise route: evaluate every factor before multiplying
        for t in points:
            u = points[(points.index(t) + 2) % len(points)] - 1
            left = adjoint_exp(cb, a, t).evaluate(0).dot(adjoint_exp(cb, b, u).evaluate(0))
            right = np.identity(cb.dim, dtype=np.int64)
            for g, (i, j), c in factors:
                right = right.dot(adjoint_exp(cb, g, c * t ** i * u ** j).evaluate(0))
            right = right.dot(adjoint_exp(cb, b, u).evaluate(0)).dot(adjoint_exp(cb, a, t).evaluate(0))
            if not np.array_equal(left, right):
                return CheckResult(which, inst, False, ("point", t, u))
        return CheckResult(which, inst, True)
    if which == "Uni-3":
        a, p = tuple(a), int(b)
        q = Fraction(1, 1 + p)
        lhs = adjoint_exp(cb, a, 1).evaluate(0).astype(object).dot(adjoint_exp(cb, neg(a), p).evaluate(0))
        h = torus_adjoint(cb, rs.coroot_coords(a), 1 + p)
        rhs = (adjoint_exp(cb, neg(a), p * q).evaluate(0).astype(object)
               .dot(h).dot(adjoint_exp(cb, a, q).evaluate(0).astype(object)))
        ok = np.all(lhs == rhs)
        return CheckResult(which, f"x{a}(1) x{neg(a)}({p})", bool(ok))
    raise ValueError(f"unknown relation {which!r}")


def torus_factorisation_matches(cb: ChevalleyBasis, a, coords, points=EVAL_POINTS[:3]) -> bool:
    """Does h_a(v) (Steinberg construction) equal prod_i h_{delta_i}(v)^{coords[i]}?"""
    for v in points:
        if not np.all(steinberg_h(cb, a, v) == torus_adjoint(cb, coords, v)):
            return False
    return True


def relation_instances(rs: RootSystem):
    """All (which, a, b) instances of Diag-uni, Uni-1 and Uni-2 for a root system."""
    out = []
    for i in range(rs.rank):
        for b in rs.roots:
            out.append(("Diag-uni", i, b))
    for a in rs.roots:
        for b in rs.roots:
            s = add(a, b)
            if not any(s):
                continue
            out.append(("Uni-2" if rs.is_root(s) else "Uni-1", a, b))
    return out


def adjoint_exp_checks(cb: ChevalleyBasis, a) -> bool:
    """Integrality, determinant one and the one-parameter-subgroup law for x_a."""
    xt = adjoint_exp(cb, a, "t")
    if not xt.is_integral():
        return False
    if determinant(adjoint_exp(cb, a, 3).evaluate(0)) != 1:
        return False
    xu = adjoint_exp(cb, a, "u")
    # x_a(t + u) = sum_k (t + u)^k X^k / k!, expanded binomially
    x = cb.ad_root(a).astype(object)
    terms = {}
    power = np.identity(cb.dim, dtype=object)
    k = 0
    while np.any(power != 0):
        for i in range(k + 1):
            terms[(i, k - i)] = _normalise(power * Fraction(comb(k, i), factorial(k)))
        power = power.dot(x)
        k += 1
    return (xt @ xu) == PolyMatrix(cb.dim, terms)


# ---------------------------------------------------------------------------
# SL_2 identity behind Uni-3

def verify_uni3_sl2(p: int, k: int) -> CheckResult:
    """(1+E12)(1+pE21) = (1+pQ E21)((1+p)E11 + Q E22)(1+Q E12) mod p^k, Q = (1+p)^-1."""
    if p % 2 == 0 or k < 2:
        raise ValueError("need p odd and k >= 2")
    mod = p ** k
    q = pow(1 + p, -1, mod)

    def mul(x, y):
        return [[sum(x[i][l] * y[l][j] for l in range(2)) % mod for j in range(2)] for i in range(2)]

    lhs = mul([[1, 1], [0, 1]], [[1, 0], [p, 1]])
    rhs = mul(mul([[1, 0], [p * q % mod, 1]], [[1 + p, 0], [0, q]]), [[1, q], [0, 1]])
    ok = lhs == rhs
    return CheckResult("Uni-3-SL2", f"p={p}, k={k}", ok, None if ok else (lhs, rhs))


def verify_uni3_sl2_rational(p: int) -> bool:
    q = Fraction(1, 1 + p)

    def mul(x, y):
        return [[sum(x[i][l] * y[l][j] for l in range(2)) for j in range(2)] for i in range(2)]

    lhs = mul([[1, 1], [0, 1]], [[1, 0], [p, 1]])
    rhs = mul(mul([[1, 0], [p * q, 1]], [[1 + p, 0], [0, q]]), [[1, q], [0, 1]])
    return lhs == rhs
