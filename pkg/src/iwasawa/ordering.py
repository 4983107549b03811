"""Reduced words for w0, Papi's compatible orderings of the positive roots, and
the ordered generator table with valuations and integer weights.

Simple-reflection indices in words are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import islice

from .roots import RootSystem, add, format_root, height, neg, scale


class NotReducedError(ValueError):
    pass


def _is_ascent(rs: RootSystem, prefix, i) -> bool:
    """l(w s_i) > l(w) iff w(delta_i) > 0."""
    return rs.is_positive(rs.apply_word(prefix, rs.simple_roots[i]))


def longest_word(rs: RootSystem) -> tuple:
    """Greedy reduced word for w0: always append the smallest ascent."""
    word = []
    while True:
        for i in range(rs.rank):
            if _is_ascent(rs, word, i):
                word.append(i)
                break
        else:
            return tuple(word)


def reduced_words(rs: RootSystem, limit=None):
    """Yield distinct reduced words of w0 in lexicographic order (the first is :func:`longest_word`)."""
    n_pos = len(rs.positive_roots)

    def rec(prefix):
        if len(prefix) == n_pos:
            yield tuple(prefix)
            return
        for i in range(rs.rank):
            if _is_ascent(rs, prefix, i):
                prefix.append(i)
                yield from rec(prefix)
                prefix.pop()

    gen = rec([])
    return list(gen if limit is None else islice(gen, limit))


def papi_order(rs: RootSystem, word=None) -> tuple:
    """sigma_j = s_{i_1} ... s_{i_{j-1}}(delta_{i_j}) for a reduced word of w0."""
    if word is None:
        word = longest_word(rs)
    word = tuple(word)
    if any(not 0 <= i < rs.rank for i in word):
        raise NotReducedError(f"word {word} uses an index outside 0..{rs.rank - 1}")
    out = []
    seen = set()
    for j, i in enumerate(word):
        s = rs.apply_word(word[:j], rs.simple_roots[i])
        if not rs.is_positive(s) or s in seen:
            raise NotReducedError(f"word {word} is not reduced at position {j}")
        seen.add(s)
        out.append(s)
    if len(out) != len(rs.positive_roots):
        raise NotReducedError(
            f"word {word} has length {len(out)}, w0 has length {len(rs.positive_roots)}"
        )
    return tuple(out)


@dataclass
class OrderCheck:
    passed: bool
    witness: object = None
    pairs_checked: int = 0


def verify_compatible(rs: RootSystem, order) -> OrderCheck:
    """Check both compatibility conditions and the strengthened between-ness.

    Strengthened form: for lam before mu and i, j > 0 with i*mu + j*lam a
    positive root, that root sits strictly between lam and mu.
    """
    order = [tuple(r) for r in order]
    pos = {r: k for k, r in enumerate(order)}
    checked = 0
    for lam in order:
        for mu in order:
            if pos[lam] >= pos[mu]:
                continue
            s = add(lam, mu)
            if rs.is_root(s):
                checked += 1
                if s not in pos:
                    return OrderCheck(False, ("(1) sum missing", lam, mu), checked)
                if not pos[lam] < pos[s] < pos[mu]:
                    return OrderCheck(False, ("(1) not between", lam, mu), checked)
            for i in range(1, 4):
                for j in range(1, 4):
                    g = add(scale(mu, i), scale(lam, j))
                    if rs.is_root(g) and rs.is_positive(g):
                        checked += 1
                        if g not in pos or not pos[lam] < pos[g] < pos[mu]:
                            return OrderCheck(False, ("strengthened", lam, mu, (i, j)), checked)
    # (2): a decomposition of an element of S has a summand in S preceding it
    for xi in order:
        for lam in rs.positive_roots:
            mu = add(xi, neg(lam))
            if not (rs.is_root(mu) and rs.is_positive(mu)):
                continue
            checked += 1
            before = [r for r in (lam, mu) if r in pos and pos[r] < pos[xi]]
            if not before:
                return OrderCheck(False, ("(2)", lam, mu), checked)
    return OrderCheck(True, None, checked)


# ---------------------------------------------------------------------------
# generator table

@dataclass(frozen=True)
class Generator:
    index: int
    kind: str        # "U", "W" or "V"
    root: tuple      # the root for U/V; the simple root for W
    simple: int      # simple-root index for W, else -1
    omega: Fraction
    weight: int

    @property
    def label(self) -> str:
        if self.kind == "W":
            return f"W{self.simple + 1}"
        return f"{self.kind}{format_root(self.root)}"


@dataclass(frozen=True)
class GeneratorTable:
    root_system: RootSystem
    order: tuple          # compatible order of the positive roots
    generators: tuple
    word: tuple = ()

    @property
    def d(self) -> int:
        return len(self.generators)

    @property
    def h(self) -> int:
        return self.root_system.coxeter_number

    @property
    def weights(self) -> tuple:
        return tuple(g.weight for g in self.generators)

    def __len__(self):
        return len(self.generators)

    def __getitem__(self, i) -> Generator:
        return self.generators[i]

    def U(self, beta) -> int:
        return self._lookup[("U", tuple(beta))]

    def V(self, alpha) -> int:
        return self._lookup[("V", tuple(alpha))]

    def W(self, i) -> int:
        return self._lookup[("W", i)]

    @cached_property
    def _lookup(self):
        return {(g.kind, g.simple if g.kind == "W" else g.root): g.index for g in self.generators}

    def weight_of(self, word) -> int:
        w = self.weights
        return sum(w[i] for i in word)

    def labels(self, word) -> str:
        return " ".join(self.generators[i].label for i in word) or "1"

    def to_dict(self) -> list:
        return [
            {
                "index": g.index,
                "kind": g.kind,
                "root": list(g.root),
                "label": g.label,
                "omega": f"{g.omega.numerator}/{g.omega.denominator}",
                "weight": g.weight,
            }
            for g in self.generators
        ]


def generator_table(rs: RootSystem, order=None, word=None) -> GeneratorTable:
    """Ordered basis: U_beta (beta < 0, increasing height, lex tie-break), W_delta, V_alpha."""
    if order is None:
        word = tuple(word) if word is not None else longest_word(rs)
        order = papi_order(rs, word)
    chk = verify_compatible(rs, order)
    if not chk.passed:
        raise ValueError(f"ordering is not compatible: {chk.witness}")
    h = rs.coxeter_number
    gens = []
    for b in sorted(rs.negative_roots, key=lambda r: (height(r), r)):
        gens.append(("U", b, -1, 1 + Fraction(height(b), h), h + height(b)))
    for i, d in enumerate(rs.simple_roots):
        gens.append(("W", d, i, Fraction(1), h))
    for a in order:
        gens.append(("V", tuple(a), -1, Fraction(height(a), h), height(a)))
    table = tuple(Generator(k, *g) for k, g in enumerate(gens))
    return GeneratorTable(rs, tuple(tuple(a) for a in order), table, tuple(word or ()))
