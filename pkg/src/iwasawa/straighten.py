"""Graded straightening over F_p.

Each primed relation is read as a rewrite rule for an adjacent pair that is
out of order::

    X_a X_b  ->  X_b X_a + sum c_g X_g        (a > b in the generator table)

Applying rules until no adjacent descent remains yields a combination of
ordered (nondecreasing) words.  Swapping an adjacent descent lowers the
inversion count by one and every correction word is one letter shorter, so the
process terminates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import ConsistencyError, ResourceCapError
from .kernels import descents, first_descent, inversions, last_descent, rank_mod_p
from .ordering import GeneratorTable
from .presentation import build_presentation

STRATEGIES = ("leftmost", "rightmost", "random")
DEFAULT_WORD_CAP = 200_000


class GradedElement:
    """A homogeneous element of gr^n: F_p-combination of words of weight n."""

    __slots__ = ("p", "weight", "terms")

    def __init__(self, p, weight, terms=None):
        self.p = p
        self.weight = weight
        self.terms = {}
        for w, c in (terms or {}).items():
            c %= p
            if c:
                self.terms[tuple(w)] = c

    @classmethod
    def from_word(cls, gt: GeneratorTable, p, word, coeff=1):
        word = tuple(word)
        return cls(p, gt.weight_of(word), {word: coeff})

    def __add__(self, other):
        if self.p != other.p or (self.terms and other.terms and self.weight != other.weight):
            raise ValueError("graded elements of different weight or characteristic")
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return GradedElement(self.p, self.weight if self.terms else other.weight, out)

    def scale(self, c):
        return GradedElement(self.p, self.weight, {w: c * v for w, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, GradedElement):
            return NotImplemented
        return self.p == other.p and self.terms == other.terms and (not self.terms or self.weight == other.weight)

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def is_ordered(self) -> bool:
        return all(first_descent(w) < 0 for w in self.terms)

    def words(self):
        return sorted(self.terms, key=lambda w: (len(w), w))

    def format(self, gt: GeneratorTable) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in self.words():
            c = self.terms[w]
            parts.append(gt.labels(w) if c == 1 else f"{c}*{gt.labels(w)}")
        return " + ".join(parts)

    def __repr__(self):
        return f"GradedElement(weight={self.weight}, terms={dict(sorted(self.terms.items()))})"


@dataclass(frozen=True)
class TraceStep:
    word: tuple
    inversions: int
    rule: str
    position: int


@dataclass
class RewriteTrace:
    steps: list = field(default_factory=list)

    def decreasing(self) -> bool:
        inv = [s.inversions for s in self.steps]
        return all(x > y for x, y in zip(inv, inv[1:]))


@dataclass(frozen=True)
class Rule:
    source: str
    swap: tuple
    corrections: tuple     # ((gen, coeff mod p), ...)


class Rewriter:
    """Rewrite rules for one (type, p, ordering) together with a normal-form memo."""

    def __init__(self, table: GeneratorTable, primed, p: int):
        self.table = table
        self.p = p
        self.weights = table.weights
        rules = {}
        for pr in primed:
            a, b = pr.pair
            if a > b:
                key, corr = (a, b), pr.corrections
            elif a < b:
                key, corr = (b, a), tuple((g, -c % p) for g, c in pr.corrections)
            else:
                raise ConsistencyError(f"relation {pr.source} pairs a generator with itself")
            for g, _ in corr:
                if self.weights[g] != self.weights[a] + self.weights[b]:
                    raise ConsistencyError(f"{pr.source}{pr.pair}: correction {g} is not homogeneous")
            if key in rules:
                raise ConsistencyError(f"two relations for the pair {key}")
            rules[key] = Rule(pr.source, (key[1], key[0]), corr)
        d = table.d
        missing = [(a, b) for a in range(d) for b in range(a) if (a, b) not in rules]
        if missing:
            raise ConsistencyError(f"no rewrite rule for inverted pairs {missing[:5]}")
        self.rules = rules
        self._memo = {}

    @classmethod
    def for_type(cls, type_, p, word=None):
        pres = build_presentation(type_, p, word=word)
        return cls(pres.table, pres.primed, p)

    def element(self, word, coeff=1) -> GradedElement:
        return GradedElement.from_word(self.table, self.p, word, coeff)

    def _choose(self, word, strategy, rng):
        if strategy == "leftmost":
            return first_descent(word)
        if strategy == "rightmost":
            return last_descent(word)
        if strategy == "random":
            ds = descents(word)
            return rng.choice(ds) if ds else -1
        raise ValueError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")

    def _expand(self, word, i):
        a, b = word[i], word[i + 1]
        rule = self.rules[(a, b)]
        head, tail = word[:i], word[i + 2:]
        out = [(head + rule.swap + tail, 1)]
        out.extend((head + (g,) + tail, c) for g, c in rule.corrections)
        return rule, out

    def rewrite_step(self, word, strategy="leftmost", rng=None):
        """One rule application; returns the resulting GradedElement and a trace step."""
        word = tuple(word)
        i = self._choose(word, strategy, rng)
        if i < 0:
            raise ValueError("word is already ordered")
        rule, out = self._expand(word, i)
        n = self.table.weight_of(word)
        res = GradedElement(self.p, n)
        for w, c in out:
            res.terms[w] = (res.terms.get(w, 0) + c) % self.p
        res.terms = {w: c for w, c in res.terms.items() if c}
        return res, TraceStep(word, inversions(word), rule.source, i)

    def _nf_word(self, word, strategy, rng, memo):
        # explicit stack; a word is finished once all its rewrite targets are
        stack = [word]
        p = self.p
        chosen = {}
        while stack:
            w = stack[-1]
            if w in memo:
                stack.pop()
                continue
            i = chosen.get(w)
            if i is None:
                i = chosen[w] = self._choose(w, strategy, rng)
            if i < 0:
                memo[w] = {w: 1}
                stack.pop()
                continue
            _, out = self._expand(w, i)
            pending = [x for x, _ in out if x not in memo]
            if pending:
                stack.extend(pending)
                continue
            res = {}
            for x, c in out:
                for y, e in memo[x].items():
                    res[y] = (res.get(y, 0) + c * e) % p
            memo[w] = {y: e for y, e in res.items() if e}
            stack.pop()
        return memo[word]

    def normal_form(self, x, strategy="leftmost", seed=None) -> GradedElement:
        """Normal-order a word or a GradedElement.

        The leftmost strategy shares a memo across calls.  Other strategies
        use a fresh memo per call so their choices do not leak into each other.
        """
        if not isinstance(x, GradedElement):
            x = self.element(x)
        if strategy == "leftmost":
            memo, rng = self._memo, None
        else:
            memo, rng = {}, random.Random(seed)
        out = {}
        for w, c in x.terms.items():
            for y, e in self._nf_word(w, strategy, rng, memo).items():
                out[y] = out.get(y, 0) + c * e
        return GradedElement(self.p, x.weight, out)

    def trace(self, word, strategy="leftmost", seed=None) -> RewriteTrace:
        """Follow the swapped branch until the word is ordered."""
        rng = random.Random(seed)
        word = tuple(word)
        steps = []
        while True:
            i = self._choose(word, strategy, rng)
            if i < 0:
                steps.append(TraceStep(word, inversions(word), "", -1))
                return RewriteTrace(steps)
            rule, out = self._expand(word, i)
            steps.append(TraceStep(word, inversions(word), rule.source, i))
            word = out[0][0]

    def check_decrease(self, word, strategy="leftmost", seed=None) -> dict:
        """Apply rewrite steps to every word reachable from ``word`` and record
        any step where the swap fails to lower inversions, a correction fails
        to shorten the word, or the weight changes."""
        rng = random.Random(seed)
        seen, todo = set(), [tuple(word)]
        steps, violations = 0, []
        wt = self.table.weight_of
        while todo:
            w = todo.pop()
            if w in seen:
                continue
            seen.add(w)
            i = self._choose(w, strategy, rng)
            if i < 0:
                continue
            _, out = self._expand(w, i)
            steps += 1
            inv, n = inversions(w), wt(w)
            swapped = out[0][0]
            if not inversions(swapped) < inv:
                violations.append(("swap", w, i))
            for x, _ in out[1:]:
                if not len(x) < len(w):
                    violations.append(("correction length", w, x))
            for x, _ in out:
                if wt(x) != n:
                    violations.append(("weight", w, x))
                todo.append(x)
        return {"steps": steps, "words": len(seen), "violations": violations}


# ---------------------------------------------------------------------------

def count_words(weights, n) -> int:
    """Number of (noncommutative) words of weighted degree n."""
    f = [1] + [0] * n
    for k in range(1, n + 1):
        f[k] = sum(f[k - w] for w in weights if w <= k)
    return f[n]


def words_of_weight(weights, n, ordered=False):
    d = len(weights)

    def rec(rem, lo):
        if rem == 0:
            yield ()
            return
        for g in range(lo if ordered else 0, d):
            wg = weights[g]
            if wg <= rem:
                for rest in rec(rem - wg, g if ordered else 0):
                    yield (g,) + rest

    return list(rec(n, 0))


@dataclass
class DimResult:
    n: int
    rank: int
    ordered: int
    words: int


def graded_dim_upper_bound(rw: Rewriter, n: int, word_cap=DEFAULT_WORD_CAP) -> DimResult:
    """Rank over F_p of the normal forms of all weight-n words, in the ordered-word basis."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = count_words(rw.weights, n)
    if total > word_cap:
        raise ResourceCapError(f"{total} words of weight {n} exceeds the cap of {word_cap}")
    basis = words_of_weight(rw.weights, n, ordered=True)
    col = {w: k for k, w in enumerate(basis)}
    rows = set()
    for w in words_of_weight(rw.weights, n):
        nf = rw.normal_form(w)
        try:
            rows.add(tuple(sorted((col[y], c) for y, c in nf.terms.items())))
        except KeyError as exc:
            raise ConsistencyError(f"normal form of {w} contains an unordered word") from exc
    rows.discard(())
    mat = [[0] * len(basis) for _ in rows]
    for r, row in zip(mat, sorted(rows)):
        for k, c in row:
            r[k] = c
    rank = rank_mod_p(mat, rw.p) if mat else 0
    return DimResult(n, rank, len(basis), total)


@dataclass
class ProbeResult:
    passed: bool
    word: tuple
    results: dict


def confluence_probe(rw: Rewriter, word, strategies=("leftmost", "random"), seed=0) -> ProbeResult:
    if len(set(strategies)) < 2:
        raise ValueError("confluence_probe needs at least two distinct strategies")
    word = tuple(word)
    res = {s: rw.normal_form(word, s, seed) for s in strategies}
    first = res[strategies[0]]
    return ProbeResult(all(v == first for v in res.values()), word, res)


def random_word(gt: GeneratorTable, max_weight: int, rng: random.Random) -> tuple:
    """A random word whose weight is drawn uniformly from 1..max_weight."""
    weights = gt.weights
    if min(weights) > max_weight:
        raise ValueError("no generator fits the weight bound")
    target = rng.randint(min(weights), max_weight)
    word = []
    rem = target
    while rem:
        choices = [g for g in range(gt.d) if weights[g] <= rem]
        g = rng.choice(choices)
        word.append(g)
        rem -= weights[g]
    return tuple(word)
