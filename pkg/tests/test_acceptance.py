"""One test per acceptance criterion; each prints a single PASS/FAIL line.

The lines are also collected into the terminal summary under
"acceptance criteria".
"""

import random
import time

import pytest

from iwasawa.chevalley import relation_instances, verify_group_relation, verify_uni3_sl2
from iwasawa.grading import brute_force_count, graded_dim_omega
from iwasawa.ordering import generator_table, papi_order, reduced_words, verify_compatible
from iwasawa.presentation import verify_primed
from iwasawa.straighten import confluence_probe, graded_dim_upper_bound, random_word
from iwasawa.suites import binomial_check

from conftest import ACCEPTANCE_LINES, chevalley, presentation, rewriter, root_system

RANK_LE_4 = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"]
RANK_LE_3 = ["A1", "A2", "A3", "B2", "B3", "C3", "G2"]
SAMPLES = 10_000


def report(num, ok, detail):
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    return ok


def test_criterion_1_graded_dimension_equality():
    t0 = time.perf_counter()
    bad = []
    for t, p, top in [("A1", 5, 8), ("A2", 5, 6), ("B2", 7, 5)]:
        rw = rewriter(t, p)
        for n in range(top + 1):
            r = graded_dim_upper_bound(rw, n)
            want = graded_dim_omega(rw.table, n)
            if r.rank != want:
                bad.append((t, n, r.rank, want))
    took = time.perf_counter() - t0
    ok = not bad and took < 300
    assert report(1, ok, f"rank = dim gr^n for A1 n<=8, A2 n<=6, B2 n<=5 in {took:.1f}s; mismatches {bad}")


def test_criterion_2_gr1_law():
    bad = []
    for t, p in [("A1", 5), ("A2", 5), ("B2", 7), ("A3", 7), ("G2", 11)]:
        rs = root_system(t)
        want = rs.rank + 1
        dim = graded_dim_omega(generator_table(rs), 1)
        rank = graded_dim_upper_bound(rewriter(t, p), 1).rank
        if not dim == rank == want:
            bad.append((t, dim, rank, want))
    assert report(2, not bad, f"dim gr^1 = |Delta|+1 for A1 A2 B2 A3 G2; failures {bad}")


def test_criterion_3_primed_relations():
    counts, bad = {}, []
    for t, p in [("A1", 5), ("A2", 5), ("B2", 7), ("G2", 11)]:
        pres = presentation(t, p)
        counts[t] = len(pres.relations)
        for r, pr in zip(pres.relations, pres.primed):
            res = verify_primed(r, pr, p)
            if not res.passed:
                bad.append((t, r.id, r.pair, res.witness))
    assert report(3, not bad, f"zero residual on every instance {counts}; failures {bad[:3]}")


def test_criterion_4_binomial_vanishing():
    total, bad = 0, []
    for p in (5, 7, 11):
        res, n = binomial_check(p, 3)
        total += n
        if not res.passed:
            bad.append(res.witness)
    assert report(4, not bad, f"C(c p^k, r) = 0 mod p, {total} cases; failures {bad}")


def test_criterion_5_inversion_decrease():
    summary, bad = {}, []
    for t, p, seed in [("A2", 5, 11), ("B2", 7, 12)]:
        rw = rewriter(t, p)
        rng = random.Random(seed)
        steps = 0
        for _ in range(SAMPLES):
            res = rw.check_decrease(random_word(rw.table, 6, rng))
            steps += res["steps"]
            bad += [(t,) + v for v in res["violations"]]
        summary[t] = steps
    assert report(5, not bad, f"{SAMPLES} words per type, rewrite steps checked {summary}; violations {bad[:3]}")


@pytest.mark.xfail(strict=True, reason="A1 has 1 reduced word of w0 and A2, B2, G2 have 2; see the decisions ledger")
def test_criterion_6_compatible_orderings_literal():
    short, bad = {}, []
    for t in RANK_LE_4:
        rs = root_system(t)
        words = reduced_words(rs, limit=3)
        if len(words) < 3:
            short[t] = len(words)
        for w in words:
            chk = verify_compatible(rs, papi_order(rs, w))
            if not chk.passed:
                bad.append((t, w, chk.witness))
    ok = not bad and not short
    assert report(6, ok, f"rank <= 4, >= 3 reduced words each; too few words {short}; order failures {bad}")


def test_criterion_6_every_available_word():
    checked, bad = {}, []
    for t in RANK_LE_4:
        rs = root_system(t)
        words = reduced_words(rs, limit=3)
        checked[t] = len(words)
        for w in words:
            chk = verify_compatible(rs, papi_order(rs, w))
            if not chk.passed:
                bad.append((t, w, chk.witness))
    line = f"criterion 6 (each available word, up to 3): {'PASS' if not bad else 'FAIL'}  words {checked}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert not bad


def test_criterion_7_chevalley_relations():
    counts, bad = {}, []
    for t in ("A2", "B2", "G2"):
        cb = chevalley(t)
        inst = relation_instances(cb.root_system)
        counts[t] = len(inst)
        for which, a, b in inst:
            res = verify_group_relation(cb, which, a, b)
            if not res.passed:
                bad.append((t, which, a, b, res.witness))
    sl2 = [k for k in (2, 3, 4) if not verify_uni3_sl2(5, k).passed]
    ok = not bad and not sl2
    assert report(7, ok, f"Diag-uni/Uni-1/Uni-2 instances {counts}, SL2 Uni-3 p=5 k=2..4; failures {bad[:3]} {sl2}")


def test_criterion_8_grading_oracle():
    bad = []
    for t in RANK_LE_3:
        gt = generator_table(root_system(t))
        for m in range(9):
            if graded_dim_omega(gt, m) != brute_force_count(gt, m):
                bad.append((t, m))
    assert report(8, not bad, f"DP = enumeration for {' '.join(RANK_LE_3)}, m <= 8; mismatches {bad}")


def test_criterion_9_confluence():
    bad = []
    for t, p, seed in [("A2", 5, 21), ("B2", 7, 22)]:
        rw = rewriter(t, p)
        rng = random.Random(seed)
        for _ in range(SAMPLES):
            w = random_word(rw.table, 6, rng)
            res = confluence_probe(rw, w, ("leftmost", "rightmost", "random"), seed=rng.randrange(2 ** 32))
            if not res.passed:
                bad.append((t, w))
    assert report(9, not bad, f"{SAMPLES} random words each for A2 p=5 and B2 p=7; disagreements {bad[:3]}")
