from fractions import Fraction

import pytest

from iwasawa.ordering import (NotReducedError, generator_table, longest_word, papi_order, reduced_words,
                              verify_compatible)
from iwasawa.roots import add

from conftest import root_system

RANK_LE_4 = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"]


def test_longest_words():
    assert longest_word(root_system("A1")) == (0,)
    assert longest_word(root_system("A2")) == (0, 1, 0)
    assert len(longest_word(root_system("B2"))) == 4


def test_papi_a2():
    rs = root_system("A2")
    assert papi_order(rs, (0, 1, 0)) == ((1, 0), (1, 1), (0, 1))
    assert papi_order(root_system("A1")) == ((1,),)


def test_non_reduced_rejected():
    rs = root_system("A2")
    for w in [(0, 0, 1), (0, 1), (0, 1, 0, 1), (0, 2, 0)]:
        with pytest.raises(NotReducedError):
            papi_order(rs, w)


def test_verify_compatible_a2():
    rs = root_system("A2")
    assert verify_compatible(rs, [(1, 0), (1, 1), (0, 1)]).passed
    chk = verify_compatible(rs, [(1, 0), (0, 1), (1, 1)])
    assert not chk.passed
    assert chk.witness[1:] == ((1, 0), (0, 1))


@pytest.mark.parametrize("t", RANK_LE_4)
def test_papi_orders_compatible(t):
    rs = root_system(t)
    words = reduced_words(rs, limit=3)
    assert len(set(words)) == len(words)
    for w in words:
        assert verify_compatible(rs, papi_order(rs, w)).passed


def test_reduced_word_counts():
    # w0 of a rank 2 type with m_12 = m has exactly 2 reduced words
    assert len(reduced_words(root_system("A1"))) == 1
    for t in ("A2", "B2", "G2"):
        assert len(reduced_words(root_system(t))) == 2
    assert len(reduced_words(root_system("A3"))) == 16


def test_generator_table_a1():
    gt = generator_table(root_system("A1"))
    assert gt.d == 3
    assert [(g.kind, g.weight) for g in gt.generators] == [("U", 1), ("W", 2), ("V", 1)]


def test_generator_table_a2():
    gt = generator_table(root_system("A2"))
    assert gt.d == 8
    assert sorted(gt.weights) == sorted([1, 2, 2, 3, 3, 1, 1, 2])
    assert gt.labels(range(8)) == "U(-1,-1) U(-1,0) U(0,-1) W1 W2 V(1,0) V(1,1) V(0,1)"
    assert gt[0].omega == Fraction(1, 3)


@pytest.mark.parametrize("t", RANK_LE_4)
def test_table_invariants(t):
    rs = root_system(t)
    gt = generator_table(rs)
    h = rs.coxeter_number
    assert gt.d == 2 * len(rs.positive_roots) + rs.rank
    assert all(1 <= w <= 2 * h - 1 for w in gt.weights)
    assert all(Fraction(1, h) <= g.omega <= 1 for g in gt.generators)
    assert min(g.omega for g in gt.generators if g.kind == "W") == 1
    assert sum(1 for w in gt.weights if w == 1) == rs.rank + 1
    # the R-7' anchor: I(U_b) < I(U_{a+b}) < I(V_a) when a + b is negative
    for a in rs.positive_roots:
        for b in rs.negative_roots:
            s = add(a, b)
            if rs.is_root(s) and not rs.is_positive(s):
                assert gt.U(b) < gt.U(s) < gt.V(a)


def test_incompatible_order_rejected():
    with pytest.raises(ValueError):
        generator_table(root_system("A2"), order=[(1, 0), (0, 1), (1, 1)])


def test_to_dict_omega_strings():
    d = generator_table(root_system("B2")).to_dict()
    assert d[0]["omega"] == "1/4"
    assert d[0]["label"] == "U(-1,-2)"
