from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from iwasawa.errors import PrecisionError
from iwasawa.ncseries import (Context, NCPoly, PadicScalar, binom_padic, mul, one_plus_pow, reduce_mod_fil,
                              vp_and_sp, vp_factorial, weighted_degree, working_precision)

A1 = (1, 2, 1)  # U, W, V
U, W, V = 0, 1, 2


def ctx(bound=4, p=5, K=1, weights=A1):
    return Context(p, K, weights, bound)


def test_weighted_degree():
    assert weighted_degree((V,), A1) == 1
    assert weighted_degree((V, U, W), A1) == 4
    assert weighted_degree((0, 7), (1, 2, 2, 3, 3, 1, 2, 1)) == 2
    assert weighted_degree((), A1) == 0


def test_products():
    c = ctx()
    one = NCPoly.one(c)
    f = one + NCPoly.gen(c, V)
    assert f * one == f
    g = f * (one + NCPoly.gen(c, U))
    assert g.terms == {(): 1, (V,): 1, (U,): 1, (V, U): 1}
    c1 = ctx(bound=1)
    assert NCPoly.gen(c1, V) * NCPoly.gen(c1, V) == NCPoly.zero(c1)


def test_ring_mismatch():
    with pytest.raises(ValueError):
        NCPoly.one(ctx()) + NCPoly.one(ctx(p=7))
    with pytest.raises(TypeError):
        NCPoly.one(ctx()) + 1


def test_reduce_mod_fil():
    c = ctx()
    f = NCPoly.word(c, (V, W))
    assert not reduce_mod_fil(f, 2)
    assert reduce_mod_fil(f, 4) is f
    g = (NCPoly.one(c) + NCPoly.gen(c, V)) * (NCPoly.one(c) + NCPoly.gen(c, U))
    assert reduce_mod_fil(g, 1).terms == {(): 1, (V,): 1, (U,): 1}


def test_vp_and_sp():
    assert vp_and_sp(10, 5) == (1, 2)
    assert vp_factorial(10, 5) == 2
    assert vp_and_sp(1, 7) == (0, 1)
    assert vp_and_sp(5 ** 3, 5) == (3, 1)


def test_binom_examples():
    assert binom_padic(PadicScalar(6, 3, 5), 2, 1) == 0
    assert binom_padic(PadicScalar(123, 1, 5), 0, 1) == 1
    m = PadicScalar.one_plus_p_power(2, 5, 3)
    assert m.residue == 36
    f = one_plus_pow(V, m, ctx(bound=4))
    assert [comb(36, k) for k in (2, 3, 4)] == [630, 7140, 58905]
    assert f.terms == {(): 1, (V,): 1}
    assert all(f.coefficient((V,) * k) == 0 for k in (2, 3, 4))
    assert one_plus_pow(V, PadicScalar(1, 3, 5), ctx()) == NCPoly(ctx(), {(): 1, (V,): 1})


def test_binom_of_inverse():
    p = 7
    for m in range(2, p - 1):
        q = PadicScalar.one_plus_p_power(-1, p, 1 + vp_factorial(m, p))
        assert binom_padic(q, m, 1) == 0


def test_precision_error():
    with pytest.raises(PrecisionError):
        binom_padic(PadicScalar(25, 1, 5), 5, 1)


@settings(max_examples=300)
@given(st.sampled_from([3, 5, 7, 11]), st.integers(0, 10 ** 6), st.integers(0, 30), st.integers(1, 3))
def test_binom_matches_exact(p, M, m, K):
    prec = K + vp_factorial(m, p)
    assert binom_padic(PadicScalar(M, prec, p), m, K) == comb(M, m) % p ** K


@settings(max_examples=100)
@given(st.sampled_from([5, 7]), st.integers(-50, 50), st.integers(-50, 50))
def test_power_law(p, a, b):
    # (1+X)^a (1+X)^b = (1+X)^(a+b) in the truncated ring
    c = Context(p, 2, (1,), 8)
    kw = working_precision(2, 8, p)
    fa = one_plus_pow(0, PadicScalar(a, kw, p), c)
    fb = one_plus_pow(0, PadicScalar(b, kw, p), c)
    assert fa * fb == one_plus_pow(0, PadicScalar(a + b, kw, p), c)


words = st.lists(st.integers(0, 2), max_size=4).map(tuple)
polys = st.dictionaries(words, st.integers(-30, 30), max_size=6)


@settings(max_examples=100)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c_):
    c = ctx(bound=6, K=2)
    f, g, h = NCPoly(c, a), NCPoly(c, b), NCPoly(c, c_)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f + g) - g == f
    assert mul(f, NCPoly.one(c)) == f


def test_json_roundtrip():
    c = ctx(bound=5, K=2)
    f = NCPoly(c, {(V, U): 3, (): 1, (W,): 24})
    assert NCPoly.from_json(f.to_json(), A1) == f
    assert f.dumps() == NCPoly.from_json(f.to_json(), A1).dumps()
