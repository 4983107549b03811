import pytest
from hypothesis import given, strategies as st

from iwasawa.errors import CartanTypeError, RootError
from iwasawa.roots import CartanType, build_root_system, expected_positive_count, neg

from conftest import root_system

TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "D5", "E6", "E7", "E8", "F4", "G2"]


def test_a1():
    rs = root_system("A1")
    assert rs.positive_roots == ((1,),)
    assert rs.coxeter_number == 2


def test_a2():
    rs = root_system("A2")
    assert set(rs.positive_roots) == {(1, 0), (0, 1), (1, 1)}
    assert rs.highest_root == (1, 1)
    assert rs.coxeter_number == 3


def test_g2():
    rs = root_system("G2")
    assert len(rs.positive_roots) == 6
    assert rs.highest_root == (3, 2)
    assert rs.height(rs.highest_root) == 5
    assert rs.coxeter_number == 6


@pytest.mark.parametrize("t", TYPES)
def test_counts_and_coxeter(t):
    rs = root_system(t)
    assert len(rs.positive_roots) == expected_positive_count(rs.cartan_type)
    assert rs.coxeter_number == 1 + rs.height(rs.highest_root)
    # h = |Phi| / rank
    assert rs.coxeter_number * rs.rank == 2 * len(rs.positive_roots)
    for r in rs.positive_roots:
        assert min(r) >= 0


@pytest.mark.parametrize("bad", ["A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3", "H3", "", "A", "2A"])
def test_invalid_types(bad):
    with pytest.raises(CartanTypeError):
        CartanType.parse(bad)


def test_height_and_pairing():
    rs = root_system("A2")
    assert rs.height((1, 1)) == 2
    assert rs.height((-1, -1)) == -2
    assert root_system("A1").pairing((1,), 0) == 2
    assert rs.pairing((1, 1), 0) == 1
    assert rs.pairing((-1, 0), 0) == -2


def test_root_strings():
    rs = root_system("A2")
    assert rs.root_string((1, 0), (0, 1)) == (0, 1)
    assert rs.root_string((1, 0), (1, 1)) == (1, 0)
    assert root_system("B2").root_string((0, 1), (1, 0)) == (0, 2)
    with pytest.raises(RootError):
        rs.root_string((1, 0), (-1, 0))
    with pytest.raises(RootError):
        rs.root_string((1, 0), (1, 0))


def test_reflections():
    rs = root_system("A2")
    assert rs.simple_reflect(0, (0, 1)) == (1, 1)
    for t in ("B3", "G2", "F4"):
        s = root_system(t)
        for a in s.roots:
            assert s.reflect(a, a) == neg(a)
            for r in s.roots:
                assert s.reflect(a, s.reflect(a, r)) == r
                assert s.is_root(s.reflect(a, r))


@given(st.sampled_from(TYPES[1:12]), st.data())
def test_root_string_length(t, data):
    # p + q <= 3 and the string is unbroken
    rs = root_system(t)
    a = data.draw(st.sampled_from(rs.roots))
    b = data.draw(st.sampled_from([r for r in rs.roots if r not in (a, neg(a))]))
    p, q = rs.root_string(a, b)
    assert p + q <= 3
    for k in range(-p, q + 1):
        assert rs.is_root(tuple(x + k * y for x, y in zip(b, a)))
    assert p - q == rs.coroot_pairing(b, a)


def test_parse_accepts_string_or_type():
    assert build_root_system("B2") == build_root_system(CartanType("B", 2))
