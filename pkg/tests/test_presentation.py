from collections import Counter

import pytest

from iwasawa.errors import PrimeTooSmallError
from iwasawa.ncseries import reduce_mod_fil
from iwasawa.presentation import (build_presentation, export_presentation, generate_relations,
                                  parse_presentation, primed_form, verify_primed)

from conftest import presentation


def test_prime_guard():
    with pytest.raises(PrimeTooSmallError) as exc:
        build_presentation("G2", 5)
    assert "need p > 7" in str(exc.value)
    assert exc.value.minimum == 11
    with pytest.raises(PrimeTooSmallError):
        build_presentation("A2", 3)
    with pytest.raises(ValueError):
        build_presentation("A2", 9)


def test_max_degree_guard():
    pres = presentation("A2", 5)
    with pytest.raises(ValueError):
        generate_relations(pres.table.root_system, None, pres.table, 5, N=5)


def test_a2_relation_counts():
    pres = presentation("A2", 5)
    counts = Counter(r.id for r in pres.relations)
    # summing same-sign pairs only; the rest are the R5c / R6c plain commutations
    assert {k: counts[k] for k in ("R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8")} == \
        {"R1": 1, "R2": 6, "R3": 6, "R4": 2, "R5": 1, "R6": 1, "R7": 4, "R8": 3}
    assert counts["R5c"] == 2 and counts["R6c"] == 2
    d = pres.table.d
    assert len(pres.relations) == d * (d - 1) // 2


@pytest.mark.parametrize("t,p", [("A1", 5), ("A2", 5), ("B2", 7), ("A3", 7), ("G2", 11)])
def test_verify_primed(t, p):
    pres = presentation(t, p)
    for r, pr in zip(pres.relations, pres.primed):
        res = verify_primed(r, pr, p)
        assert res.passed, (r.id, r.pair, res.witness)


@pytest.mark.parametrize("t,p", [("A2", 5), ("B2", 7), ("G2", 11)])
def test_no_constant_or_stray_linear_terms(t, p):
    pres = presentation(t, p)
    for r, pr in zip(pres.relations, pres.primed):
        e = r.element
        assert e.constant_term() == 0
        lin = {w[0]: c % p for w, c in e.terms.items()
               if len(w) == 1 and c % p and pres.table[w[0]].weight <= pr.fil_level}
        assert lin == {g: -c % p for g, c in pr.corrections}, (r.id, lin)


def test_verify_primed_catches_wrong_correction():
    pres = presentation("A1", 5)
    r8 = next(i for i, r in enumerate(pres.relations) if r.id == "R8")
    rel, pr = pres.relations[r8], pres.primed[r8]
    assert pr.corrections == ((pres.table.W(0), 1),)
    from iwasawa.presentation import PrimedRelation
    wrong = PrimedRelation(pr.source, pr.pair, pr.fil_level, ((pres.table.W(0), 2),))
    assert not verify_primed(rel, wrong, 5).passed
    empty = PrimedRelation(pr.source, pr.pair, pr.fil_level, ())
    assert not verify_primed(rel, empty, 5).passed


def test_r7_positive_sum_is_commutation():
    pres = presentation("B2", 7)
    rs = pres.table.root_system
    seen = 0
    for r, pr in zip(pres.relations, pres.primed):
        if r.id == "R7" and rs.is_positive(tuple(x + y for x, y in zip(r.info["alpha"], r.info["beta"]))):
            seen += 1
            assert pr.corrections == ()
    assert seen


def test_r2_zero_pairing_is_exact():
    pres = presentation("A2", 5)
    for r in pres.relations:
        if r.id in ("R2", "R3") and r.info["pairing"] == 0:
            assert not r.element


def test_r5_a2_correction():
    pres = presentation("A2", 5)
    gt = pres.table
    (i,) = [k for k, r in enumerate(pres.relations) if r.id == "R5"]
    pr = pres.primed[i]
    assert pr.pair == (gt.V((0, 1)), gt.V((1, 0)))
    assert pr.fil_level == 2
    assert [g for g, _ in pr.corrections] == [gt.V((1, 1))]


def test_r2_primed_a2():
    pres = presentation("A2", 5)
    for r, pr in zip(pres.relations, pres.primed):
        if r.id == "R2":
            assert pr.corrections == ()
            assert pr.fil_level == pres.table[r.pair[1]].weight + 3


def test_higher_precision_reduces_to_mod_p():
    hi = build_presentation("A2", 5, K=3)
    lo = presentation("A2", 5)
    for a, b in zip(hi.relations, lo.relations):
        assert a.id == b.id and a.pair == b.pair
        assert a.element.change_precision(1) == b.element


def test_torus_order_immaterial():
    # R-8 uses the W's in node order; reversing them changes nothing since the W's commute
    from iwasawa.ncseries import PadicScalar, one_plus_pow, product, working_precision
    pres = build_presentation("B2", 7, K=2)
    gt = pres.table
    ctx = pres.relations[0].lhs.ctx
    kw = working_precision(2, pres.N, 7)
    wset = {gt.W(0), gt.W(1)}
    for r in pres.relations:
        if r.id != "R8":
            continue
        m = r.info["coroot"]
        u, v = gt.U(tuple(-x for x in r.info["alpha"])), gt.V(r.info["alpha"])
        q = PadicScalar.one_plus_p_power(-1, 7, kw)
        ws = [one_plus_pow(gt.W(i), PadicScalar(m[i], kw, 7), ctx) for i in range(2)]
        rev = product([one_plus_pow(u, q, ctx)] + ws[::-1] + [one_plus_pow(v, q, ctx)], ctx)
        assert (rev != r.rhs) == all(m)
        # equal once R-1 is applied, i.e. after sorting each run of W letters
        assert _sort_w_runs(rev, wset) == _sort_w_runs(r.rhs, wset)


def _sort_w_runs(f, wset):
    out = {}
    for w, c in f.terms.items():
        key, run = [], []
        for x in w + (None,):
            if x in wset:
                run.append(x)
                continue
            key += sorted(run)
            run = []
            if x is not None:
                key.append(x)
        out[tuple(key)] = (out.get(tuple(key), 0) + c) % f.ctx.modulus
    return {k: v for k, v in out.items() if v}


def test_export_roundtrip_and_stable():
    pres = presentation("A1", 5)
    doc = export_presentation(pres)
    back = parse_presentation(doc)
    assert back == pres
    assert export_presentation(back) == doc
    assert export_presentation(build_presentation("A1", 5)) == doc


def test_export_contents():
    import json
    pres = presentation("A2", 5)
    data = json.loads(export_presentation(pres))
    assert len(data["generators"]) == 8
    assert set(data) >= {"type", "p", "precision", "maxDegree", "signConvention", "generators", "relations"}
    rel = data["relations"][0]
    assert set(rel) == {"id", "pair", "lhs", "rhs", "primed"}
    assert set(rel["primed"]) == {"filLevel", "corrections"}
    text = export_presentation(pres, "text")
    assert "V(1,0) U(-1,0)" in text and "W1" in text
    with pytest.raises(ValueError):
        export_presentation(pres, "xml")


def test_primed_form_weights_homogeneous():
    pres = presentation("G2", 11)
    gt = pres.table
    for r in pres.relations:
        pr = primed_form(r, gt, 11)
        for g, c in pr.corrections:
            assert gt[g].weight == pr.fil_level and 0 < c < 11


def test_reduce_keeps_level():
    pres = presentation("A1", 5)
    for r, pr in zip(pres.relations, pres.primed):
        e = reduce_mod_fil(r.element.reduce_mod_p(), pr.fil_level)
        assert all(pres.table.weight_of(w) >= pr.fil_level for w in e.terms)
