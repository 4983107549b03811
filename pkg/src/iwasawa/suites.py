"""Verification suites shared by the ``verify`` command and the acceptance tests."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from math import comb

from .chevalley import (CheckResult, build_chevalley_basis, relation_instances, verify_group_relation,
                        verify_uni3_sl2)
from .errors import PrecisionError
from .grading import graded_dim_omega
from .ncseries import PadicScalar, binom_padic, vp_factorial
from .ordering import papi_order, reduced_words, verify_compatible
from .presentation import build_presentation, verify_primed
from .roots import build_root_system
from .straighten import Rewriter, confluence_probe, graded_dim_upper_bound, random_word

SUITES = ("ordering", "chevalley", "primed", "dims", "inversions", "confluence", "binomial")


@dataclass
class RunConfig:
    type: str
    p: int
    K: int = 1
    N: int = None
    suites: tuple = SUITES
    samples: int = 1000
    max_word_weight: int = 6
    seed: int = 0
    word_cap: int = 200_000
    words: int = 3           # reduced words tried by the ordering suite


@dataclass
class VerificationReport:
    config: dict
    suites: dict = field(default_factory=dict)
    timing: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for recs in self.suites.values() for r in recs)

    def to_dict(self, timing=False) -> dict:
        out = {
            "config": self.config,
            "passed": self.passed,
            "suites": {
                name: {
                    "passed": all(r.passed for r in recs),
                    "checks": len(recs),
                    "failures": [r.to_dict() for r in recs if not r.passed],
                    "records": [r.to_dict() for r in recs],
                }
                for name, recs in self.suites.items()
            },
        }
        if timing:
            out["timing"] = {k: round(v, 3) for k, v in self.timing.items()}
        return out


def ordering_suite(rs, words=3):
    out = []
    for w in reduced_words(rs, limit=words):
        chk = verify_compatible(rs, papi_order(rs, w))
        out.append(CheckResult("compatible", f"word {''.join(str(i + 1) for i in w)}", chk.passed, chk.witness))
    # rank <= 2 types have fewer than ``words`` reduced words; all of them are checked
    return out


def chevalley_suite(rs, p):
    cb = build_chevalley_basis(rs)
    out = [verify_group_relation(cb, *inst) for inst in relation_instances(rs)]
    out += [verify_group_relation(cb, "Uni-3", a, p) for a in rs.positive_roots]
    out += [verify_uni3_sl2(p, k) for k in (2, 3, 4)]
    return out


def primed_suite(rs, p, K=1, N=None):
    pres = build_presentation(rs, p, K=K, N=N)
    return [verify_primed(r, pr, p) for r, pr in zip(pres.relations, pres.primed)]


def dims_suite(rw, N, word_cap=200_000):
    out = []
    for n in range(N + 1):
        r = graded_dim_upper_bound(rw, n, word_cap)
        want = graded_dim_omega(rw.table, n)
        out.append(CheckResult("dims", f"n={n}", r.rank == want, None if r.rank == want else (r.rank, want)))
    return out


def inversion_suite(rw, samples, max_weight, seed):
    rng = random.Random(seed)
    out = []
    for k in range(samples):
        w = random_word(rw.table, max_weight, rng)
        res = rw.check_decrease(w)
        ok = not res["violations"]
        out.append(CheckResult("inversions", str(w), ok, None if ok else res["violations"][:3]))
    return out


def confluence_suite(rw, samples, max_weight, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(samples):
        w = random_word(rw.table, max_weight, rng)
        res = confluence_probe(rw, w, ("leftmost", "rightmost", "random"), seed=rng.randrange(2**32))
        out.append(CheckResult("confluence", str(w), res.passed,
                               None if res.passed else {s: repr(v) for s, v in res.results.items()}))
    return out


def binomial_check(p, kmax=3):
    """C(c p^k, r) = 0 mod p for 1 <= c < p, 1 <= r < p^k, p^k not dividing r.

    Both the exact integer binomial and the p-adic routine are checked.
    """
    bad = []
    checked = 0
    for k in range(1, kmax + 1):
        pk = p ** k
        for c in range(1, p):
            for r in range(1, pk):
                if r % pk == 0:
                    continue
                checked += 1
                exact = comb(c * pk, r) % p
                try:
                    prec = 1 + vp_factorial(r, p)
                    ours = binom_padic(PadicScalar(c * pk, prec, p), r, 1)
                except PrecisionError as exc:
                    bad.append((k, c, r, str(exc)))
                    continue
                if exact or ours:
                    bad.append((k, c, r, exact, ours))
    return CheckResult("binomial", f"p={p}, k<={kmax}", not bad, bad[:5] or None), checked


def run_suites(cfg: RunConfig) -> VerificationReport:
    rs = build_root_system(cfg.type)
    N = 2 * rs.coxeter_number if cfg.N is None else cfg.N
    report = VerificationReport({
        "type": str(rs.cartan_type), "p": cfg.p, "precision": cfg.K, "maxDegree": N,
        "suites": list(cfg.suites), "samples": cfg.samples, "seed": cfg.seed,
    })
    rw = None

    def rewriter():
        nonlocal rw
        if rw is None:
            rw = Rewriter.for_type(rs, cfg.p)
        return rw

    for name in cfg.suites:
        t0 = time.perf_counter()
        if name == "ordering":
            recs = ordering_suite(rs, cfg.words)
        elif name == "chevalley":
            recs = chevalley_suite(rs, cfg.p)
        elif name == "primed":
            recs = primed_suite(rs, cfg.p, cfg.K, N)
        elif name == "dims":
            recs = dims_suite(rewriter(), N, cfg.word_cap)
        elif name == "inversions":
            recs = inversion_suite(rewriter(), cfg.samples, cfg.max_word_weight, cfg.seed)
        elif name == "confluence":
            recs = confluence_suite(rewriter(), cfg.samples, cfg.max_word_weight, cfg.seed)
        elif name == "binomial":
            recs = [binomial_check(cfg.p)[0]]
        else:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
        report.suites[name] = recs
        report.timing[name] = time.perf_counter() - t0
    return report
