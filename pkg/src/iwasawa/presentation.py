"""The relations R-1 .. R-8 in the truncated power series ring, their primed
(mod p, mod filtration) reductions, and JSON / text export.

Relation ids are ``R1`` .. ``R8``.  Two extra ids, ``R5c`` and ``R6c``, hold
the same-sign pairs whose sum is not a root: these are the instances of R-5 /
R-6 with an empty commutator product (plain commutation), kept separate so
the summing instances can be counted on their own.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .chevalley import SIGN_CONVENTION, ChevalleyBasis, CheckResult, build_chevalley_basis, commutator_constants
from .errors import PrimeTooSmallError, is_prime
from .ncseries import Context, NCPoly, PadicScalar, one_plus_pow, product, reduce_mod_fil, working_precision
from .ordering import GeneratorTable, generator_table
from .roots import CartanType, RootSystem, add, build_root_system, scale

COMMUTING_IDS = ("R1", "R2", "R3", "R4", "R5c", "R6", "R6c")


@dataclass
class Relation:
    id: str
    pair: tuple               # generator indices (a, b) of the left-hand product
    lhs: NCPoly
    rhs: NCPoly
    info: dict = field(default_factory=dict)

    @property
    def element(self) -> NCPoly:
        return self.lhs - self.rhs


@dataclass(frozen=True)
class PrimedRelation:
    """X_a X_b = X_b X_a + sum(coeff * X_gen)  (mod p, mod Fil^{fil_level + 1})."""

    source: str
    pair: tuple
    fil_level: int
    corrections: tuple        # ((gen, coeff mod p), ...)

    @property
    def normal_pair(self) -> tuple:
        return self.pair[1], self.pair[0]

    def to_dict(self) -> dict:
        return {
            "filLevel": self.fil_level,
            "corrections": [{"gen": g, "coeff": c} for g, c in self.corrections],
        }


def check_prime(rs: RootSystem, p: int):
    h = rs.coxeter_number
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p <= h + 1:
        raise PrimeTooSmallError(str(rs.cartan_type), p, h)


def _ordered_factors(a, b, table):
    return [((i, j), add(scale(a, i), scale(b, j)), c)
            for (i, j), c in sorted(table.items(), key=lambda kv: (sum(kv[0]), kv[0][0]))]


def generate_relations(rs: RootSystem, cb: ChevalleyBasis, gt: GeneratorTable, p: int, N=None, K=1) -> list:
    check_prime(rs, p)
    h = rs.coxeter_number
    N = 2 * h if N is None else N
    if N < 2 * h:
        raise ValueError(f"max degree must be at least 2h = {2 * h}")
    if K < 1:
        raise ValueError("precision must be at least 1")
    ctx = Context(p, K, gt.weights, N)
    kw = working_precision(K, N, p)

    def one_plus(i):
        return NCPoly(ctx, {(): 1, (i,): 1})

    def power(i, exponent):
        if not isinstance(exponent, PadicScalar):
            exponent = PadicScalar(exponent, kw, p)
        return one_plus_pow(i, exponent, ctx)

    def X(i):
        return NCPoly.gen(ctx, i)

    rels = []
    W = [gt.W(i) for i in range(rs.rank)]

    for j in range(rs.rank):
        for i in range(j):
            a, b = W[j], W[i]
            rels.append(Relation("R1", (a, b), one_plus(a) * one_plus(b), one_plus(b) * one_plus(a)))

    for i in range(rs.rank):
        for alpha in gt.order:
            k = rs.pairing(alpha, i)
            M = PadicScalar.one_plus_p_power(k, p, kw)
            v = gt.V(alpha)
            rels.append(Relation("R2", (W[i], v), one_plus(W[i]) * one_plus(v), power(v, M) * one_plus(W[i]),
                                 {"delta": i, "alpha": alpha, "pairing": k}))
        for beta in rs.negative_roots:
            k = rs.pairing(beta, i)
            M = PadicScalar.one_plus_p_power(k, p, kw)
            u = gt.U(beta)
            rels.append(Relation("R3", (W[i], u), one_plus(W[i]) * one_plus(u), power(u, M) * one_plus(W[i]),
                                 {"delta": i, "beta": beta, "pairing": k}))

    for alpha in gt.order:
        v = gt.V(alpha)
        for beta in rs.negative_roots:
            u = gt.U(beta)
            s = add(alpha, beta)
            if not any(s):
                q = PadicScalar.one_plus_p_power(-1, p, kw)
                m = rs.coroot_coords(alpha)
                rhs = product([power(u, q)] + [power(W[i], m[i]) for i in range(rs.rank) if m[i]] + [power(v, q)], ctx)
                rels.append(Relation("R8", (v, u), one_plus(v) * one_plus(u), rhs,
                                     {"alpha": alpha, "coroot": m, "root_coords": alpha}))
            elif not rs.is_root(s):
                rels.append(Relation("R4", (v, u), X(v) * X(u), X(u) * X(v), {"alpha": alpha, "beta": beta}))
            else:
                table = commutator_constants(cb, alpha, beta)
                neg_f, pos_f = [], []
                for (i, j), g, c in _ordered_factors(alpha, beta, table):
                    if rs.is_positive(g):
                        pos_f.append(power(gt.V(g), c * p ** j))
                    else:
                        neg_f.append(power(gt.U(g), c * p ** (j - 1)))
                rhs = product(neg_f + pos_f + [one_plus(u), one_plus(v)], ctx)
                rels.append(Relation("R7", (v, u), one_plus(v) * one_plus(u), rhs,
                                     {"alpha": alpha, "beta": beta, "c": table}))

    def same_sign(roots, lookup, rid, exp_shift):
        for r1 in roots:
            for r2 in roots:
                x1, x2 = lookup(r1), lookup(r2)
                if x1 <= x2:
                    continue
                s = add(r1, r2)
                if rs.is_root(s):
                    table = commutator_constants(cb, r1, r2)
                    facs = [power(lookup(g), c * exp_shift(i, j)) for (i, j), g, c in _ordered_factors(r1, r2, table)]
                    rhs = product(facs + [one_plus(x2), one_plus(x1)], ctx)
                    rels.append(Relation(rid, (x1, x2), one_plus(x1) * one_plus(x2), rhs,
                                         {"roots": (r1, r2), "c": table}))
                else:
                    rels.append(Relation(rid + "c", (x1, x2), one_plus(x1) * one_plus(x2),
                                         one_plus(x2) * one_plus(x1), {"roots": (r1, r2)}))

    same_sign(gt.order, gt.V, "R5", lambda i, j: 1)
    same_sign(rs.negative_roots, gt.U, "R6", lambda i, j: p ** (i + j - 1))

    order = {"R1": 1, "R2": 2, "R3": 3, "R4": 4, "R5": 5, "R5c": 5, "R6": 6, "R6c": 6, "R7": 7, "R8": 8}
    rels.sort(key=lambda r: (order[r.id], r.id, r.pair))
    return rels


def primed_form(rel: Relation, gt: GeneratorTable, p: int) -> PrimedRelation:
    """The graded rewrite rule predicted for a relation instance."""
    rs = gt.root_system
    a, b = rel.pair
    level = gt[a].weight + gt[b].weight
    corr = []
    if rel.id == "R5":
        c11 = rel.info["c"].get((1, 1), 0)
        r1, r2 = rel.info["roots"]
        corr.append((gt.V(add(r1, r2)), c11 % p))
    elif rel.id == "R7":
        s = add(rel.info["alpha"], rel.info["beta"])
        if not rs.is_positive(s):
            corr.append((gt.U(s), rel.info["c"].get((1, 1), 0) % p))
    elif rel.id == "R8":
        m = rel.info["coroot"]
        corr.extend((gt.W(i), m[i] % p) for i in range(rs.rank) if m[i] % p)
    corr = tuple((g, c) for g, c in corr if c)
    for g, _ in corr:
        assert gt[g].weight == level, (rel.id, rel.pair, g)
    return PrimedRelation(rel.id, (a, b), level, corr)


def primed_element(pr: PrimedRelation, ctx: Context) -> NCPoly:
    a, b = pr.pair
    out = NCPoly(ctx, {(a, b): 1, (b, a): -1})
    for g, c in pr.corrections:
        out = out - NCPoly.gen(ctx, g, c)
    return out


def verify_primed(rel: Relation, pr: PrimedRelation, p: int) -> CheckResult:
    """Expand the relation over F_p, subtract the primed identity, reduce mod Fil^{level+1}."""
    elem = reduce_mod_fil(rel.element.change_precision(1), pr.fil_level)
    target = primed_element(pr, elem.ctx)
    residual = elem - target
    ok = not residual.terms
    return CheckResult("primed", f"{rel.id}{rel.pair}", ok, None if ok else sorted(residual.terms.items())[:5])


# ---------------------------------------------------------------------------

@dataclass
class Presentation:
    cartan_type: CartanType
    p: int
    K: int
    N: int
    table: GeneratorTable
    relations: list
    primed: list
    sign_convention: str = SIGN_CONVENTION

    def to_dict(self) -> dict:
        return {
            "type": str(self.cartan_type),
            "p": self.p,
            "precision": self.K,
            "maxDegree": self.N,
            "signConvention": self.sign_convention,
            "reducedWord": list(self.table.word),
            "generators": self.table.to_dict(),
            "relations": [
                {
                    "id": r.id,
                    "pair": list(r.pair),
                    "lhs": r.lhs.to_json(),
                    "rhs": r.rhs.to_json(),
                    "primed": pr.to_dict(),
                }
                for r, pr in zip(self.relations, self.primed)
            ],
        }

    @classmethod
    def from_dict(cls, data) -> "Presentation":
        t = CartanType.parse(data["type"])
        rs = build_root_system(t)
        order = [tuple(g["root"]) for g in data["generators"] if g["kind"] == "V"]
        gt = generator_table(rs, order)
        object.__setattr__(gt, "word", tuple(data.get("reducedWord", ())))
        if gt.to_dict() != data["generators"]:
            raise ValueError("generator table does not match the stated type and order")
        rels, primed = [], []
        for item in data["relations"]:
            pair = tuple(item["pair"])
            rels.append(Relation(item["id"], pair, NCPoly.from_json(item["lhs"], gt.weights),
                                 NCPoly.from_json(item["rhs"], gt.weights)))
            pd = item["primed"]
            primed.append(PrimedRelation(item["id"], pair, pd["filLevel"],
                                         tuple((c["gen"], c["coeff"]) for c in pd["corrections"])))
        return cls(t, data["p"], data["precision"], data["maxDegree"], gt, rels, primed, data["signConvention"])

    def __eq__(self, other):
        if not isinstance(other, Presentation):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    __hash__ = None


def build_presentation(type_, p: int, K=1, N=None, word=None) -> Presentation:
    rs = build_root_system(type_) if not isinstance(type_, RootSystem) else type_
    check_prime(rs, p)
    cb = build_chevalley_basis(rs)
    gt = generator_table(rs, word=word)
    N = 2 * rs.coxeter_number if N is None else N
    rels = generate_relations(rs, cb, gt, p, N, K)
    primed = [primed_form(r, gt, p) for r in rels]
    return Presentation(rs.cartan_type, p, K, N, gt, rels, primed)


def export_presentation(pres: Presentation, format="json") -> str:
    if format == "json":
        return json.dumps(pres.to_dict(), sort_keys=True, indent=1) + "\n"
    if format == "text":
        return _as_text(pres)
    raise ValueError(f"unknown format {format!r}")


def parse_presentation(text: str) -> Presentation:
    return Presentation.from_dict(json.loads(text))


def _poly_text(f: NCPoly, gt: GeneratorTable, limit=12) -> str:
    items = sorted(f.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))
    parts = []
    for w, c in items[:limit]:
        mono = gt.labels(w)
        parts.append(mono if c == 1 else f"{c}*{mono}")
    if len(items) > limit:
        parts.append(f"... ({len(items) - limit} more terms)")
    return " + ".join(parts) if parts else "0"


def _as_text(pres: Presentation) -> str:
    gt = pres.table
    lines = [
        f"type {pres.cartan_type}  p = {pres.p}  precision = {pres.K}  max degree = {pres.N}",
        f"sign convention: {pres.sign_convention}",
        f"generators (d = {gt.d}):",
        f"  {'idx':>3}  {'kind':4}  {'label':14}  {'omega':>6}  {'weight':>6}",
    ]
    for g in gt.generators:
        lines.append(f"  {g.index:>3}  {g.kind:4}  {g.label:14}  {str(g.omega):>6}  {g.weight:>6}")
    lines.append(f"relations ({len(pres.relations)}):")
    for r, pr in zip(pres.relations, pres.primed):
        a, b = r.pair
        corr = " + ".join(f"{c}*{gt[g].label}" for g, c in pr.corrections)
        rhs = f"{gt[b].label} {gt[a].label}" + (f" + {corr}" if corr else "")
        lines.append(f"  {r.id:4} {gt[a].label} {gt[b].label} = {rhs}  (mod Fil^{pr.fil_level + 1})")
        lines.append(f"       lhs: {_poly_text(r.lhs, gt)}")
        lines.append(f"       rhs: {_poly_text(r.rhs, gt)}")
    return "\n".join(lines) + "\n"
