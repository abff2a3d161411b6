"""Registry of checkable statements, each tied to a location in the source
article and compared as canonical strings.

Expected values are written out literally; computed values come from the
library.  A claim passes iff the two strings are equal.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from . import golay, hesse, hyperbolic, leech, niemeier, permchar, quadform


@dataclass(frozen=True)
class Claim:
    id: str
    group: str
    paper_ref: str
    summary: str
    expected: str
    compute: Callable[[], str]
    criterion: int | None = None


@dataclass(frozen=True)
class ClaimResult:
    claim: str
    paper_ref: str
    expected: str
    computed: str
    passed: bool
    ms: int

    def as_dict(self) -> dict:
        return {"claim": self.claim, "paper_ref": self.paper_ref,
                "expected": self.expected, "computed": self.computed,
                "pass": self.passed, "ms": self.ms}


def run_claim(c: Claim) -> ClaimResult:
    t0 = time.perf_counter()
    try:
        got = c.compute()
    except Exception as exc:  # a crash is a failed claim, not a crashed run
        got = f"error: {type(exc).__name__}: {exc}"
    ms = int((time.perf_counter() - t0) * 1000)
    return ClaimResult(c.id, c.paper_ref, c.expected, got, got == c.expected, ms)


def factors_text(fs) -> str:
    fs = [d for d in fs if d != 1]
    return " ⊕ ".join(f"Z/{d}" for d in fs) if fs else "0"


# -- golay ------------------------------------------------------------------

def _golay_code():
    code = golay.build_golay()
    return (f"dim={code.dimension} words={len(code)} octads={len(code.octads)} "
            f"dodecads={len(code.dodecads)} steiner={golay.steiner_check(code)}")


def _golay_weights():
    enum = golay.build_golay().weight_enumerator()
    return str({w: n for w, n in enumerate(enum) if n})


def _complete_octad():
    five = golay.GolaySet.from_labels(["inf", 1, 2, 3, 4])
    return str(golay.complete_octad(golay.build_golay(), five))


# -- leech ------------------------------------------------------------------

def _leech():
    rep = leech.verify_generators()
    vs = leech.enumerate_norm4()
    return (f"det={rep.gram_det} rank={rep.rank} no_roots={leech.verify_no_roots()} "
            f"norm4={len(vs)} shapes={leech.shape_counts(vs)}")


def _lemma24():
    return str(leech.count_S().total)


def _lemma24_cases():
    s = leech.count_S()
    return (f"|S|={s.total} cases={s.case_counts} X2_in_S={s.contains_x2} "
            f"|S'|={leech.count_S_prime()}")


LEMMA25_ORBITS = [1, 10, 20, 20, 30, 30, 36, 36, 45, 45]


def _lemma25():
    a = leech.subset_sum_decompositions(81, LEMMA25_ORBITS)
    b = leech.subset_sum_decompositions(54, LEMMA25_ORBITS)
    return f"81: {len(a)} {a}; 54: {len(b)}"


# -- roots and pentagon -----------------------------------------------------

PENTAGON = [[-6, -3, -3, -3, -3],
            [-3, -4, -1, -2, -2],
            [-3, -1, -4, -2, -2],
            [-3, -2, -2, -4, -2],
            [-3, -2, -2, -2, -4]]


def _types(rs):
    return " ".join(hyperbolic.coxeter_type(rs))


def _roots_config():
    return (f"R={_types(hyperbolic.build_R())} "
            f"pentagon={'match' if hyperbolic.pentagon_gram() == PENTAGON else 'differs'} "
            f"a9={_types(hyperbolic.a9_chain())} d9={_types(hyperbolic.d9_chain())}")


def _lemma28():
    wp = hyperbolic.weyl_projection()
    orth = all(v == 0 for v in wp.h_pairings.values())
    return (f"h_integral={wp.h_in_lattice} primitive={wp.h_primitive} h_perp_R={orth} "
            f"h^2={wp.h_norm} w_R^2={wp.w_R_norm} w_tau^2={hyperbolic.w_tau_norm(20)} "
            f"det={hyperbolic.det_fixed_sublattice(20)}")


# -- discriminant forms -----------------------------------------------------

def _r_form():
    return quadform.discriminant_form(hyperbolic.r_basis_gram())


def _lemma22():
    f = _r_form()
    return f"A_R={factors_text(f.invariant_factors)} isotropic={len(quadform.isotropic_elements(f))}"


def _mat_order(m, n=6):
    x, k = m, 1
    while x != [[1, 0], [0, 1]]:
        x = [[sum(x[i][t] * m[t][j] for t in range(2)) % n for j in range(2)] for i in range(2)]
        k += 1
    return k


def _phi4_text(m):
    names = ("e1", "e2")

    def img(j):
        terms = []
        for i in range(2):
            c = m[i][j] % 6
            if c == 0:
                continue
            c = c - 6 if c > 3 else c
            terms.append(("-" if c < 0 else "") + ("" if abs(c) == 1 else str(abs(c))) + names[i])
        return "+".join(terms) if terms else "0"

    return f"e1->{img(0)} e2->{img(1)}"


def _phi4():
    m = quadform.phi4_induced_action()
    return f"{_phi4_text(m)} order={_mat_order(m)}"


def _prop26():
    f = _r_form()
    e = [f.element_of(v) for v in hyperbolic.r_discriminant_basis()]
    og = quadform.orthogonal_group_of_form(f)
    return (f"A_R={factors_text(f.invariant_factors)} q(e1)={f.q(e[0])} q(e2)={f.q(e[1])} "
            f"b(e1,e2)={f.b(e[0], e[1])} isotropic={len(quadform.isotropic_elements(f))} "
            f"|O|={og.order} census={og.census} phi4: {_phi4()}")


def _prop45():
    rep = quadform.endgame_solver()
    parts = [f"nm^2=90: {list(rep.solutions)}"]
    for s in rep.solutions:
        parts.append(f"{s}->{factors_text(rep.factors[s])}")
    parts.append(f"l=1: {list(rep.index_one_solutions) or 'none'}")
    parts.append(f"survivors={list(rep.survivors)}")
    return "; ".join(parts)


# -- A6 ---------------------------------------------------------------------

def _a6():
    g = permchar.build_a6()
    none = [k for k in (30, 40, 45) if not permchar.subgroup_of_order_exists(k)]
    return (f"order={g.order} classes={g.class_sizes()} no_subgroup_of_order={none} "
            f"orthogonality={permchar.verify_character_table()}")


def _twisted_text():
    vals = {permchar.twisted_trace(abc, cls) for abc, cls in (((1, 2, 0), "3A"), ((2, 1, 0), "3B"))}
    if len(vals) != 1:
        return "traces differ"
    t = vals.pop()
    return f"{t.value}{'' if t.is_integer else ' (not an integer)'}"


def _prop41():
    return (f"rank={permchar.lefschetz_rank()} decomposition={permchar.solve_decomposition()} "
            f"mu3={permchar.mu3_candidates()} twisted={_twisted_text()}")


def _claim42():
    sols = permchar.solve_decomposition()
    if len(sols) != 1:
        return f"{len(sols)} solutions"
    mult = (1,) + sols[0]
    return " + ".join(f"chi{i + 1}" if m == 1 else f"{m}chi{i + 1}"
                      for i, m in enumerate(mult) if m)


# -- Niemeier ---------------------------------------------------------------

def _parts(ps):
    return str([p.parts for p in ps])


def _lemma47():
    rep = niemeier.verify_invariant_grams()
    displayed = [niemeier_display[k] for k in niemeier.GRAM_CASES]
    same = all(r.gram == d for r, d in zip(rep.rows, displayed))
    return (f"grams={'as displayed' if same else 'differ'} "
            + " ".join(f"{r.case}:{factors_text(r.factors)},|det|={abs(r.det)}" for r in rep.rows))


niemeier_display = {
    "A1_24-i": [[-2, 0, -1, 0, 0], [0, -2, -1, 0, 0], [-1, -1, -4, 0, 0],
                [0, 0, 0, -2, -1], [0, 0, 0, -1, -8]],
    "A1_24-ii": [[-2, 0, -1, -1, -1], [0, -2, -1, -1, -1], [-1, -1, -4, -1, -1],
                 [-1, -1, -1, -4, -1], [-1, -1, -1, -1, -6]],
    "A2_12": [[-2, 1, 0, 0, 0], [1, -2, 0, 0, 0], [0, 0, -2, 1, 0],
              [0, 0, 1, -2, 0], [0, 0, 0, 0, -20]],
}


def _prop46():
    fs = {r.factors for r in niemeier.verify_invariant_grams().rows}
    return factors_text(fs.pop()) if len(fs) == 1 else f"inconsistent {sorted(fs)}"


def _orbits():
    return (f"A1_24={_parts(niemeier.partitions_a1_24())} "
            f"excluded={[e.partition.parts for e in niemeier.a1_24_report().excluded]} "
            f"A2_12={_parts(niemeier.partitions_a2_12())}")


# -- Hesse ------------------------------------------------------------------

def _prop35():
    for k in range(3):
        hesse.hesse_triangle_factorization(k)
    hesse.lambda_zero_fiber()
    t = hesse.base_change_fibers()
    return (f"factorizations=exact fibers={t.type_counts()} euler={t.euler_sum()} "
            f"rho>={hesse.shioda_tate_bound(t)} nodes={hesse.six_node_check().total}")


def _transcendental():
    t = hesse.transcendental_check()
    return f"det={t.det} rank={t.rank} rho+rank={t.picard + t.rank}"


# -- registry self-check ----------------------------------------------------

def _registry():
    ids = [c.id for c in CLAIMS]
    crit = sorted(c.criterion for c in CLAIMS if c.criterion is not None)
    return (f"unique={len(ids) == len(set(ids))} sorted={ids == sorted(ids)} "
            f"criteria={crit == list(range(1, 15))}")


_C = Claim
CLAIMS: tuple[Claim, ...] = tuple(sorted([
    _C("claim-4.10-octad", "golay", "Claim 4.10 proof, 'there is an octad A containing'",
       "the octad through {inf,1,2,3,4} is K0", "{inf,1,2,3,4,6,15,18}", _complete_octad),
    _C("claim-4.11", "niemeier", "Claim 4.11, 'a = b = 1 and c = 20'",
       "A2^12 orbit type [1,1,1,1,20]", "[(1, 1, 1, 1, 20)]",
       lambda: _parts(niemeier.partitions_a2_12())),
    _C("claim-4.2", "chars", "Claim 4.2, 'S(X) ⊗ C = χ1 ⊕ χ2 ⊕ χ3 ⊕ χ6'",
       "chi1 + chi2 + chi3 + chi6", "chi1 + chi2 + chi3 + chi6", _claim42),
    _C("claim-4.3-mu3", "chars", "§4 after Claim 4.3, '(a, b, c) = (0, 0, 0), (1, 2, 0) or (2, 1, 0)'",
       "three mu3 eigenvalue patterns", "[(0, 0, 0), (1, 2, 0), (2, 1, 0)]",
       lambda: str(permchar.mu3_candidates())),
    _C("claim-4.8", "niemeier", "Claim 4.8, 'either (i) [1, 1, 1, 6, 15] or (ii) [1, 1, 6, 6, 10]'",
       "A1^24 orbit types (i), (ii)", "[(1, 1, 1, 6, 15), (1, 1, 6, 6, 10)]",
       lambda: _parts(niemeier.partitions_a1_24())),
    _C("claim-4.8-sizes", "niemeier", "Claim 4.8 proof, 'a ≥ 6 unless a = 1'",
       "transitive A6-set sizes up to 24", "[1, 6, 10, 15, 20]",
       lambda: str(sorted(niemeier.feasible_orbit_sizes()))),
    _C("claims-4.8-4.11", "niemeier", "Claims 4.8 and 4.11, orbit decomposition types",
       "orbit partitions after exclusions",
       "A1_24=[(1, 1, 1, 6, 15), (1, 1, 6, 6, 10)] "
       "excluded=[(1, 1, 1, 1, 20), (1, 1, 1, 9, 12), (1, 1, 6, 8, 8)] A2_12=[(1, 1, 1, 1, 20)]",
       _orbits, 11),
    _C("cli-registry", "cli", "artifact plumbing",
       "claim ids unique and sorted, criteria 1-14 each mapped once",
       "unique=True sorted=True criteria=True", _registry, 14),
    _C("fig-1-R", "roots", "Figure 1, 'A2⊕2 ⊕ A1⊕2'", "R is A2 A2 A1 A1", "A2 A2 A1 A1",
       lambda: _types(hyperbolic.build_R())),
    _C("fig-2-pentagon", "pentagon", "Figure 2, pentagon of C, X0, R0, X1, X2",
       "Gram of the pentagon", str(PENTAGON), lambda: str(hyperbolic.pentagon_gram())),
    _C("fig-4-a9", "roots", "Prop 2.6 proof / Figure 4, 'type A9'", "the nine roots form A9", "A9",
       lambda: _types(hyperbolic.a9_chain())),
    _C("fig-5-d9", "roots", "Prop 2.6 proof / Figure 5, 'type D9'", "the nine roots form D9", "D9",
       lambda: _types(hyperbolic.d9_chain())),
    _C("golay-code", "golay", "§2, 'There are exactly 759 octads'",
       "Golay code sizes and Steiner property",
       "dim=12 words=4096 octads=759 dodecads=2576 steiner=True", _golay_code, 1),
    _C("golay-weights", "golay", "§2, C-set sizes 0, 8, 12, 16, 24", "weight enumerator",
       "{0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}", _golay_weights),
    _C("lemma-2.2", "quadform", "Lemma 2.2 proof, 'contains no isotropic element'",
       "A_R = (Z/6)^2 without isotropic elements", "A_R=Z/6 ⊕ Z/6 isotropic=0", _lemma22),
    _C("lemma-2.4", "leech", "Lemma 2.4, 'We have |S| = 81'", "|S| = 81", "81", _lemma24),
    _C("lemma-2.4-cases", "leech", "Lemma 2.4 and §2, '|S′| = 276'",
       "|S| = 30 + 48 + 3 with X2 in S, |S'| = 276",
       "|S|=81 cases=(30, 48, 3) X2_in_S=True |S'|=276", _lemma24_cases, 3),
    _C("lemma-2.5", "leech", "Lemma 2.5 proof, 'only three ways to decompose 81'",
       "decompositions of 81 and 54 into orbit sizes",
       "81: 3 [(1, 10, 20, 20, 30), (1, 20, 30, 30), (36, 45)]; 54: 0", _lemma25, 7),
    _C("lemma-2.5-subgroups", "chars", "Lemma 2.5 proof, 'no subgroup of order 40 or 45'",
       "A6 has no subgroup of order 30, 40, 45", "30:False 40:False 45:False",
       lambda: " ".join(f"{k}:{permchar.subgroup_of_order_exists(k)}" for k in (30, 40, 45))),
    _C("lemma-2.8", "roots", "Lemma 2.8, 'h² = 20'; Lemma 5.2; Lemma 5.3",
       "h integral, primitive, orthogonal to R, h^2 = 20; w_R^2 = -5; w_tau^2 = 0; det 180",
       "h_integral=True primitive=True h_perp_R=True h^2=20 w_R^2=-5 w_tau^2=0 det=180",
       _lemma28, 5),
    _C("lemma-4.7", "niemeier", "Lemma 4.7, '≅ Z/3 ⊕ Z/60'",
       "three invariant Gram matrices and their discriminant groups",
       "grams=as displayed A1_24-i:Z/3 ⊕ Z/60,|det|=180 A1_24-ii:Z/3 ⊕ Z/60,|det|=180 "
       "A2_12:Z/3 ⊕ Z/60,|det|=180", _lemma47, 10),
    _C("lemma-5.2", "roots", "Lemma 5.2, '(w_τ²) = 0'", "w_tau is isotropic", "0",
       lambda: str(hyperbolic.w_tau_norm(20))),
    _C("lemma-5.3", "roots", "Lemma 5.3 proof, '= 180 = |det (ZH_τ ⊕ R)|/4'",
       "|det(ZH + R)|/4 = 180", "180", lambda: str(hyperbolic.det_fixed_sublattice(20))),
    _C("prop-2.6", "quadform", "Prop 2.6, 'O(A_R, q_R) ≅ D8 × Z/2'; §2, 'φ4 : e1 ↦ e2, e2 ↦ −e1'",
       "A_R, q_R, O(A_R, q_R) and the phi4 action",
       "A_R=Z/6 ⊕ Z/6 q(e1)=1/6 q(e2)=1/6 b(e1,e2)=0 isotropic=0 |O|=16 "
       "census={1: 1, 2: 11, 4: 4} phi4: e1->e2 e2->-e1 order=4", _prop26, 6),
    _C("prop-2.6-phi4", "quadform", "§2, 'φ4 : e1 ↦ e2, e2 ↦ −e1'", "phi4 on A_R",
       "e1->e2 e2->-e1 order=4", _phi4),
    _C("prop-3.5", "hesse", "Prop 3.5 proof, 'ρ(X) ≥ 2 + 4 · 2 + 2 · 5 = 20'",
       "Hesse pencil base change: 2 I6 + 4 I3, Euler 24, rho >= 20, 6 nodes",
       "factorizations=exact fibers={'I3': 4, 'I6': 2} euler=24 rho>=20 nodes=6", _prop35, 13),
    _C("prop-3.5-nodes", "hesse", "Prop 3.5 proof, 'six singular points of Dynkin type A1'",
       "the double plane has 6 nodes", "6", lambda: str(hesse.six_node_check().total)),
    _C("prop-3.5-transcendental", "hesse", "Prop 3.5, 'a11 = a22 = 6'",
       "T = diag(6, 6) is consistent with rho = 20", "det=36 rank=2 rho+rank=22", _transcendental),
    _C("prop-4.1", "chars", "Prop 4.1 and Claims 4.2-4.3",
       "Lefschetz rank 5, unique decomposition, mu3 analysis, twisted trace",
       "rank=5 decomposition=[(1, 1, 0, 0, 1, 0)] mu3=[(0, 0, 0), (1, 2, 0), (2, 1, 0)] "
       "twisted=2+3w (not an integer)", _prop41, 9),
    _C("prop-4.1-a6", "chars", "§4, 'the order structure of A6'",
       "A6 order, classes, missing subgroups, character table",
       "order=360 classes=(1, 45, 40, 40, 90, 72, 72) no_subgroup_of_order=[30, 40, 45] "
       "orthogonality=True", _a6, 8),
    _C("prop-4.1-lefschetz", "chars", "Prop 4.1 proof, '(24 + 8·45 + 6·80 + 4·90 + 4·144)/360 = 5'",
       "invariant rank 5", "5", lambda: str(permchar.lefschetz_rank())),
    _C("prop-4.5", "quadform", "Prop 4.5 proof, '(n, m) = (90, 1) or (10, 3)'",
       "nm^2 = 90 endgame", "nm^2=90: [(90, 1), (10, 3)]; (90, 1)->Z/180; (10, 3)->Z/3 ⊕ Z/60; "
       "l=1: none; survivors=[(10, 3)]", _prop45, 12),
    _C("prop-4.6", "niemeier", "Prop 4.6, '≅ Z/3 ⊕ Z/60'", "Z/3 ⊕ Z/60", "Z/3 ⊕ Z/60", _prop46),
    _C("roots-configuration", "roots", "Figures 1, 2, 4, 5",
       "R, pentagon, A9 and D9 configurations",
       "R=A2 A2 A1 A1 pentagon=match a9=A9 d9=D9", _roots_config, 4),
    _C("sec-4-twisted-trace", "chars", "§4, 'tr (τg)* | S(X) = 1 + 2ζ3 − ζ3²'",
       "1 + 2w - w^2 is not an integer", "2+3w (not an integer)", _twisted_text),
    _C("thm-2.1-leech", "leech", "§2, 'spanned by the vectors 2μ_K and μ_Ω − 4μ_∞'",
       "unimodular, rootless, 196560 minimal vectors",
       "det=1 rank=24 no_roots=True norm4=196560 shapes=(97152, 98304, 1104)", _leech, 2),
], key=lambda c: c.id))

GROUPS = ("golay", "leech", "roots", "pentagon", "quadform", "chars", "niemeier", "hesse")


def by_id(claim_id: str) -> Claim:
    for c in CLAIMS:
        if c.id == claim_id:
            return c
    raise KeyError(claim_id)


def for_criterion(n: int) -> Claim:
    hits = [c for c in CLAIMS if c.criterion == n]
    if len(hits) != 1:
        raise LookupError(f"criterion {n} maps to {len(hits)} claims")
    return hits[0]


def select(group: str | None = None, pattern: str | None = None) -> list[Claim]:
    from fnmatch import fnmatchcase

    out = [c for c in CLAIMS if group in (None, "verify-all") or c.group == group]
    if pattern:
        out = [c for c in out if fnmatchcase(c.id, pattern)]
    return out


def list_claims() -> list[str]:
    return [f"{c.id}: {c.summary}  [{c.paper_ref}]" for c in CLAIMS]
