"""One test per acceptance criterion; each records a pass/fail line that the
terminal summary prints at the end of the run."""

import json
import subprocess
import sys
from fractions import Fraction

import numpy as np

import conftest
from leechlab import golay, hesse, hyperbolic, leech, niemeier, permchar, quadform
from leechlab.hyperbolic import coxeter_type


def record(n, title, checks):
    ok = all(bool(c) for c in checks)
    conftest.ACCEPTANCE[n] = (title, ok)
    assert ok, f"criterion {n} failed: {[bool(c) for c in checks]}"


def test_criterion_01_golay():
    code = golay.build_golay()
    record(1, "Golay code: 12 / 4096 / 759 / 2576, Steiner over 42504 five-sets", [
        code.dimension == 12, len(code) == 4096,
        len(code.octads) == 759, len(code.dodecads) == 2576,
        golay.steiner_check(code),
    ])


def test_criterion_02_leech():
    rep = leech.verify_generators()
    vs = leech.enumerate_norm4()
    record(2, "Leech: det 1, rootless, 196560 norm -4 vectors with shapes (97152, 98304, 1104)", [
        rep.gram_det == 1, rep.rank == 24,
        leech.verify_no_roots(),
        len(vs) == 196560,
        leech.shape_counts(vs) == (759 * 2 ** 7, 24 * 2 ** 12, 276 * 4),
        leech.leech_membership(vs).all(),
    ])


def test_criterion_03_S():
    s = leech.count_S()
    record(3, "|S| = 81 = 30 + 48 + 3, X2 in S, |S'| = 276", [
        s.total == 81, s.case_counts == (30, 48, 3), s.contains_x2,
        leech.count_S_prime() == 276,
    ])


def test_criterion_04_roots():
    pent = [[-6, -3, -3, -3, -3], [-3, -4, -1, -2, -2], [-3, -1, -4, -2, -2],
            [-3, -2, -2, -4, -2], [-3, -2, -2, -2, -4]]
    record(4, "R = A2 A2 A1 A1, pentagon Gram, A9 and D9 chains", [
        sorted(coxeter_type(hyperbolic.build_R())) == ["A1", "A1", "A2", "A2"],
        hyperbolic.pentagon_gram() == pent,
        coxeter_type(hyperbolic.a9_chain()) == ["A9"],
        coxeter_type(hyperbolic.d9_chain()) == ["D9"],
    ])


def test_criterion_05_h():
    p = hyperbolic.weyl_projection()
    record(5, "h integral, primitive, orthogonal to R, h^2 = 20; w_R^2 = -5; w_tau^2 = 0; det 180", [
        p.h_in_lattice, p.h_primitive,
        all(v == 0 for v in p.h_pairings.values()),
        p.h_norm == 20, p.w_R_norm == -5,
        hyperbolic.w_tau_norm(20) == 0,
        hyperbolic.det_fixed_sublattice(20) == 180,
    ])


def test_criterion_06_discriminant():
    f = quadform.discriminant_form(hyperbolic.r_basis_gram())
    e1, e2 = (f.element_of(x) for x in hyperbolic.r_discriminant_basis())
    g = quadform.orthogonal_group_of_form(f)
    phi = quadform.phi4_induced_action()
    sq = [[sum(phi[i][k] * phi[k][j] for k in range(2)) % 6 for j in range(2)] for i in range(2)]
    fourth = [[sum(sq[i][k] * sq[k][j] for k in range(2)) % 6 for j in range(2)] for i in range(2)]
    record(6, "A_R = (Z/6)^2, q = diag(1/6, 1/6), anisotropic, |O| = 16, phi4 of order 4", [
        f.invariant_factors == (6, 6),
        f.q(e1) == f.q(e2) == Fraction(1, 6), f.b(e1, e2) == 0,
        quadform.isotropic_elements(f) == [],
        g.order == 16, g.census == {1: 1, 2: 11, 4: 4},
        phi == [[0, 5], [1, 0]],                  # e1 -> e2, e2 -> -e1
        sq != [[1, 0], [0, 1]], fourth == [[1, 0], [0, 1]],
    ])


def test_criterion_07_subset_sums():
    ms = [1, 10, 20, 20, 30, 30, 36, 36, 45, 45]
    record(7, "81 splits into orbit sizes in exactly 3 ways, 54 in none", [
        len(leech.subset_sum_decompositions(81, ms)) == 3,
        leech.subset_sum_decompositions(54, ms) == [],
    ])


def test_criterion_08_a6():
    G = permchar.build_a6()
    record(8, "A6: order 360, class sizes, no subgroups of order 30/40/45, exact orthogonality", [
        G.order == 360,
        G.class_sizes() == (1, 45, 40, 40, 90, 72, 72),
        not any(permchar.subgroup_of_order_exists(k) for k in (30, 40, 45)),
        permchar.verify_character_table(),
    ])


def test_criterion_09_characters():
    t = permchar.twisted_trace((1, 2, 0), "3A")
    record(9, "Lefschetz rank 5, unique decomposition, mu3 candidates, non-integral twisted trace", [
        permchar.lefschetz_rank() == 5,
        permchar.solve_decomposition() == [(1, 1, 0, 0, 1, 0)],
        permchar.mu3_candidates() == [(0, 0, 0), (1, 2, 0), (2, 1, 0)],
        t.value == permchar.EXPECTED_TWISTED_VALUE, not t.is_integer,
    ])


def test_criterion_10_invariant_grams():
    rows = niemeier.verify_invariant_grams().rows
    record(10, "three invariant Gram matrices with factors Z/3 + Z/60, |det| = 180", [
        len(rows) == 3,
        all(r.factors == (3, 60) and abs(r.det) == 180 and r.negative_definite for r in rows),
    ])


def test_criterion_11_partitions():
    rep = niemeier.a1_24_report()
    record(11, "A1^24 partitions (1,1,1,6,15), (1,1,6,6,10) after 3 exclusions; A2^12 (1,1,1,1,20)", [
        [p.parts for p in niemeier.partitions_a1_24()] == [(1, 1, 1, 6, 15), (1, 1, 6, 6, 10)],
        len(rep.excluded) == 3,
        [p.parts for p in niemeier.partitions_a2_12()] == [(1, 1, 1, 1, 20)],
    ])


def test_criterion_12_endgame():
    rep = quadform.endgame_solver()
    record(12, "nm^2 = 90: (90,1) -> Z/180, (10,3) -> Z/3 + Z/60, index-one branch empty", [
        rep.solutions == ((90, 1), (10, 3)),
        rep.factors[(90, 1)] == (180,),
        rep.factors[(10, 3)] == (3, 60),
        rep.index_one_solutions == (),
    ])


def test_criterion_13_hesse():
    for k in range(3):
        hesse.hesse_triangle_factorization(k)   # raises if any identity fails
    hesse.lambda_zero_fiber()
    t = hesse.base_change_fibers()
    record(13, "Hesse: exact factorizations, 2 I6 + 4 I3, Euler 24, Shioda-Tate 20, six nodes", [
        t.type_counts() == {"I3": 4, "I6": 2},
        t.euler_sum() == 24,
        hesse.shioda_tate_bound(t) == 20,
        hesse.six_node_check().total == 6,
    ])


def test_criterion_14_cli():
    def go():
        return subprocess.run([sys.executable, "-m", "leechlab", "verify-all", "--json"],
                              capture_output=True, text=True, encoding="utf-8")

    a, b = go(), go()
    strip = lambda s: [l for l in s.splitlines() if '"ms":' not in l]
    data = json.loads(a.stdout) if a.returncode == 0 else []
    record(14, "verify-all exits 0 with byte-stable JSON apart from timings", [
        a.returncode == 0, b.returncode == 0,
        strip(a.stdout) == strip(b.stdout),
        len(data) >= 30 and all(r["pass"] for r in data),
    ])
