from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from conftest import leech_member
from leechlab import hyperbolic as hy
from leechlab import leech
from leechlab.hyperbolic import LorentzVector, WEYL


def cartan_det(label):
    kind, n = label[0], int(label[1:])
    return {"A": n + 1, "D": 4, "E": 9 - n}[kind]


def diagram(n, bonds):
    g = [[-2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in bonds:
        g[i][j] = g[j][i] = 1
    return g


def path(n):
    return [(i, i + 1) for i in range(n - 1)]


def test_form_examples():
    assert hy.form(WEYL, WEYL) == 0
    z = hy.leech_root_of(leech.Z)
    assert hy.gram([z, WEYL]) == [[-2, 1], [1, 0]]
    assert hy.gram([WEYL]) == [[0]]
    u = LorentzVector((0,) * 24, 1, 0)
    assert hy.form(u, WEYL) == 1 and hy.form(u, u) == 0


def test_leech_root_of_zero_and_inverse():
    r = hy.leech_root_of(np.zeros(24, dtype=int))
    assert (r.m, r.n) == (1, -1)
    assert hy.is_leech_root(r)
    assert np.array_equal(hy.leech_part_of(hy.leech_root_of(leech.C)), leech.C)
    with pytest.raises(ValueError):
        hy.leech_root_of(leech.nu(0))
    with pytest.raises(ValueError):
        hy.leech_part_of(WEYL)


def test_lifted_root_products():
    # (r(X), r(Y)) = (X, Y) - X^2/2 - Y^2/2 - 2
    vs = [leech.C, leech.Z, leech.X0, leech.R0, leech.X1, leech.X2]
    for a in vs:
        for b in vs:
            want = leech.inner(a, b) - leech.norm(a) // 2 - leech.norm(b) // 2 - 2
            assert hy.form(hy.leech_root_of(a), hy.leech_root_of(b)) == want


def test_R_configuration():
    R = hy.build_R()
    assert R.names == hy.ROOT_NAMES and len(R) == 6
    g = R.gram()
    assert g == diagram(6, [(0, 1), (2, 3)])
    assert hy.coxeter_type(R) == ["A2", "A2", "A1", "A1"]
    assert abs(sympy.Matrix(g).det()) == 36 == 3 * 3 * 2 * 2


def test_pentagon():
    g = hy.pentagon_gram()
    assert g[0] == [-6, -3, -3, -3, -3]
    assert [g[i][i] for i in range(5)] == [-6, -4, -4, -4, -4]
    assert g[1][2] == -1 and g[3][4] == -2


@pytest.mark.parametrize("label,g", [
    ("A1", diagram(1, [])),
    ("A5", diagram(5, path(5))),
    ("D4", diagram(4, [(0, 1), (0, 2), (0, 3)])),
    ("D6", diagram(6, path(5) + [(3, 5)])),
    ("E6", diagram(6, path(5) + [(2, 5)])),
    ("E7", diagram(7, path(6) + [(2, 6)])),
    ("E8", diagram(8, path(7) + [(4, 7)])),
])
def test_coxeter_types(label, g):
    assert hy.coxeter_type(g) == [label]
    # negative definite with the Cartan determinant
    assert abs(sympy.Matrix(g).det()) == cartan_det(label)


@pytest.mark.parametrize("g", [
    diagram(3, [(0, 1), (1, 2), (0, 2)]),                     # affine A2 cycle
    diagram(5, [(0, 1), (0, 2), (0, 3), (0, 4)]),             # affine D4 star
    diagram(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]),   # affine E6 arms
    [[-2, 2], [2, -2]],
    [[-4]],
])
def test_coxeter_rejects(g):
    with pytest.raises(ValueError):
        hy.coxeter_type(g)


def test_a9_d9_chains():
    assert hy.coxeter_type(hy.a9_chain()) == ["A9"]
    assert hy.coxeter_type(hy.d9_chain()) == ["D9"]
    assert abs(sympy.Matrix(hy.a9_chain().gram()).det()) == 10
    assert abs(sympy.Matrix(hy.d9_chain().gram()).det()) == 4


def test_weyl_projection_against_linear_solve():
    R = hy.build_R()
    G = sympy.Matrix(R.gram())
    ones = sympy.Matrix([hy.form(WEYL, r) for r in R.roots])
    assert list(ones) == [1] * 6
    a = G.solve(ones)                                    # w_R = sum a_i r_i
    assert (a.T * G * a)[0] == -5
    p = hy.weyl_projection()
    roots = np.array([r.as_array() for r in R.roots], dtype=object)
    w_R = np.array([Fraction(int(x.p), int(x.q)) for x in a], dtype=object) @ roots
    assert list(w_R) == list(p.w_R.entries())
    assert p.w_R_norm == -5
    assert p.h_norm == 20
    assert set(p.h_pairings.values()) == {0}
    assert p.h_in_lattice and p.h_primitive
    # integral coordinates, but odd norm keeps w_R out of the lattice
    assert p.w_R.is_integral()
    assert not LorentzVector.from_array([x // 2 for x in p.w_R.num]).in_lattice()


def test_h_is_primitive_by_basis_oracle():
    _, member = leech_member()
    h = hy.weyl_projection().h.as_array()
    assert np.gcd.reduce(h) == 2
    assert member(h[:24]) and not member(h[:24] // 2)


def test_w_tau_norm():
    assert hy.w_tau_norm(20) == 0
    assert hy.w_tau_norm(0) == -5
    assert hy.w_tau_norm(180) == 40
    with pytest.raises(ValueError):
        hy.w_tau_norm(21)


def test_det_fixed_sublattice():
    assert hy.det_fixed_sublattice() == 180
    assert hy.det_fixed_sublattice(4) == 36
    assert hy.det_fixed_sublattice(20) == 20 * 36 // 4


def test_lorentz_io_roundtrip():
    for r in hy.build_R().roots:
        assert hy.parse_lorentz(hy.format_lorentz(r)) == r
    with pytest.raises(ValueError):
        hy.parse_lorentz("1 2 3")


@given(st.sampled_from(range(196560)), st.integers(-3, 3))
def test_lifted_norm4_roots(i, k):
    X = leech.enumerate_norm4()[i]
    r = hy.leech_root_of(X)
    assert hy.is_leech_root(r)
    assert r.n == 1                                        # -(-4)/2 - 1
    # shifting by a multiple of the isotropic e = (0, 0, 1) keeps r off the root set
    s = r + WEYL * k
    assert hy.is_leech_root(s) == (k == 0)
