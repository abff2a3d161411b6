import csv
import io

import pytest
import sympy
from hypothesis import given, strategies as st

from leechlab import hesse
from leechlab.hesse import BasePoint, CycloPoly, SINGULAR_BASE_POINTS
from leechlab.rings import Eisenstein, ONE, OMEGA, ZERO, omega_power

w, X, Y, Z = sympy.symbols("w X Y Z")


def to_sympy(p: CycloPoly):
    expr = 0
    for (i, j, k), c in p.terms.items():
        expr += (c.a + c.b * w) * X ** i * Y ** j * Z ** k
    return expr


def reduce_w(expr):
    """Normal form in Z[w][X, Y, Z] modulo w^2 + w + 1."""
    poly = sympy.Poly(sympy.expand(expr), X, Y, Z)
    out = 0
    for mono, c in poly.terms():
        r = sympy.rem(sympy.Poly(c, w), sympy.Poly(w ** 2 + w + 1, w)).as_expr()
        out += r * X ** mono[0] * Y ** mono[1] * Z ** mono[2]
    return sympy.expand(out)


@pytest.mark.parametrize("k", [0, 1, 2])
def test_triangle_factorization_against_sympy(k):
    lines = hesse.hesse_triangle_factorization(k)
    prod = reduce_w(sympy.Mul(*[to_sympy(l) for l in lines]))
    target = reduce_w(X ** 3 + Y ** 3 + Z ** 3 - 3 * w ** k * X * Y * Z)
    assert sympy.expand(prod - target) == 0
    assert all(l.degree() == 1 and l.is_homogeneous() for l in lines)


def test_factorization_rejects_bad_k():
    with pytest.raises(ValueError):
        hesse.hesse_triangle_factorization(3)


def test_lambda_zero_member():
    lines = hesse.lambda_zero_fiber()
    assert [str(l) for l in lines] == ["X", "Y", "Z"]
    assert hesse.hesse_cubic(0, 1) == -3 * lines[0] * lines[1] * lines[2]


def test_smooth_member_does_not_factor():
    # mu^3 = lam^3 picks out the singular members; mu = 2 gives a smooth cubic
    c = hesse.hesse_cubic(1, 2)
    grads = [sympy.diff(to_sympy(c), v) for v in (X, Y, Z)]
    sols = sympy.solve(grads, [X, Y, Z], dict=True)
    assert all(s.get(X, X) == 0 and s.get(Y, Y) == 0 and s.get(Z, Z) == 0 for s in sols)


eis = st.builds(Eisenstein, st.integers(-3, 3), st.integers(-3, 3))
mono = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
polys = st.dictionaries(mono, eis, max_size=4).map(CycloPoly)


@given(polys, polys, polys)
def test_cyclopoly_ring_laws(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + q == q + p
    assert (p - p).is_zero()


@given(polys, polys)
def test_cyclopoly_matches_sympy(p, q):
    assert reduce_w(to_sympy(p * q)) == reduce_w(to_sympy(p) * to_sympy(q))
    if not p.is_zero() and not q.is_zero():
        assert (p * q).degree() == p.degree() + q.degree()


def test_cyclopoly_misc():
    x = CycloPoly.var("X")
    assert (x + 1) ** 2 == x * x + 2 * x + 1
    assert str(CycloPoly.linear((ONE, OMEGA, ZERO))) == "X + w*Y"
    assert str(CycloPoly.linear((-ONE, ONE + OMEGA, 3))) == "-X + (1+w)*Y + 3*Z"
    assert hesse.hesse_cubic(1, 0).scale_var("Z", OMEGA) == hesse.hesse_cubic(1, 0)
    with pytest.raises(ValueError):
        CycloPoly.var("W")
    with pytest.raises(ValueError):
        CycloPoly({(1, 0): ONE})


def test_base_fibers():
    t = hesse.base_fibers()
    assert t.type_counts() == {"I3": 4}
    assert t.euler_sum() == 12


def test_preimages_and_branching():
    # discriminant of (mu - lam) S^2 - lam T^2 is 4 lam (mu - lam)
    for p in SINGULAR_BASE_POINTS:
        a, b, c = hesse.preimage_quadratic(p)
        disc = b * b - 4 * a * c
        assert disc == 4 * p.lam * (p.mu - p.lam)
        assert hesse.preimage_count(p) == (1 if not disc else 2)
    assert [str(p) for p in hesse.branch_points()] == ["[0:1]", "[1:1]"]
    with pytest.raises(ValueError):
        hesse.preimage_count(BasePoint(ZERO, ZERO))


def test_preimage_points_map_back():
    # [1 : t] maps to [1 : 1 + t^2]; over mu = w^k we need t^2 = w^k - 1
    for k in (1, 2):
        r = omega_power(k) - ONE
        assert r * r == -3 * omega_power(k)     # (w - 1)^2 = -3w
        assert hesse.preimage_count(BasePoint(ONE, omega_power(k))) == 2


def test_base_change_table():
    t = hesse.base_change_fibers()
    assert t.type_counts() == {"I3": 4, "I6": 2}
    assert t.euler_sum() == 24
    assert hesse.shioda_tate_bound(t) == 20
    assert hesse.shioda_tate_bound(hesse.base_fibers()) == 10


def test_csv_export():
    text = hesse.base_change_fibers().to_csv()
    rows = list(csv.DictReader(io.StringIO(text)))
    assert list(rows[0]) == ["base_point", "type", "components", "euler"]
    assert len(rows) == 6
    assert sum(int(r["euler"]) for r in rows) == 24
    assert rows[0]["type"] == "I6"


def test_six_nodes():
    rep = hesse.six_node_check()
    assert rep.per_triangle == (3, 3) and rep.total == 6
    assert rep.dets[0] == ONE
    assert str(rep.dets[1]) == "-3-6w"
    # sympy: determinant of the k = 0 triangle, reduced mod w^2 + w + 1
    M = sympy.Matrix([[1, w ** j, w ** (2 * j)] for j in range(3)])
    assert reduce_w(M.det()) == -3 - 6 * w


def test_nodes_reject_coincident_lines():
    x = CycloPoly.var("X")
    with pytest.raises(ValueError):
        hesse.triangle_nodes((x, 2 * x, CycloPoly.var("Y")))


def test_transcendental():
    t = hesse.transcendental_check()
    assert (t.det, t.rank, t.picard) == (36, 2, 20) and t.ok
    assert not hesse.transcendental_check(19).ok
