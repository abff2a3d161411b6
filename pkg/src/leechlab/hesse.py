"""The Hesse pencil  lam*(X^3 + Y^3 + Z^3) = 3*mu*XYZ  and its base change
along [S:T] -> [S^2 : S^2 + T^2].

Everything is exact over Z[w], w a primitive cube root of unity.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable, Mapping

from .rings import Eisenstein, ONE, ZERO, OMEGA, omega_power

XYZ = ("X", "Y", "Z")


class CycloPoly:
    """Sparse polynomial with Z[w] coefficients, keyed by exponent tuples."""

    __slots__ = ("vars", "terms")

    def __init__(self, terms: Mapping[tuple[int, ...], Eisenstein] | None = None,
                 vars: tuple[str, ...] = XYZ):
        self.vars = tuple(vars)
        clean = {}
        for mono, c in (terms or {}).items():
            c = Eisenstein.coerce(c)
            if len(mono) != len(self.vars):
                raise ValueError(f"monomial {mono} does not match {self.vars}")
            if c:
                clean[tuple(int(e) for e in mono)] = c
        self.terms = clean

    @classmethod
    def var(cls, name: str, vars: tuple[str, ...] = XYZ) -> "CycloPoly":
        mono = tuple(int(v == name) for v in vars)
        if sum(mono) != 1:
            raise ValueError(f"unknown variable {name!r}")
        return cls({mono: ONE}, vars)

    @classmethod
    def const(cls, c, vars: tuple[str, ...] = XYZ) -> "CycloPoly":
        return cls({(0,) * len(vars): Eisenstein.coerce(c)}, vars)

    @classmethod
    def linear(cls, coeffs: Iterable, vars: tuple[str, ...] = XYZ) -> "CycloPoly":
        out = {}
        for i, c in enumerate(coeffs):
            mono = tuple(int(j == i) for j in range(len(vars)))
            out[mono] = Eisenstein.coerce(c)
        return cls(out, vars)

    def _lift(self, other) -> "CycloPoly":
        if isinstance(other, CycloPoly):
            if other.vars != self.vars:
                raise ValueError("variable sets differ")
            return other
        return CycloPoly.const(other, self.vars)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, ZERO) + c
        return CycloPoly(out, self.vars)

    __radd__ = __add__

    def __neg__(self):
        return CycloPoly({m: -c for m, c in self.terms.items()}, self.vars)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, ZERO) + c1 * c2
        return CycloPoly(out, self.vars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = CycloPoly.const(1, self.vars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            other = self._lift(other)
        except (ValueError, TypeError):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def scale_var(self, name: str, c) -> "CycloPoly":
        """Substitute name -> c * name."""
        i = self.vars.index(name)
        c = Eisenstein.coerce(c)
        return CycloPoly({m: coef * c ** m[i] for m, coef in self.terms.items()}, self.vars)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, reverse=True):
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in zip(self.vars, m) if e)
            c = self.terms[m]
            if not mono:
                parts.append(str(c))
            elif c == ONE:
                parts.append(mono)
            elif c == -ONE:
                parts.append(f"-{mono}")
            elif c.b == 0 or c.a == 0:
                parts.append(f"{c}*{mono}")
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def _X():
    return CycloPoly.var("X"), CycloPoly.var("Y"), CycloPoly.var("Z")


def hesse_cubic(lam, mu) -> CycloPoly:
    X, Y, Z = _X()
    return Eisenstein.coerce(lam) * (X ** 3 + Y ** 3 + Z ** 3) - 3 * Eisenstein.coerce(mu) * X * Y * Z


def hesse_triangle_factorization(k: int) -> tuple[CycloPoly, CycloPoly, CycloPoly]:
    """Three lines whose product is X^3 + Y^3 + Z^3 - 3 w^k XYZ.

    For k = 0 these are X + w^j Y + w^(2j) Z; other k follow by Z -> w^k Z,
    which leaves Z^3 alone and multiplies XYZ by w^k.
    """
    if k not in (0, 1, 2):
        raise ValueError("k must be 0, 1 or 2")
    m = omega_power(k)
    lines = tuple(
        CycloPoly.linear((ONE, omega_power(j), omega_power(2 * j) * m)) for j in range(3))
    prod = lines[0] * lines[1] * lines[2]
    if prod != hesse_cubic(1, m):
        raise ArithmeticError(f"factorization failed for k = {k}")
    return lines


def lambda_zero_fiber() -> tuple[CycloPoly, CycloPoly, CycloPoly]:
    """The member [0:1] is -3XYZ: the coordinate triangle."""
    lines = tuple(CycloPoly.var(v) for v in XYZ)
    if hesse_cubic(0, 1) != -3 * lines[0] * lines[1] * lines[2]:
        raise ArithmeticError("lambda = 0 member is not a triangle")
    return lines


# -- base points and the double cover ---------------------------------------

@dataclass(frozen=True)
class BasePoint:
    lam: Eisenstein
    mu: Eisenstein

    def __str__(self):
        return f"[{self.lam}:{self.mu}]"


SINGULAR_BASE_POINTS = (
    BasePoint(ZERO, ONE),
    BasePoint(ONE, ONE),
    BasePoint(ONE, OMEGA),
    BasePoint(ONE, OMEGA * OMEGA),
)


@dataclass(frozen=True)
class FiberRow:
    base_point: str
    kodaira: str
    components: int
    euler: int


@dataclass(frozen=True)
class FiberTable:
    rows: tuple[FiberRow, ...]

    def euler_sum(self) -> int:
        return sum(r.euler for r in self.rows)

    def type_counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for r in self.rows:
            out[r.kodaira] = out.get(r.kodaira, 0) + 1
        return dict(sorted(out.items()))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["base_point", "type", "components", "euler"])
        for r in self.rows:
            w.writerow([r.base_point, r.kodaira, r.components, r.euler])
        return buf.getvalue()


def _i(n: int, where: str) -> FiberRow:
    # I_n: a cycle of n rational curves, Euler number n
    return FiberRow(where, f"I{n}", n, n)


def base_fibers() -> FiberTable:
    """The rational elliptic surface: four triangles (I3)."""
    for p in SINGULAR_BASE_POINTS:
        if p.lam == ZERO:
            lambda_zero_fiber()
        else:
            k = [omega_power(j) for j in range(3)].index(p.mu)
            hesse_triangle_factorization(k)
    return FiberTable(tuple(_i(3, str(p)) for p in SINGULAR_BASE_POINTS))


def preimage_quadratic(p: BasePoint) -> tuple[Eisenstein, Eisenstein, Eisenstein]:
    """(a, b, c) with a S^2 + b ST + c T^2 = 0 cutting out the preimage of p.

    [S^2 : S^2 + T^2] = [lam : mu]  <=>  (mu - lam) S^2 - lam T^2 = 0.
    """
    return (p.mu - p.lam, ZERO, -p.lam)


def preimage_count(p: BasePoint) -> int:
    a, b, c = preimage_quadratic(p)
    if not (a or b or c):
        raise ValueError("degenerate base point")
    disc = b * b - 4 * a * c
    return 2 if disc else 1


def branch_points() -> list[BasePoint]:
    """Points of the singular-fibre list over which the cover ramifies.

    The discriminant 4*lam*(mu - lam) vanishes only at [0:1] and [1:1].
    """
    return [p for p in SINGULAR_BASE_POINTS if preimage_count(p) == 1]


def _preimage_labels(p: BasePoint) -> list[str]:
    a, _, c = preimage_quadratic(p)
    if not c:
        return ["[0:1]"]          # S^2 = 0
    if not a:
        return ["[1:0]"]          # T^2 = 0
    if p.lam != ONE:
        raise ValueError("only base points with lam = 1 are labelled")
    r = p.mu - p.lam
    return [f"[1:+sqrt({r})]", f"[1:-sqrt({r})]"]


def base_change_fibers() -> FiberTable:
    """Pull back the four I3 fibres: ramified points give I6, the others split."""
    rows = []
    for base, p in zip(base_fibers().rows, SINGULAR_BASE_POINTS):
        n = base.components
        labels = _preimage_labels(p)
        e = 2 // len(labels)    # ramification index
        if len(labels) != preimage_count(p):
            raise ArithmeticError("preimage labels disagree with the discriminant")
        rows.extend(_i(n * e, lab) for lab in labels)
    return FiberTable(tuple(rows))


def shioda_tate_bound(table: FiberTable) -> int:
    """2 + sum (m_v - 1); a lower bound for the Picard number."""
    return 2 + sum(r.components - 1 for r in table.rows)


# -- nodes of the double plane ----------------------------------------------

def _coeffs(line: CycloPoly) -> tuple[Eisenstein, ...]:
    if line.degree() != 1 or not line.is_homogeneous():
        raise ValueError("not a linear form")
    return tuple(line.terms.get(tuple(int(j == i) for j in range(3)), ZERO) for i in range(3))


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def det3(rows) -> Eisenstein:
    return _dot(rows[0], _cross(rows[1], rows[2]))


@dataclass(frozen=True)
class TriangleNodes:
    points: tuple[tuple[Eisenstein, ...], ...]
    det: Eisenstein


def triangle_nodes(lines) -> TriangleNodes:
    """Pairwise intersection points of three lines, by exact cross products."""
    cs = [_coeffs(l) for l in lines]
    pts = []
    for i in range(3):
        for j in range(i + 1, 3):
            p = _cross(cs[i], cs[j])
            if not any(p):
                raise ValueError("two of the lines coincide")
            if _dot(cs[i], p) or _dot(cs[j], p):
                raise ArithmeticError("intersection point not on both lines")
            if all(any(_cross(p, q)) for q in pts):
                pts.append(p)
    return TriangleNodes(tuple(pts), det3(cs))


@dataclass(frozen=True)
class NodeReport:
    per_triangle: tuple[int, ...]
    dets: tuple[Eisenstein, ...]

    @property
    def total(self) -> int:
        return sum(self.per_triangle)


def six_node_check() -> NodeReport:
    """Nodes of the double plane: the vertices of the two branch triangles
    (the [0:1] and [1:1] members), none of which is a triple point."""
    tris = [triangle_nodes(lambda_zero_fiber()), triangle_nodes(hesse_triangle_factorization(0))]
    return NodeReport(tuple(len(t.points) for t in tris), tuple(t.det for t in tris))


# -- transcendental lattice (taken as given) --------------------------------

TRANSCENDENTAL_GRAM = ((6, 0), (0, 6))


@dataclass(frozen=True)
class TranscendentalCheck:
    det: int
    rank: int
    picard: int

    @property
    def ok(self) -> bool:
        return self.picard + self.rank == 22


def transcendental_check(picard: int | None = None) -> TranscendentalCheck:
    (a, b), (c, d) = TRANSCENDENTAL_GRAM
    rho = shioda_tate_bound(base_change_fibers()) if picard is None else picard
    return TranscendentalCheck(a * d - b * c, len(TRANSCENDENTAL_GRAM), rho)
