"""The even unimodular Lorentzian lattice Lambda + U and its Leech roots.

A vector is (X, m, n) with X in the Leech lattice (nu-coordinates) and
(m, n) in the hyperbolic plane; the form is
(X1, X2) + m1*n2 + m2*n1.  The Weyl vector is w = (0, 0, 1) and a Leech
root is r with r^2 = -2 and (r, w) = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import leech
from .leech import C, R0, X0, X1, X2, nu, NU_OMEGA


@dataclass(frozen=True)
class LorentzVector:
    x: tuple[int, ...]
    m: int
    n: int

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(int(t) for t in self.x))
        if len(self.x) != leech.DIM:
            raise ValueError("Leech part must have 24 coordinates")

    @classmethod
    def from_array(cls, a) -> "LorentzVector":
        a = [int(t) for t in a]
        if len(a) != leech.DIM + 2:
            raise ValueError("expected 26 integers")
        return cls(tuple(a[:24]), a[24], a[25])

    def as_array(self) -> np.ndarray:
        return np.array(self.x + (self.m, self.n), dtype=np.int64)

    def __add__(self, o):
        return LorentzVector.from_array(self.as_array() + o.as_array())

    def __sub__(self, o):
        return LorentzVector.from_array(self.as_array() - o.as_array())

    def __neg__(self):
        return LorentzVector.from_array(-self.as_array())

    def __mul__(self, k: int):
        return LorentzVector.from_array(int(k) * self.as_array())

    __rmul__ = __mul__

    def in_lattice(self) -> bool:
        return leech.is_leech_vector(self.x)

    def __str__(self):
        return format_lorentz(self)


def _arr(v) -> np.ndarray:
    return v.as_array() if isinstance(v, LorentzVector) else np.asarray(v)


def form(u, v):
    """Bilinear form on 26-coordinate vectors; exact Fraction for rationals."""
    a, b = _arr(u), _arr(v)
    if a.dtype == object or b.dtype == object:
        dot = sum(Fraction(p) * Fraction(q) for p, q in zip(a[:24], b[:24]))
        return -dot / 8 + Fraction(a[24]) * b[25] + Fraction(a[25]) * b[24]
    return leech.inner(a[:24], b[:24]) + int(a[24]) * int(b[25]) + int(a[25]) * int(b[24])


WEYL = LorentzVector((0,) * 24, 0, 1)


def leech_root_of(X) -> LorentzVector:
    """The Leech root (X, 1, -X^2/2 - 1) attached to X in Lambda."""
    X = np.asarray(X, dtype=np.int64)
    if not leech.is_leech_vector(X):
        raise ValueError("not a Leech lattice vector")
    return LorentzVector(tuple(X.tolist()), 1, -leech.norm(X) // 2 - 1)


def leech_part_of(r: LorentzVector) -> np.ndarray:
    if not is_leech_root(r):
        raise ValueError("not a Leech root")
    return np.array(r.x, dtype=np.int64)


def is_leech_root(r: LorentzVector) -> bool:
    return r.in_lattice() and form(r, r) == -2 and form(r, WEYL) == 1


def gram(vs: Sequence) -> list[list[int]]:
    return [[form(u, v) for v in vs] for u in vs]


@dataclass(frozen=True)
class RootSet:
    names: tuple[str, ...]
    roots: tuple[LorentzVector, ...]

    def __post_init__(self):
        for name, r in zip(self.names, self.roots):
            if not is_leech_root(r):
                raise ValueError(f"{name} is not a Leech root")

    def __getitem__(self, name) -> LorentzVector:
        return self.roots[self.names.index(name)]

    def __len__(self):
        return len(self.roots)

    def gram(self):
        return gram(self.roots)


# -- ADE classification -----------------------------------------------------

def coxeter_type(roots_or_gram) -> list[str]:
    """ADE labels of the connected components, in order of first vertex.

    Accepts a RootSet or a Gram matrix with -2 on the diagonal and bonds
    marked by 1.
    """
    g = roots_or_gram.gram() if isinstance(roots_or_gram, RootSet) else roots_or_gram
    n = len(g)
    if any(g[i][i] != -2 for i in range(n)):
        raise ValueError("every root must have norm -2")
    adj = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if g[i][j] not in (0, 1) or g[j][i] != g[i][j]:
                raise ValueError(f"entry ({i},{j}) = {g[i][j]} is not a simply-laced bond")
            if g[i][j]:
                adj[i].append(j)
                adj[j].append(i)
    seen = [False] * n
    labels = []
    for s in range(n):
        if seen[s]:
            continue
        comp, stack = [], [s]
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in adj[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        labels.append(_classify(comp, adj))
    return labels


def _classify(comp, adj) -> str:
    k = len(comp)
    edges = sum(len(adj[v]) for v in comp) // 2
    if edges != k - 1:
        raise ValueError("component contains a cycle; not of ADE type")
    degs = {v: len(adj[v]) for v in comp}
    branch = [v for v in comp if degs[v] >= 3]
    if not branch:
        return f"A{k}"
    if len(branch) > 1 or degs[branch[0]] > 3:
        raise ValueError("component is not of ADE shape")
    centre = branch[0]
    arms = []
    for start in adj[centre]:
        length, prev, cur = 1, centre, start
        while True:
            nxt = [u for u in adj[cur] if u != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return f"D{k}"
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return f"E{k}"
    raise ValueError(f"arm lengths {arms} are not of ADE shape")


# -- the configuration R and its neighbours --------------------------------

ROOT_NAMES = ("c", "z", "x0", "r0", "x1", "x2")


def build_R() -> RootSet:
    code = leech.golay.build_golay()
    for K in (leech.K0, leech.K1, leech.K2):
        if leech.golay.mask_of(K) not in code:
            raise ValueError(f"{K} is not an octad")
    vecs = (C, leech.Z, X0, R0, X1, X2)
    return RootSet(ROOT_NAMES, tuple(leech_root_of(v) for v in vecs))


def r_basis_gram() -> list[list[int]]:
    return build_R().gram()


def r_discriminant_basis() -> list[list[Fraction]]:
    """e1, e2 in root-basis coordinates (c, z, x0, r0, x1, x2).

    e1 = (c+2z)/3 + (r0+2x0)/3 + x1/2,  e2 = (c+2z)/3 - (r0+2x0)/3 + x2/2.
    """
    t, h = Fraction(1, 3), Fraction(1, 2)
    return [
        [t, 2 * t, 2 * t, t, h, Fraction(0)],
        [t, 2 * t, -2 * t, -t, Fraction(0), h],
    ]


PENTAGON_NAMES = ("C", "X0", "R0", "X1", "X2")


def pentagon_gram() -> list[list[int]]:
    vs = (C, X0, R0, X1, X2)
    return [[leech.inner(u, v) for v in vs] for u in vs]


def _extra_roots() -> dict[str, LorentzVector]:
    k_u1 = (0, 5, 12, 13, 16, 20, 21, 22)
    k_v2 = ("inf", 0, 6, 7, 10, 12, 15, 18)
    code = leech.golay.build_golay()
    for K in (k_u1, k_v2):
        if leech.golay.mask_of(K) not in code:
            raise ValueError(f"{K} is not an octad")
    lam = {
        "u1": 4 * nu(0) + NU_OMEGA - 2 * nu(*k_u1),
        "u2": 4 * nu(0) + NU_OMEGA,
        "u3": NU_OMEGA - 4 * nu(5),
        "v1": NU_OMEGA - 4 * nu(7),
        "v2": 2 * nu(*k_v2),
    }
    stated = {"u1": (1, 1), "u2": (1, 2), "u3": (1, 1), "v1": (1, 1), "v2": (1, 1)}
    out = {}
    for name, X in lam.items():
        r = leech_root_of(X)
        if (r.m, r.n) != stated[name]:
            raise ValueError(f"{name}: hyperbolic part {(r.m, r.n)} != {stated[name]}")
        out[name] = r
    return out


def _chain(order) -> RootSet:
    R = build_R()
    pool = dict(zip(R.names, R.roots)) | _extra_roots()
    return RootSet(tuple(order), tuple(pool[n] for n in order))


A9_ORDER = ("x2", "u1", "c", "z", "u2", "r0", "x0", "u3", "x1")
D9_ORDER = ("c", "z", "u2", "r0", "x0", "v1", "v2", "x1", "x2")


def a9_chain() -> RootSet:
    rs = _chain(A9_ORDER)
    g = rs.gram()
    for i in range(9):
        for j in range(9):
            want = -2 if i == j else int(abs(i - j) == 1)
            if g[i][j] != want:
                raise ValueError("A9 order does not give a path")
    return rs


def d9_chain() -> RootSet:
    rs = _chain(D9_ORDER)
    g = rs.gram()
    # path c - z - u2 - r0 - x0 - v1 - v2, then v2 forks into x1 and x2
    bonds = {(i, i + 1) for i in range(6)} | {(6, 7), (6, 8)}
    for i in range(9):
        for j in range(9):
            want = -2 if i == j else int((min(i, j), max(i, j)) in bonds)
            if g[i][j] != want:
                raise ValueError("D9 order does not give the forked diagram")
    return rs


# -- Weyl vector projection -------------------------------------------------

@dataclass(frozen=True)
class RationalVector:
    """numerators / den, 26 coordinates."""

    num: tuple[int, ...]
    den: int

    def entries(self) -> np.ndarray:
        return np.array([Fraction(a, self.den) for a in self.num], dtype=object)

    def is_integral(self) -> bool:
        return all(a % self.den == 0 for a in self.num)


@dataclass(frozen=True)
class WeylProjection:
    w_R: RationalVector
    h: LorentzVector
    h_norm: int
    w_R_norm: Fraction
    h_pairings: dict[str, int]
    h_in_lattice: bool
    h_primitive: bool


def _primitive(v: LorentzVector) -> bool:
    """h/p is never in the lattice; only primes dividing the coordinate gcd
    can give an integral h/p, and those are tested directly."""
    a = v.as_array()
    g = math.gcd(*(int(t) for t in a))
    if g == 0:
        return False
    p = 2
    while g > 1:
        if g % p == 0:
            if np.all(a % p == 0) and leech.is_leech_vector(a[:24] // p):
                return False
            while g % p == 0:
                g //= p
        p += 1
    return True


def weyl_projection() -> WeylProjection:
    """w = w' + w_R with w_R = -(c + z + r0 + x0 + (x1 + x2)/2), h = 2w'."""
    R = build_R()
    twice = -(2 * (R["c"] + R["z"] + R["r0"] + R["x0"]) + R["x1"] + R["x2"])
    w_R = RationalVector(tuple(int(t) for t in twice.as_array()), 2)
    h = 2 * WEYL - twice
    e = w_R.entries()
    return WeylProjection(
        w_R=w_R,
        h=h,
        h_norm=form(h, h),
        w_R_norm=form(e, e),
        h_pairings={n: form(h, r) for n, r in zip(R.names, R.roots)},
        h_in_lattice=h.in_lattice(),
        h_primitive=_primitive(h),
    )


def w_tau_norm(h_sq: int) -> Fraction:
    """(H/2 + w_R)^2 for H orthogonal to R with H^2 = h_sq."""
    if h_sq % 2:
        raise ValueError("H^2 must be even")
    return Fraction(h_sq, 4) + weyl_projection().w_R_norm


def det_fixed_sublattice(h_sq: int = 20) -> int:
    """|det(ZH + R)| / 4, with det R read off the Gram of R."""
    from .quadform import det

    det_r = abs(det(r_basis_gram()))
    val = Fraction(h_sq) * det_r / 4
    if val.denominator != 1:
        raise ValueError("determinant quotient is not integral")
    return int(val)


def format_lorentz(v: LorentzVector) -> str:
    return " ".join(str(t) for t in v.x + (v.m, v.n))


def parse_lorentz(text: str) -> LorentzVector:
    return LorentzVector.from_array(text.split())
