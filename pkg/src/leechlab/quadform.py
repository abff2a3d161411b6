"""Integer Gram matrices, Smith/Hermite normal forms and discriminant forms.

All arithmetic is exact: matrices are lists of Python ints, rational
values are ``fractions.Fraction``.  Values of a finite quadratic form
live in Q/2Z and are kept reduced into [0, 2); bilinear values live in
Q/Z and are kept in [0, 1).

Sign convention: lattices are taken with the Gram matrix as given (the
root lattices here are negative definite), and q(x) = x.x mod 2 with no
sign flip.  With that convention the generators e1, e2 of the
discriminant group of A2+A2+A1+A1 have q = 1/6, matching the diagonal
intersection matrix diag(1/6, 1/6) directly.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

Matrix = list[list[int]]


def as_int_matrix(m) -> Matrix:
    return [[int(x) for x in row] for row in m]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def transpose(a):
    return [list(r) for r in zip(*a)]


def is_symmetric(m) -> bool:
    return all(m[i][j] == m[j][i] for i in range(len(m)) for j in range(i))


def det(m) -> Fraction:
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant needs a square matrix")
    d = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            d = -d
        d *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return d


def inverse(m) -> list[list[Fraction]]:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


# -- Smith normal form ---------------------------------------------------

def smith_normal_form(m) -> tuple[Matrix, Matrix, Matrix]:
    """Return (D, U, V) with U*M*V = D diagonal, d_i | d_{i+1}.

    U and V are unimodular.  Pivots are chosen by smallest absolute
    value, which keeps entries small on the matrices met here.
    """
    a = as_int_matrix(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, k):  # row[dst] += k * row[src]
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, k):  # col[dst] += k * col[src]
        for r in a:
            r[dst] += k * r[src]
        for r in v:
            r[dst] += k * r[src]

    for t in range(min(rows, cols)):
        while True:
            nz = [(abs(a[i][j]), i, j) for i in range(t, rows)
                  for j in range(t, cols) if a[i][j]]
            if not nz:
                break
            _, i, j = min(nz)
            swap_rows(t, i)
            swap_cols(t, j)
            p = a[t][t]
            clean = True
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    add_row(t, i, -q)
                if a[i][t]:
                    clean = False
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    add_col(t, j, -q)
                if a[t][j]:
                    clean = False
            if not clean:
                continue
            # divisibility: p must divide every remaining entry
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if a[i][j] % p), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return a, u, v


def invariant_factors(m) -> list[int]:
    """Diagonal of the Smith form, zeros included for rank deficiency."""
    d, _, _ = smith_normal_form(m)
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


def format_invariant_factors(factors: Sequence[int]) -> str:
    """``"d1 d2 ... dk"`` with the 1s omitted."""
    return " ".join(str(d) for d in factors if d != 1)


def format_gram(m) -> str:
    """First line n, then n rows of n integers."""
    m = as_int_matrix(m)
    lines = [str(len(m))] + [" ".join(str(x) for x in row) for row in m]
    return "\n".join(lines) + "\n"


def parse_gram(text: str) -> Matrix:
    lines = [l.split() for l in text.strip().splitlines() if l.strip()]
    n = int(lines[0][0])
    rows = [[int(x) for x in l] for l in lines[1:]]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"expected {n} rows of {n} integers")
    return rows


# -- Hermite normal form -------------------------------------------------

def hermite_normal_form(rows) -> Matrix:
    """Row-style HNF of the lattice spanned by ``rows`` (zero rows dropped).

    Pivots are positive and entries above each pivot are reduced into
    [0, pivot).
    """
    a = [list(map(int, r)) for r in rows if any(r)]
    if not a:
        return []
    ncols = len(a[0])
    basis: Matrix = []
    for c in range(ncols):
        live = [r for r in a if r[c]]
        rest = [r for r in a if not r[c]]
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[c]))
            p = live[0]
            nxt = [p]
            for r in live[1:]:
                q = r[c] // p[c]
                r = [x - q * y for x, y in zip(r, p)]
                if r[c]:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            live = nxt
        a = rest
        if live:
            p = live[0]
            if p[c] < 0:
                p = [-x for x in p]
            basis.append(p)
    for i, p in enumerate(basis):
        c = next(k for k, x in enumerate(p) if x)
        for j in range(i):
            q = basis[j][c] // p[c]
            if q:
                basis[j] = [x - q * y for x, y in zip(basis[j], p)]
    return basis


# -- finite quadratic forms ----------------------------------------------

def _mod(x: Fraction, n: int) -> Fraction:
    x = Fraction(x)
    return x - n * math.floor(x / n)


@dataclass(frozen=True, eq=False)
class FiniteQuadraticForm:
    """A finite abelian group prod Z/d_i with a Q/2Z-valued quadratic form.

    Elements are tuples (k_1, ..., k_r) with 0 <= k_i < d_i.  The form is
    pinned down by q on the generators and b between generators.

    For forms computed from a lattice, ``gens`` holds the generators as
    rational vectors in the lattice basis and ``_vinv`` maps dual vectors
    back to group coordinates.
    """

    invariant_factors: tuple[int, ...]
    q_gens: tuple[Fraction, ...]
    b_gens: tuple[tuple[Fraction, ...], ...]
    modulus: int = 2
    gens: tuple[tuple[Fraction, ...], ...] | None = None
    gram: tuple[tuple[int, ...], ...] | None = field(default=None, repr=False)
    _vinv: tuple[tuple[int, ...], ...] | None = field(default=None, repr=False)

    @classmethod
    def from_values(cls, invariant_factors, q_gens, b_gens, modulus=2):
        return cls(tuple(invariant_factors),
                   tuple(_mod(Fraction(x), modulus) for x in q_gens),
                   tuple(tuple(_mod(Fraction(x), 1) for x in r) for r in b_gens),
                   modulus)

    @property
    def order(self) -> int:
        return math.prod(self.invariant_factors)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def zero(self):
        return (0,) * self.rank

    def elements(self):
        return list(product(*(range(d) for d in self.invariant_factors)))

    def add(self, x, y):
        return tuple((a + b) % d for a, b, d in zip(x, y, self.invariant_factors))

    def neg(self, x):
        return tuple(-a % d for a, d in zip(x, self.invariant_factors))

    def scale(self, k: int, x):
        return tuple(k * a % d for a, d in zip(x, self.invariant_factors))

    def element_order(self, x) -> int:
        o = 1
        for a, d in zip(x, self.invariant_factors):
            o = math.lcm(o, d // math.gcd(a, d))
        return o

    def q(self, x) -> Fraction:
        r = self.rank
        val = sum(x[i] * x[i] * self.q_gens[i] for i in range(r))
        val += 2 * sum(x[i] * x[j] * self.b_gens[i][j]
                       for i in range(r) for j in range(i + 1, r))
        return _mod(val, self.modulus)

    def b(self, x, y) -> Fraction:
        r = self.rank
        return _mod(sum(x[i] * y[j] * self.b_gens[i][j]
                        for i in range(r) for j in range(r)), 1)

    def values(self) -> dict[tuple, Fraction]:
        return {x: self.q(x) for x in self.elements()}

    def element_of(self, vec) -> tuple[int, ...]:
        """Group coordinates of a dual-lattice vector (lattice-basis coords)."""
        if self._vinv is None:
            raise ValueError("form was not built from a lattice")
        vec = [Fraction(x) for x in vec]
        if any((sum(g * x for g, x in zip(row, vec))).denominator != 1 for row in self.gram):
            raise ValueError("vector is not in the dual lattice")
        y = [sum(r * x for r, x in zip(row, vec)) for row in self._vinv]
        k = y[len(y) - self.rank:]
        out = []
        for val, d in zip(k, self.invariant_factors):
            t = val * d
            if t.denominator != 1:
                raise ValueError("vector is not in the dual lattice")
            out.append(int(t) % d)
        return tuple(out)


def discriminant_form(gram, even: bool = True) -> FiniteQuadraticForm:
    """(A_M, q_M) for the lattice with Gram matrix ``gram``.

    Generators are the columns of V scaled by 1/d_i, where U*G*V = D is
    the Smith form: the dual lattice is G^-1 Z^n = V D^-1 Z^n.
    """
    g = as_int_matrix(gram)
    n = len(g)
    if not is_symmetric(g):
        raise ValueError("Gram matrix must be symmetric")
    if even and any(g[i][i] % 2 for i in range(n)):
        raise ValueError("even lattice needs an even diagonal")
    if det(g) == 0:
        raise ValueError("singular Gram matrix")
    d, _, v = smith_normal_form(g)
    diag = [d[i][i] for i in range(n)]
    keep = [i for i in range(n) if diag[i] != 1]
    gens = [tuple(Fraction(v[r][i], diag[i]) for r in range(n)) for i in keep]

    def pair(x, y):
        return sum(x[i] * g[i][j] * y[j] for i in range(n) for j in range(n))

    modulus = 2 if even else 1
    q_gens = tuple(_mod(pair(x, x), modulus) for x in gens)
    b_gens = tuple(tuple(_mod(pair(x, y), 1) for y in gens) for x in gens)
    vinv = inverse(v)
    return FiniteQuadraticForm(
        tuple(diag[i] for i in keep), q_gens, b_gens, modulus,
        gens=tuple(gens), gram=tuple(map(tuple, g)),
        _vinv=tuple(tuple(int(x) for x in row) for row in vinv),
    )


def isotropic_elements(form: FiniteQuadraticForm) -> list[tuple]:
    z = form.zero()
    return [x for x in form.elements() if x != z and form.q(x) == 0]


@dataclass(frozen=True)
class OrthogonalGroup:
    order: int
    census: dict[int, int]
    # each isometry as the images of the generators
    maps: tuple[tuple[tuple[int, ...], ...], ...]


MAX_GROUP = 10_000


def orthogonal_group_of_form(form: FiniteQuadraticForm) -> OrthogonalGroup:
    """All automorphisms of the group that preserve q, by backtracking.

    Generator images are chosen one at a time, pruned by q, by b against
    earlier images and by order; bijectivity is checked at the end.
    """
    if form.order > MAX_GROUP:
        raise ValueError(f"group of order {form.order} exceeds the cap {MAX_GROUP}")
    elems = form.elements()
    r = form.rank
    ds = form.invariant_factors
    index = {x: i for i, x in enumerate(elems)}

    def image(imgs, x):
        y = form.zero()
        for k, g in zip(x, imgs):
            y = form.add(y, form.scale(k, g))
        return y

    found = []

    def extend(imgs):
        i = len(imgs)
        if i == r:
            perm = tuple(index[image(imgs, x)] for x in elems)
            if len(set(perm)) == len(elems):
                found.append((tuple(imgs), perm))
            return
        for y in elems:
            if form.element_order(y) != ds[i]:
                continue
            if form.q(y) != form.q_gens[i]:
                continue
            if any(form.b(y, imgs[j]) != form.b_gens[i][j] for j in range(i)):
                continue
            extend(imgs + [y])

    extend([])
    census = Counter(_perm_order(p) for _, p in found)
    return OrthogonalGroup(len(found), dict(sorted(census.items())),
                           tuple(m for m, _ in found))


def _perm_order(p) -> int:
    seen = [False] * len(p)
    o = 1
    for s in range(len(p)):
        if seen[s]:
            continue
        n, x = 0, s
        while not seen[x]:
            seen[x] = True
            x = p[x]
            n += 1
        o = math.lcm(o, n)
    return o


def phi4_induced_action() -> list[list[int]]:
    """Matrix over Z/6 of the order-4 diagram symmetry on A_R.

    The symmetry c -> x0 -> z -> r0 -> c, x1 <-> x2 is applied to the root
    basis and transported to the basis (e1, e2) of A_R; column j holds
    the image of e_j.
    """
    from .hyperbolic import r_basis_gram, r_discriminant_basis, ROOT_NAMES

    g = r_basis_gram()
    perm = {"c": "x0", "x0": "z", "z": "r0", "r0": "c", "x1": "x2", "x2": "x1"}
    n = len(ROOT_NAMES)
    p = [[0] * n for _ in range(n)]
    for j, name in enumerate(ROOT_NAMES):
        p[ROOT_NAMES.index(perm[name])][j] = 1
    if matmul(matmul(transpose(p), g), p) != g:
        raise ValueError("permutation is not an isometry of R")
    form = discriminant_form(g)
    e = r_discriminant_basis()
    coords = [form.element_of(x) for x in e]
    cols = []
    for x in e:
        img = form.element_of([sum(p[i][j] * x[j] for j in range(n)) for i in range(n)])
        hit = [(a, b) for a in range(6) for b in range(6)
               if form.add(form.scale(a, coords[0]), form.scale(b, coords[1])) == img]
        if len(hit) != 1:
            raise ValueError("e1, e2 do not form a basis of A_R")
        cols.append(hit[0])
    return [[cols[0][0], cols[1][0]], [cols[0][1], cols[1][1]]]


# -- invariant lattice endgame ------------------------------------------

def invariant_lattice_gram(n: int, m: int) -> Matrix:
    """Gram of <v1, v2, (v1 + v2 + H)/2> with v_i^2 = 2m, H^2 = 2n."""
    if n % 2:
        raise ValueError("n must be even for the half-integral basis")
    return [[2 * m, 0, m], [0, 2 * m, m], [m, m, m + n // 2]]


@dataclass(frozen=True)
class EndgameReport:
    solutions: tuple[tuple[int, int], ...]
    factors: dict[tuple[int, int], tuple[int, ...]]
    target: tuple[int, ...]
    survivors: tuple[tuple[int, int], ...]
    index_one_solutions: tuple[tuple[int, int], ...]


def endgame_solver(target=(3, 60)) -> EndgameReport:
    """Solve 2n * 4m^2 = 4 * |A| (index 2) and 2n * 4m^2 = |A| (index 1).

    For each index-2 solution the invariant lattice's discriminant group is
    compared against ``target``.
    """
    size = math.prod(target)
    sols = tuple((n, m) for m in range(1, size + 1) for n in range(1, 4 * size + 1)
                 if 2 * n * 4 * m * m == 4 * size)
    idx1 = tuple((n, m) for m in range(1, size + 1) for n in range(1, size + 1)
                 if 2 * n * 4 * m * m == size)
    facs = {}
    for n, m in sols:
        facs[(n, m)] = tuple(d for d in invariant_factors(invariant_lattice_gram(n, m)) if d != 1)
    surv = tuple(s for s in sols if facs[s] == tuple(target))
    return EndgameReport(sols, facs, tuple(target), surv, idx1)
