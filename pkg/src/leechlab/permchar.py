"""A6 as even permutations of six points, with its character table.

Elements are indexed 0..359 in lexicographic order of their image
tuples; index 0 is the identity.  Products go through a precomputed
multiplication table, with (p * q)(i) = p(q(i)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import permutations, product

import numpy as np

from .rings import Eisenstein, QSqrt5, ONE, OMEGA, omega_power

NPTS = 6


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(i) for i in self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a bijection: {self.images}")

    @classmethod
    def from_cycles(cls, *cycles, n: int = NPTS) -> "Permutation":
        img = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a] = b
        return cls(tuple(img))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(self.images[i] for i in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def cycle_type(self) -> tuple[int, ...]:
        seen, lens = set(), []
        for s in range(len(self.images)):
            if s in seen:
                continue
            k, i = 0, s
            while i not in seen:
                seen.add(i)
                i = self.images[i]
                k += 1
            lens.append(k)
        return tuple(sorted(lens, reverse=True))

    def is_even(self) -> bool:
        return sum(k - 1 for k in self.cycle_type()) % 2 == 0

    def order(self) -> int:
        out = 1
        for k in self.cycle_type():
            out = out * k // np.gcd(out, k)
        return int(out)

    def fixed_points(self) -> int:
        return sum(i == j for i, j in enumerate(self.images))


CLASS_LABELS = ("1A", "2A", "3A", "3B", "4A", "5A", "5B")

# class representatives; 3A is a single 3-cycle so that chi_2 is the
# permutation character minus the trivial one, 5B holds the square of 5A
_REPS = {
    "1A": (),
    "2A": ((0, 1), (2, 3)),
    "3A": ((0, 1, 2),),
    "3B": ((0, 1, 2), (3, 4, 5)),
    "4A": ((0, 1, 2, 3), (4, 5)),
    "5A": ((0, 1, 2, 3, 4),),
    "5B": ((0, 2, 4, 1, 3),),
}


class A6:
    """The alternating group on 6 points with a full multiplication table."""

    def __init__(self):
        perms = [Permutation(p) for p in permutations(range(NPTS))]
        self.elements = [p for p in perms if p.is_even()]
        self.index = {p: i for i, p in enumerate(self.elements)}
        n = len(self.elements)
        arr = np.array([p.images for p in self.elements], dtype=np.int64)
        # codes: images read as a base-6 number, then mapped back to an index
        code_of = np.full(NPTS ** NPTS, -1, dtype=np.int64)
        weights = NPTS ** np.arange(NPTS - 1, -1, -1)
        code_of[arr @ weights] = np.arange(n)
        composed = arr[:, arr]  # composed[a, b, i] = a[b[i]]
        self.table = code_of[composed @ weights]
        self.inv = np.argmin(self.table, axis=1)  # identity has index 0
        if np.any(self.table[np.arange(n), self.inv] != 0):
            raise RuntimeError("inverse table inconsistent")

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def element_orders(self) -> np.ndarray:
        return np.array([p.order() for p in self.elements])

    def order_census(self) -> dict[int, int]:
        vals, counts = np.unique(self.element_orders(), return_counts=True)
        return dict(zip(vals.tolist(), counts.tolist()))

    def conjugacy_class(self, a: int) -> frozenset[int]:
        return frozenset(self.table[self.table[np.arange(self.order), a], self.inv].tolist())

    @cached_property
    def classes(self) -> dict[str, frozenset[int]]:
        out = {}
        for label, cycles in _REPS.items():
            rep = self.index[Permutation.from_cycles(*cycles)]
            out[label] = self.conjugacy_class(rep)
        if len(set(out.values())) != len(out):
            raise RuntimeError("class representatives are not distinct")
        if sum(len(c) for c in out.values()) != self.order:
            raise RuntimeError("classes do not cover the group")
        return out

    def class_sizes(self) -> tuple[int, ...]:
        return tuple(len(self.classes[c]) for c in CLASS_LABELS)

    def class_of(self, a: int) -> str:
        for label, members in self.classes.items():
            if a in members:
                return label
        raise KeyError(a)

    # -- subgroups ---------------------------------------------------------

    def _closure(self, mask: np.ndarray, gens) -> np.ndarray:
        gens = np.asarray(list(gens), dtype=np.int64)
        cur = mask.copy()
        cur[0] = True
        frontier = np.flatnonzero(cur)
        while len(frontier):
            new = np.unique(self.table[frontier][:, gens].ravel())
            new = new[~cur[new]]
            cur[new] = True
            frontier = new
        return cur

    def generated(self, gens) -> frozenset[int]:
        return frozenset(np.flatnonzero(self._closure(np.zeros(self.order, bool), gens)).tolist())

    def normal_closure(self, gens) -> frozenset[int]:
        conj = set()
        for g in gens:
            conj |= self.conjugacy_class(g)
        return self.generated(conj)

    def derived_subgroup(self) -> frozenset[int]:
        n = self.order
        comms = self.table[self.table[np.arange(n)[:, None], np.arange(n)[None, :]],
                           self.table[self.inv[:, None], self.inv[None, :]]]
        return self.generated(np.unique(comms))

    @cached_property
    def _conjugators(self) -> np.ndarray:
        # row x maps element i to x^-1 i x
        n = self.order
        left = self.table[self.inv[:, None], np.arange(n)[None, :]]
        return self.table[left, np.arange(n)[:, None]]

    @cached_property
    def subgroups(self) -> tuple[frozenset[int], ...]:
        """All subgroups: cyclic seeds, then joins with cyclic subgroups to a
        fixpoint.  Only one subgroup per conjugacy class is expanded; its
        conjugates are added alongside it."""
        n = self.order
        cyclic = {}
        for g in range(n):
            m = self._closure(np.zeros(n, bool), [g])
            cyclic.setdefault(np.packbits(m).tobytes(), g)
        found: dict[bytes, np.ndarray] = {}
        frontier = []

        def add(mask, gens):
            key = np.packbits(mask).tobytes()
            if key in found:
                return
            idx = np.flatnonzero(mask)
            for row in self._conjugators:
                c = np.zeros(n, bool)
                c[row[idx]] = True
                found.setdefault(np.packbits(c).tobytes(), c)
            frontier.append((mask, gens))

        for g in cyclic.values():
            add(self._closure(np.zeros(n, bool), [g]), [g])
        while frontier:
            batch, frontier[:] = list(frontier), []
            for h, gens in batch:
                for g in cyclic.values():
                    if not h[g]:
                        add(self._closure(h, gens + [g]), gens + [g])
        subs = [frozenset(np.flatnonzero(m).tolist()) for m in found.values()]
        return tuple(sorted(subs, key=lambda s: (len(s), sorted(s))))

    def subgroup_orders(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for s in self.subgroups:
            out[len(s)] = out.get(len(s), 0) + 1
        return dict(sorted(out.items()))


@lru_cache(maxsize=1)
def build_a6() -> A6:
    return A6()


def subgroup_of_order_exists(k: int) -> bool:
    k = int(k)
    if k <= 0 or 360 % k:
        raise ValueError(f"{k} does not divide 360")
    return k in build_a6().subgroup_orders()


def subgroup_indices() -> set[int]:
    return {360 // k for k in build_a6().subgroup_orders()}


# -- character table --------------------------------------------------------

CLASS_SIZES = (1, 45, 40, 40, 90, 72, 72)
CLASS_ORDERS = (1, 2, 3, 3, 4, 5, 5)

_B5 = QSqrt5(1, -1)       # (1 - sqrt5)/2
_B5_STAR = QSqrt5(1, 1)   # (1 + sqrt5)/2


def _row(*vals):
    return tuple(v if isinstance(v, QSqrt5) else QSqrt5.coerce(v) for v in vals)


CHARACTER_TABLE = (
    _row(1, 1, 1, 1, 1, 1, 1),
    _row(5, 1, 2, -1, -1, 0, 0),
    _row(5, 1, -1, 2, -1, 0, 0),
    _row(8, 0, -1, -1, 0, _B5, _B5_STAR),
    _row(8, 0, -1, -1, 0, _B5_STAR, _B5),
    _row(9, 1, 0, 0, 1, -1, -1),
    _row(10, -2, 1, 1, 0, 0, 0),
)

# The 5A/5B entries of the two degree-8 characters as commonly printed,
# (-1 -+ sqrt5)/2.  Orthogonality against the trivial character forces
# chi4(5A) + chi5(5A) = 1, so these carry a sign slip; kept for comparison.
PRINTED_CHARACTER_TABLE = CHARACTER_TABLE[:3] + (
    _row(8, 0, -1, -1, 0, QSqrt5(-1, -1), QSqrt5(-1, 1)),
    _row(8, 0, -1, -1, 0, QSqrt5(-1, 1), QSqrt5(-1, -1)),
) + CHARACTER_TABLE[5:]


def verify_character_table(table=CHARACTER_TABLE, sizes=CLASS_SIZES) -> bool:
    """Row and column orthogonality, exactly in Q(sqrt5).

    All values lie in a real field, so complex conjugation is trivial.
    """
    order = sum(sizes)
    k = len(sizes)
    if len(table) != k or any(len(r) != k for r in table):
        return False
    for i in range(k):
        for j in range(k):
            s = sum((sizes[c] * table[i][c] * table[j][c] for c in range(k)), QSqrt5())
            if s != (order if i == j else 0):
                return False
    for c in range(k):
        for d in range(k):
            s = sum((table[i][c] * table[i][d] for i in range(k)), QSqrt5())
            if s != (Fraction(order, sizes[c]) if c == d else 0):
                return False
    degrees = [r[0] for r in table]
    return all(v.is_rational() for v in degrees) and \
        sum((v * v for v in degrees), QSqrt5()) == order


def format_character_table(table=CHARACTER_TABLE) -> str:
    lines = ["\t".join(("",) + CLASS_LABELS)]
    for i, row in enumerate(table, 1):
        lines.append("\t".join([f"chi{i}"] + [str(v) for v in row]))
    return "\n".join(lines) + "\n"


# -- fixed points and Lefschetz ---------------------------------------------

# symplectic fixed-point counts by element order; the identity entry is the
# trace on the full cohomology, 24.  Orders 6..8 never occur in A6.
NIKULIN_FIXED = {1: 24, 2: 8, 3: 6, 4: 4, 5: 4, 6: 2, 7: 3, 8: 2}


def lefschetz_rank(fixed=None) -> int:
    """Rank of the invariant part of the full cohomology, averaged over A6."""
    fixed = NIKULIN_FIXED if fixed is None else fixed
    total = sum(size * fixed[o] for size, o in zip(CLASS_SIZES, CLASS_ORDERS))
    q = Fraction(total, sum(CLASS_SIZES))
    if q.denominator != 1:
        raise ValueError(f"non-integral invariant rank {q}")
    return int(q)


def invariant_picard_rank(full_rank: int | None = None, transcendental_rank: int = 2) -> int:
    """Drop H^0 + H^4 and the transcendental part from the invariant rank."""
    full_rank = lefschetz_rank() if full_rank is None else full_rank
    return full_rank - 2 - transcendental_rank


def _trace_targets(rank: int = 20) -> dict[str, int]:
    # chi_top(X^g) = 4 + tr(g | S), and rank S = 20 at the identity
    out = {}
    for label, o in zip(CLASS_LABELS, CLASS_ORDERS):
        out[label] = rank if o == 1 else NIKULIN_FIXED[o] - 4
    return out


def solve_decomposition(classes=CLASS_LABELS, table=CHARACTER_TABLE) -> list[tuple[int, ...]]:
    """All (a2..a7) with S = chi1 + sum a_i chi_i satisfying the trace
    equations on the given classes.  Irrational equations split into their
    rational and sqrt5 parts automatically, since equality is exact."""
    targets = _trace_targets()
    cols = [CLASS_LABELS.index(c) for c in classes]
    degs = [int(r[0].rational_part()) for r in table]
    bounds = [range(20 // d + 1) for d in degs[1:]]
    sols = []
    for a in product(*bounds):
        mult = (1,) + a
        ok = True
        for c in cols:
            tr = sum((m * table[i][c] for i, m in enumerate(mult)), QSqrt5())
            if tr != targets[CLASS_LABELS[c]]:
                ok = False
                break
        if ok:
            sols.append(tuple(a))
    return sols


# constituents of S(X) (x) C and their degrees
CONSTITUENTS = (0, 1, 2, 5)


def zeta_multiplicities(abc) -> tuple[int, int]:
    """Multiplicities of zeta and zeta^2 when the mu3 generator acts by
    1, zeta^a, zeta^b, zeta^c on the constituents."""
    degs = [int(CHARACTER_TABLE[i][0].rational_part()) for i in CONSTITUENTS]
    exps = (0,) + tuple(abc)
    m1 = sum(d for d, e in zip(degs, exps) if e % 3 == 1)
    m2 = sum(d for d, e in zip(degs, exps) if e % 3 == 2)
    return m1, m2


def mu3_candidates() -> list[tuple[int, int, int]]:
    """(a, b, c) in {0,1,2}^3 for which the action can be defined over Z."""
    return [abc for abc in product(range(3), repeat=3)
            if zeta_multiplicities(abc)[0] == zeta_multiplicities(abc)[1]]


@dataclass(frozen=True)
class TwistedTrace:
    value: Eisenstein
    is_integer: bool


def twisted_trace(abc, cls: str) -> TwistedTrace:
    c = CLASS_LABELS.index(cls)
    exps = (0,) + tuple(abc)
    total = Eisenstein()
    for i, e in zip(CONSTITUENTS, exps):
        v = CHARACTER_TABLE[i][c]
        if not v.is_rational() or v.rational_part().denominator != 1:
            raise ValueError(f"chi{i + 1}({cls}) is not a rational integer")
        total = total + omega_power(e) * int(v.rational_part())
    return TwistedTrace(total, total.is_rational_integer())


EXPECTED_TWISTED_VALUE = ONE + 2 * OMEGA - OMEGA * OMEGA
