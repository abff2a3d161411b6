"""A6-orbits on the simple roots of the A1^24 and A2^12 Niemeier lattices,
and the Gram matrices of the resulting invariant lattices.

Roots r_1..r_24 are numbered so that orbits are consecutive blocks in the
order the partition lists them; s_i is the sum of the i-th block.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Sequence

from . import permchar
from .quadform import det, invariant_factors

A1_24 = "A1_24"
A2_12 = "A2_12"
GROUP_ORDER = 360
M20_ORDER = 960
GOLAY_SUPPORTS = {0, 8, 12, 16, 24}


@dataclass(frozen=True)
class OrbitPartition:
    parts: tuple[int, ...]
    context: str = A1_24
    total: int = 24

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(sorted(int(p) for p in self.parts)))
        if sum(self.parts) != self.total or any(p <= 0 for p in self.parts):
            raise ValueError(f"{self.parts} is not a partition of {self.total}")

    def is_feasible(self) -> bool:
        sizes = feasible_orbit_sizes(self.total)
        return all(p in sizes for p in self.parts)


@dataclass(frozen=True)
class GlueSpec:
    """Basis vectors as rational combinations of s_1..s_5."""

    vectors: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def of(cls, rows) -> "GlueSpec":
        return cls(tuple(tuple(Fraction(x) for x in r) for r in rows))


def feasible_orbit_sizes(limit: int = 24) -> set[int]:
    """Sizes of transitive A6-sets, i.e. subgroup indices, up to ``limit``."""
    return {k for k in permchar.subgroup_indices() if k <= limit}


def _divisor_sizes(limit: int) -> list[int]:
    # the necessary condition used before any subgroup information:
    # a nontrivial orbit is faithful, so its size divides 360 and is >= 6
    return [1] + [d for d in range(6, limit + 1) if GROUP_ORDER % d == 0]


@dataclass(frozen=True)
class Exclusion:
    partition: OrbitPartition
    reason: str


@dataclass(frozen=True)
class PartitionReport:
    raw: tuple[OrbitPartition, ...]
    excluded: tuple[Exclusion, ...]
    survivors: tuple[OrbitPartition, ...]


def _five_part(total: int, sizes: Sequence[int]) -> list[tuple[int, ...]]:
    return [c for c in combinations_with_replacement(sorted(sizes), 5)
            if sum(c) == total and 1 in c]


def a1_24_report() -> PartitionReport:
    raw = [OrbitPartition(p) for p in _five_part(24, _divisor_sizes(24))]
    excluded, survivors = [], []
    for part in raw:
        missing = [p for p in sorted(set(part.parts))
                   if p > 1 and not permchar.subgroup_of_order_exists(GROUP_ORDER // p)]
        reason = "; ".join(f"no subgroup of order {GROUP_ORDER // p} to stabilise an orbit of size {p}"
                           for p in missing)
        if not reason and part.parts.count(1) >= 4 and M20_ORDER % GROUP_ORDER:
            reason = f"{part.parts.count(1)} fixed roots force A6 < M20, but {GROUP_ORDER} does not divide {M20_ORDER}"
        if reason:
            excluded.append(Exclusion(part, reason))
        else:
            survivors.append(part)
    return PartitionReport(tuple(raw), tuple(excluded), tuple(survivors))


def partitions_a1_24() -> list[OrbitPartition]:
    return list(a1_24_report().survivors)


def _has_index_two_pair(k: int) -> bool:
    """Some subgroup of index k contains a subgroup of index 2k."""
    subs = permchar.build_a6().subgroups
    big = [s for s in subs if len(s) * k == GROUP_ORDER]
    small = [s for s in subs if len(s) * 2 * k == GROUP_ORDER]
    return any(t <= s for s in big for t in small)


def _component_splits(n: int, sizes) -> list[tuple[int, ...]]:
    out = []

    def rec(rest, lo, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for s in sizes:
            if lo <= s <= rest:
                rec(rest - s, s, acc + [s])

    rec(n, 1, [])
    return out


def partitions_a2_12(n_orbits: int = 5) -> list[OrbitPartition]:
    """Root-orbit partitions compatible with an action on the 12 components.

    A component orbit of size k either keeps the two roots of a component
    apart (two root orbits of size k) or swaps them (one orbit of size 2k,
    which needs an index-2k subgroup inside an index-k one).  A fixed
    component has both roots fixed since A6 has no quotient of order 2.
    One component is fixed to begin with.
    """
    sizes = sorted(s for s in feasible_orbit_sizes(11))
    found = set()
    for split in _component_splits(11, sizes):
        comps = (1,) + split
        choices = [[(k, k)] + ([(2 * k,)] if k > 1 and _has_index_two_pair(k) else [])
                   for k in comps]

        def rec(i, acc):
            if i == len(choices):
                if len(acc) == n_orbits:
                    found.add(tuple(sorted(acc)))
                return
            for c in choices[i]:
                rec(i + 1, acc + list(c))

        rec(0, [])
    return [OrbitPartition(p, A2_12, 24) for p in sorted(found)]


# -- invariant lattices -----------------------------------------------------

def _root_gram(context: str) -> list[list[int]]:
    g = [[0] * 24 for _ in range(24)]
    for i in range(24):
        g[i][i] = -2
    if context == A2_12:
        for k in range(0, 24, 2):
            g[k][k + 1] = g[k + 1][k] = 1
    elif context != A1_24:
        raise ValueError(f"unknown root system {context!r}")
    return g


def orbit_sums(partition: OrbitPartition, order: Sequence[int] | None = None) -> list[list[int]]:
    """Root coordinates of s_i.  ``order`` lists block sizes in s-order
    (default: the sorted parts)."""
    order = list(partition.parts if order is None else order)
    if sorted(order) != list(partition.parts):
        raise ValueError("block order is not a rearrangement of the partition")
    out, start = [], 0
    for size in order:
        v = [0] * 24
        for k in range(start, start + size):
            v[k] = 1
        out.append(v)
        start += size
    return out


def _gram_of(vs, g) -> list[list[Fraction]]:
    n = len(g)
    return [[sum(u[i] * g[i][j] * w[j] for i in range(n) for j in range(n) if u[i] and w[j])
             for w in vs] for u in vs]


def invariant_gram(root_system: str, partition: OrbitPartition, glue: GlueSpec,
                   order: Sequence[int] | None = None) -> list[list[int]]:
    s = orbit_sums(partition, order)
    g = _root_gram(root_system)
    basis = [[sum(c * s[i][k] for i, c in enumerate(row)) for k in range(24)]
             for row in glue.vectors]
    for row in glue.vectors:
        if any((2 * c).denominator != 1 for c in row):
            raise ValueError("glue vector is not a half-integer combination")
        if root_system == A1_24:
            support = sum(sum(s[i]) for i, c in enumerate(row) if c.denominator == 2)
            if support not in GOLAY_SUPPORTS:
                raise ValueError(f"glue support of size {support} is not a Golay word size")
    gram = _gram_of(basis, g)
    for i, row in enumerate(gram):
        for x in row:
            if Fraction(x).denominator != 1:
                raise ValueError("glue vectors give a non-integral product")
        if row[i] % 2:
            raise ValueError("glue vector has odd norm")
    # the root-orbit sums must stay inside the span
    _coords_in_basis(glue, len(s))
    return [[int(x) for x in row] for row in gram]


def _coords_in_basis(glue: GlueSpec, k: int):
    from .quadform import inverse
    inv = inverse([list(r) for r in glue.vectors])
    for i in range(k):
        e = [Fraction(int(i == j)) for j in range(k)]
        coords = [sum(e[a] * inv[a][b] for a in range(k)) for b in range(k)]
        if any(c.denominator != 1 for c in coords):
            raise ValueError(f"s_{i + 1} is not in the span of the glue basis")


def is_negative_definite(gram) -> bool:
    n = len(gram)
    for k in range(1, n + 1):
        d = det([row[:k] for row in gram[:k]])
        if (d > 0) != (k % 2 == 0) or d == 0:
            return False
    return True


H = Fraction(1, 2)

# case (i): s1, s2, s3 fixed roots, s4 the 6-orbit, s5 the 15-orbit.  The
# block-diagonal matrix comes out in the order s1, s2, (s1+s2+s4)/2, s3, (s3+s5)/2
CASE_I = dict(
    partition=OrbitPartition((1, 1, 1, 6, 15)),
    order=(1, 1, 1, 6, 15),
    glue=GlueSpec.of([
        (1, 0, 0, 0, 0),
        (0, 1, 0, 0, 0),
        (H, H, 0, H, 0),
        (0, 0, 1, 0, 0),
        (0, 0, H, 0, H),
    ]),
)
CASE_II = dict(
    partition=OrbitPartition((1, 1, 6, 6, 10)),
    order=(1, 1, 6, 6, 10),
    glue=GlueSpec.of([
        (1, 0, 0, 0, 0),
        (0, 1, 0, 0, 0),
        (H, H, H, 0, 0),
        (H, H, 0, H, 0),
        (H, H, 0, 0, H),
    ]),
)
CASE_A2 = dict(
    partition=OrbitPartition((1, 1, 1, 1, 20), A2_12, 24),
    order=(1, 1, 1, 1, 20),
    glue=GlueSpec.of([[int(i == j) for j in range(5)] for i in range(5)]),
)
GRAM_CASES = {"A1_24-i": (A1_24, CASE_I), "A1_24-ii": (A1_24, CASE_II), "A2_12": (A2_12, CASE_A2)}


@dataclass(frozen=True)
class GramRow:
    case: str
    gram: list
    factors: tuple[int, ...]
    det: int
    negative_definite: bool


@dataclass(frozen=True)
class GramReport:
    rows: tuple[GramRow, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(r.factors == (3, 60) and abs(r.det) == 180 and r.negative_definite
                   for r in self.rows)


def verify_invariant_grams() -> GramReport:
    rows = []
    for name, (rs, case) in GRAM_CASES.items():
        g = invariant_gram(rs, case["partition"], case["glue"], case["order"])
        f = tuple(d for d in invariant_factors(g) if d != 1)
        rows.append(GramRow(name, g, f, int(det(g)), is_negative_definite(g)))
    return GramReport(tuple(rows))
