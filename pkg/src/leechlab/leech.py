"""The Leech lattice in the nu-basis over Omega.

A vector is 24 integers (x_inf, x_0, ..., x_22).  Lattice membership is
the classical mod-2 / mod-4 / mod-8 test against the Golay code, and the
form is (U, V) = -(U.V)/8, making the lattice even, unimodular and
negative definite.
"""

from __future__ import annotations

import gzip
import io
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from math import isqrt

import numpy as np

from . import golay
from .quadform import det, hermite_normal_form

DIM = golay.NPOINTS
_POW2 = (np.int64(1) << np.arange(DIM, dtype=np.int64))


def nu(*labels) -> np.ndarray:
    """nu_A: the 0/1 indicator vector of a set of point labels."""
    v = np.zeros(DIM, dtype=np.int64)
    for x in labels:
        v[golay.index_of(x)] += 1
    return v


NU_OMEGA = np.ones(DIM, dtype=np.int64)

K0 = ("inf", 1, 2, 3, 4, 6, 15, 18)
K1 = ("inf", 0, 1, 2, 3, 5, 14, 17)
K2 = ("inf", 0, 1, 2, 4, 13, 16, 22)

C = 4 * nu("inf") + NU_OMEGA
Z = np.zeros(DIM, dtype=np.int64)
X0 = 4 * nu("inf") + 4 * nu(0)
R0 = 2 * nu(*K0)
X1 = 2 * nu(*K1)
X2 = 2 * nu(*K2)


def _masks_mod4(x: np.ndarray) -> np.ndarray:
    """(k, 4) masks of the sets {i : x_i = j mod 4}."""
    r = np.mod(x, 4)
    return np.stack([((r == j) * _POW2).sum(axis=-1) for j in range(4)], axis=-1)


def leech_membership(vectors) -> np.ndarray:
    """Vectorised membership test over the rows of a (k, 24) array."""
    x = np.atleast_2d(np.asarray(vectors, dtype=np.int64))
    if x.shape[-1] != DIM:
        raise ValueError("Leech vectors have 24 coordinates")
    code = golay.build_golay()
    parity = np.mod(x, 2)
    same_parity = np.all(parity == parity[:, :1], axis=1)
    c_sets = np.all(code.table[_masks_mod4(x)], axis=1)
    m = parity[:, 0]
    sum_ok = np.mod(x.sum(axis=1) - 4 * m, 8) == 0
    return same_parity & c_sets & sum_ok


def is_leech_vector(coords) -> bool:
    x = np.asarray(coords, dtype=np.int64)
    if x.shape != (DIM,):
        return False
    return bool(leech_membership(x[None])[0])


def inner(u, v) -> int:
    """The lattice form -(u.v)/8 as an exact integer."""
    d = int(np.dot(np.asarray(u, dtype=np.int64), np.asarray(v, dtype=np.int64)))
    if d % 8:
        raise ValueError(f"dot product {d} is not divisible by 8; not lattice vectors")
    return -d // 8


def norm(v) -> int:
    return inner(v, v)


# -- generators and unimodularity ---------------------------------------

def generators(include_extra: bool = True) -> np.ndarray:
    """2*nu_K for all octads K, plus nu_Omega - 4*nu_inf if requested."""
    code = golay.build_golay()
    bits = ((code.octads[:, None].astype(np.int64) >> np.arange(DIM)) & 1) * 2
    if include_extra:
        bits = np.vstack([bits, NU_OMEGA - 4 * nu("inf")])
    return bits


@dataclass(frozen=True)
class GeneratorReport:
    rank: int
    basis_det: int          # |det| of an HNF basis in nu-coordinates
    gram_det: Fraction      # det of the scaled form on that basis
    all_in_lattice: bool
    octad_index: int        # index of the octad-only sublattice


def _basis_and_det(rows):
    basis = hermite_normal_form(rows.tolist())
    d = 1
    for i, r in enumerate(basis):
        d *= next(x for x in r if x)
    return basis, abs(d)


@lru_cache(maxsize=1)
def verify_generators() -> GeneratorReport:
    gens = generators()
    basis, bdet = _basis_and_det(gens)
    rank = len(basis)
    b = np.array(basis, dtype=object)
    gram = [[Fraction(-int(np.dot(x, y)), 8) for y in b] for x in b]
    gdet = det(gram) if rank == DIM else Fraction(0)
    _, odet = _basis_and_det(generators(include_extra=False))
    return GeneratorReport(
        rank=rank,
        basis_det=bdet,
        gram_det=gdet,
        all_in_lattice=bool(leech_membership(gens).all()),
        octad_index=odet // bdet,
    )


# -- vectors of norm -4 ---------------------------------------------------

def _shape_2_8() -> np.ndarray:
    """(+-2)^8 on an octad, even number of minus signs."""
    code = golay.build_golay()
    pos = np.array([golay.members(int(o)) for o in code.octads])
    signs = np.array([s for s in product((1, -1), repeat=8) if np.prod(s) > 0])
    out = np.zeros((len(pos), len(signs), DIM), dtype=np.int64)
    rows = np.arange(len(pos))[:, None, None]
    cols = np.arange(len(signs))[None, :, None]
    out[rows, cols, pos[:, None, :]] = 2 * signs[None, :, :]
    return out.reshape(-1, DIM)


def _shape_3_1() -> np.ndarray:
    """(-+3, (+-1)^23): lower signs (+3, -1) on a C-set."""
    code = golay.build_golay()
    lower = ((code.codewords[:, None].astype(np.int64) >> np.arange(DIM)) & 1).astype(bool)
    s = np.where(lower, -1, 1).astype(np.int64)             # (4096, 24)
    out = np.repeat(s[:, None, :], DIM, axis=1)              # (4096, 24, 24)
    idx = np.arange(DIM)
    out[:, idx, idx] = -3 * s
    return out.reshape(-1, DIM)


def _shape_4_4() -> np.ndarray:
    out = []
    for i, j in combinations(range(DIM), 2):
        for a, b in product((4, -4), repeat=2):
            v = np.zeros(DIM, dtype=np.int64)
            v[i], v[j] = a, b
            out.append(v)
    return np.array(out)


SHAPES = ("2^8", "3.1^23", "4^2")


@lru_cache(maxsize=1)
def _norm4_cached() -> np.ndarray:
    parts = [_shape_2_8(), _shape_3_1(), _shape_4_4()]
    vs = np.vstack(parts)
    order = np.lexsort(vs.T[::-1])
    vs = vs[order]
    vs.flags.writeable = False
    return vs


def enumerate_norm4() -> np.ndarray:
    """All 196560 vectors of norm -4, one per row, lexicographically sorted."""
    return _norm4_cached()


def shape_of(vectors) -> np.ndarray:
    """Shape index (0: 2^8, 1: 3.1^23, 2: 4^2) from the largest |coordinate|."""
    top = np.abs(np.atleast_2d(vectors)).max(axis=1)
    return np.searchsorted([2, 3, 4], top)


def shape_counts(vectors) -> tuple[int, ...]:
    return tuple(np.bincount(shape_of(vectors), minlength=3).tolist())


# -- no roots --------------------------------------------------------------

def square_shapes(total: int, length: int = DIM) -> list[tuple[int, ...]]:
    """Multisets of |x_i| with sum of squares ``total`` that pass the parity
    condition (all coordinates congruent mod 2), zeros omitted."""
    out = []

    def rec(rem, maxpart, acc):
        if rem == 0:
            if len(acc) <= length:
                out.append(tuple(acc))
            return
        for a in range(min(maxpart, isqrt(rem)), 0, -1):
            if len(acc) < length:
                rec(rem - a * a, a, acc + [a])

    rec(total, total, [])
    keep = []
    for s in out:
        zeros = length - len(s)
        parities = {a % 2 for a in s} | ({0} if zeros else set())
        if len(parities) == 1:
            keep.append(s)
    return keep


def find_norm2_vector() -> np.ndarray | None:
    """Exhaust every lattice candidate with sum x_i^2 = 16; return one if found.

    Only all-even shapes survive the parity test (24 odd squares already
    exceed 16), so every placement and sign choice of those shapes is
    run through the membership test.
    """
    for s in square_shapes(16):
        k = len(s)
        supports = np.array(list(combinations(range(DIM), k)))
        signs = np.array(list(product((1, -1), repeat=k)))
        for perm in sorted(set(permutations(s))):
            vals = signs * np.array(perm)
            cand = np.zeros((len(supports), len(vals), DIM), dtype=np.int64)
            rows = np.arange(len(supports))[:, None, None]
            cols = np.arange(len(vals))[None, :, None]
            cand[rows, cols, supports[:, None, :]] = vals[None, :, :]
            cand = cand.reshape(-1, DIM)
            hit = leech_membership(cand)
            if hit.any():
                return cand[np.argmax(hit)]
    return None


def verify_no_roots() -> bool:
    return find_norm2_vector() is None


# -- the sets S and S' -----------------------------------------------------

@dataclass(frozen=True)
class SCount:
    total: int
    case_counts: tuple[int, int, int]
    members: np.ndarray
    contains_x2: bool


def _pairings(vs, v) -> np.ndarray:
    d = vs @ np.asarray(v, dtype=np.int64)
    if np.any(d % 8):
        raise ValueError("pairing with a non-lattice vector")
    return -d // 8


@lru_cache(maxsize=1)
def count_S() -> SCount:
    """Norm -4 vectors V with (V,C) = -3 and (V,X0) = (V,R0) = (V,X1) = -2."""
    vs = enumerate_norm4()
    keep = ((_pairings(vs, C) == -3) & (_pairings(vs, X0) == -2)
            & (_pairings(vs, R0) == -2) & (_pairings(vs, X1) == -2))
    s = vs[keep]
    has_x2 = bool(np.any(np.all(s == X2, axis=1)))
    return SCount(len(s), shape_counts(s), s, has_x2)


@lru_cache(maxsize=1)
def s_prime_pairs() -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """Unordered pairs {W, C - W} with W^2 = -4 and (W, C) = -3."""
    vs = enumerate_norm4()
    ws = vs[_pairings(vs, C) == -3]
    pairs = set()
    for w in ws:
        other = C - w
        if norm(other) != -4 or inner(other, C) != -3:
            raise AssertionError("C - W left the set")
        a, b = tuple(w.tolist()), tuple(other.tolist())
        pairs.add((min(a, b), max(a, b)))
    return tuple(sorted(pairs))


def count_S_prime() -> int:
    return len(s_prime_pairs())


def subset_sum_decompositions(target: int, multiset) -> list[tuple[int, ...]]:
    """Sub-multisets summing to ``target``, each sorted, deduplicated."""
    if target < 0:
        raise ValueError("target must be non-negative")
    counts = sorted(Counter(multiset).items())
    out = []

    def rec(i, rem, acc):
        if rem == 0:
            out.append(tuple(acc))
            return
        if i == len(counts) or rem < 0:
            return
        val, mult = counts[i]
        for k in range(mult + 1):
            if k * val > rem:
                break
            rec(i + 1, rem - k * val, acc + [val] * k)

    rec(0, target, [])
    return sorted(out)


# -- text export -----------------------------------------------------------

def format_vectors(vectors, header: bool = True) -> str:
    vs = np.atleast_2d(vectors)
    lines = [" ".join(str(int(x)) for x in v) for v in vs]
    if header:
        lines.insert(0, str(len(vs)))
    return "\n".join(lines) + "\n"


def parse_vectors(text: str) -> np.ndarray:
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if lines and len(lines[0]) == 1:
        n = int(lines[0][0])
        lines = lines[1:]
        if n != len(lines):
            raise ValueError(f"header says {n} vectors, found {len(lines)}")
    return np.array(lines, dtype=np.int64).reshape(-1, DIM)


def write_vectors(path, vectors) -> None:
    """Write with a count header; gzip-framed when the path ends in .gz."""
    data = format_vectors(vectors).encode()
    if str(path).endswith(".gz"):
        with gzip.open(path, "wb") as f:
            f.write(data)
    else:
        with open(path, "wb") as f:
            f.write(data)


def read_vectors(path) -> np.ndarray:
    opener = gzip.open if str(path).endswith(".gz") else open
    with opener(path, "rb") as f:
        return parse_vectors(io.TextIOWrapper(f).read())
