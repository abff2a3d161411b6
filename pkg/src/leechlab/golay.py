"""The binary Golay code on the projective line over F_23.

Points of Omega = {inf, 0, 1, ..., 22} are indexed 0..23 in the fixed
order [inf, 0, 1, ..., 22]; a subset is a 24-bit mask with bit k set
when the k-th point is a member.  Every module in the package shares
this order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable

import numpy as np

Q = 23
NPOINTS = 24
FULL = (1 << NPOINTS) - 1
INF = "inf"


def index_of(label) -> int:
    """Bit index of a point label (``"inf"``/``"∞"`` or 0..22)."""
    if label in (INF, "∞", "oo", "infinity"):
        return 0
    k = int(label)
    if not 0 <= k < Q:
        raise ValueError(f"point label out of range: {label!r}")
    return k + 1


def label_of(i: int) -> str:
    return INF if i == 0 else str(i - 1)


def mask_of(labels: Iterable) -> int:
    m = 0
    for x in labels:
        m |= 1 << index_of(x)
    return m


def members(mask: int) -> list[int]:
    """Bit indices present in ``mask``, ascending (so inf first)."""
    return [i for i in range(NPOINTS) if mask >> i & 1]


def weight(mask: int) -> int:
    return int(mask).bit_count()


@dataclass(frozen=True, order=True)
class GolaySet:
    """A subset of Omega, carried as a 24-bit mask."""

    mask: int

    def __post_init__(self):
        if not 0 <= self.mask <= FULL:
            raise ValueError(f"mask out of range: {self.mask:#x}")

    @classmethod
    def from_labels(cls, labels: Iterable) -> "GolaySet":
        return cls(mask_of(labels))

    @property
    def labels(self) -> list[str]:
        return [label_of(i) for i in members(self.mask)]

    def __len__(self):
        return weight(self.mask)

    def __contains__(self, label):
        return bool(self.mask >> index_of(label) & 1)

    def __xor__(self, other: "GolaySet") -> "GolaySet":
        return GolaySet(self.mask ^ other.mask)

    def __and__(self, other: "GolaySet") -> "GolaySet":
        return GolaySet(self.mask & other.mask)

    def __or__(self, other: "GolaySet") -> "GolaySet":
        return GolaySet(self.mask | other.mask)

    def complement(self) -> "GolaySet":
        return GolaySet(FULL ^ self.mask)

    def hex(self) -> str:
        return f"{self.mask:06x}"

    def __str__(self):
        return "{" + ",".join(self.labels) + "}"


def quadratic_residues(p: int = Q) -> frozenset[int]:
    return frozenset(a * a % p for a in range(p))


def generating_sets() -> list[int]:
    """Masks of N_inf = Omega and the 23 translates N_i = N - i."""
    squares = quadratic_residues()
    # N = Omega minus the squares of F_23 (0 is a square, inf is not)
    base = [0] + [n + 1 for n in range(Q) if n not in squares]
    gens = [FULL]
    for i in range(Q):
        m = 0
        for b in base:
            # inf - i = inf
            m |= 1 << (0 if b == 0 else (b - 1 - i) % Q + 1)
        gens.append(m)
    return gens


def _span(gens: Iterable[int]) -> tuple[np.ndarray, int]:
    basis: list[int] = []
    for g in gens:
        # reduce against the current echelon basis (leading bit = highest)
        for b in basis:
            g = min(g, g ^ b)
        if g:
            basis.append(g)
            basis.sort(reverse=True)
    words = np.zeros(1, dtype=np.uint32)
    for b in basis:
        words = np.concatenate([words, words ^ np.uint32(b)])
    return np.sort(words), len(basis)


@dataclass(frozen=True, eq=False)
class GolayCode:
    """The code as a sorted array of all codeword masks."""

    codewords: np.ndarray
    dimension: int

    def __len__(self):
        return len(self.codewords)

    @cached_property
    def weights(self) -> np.ndarray:
        return np.bitwise_count(self.codewords)

    @cached_property
    def octads(self) -> np.ndarray:
        return self.codewords[self.weights == 8]

    @cached_property
    def dodecads(self) -> np.ndarray:
        return self.codewords[self.weights == 12]

    @cached_property
    def table(self) -> np.ndarray:
        """Boolean membership table indexed by mask (2**24 entries)."""
        t = np.zeros(1 << NPOINTS, dtype=bool)
        t[self.codewords] = True
        return t

    @cached_property
    def _octad_of_five(self) -> dict[int, int]:
        fives = _five_subsets(self.octads)
        return dict(zip(fives.ravel().tolist(),
                        np.repeat(self.octads, fives.shape[1]).tolist()))

    def weight_enumerator(self) -> list[int]:
        return np.bincount(self.weights, minlength=NPOINTS + 1).tolist()

    def __contains__(self, s) -> bool:
        m = s.mask if isinstance(s, GolaySet) else int(s)
        return 0 <= m <= FULL and bool(self.table[m])


@lru_cache(maxsize=1)
def build_golay() -> GolayCode:
    words, dim = _span(generating_sets())
    return GolayCode(words, dim)


def is_codeword(code: GolayCode, s) -> bool:
    return s in code


def _five_subsets(octads: np.ndarray) -> np.ndarray:
    """(k, 56) array of the 5-subset masks of each 8-set."""
    octads = np.asarray(octads, dtype=np.int64)
    bits = (octads[:, None] >> np.arange(NPOINTS)) & 1
    pos = np.nonzero(bits)[1].reshape(len(octads), -1)
    if pos.shape[1] != 8:
        raise ValueError("every block must have 8 points")
    combos = np.array(list(combinations(range(8), 5)))
    return (np.int64(1) << pos[:, combos]).sum(axis=2)


def steiner_check(blocks) -> bool:
    """True iff every 5-subset of Omega lies in exactly one block.

    ``blocks`` is a GolayCode (its octads are used) or any sequence of
    8-point masks.
    """
    octads = blocks.octads if isinstance(blocks, GolayCode) else np.asarray(list(blocks))
    if len(octads) == 0:
        return False
    if np.any(np.bitwise_count(np.asarray(octads, dtype=np.uint32)) != 8):
        return False
    fives = _five_subsets(octads).ravel()
    _, counts = np.unique(fives, return_counts=True)
    return len(counts) == 42504 and bool(np.all(counts == 1))


def complete_octad(code: GolayCode, five) -> GolaySet:
    """The unique octad containing the given 5-set."""
    m = five.mask if isinstance(five, GolaySet) else int(five)
    if weight(m) != 5:
        raise ValueError(f"expected a 5-set, got {weight(m)} points")
    return GolaySet(code._octad_of_five[m])


# -- text export --------------------------------------------------------

def format_octads(octads, hex_masks: bool = False) -> str:
    """One octad per line: comma-separated labels, or a 6-digit hex mask."""
    lines = []
    for m in octads:
        s = GolaySet(int(m))
        lines.append(s.hex() if hex_masks else ",".join(s.labels))
    return "\n".join(lines) + ("\n" if lines else "")


def parse_octads(text: str) -> list[GolaySet]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if "," in line:
            out.append(GolaySet.from_labels(line.split(",")))
        else:
            out.append(GolaySet(int(line, 16)))
    return out
