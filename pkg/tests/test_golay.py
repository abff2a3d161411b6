import numpy as np
import pytest
from hypothesis import given, strategies as st

from leechlab import golay
from leechlab.golay import GolaySet

K0 = ["inf", 1, 2, 3, 4, 6, 15, 18]
K1 = ["inf", 0, 1, 2, 3, 5, 14, 17]
K2 = ["inf", 0, 1, 2, 4, 13, 16, 22]


@pytest.fixture(scope="module")
def code():
    return golay.build_golay()


def gf2_rank(masks):
    """Plain Gaussian elimination over GF(2) on bit rows."""
    rows = [int(m) for m in masks]
    rank = 0
    for bit in range(golay.NPOINTS):
        piv = next((i for i in range(rank, len(rows)) if rows[i] >> bit & 1), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i] >> bit & 1:
                rows[i] ^= rows[rank]
        rank += 1
    return rank


def test_label_mapping():
    assert golay.index_of("inf") == 0 and golay.index_of("∞") == 0
    assert golay.index_of(0) == 1 and golay.index_of("22") == 23
    assert [golay.label_of(i) for i in (0, 1, 23)] == ["inf", "0", "22"]
    with pytest.raises(ValueError):
        golay.index_of(23)


def test_generators_have_rank_12():
    gens = golay.generating_sets()
    assert len(gens) == 24
    assert gf2_rank(gens) == 12
    # N has 12 points: infinity plus the 11 non-residues
    assert all(golay.weight(g) == 12 for g in gens[1:])


def test_code_size_and_weights(code):
    assert code.dimension == 12 and len(code) == 4096
    assert code.weight_enumerator() == [1] + [0] * 7 + [759] + [0] * 3 + [2576] + [0] * 3 + [759] + [0] * 7 + [1]
    assert len(code.octads) == 759 and len(code.dodecads) == 2576


def test_code_is_linear_and_self_orthogonal(code):
    words = code.codewords
    rng = np.random.default_rng(0)
    a, b = rng.choice(words, 300), rng.choice(words, 300)
    assert np.all(code.table[a ^ b])
    # even overlaps between all pairs of a basis: self-orthogonality
    basis = golay.generating_sets()
    for x in basis:
        for y in basis:
            assert golay.weight(x & y) % 2 == 0


def test_octads_meet_in_at_most_four(code):
    # distinct octads sharing five points would break the Steiner property
    o = code.octads
    inter = np.bitwise_count(o[:, None] & o[None, :])
    np.fill_diagonal(inter, 0)
    assert set(np.unique(inter).tolist()) <= {0, 2, 4}


def test_steiner(code):
    assert golay.steiner_check(code)
    assert golay.steiner_check(list(code.octads))


def test_steiner_negative_controls(code):
    assert not golay.steiner_check(list(code.octads[1:]))
    bad = list(code.octads)
    bad[0] = golay.mask_of(range(8))
    assert not golay.steiner_check(bad)
    assert not golay.steiner_check([golay.mask_of(range(9))])
    assert not golay.steiner_check([])


@pytest.mark.parametrize("k", [K0, K1, K2])
def test_reference_octads_are_codewords(code, k):
    s = GolaySet.from_labels(k)
    assert golay.is_codeword(code, s) and len(s) == 8


def test_is_codeword_examples(code):
    assert golay.is_codeword(code, GolaySet(0))
    assert golay.is_codeword(code, GolaySet(golay.FULL))
    assert not golay.is_codeword(code, GolaySet.from_labels(["inf"]))


def test_complete_octad_examples(code):
    assert golay.complete_octad(code, GolaySet.from_labels(["inf", 1, 2, 3, 4])) == GolaySet.from_labels(K0)
    assert golay.complete_octad(code, GolaySet.from_labels([0, 1, 2, 3, 5])) == GolaySet.from_labels(K1)
    with pytest.raises(ValueError):
        golay.complete_octad(code, GolaySet.from_labels([0, 1, 2, 3]))


@given(st.sets(st.integers(0, 23), min_size=5, max_size=5))
def test_complete_octad_contains_five(five):
    code = golay.build_golay()
    s = GolaySet(golay.mask_of(golay.label_of(i) for i in five))
    o = golay.complete_octad(code, s)
    assert (o & s) == s and len(o) == 8 and o.mask in code
    # brute-force oracle: exactly one octad contains the five points
    hits = np.count_nonzero((code.octads & np.uint32(s.mask)) == s.mask)
    assert hits == 1


def test_golayset_operations():
    a = GolaySet.from_labels(["inf", 0])
    b = GolaySet.from_labels([0, 1])
    assert (a ^ b).labels == ["inf", "1"]
    assert (a & b).labels == ["0"] and len(a | b) == 3
    assert len(a.complement()) == 22
    assert "inf" in a and 1 not in a
    assert str(a) == "{inf,0}" and a.hex() == "000003"
    with pytest.raises(ValueError):
        GolaySet(1 << 24)


def test_octad_export_roundtrip(code):
    some = code.octads[:20]
    for hex_masks in (False, True):
        text = golay.format_octads(some, hex_masks=hex_masks)
        assert [s.mask for s in golay.parse_octads(text)] == [int(m) for m in some]
    first = golay.format_octads([GolaySet.from_labels(K0).mask]).strip()
    assert first == "inf,1,2,3,4,6,15,18"
    assert golay.format_octads([]) == ""
