import itertools
import random

import pytest

from fuglede.groups import GroupSpec
from fuglede.hadamard import descend, paper_h6, paper_h12, spectrum_from_butson
from fuglede.spectra import (
    SearchBudgetExceeded,
    canonical_classes,
    find_spectrum,
    fourier_zero_set,
    fuglede_scan,
    is_spectrum,
)

Z4 = GroupSpec.cyclic(4)


def test_zero_set_z4():
    assert fourier_zero_set(Z4, {(0,), (1,)}) == frozenset({(2,)})


def test_zero_set_singleton_empty():
    g = GroupSpec((3, 4))
    assert fourier_zero_set(g, {(1, 2)}) == frozenset()


def test_zero_set_closed_under_negation():
    g = GroupSpec((3, 3))
    rng = random.Random(5)
    elems = [g.unrank(r) for r in range(g.order)]
    for _ in range(10):
        T = frozenset(rng.sample(elems, rng.randrange(1, 7)))
        z = fourier_zero_set(g, T)
        assert z == frozenset(g.neg(d) for d in z)


def test_zero_set_translation_invariant():
    g = GroupSpec((4, 2))
    rng = random.Random(9)
    elems = [g.unrank(r) for r in range(g.order)]
    for _ in range(10):
        T = frozenset(rng.sample(elems, 3))
        t = rng.choice(elems)
        assert fourier_zero_set(g, T) == fourier_zero_set(g, g.translate(T, t))


def test_is_spectrum_z2_12():
    g, T, L = spectrum_from_butson(paper_h12())
    assert is_spectrum(g, T, L).valid


def test_full_group_is_its_own_spectrum():
    g = GroupSpec((2, 3))
    all_elems = frozenset(g.elements())
    assert is_spectrum(g, all_elems, all_elems).valid


def test_is_spectrum_invalid_with_witness():
    result = is_spectrum(Z4, {(0,), (1,), (2,)}, {(0,), (1,), (2,)})
    assert not result.valid
    assert result.witness is not None


def test_is_spectrum_cardinality_mismatch():
    result = is_spectrum(Z4, {(0,), (1,)}, {(0,)})
    assert not result.valid and result.reason == "cardinality mismatch"


def test_is_spectrum_translation_invariant():
    g = GroupSpec((3, 3))
    rng = random.Random(1)
    elems = [g.unrank(r) for r in range(g.order)]
    for _ in range(10):
        T = frozenset(rng.sample(elems, 3))
        L = frozenset(rng.sample(elems, 3))
        base = is_spectrum(g, T, L).valid
        t, s = rng.choice(elems), rng.choice(elems)
        assert is_spectrum(g, g.translate(T, t), g.translate(L, s)).valid == base


def test_find_spectrum_z4_pair():
    result = find_spectrum(Z4, {(0,), (1,)})
    assert result.spectral and set(result.spectrum) == {(0,), (2,)}


def test_find_spectrum_exhausted():
    result = find_spectrum(Z4, {(0,), (1,), (2,)})
    assert not result.spectral and result.spectrum is None


def test_find_spectrum_singleton():
    assert find_spectrum(GroupSpec((5,)), {(3,)}).spectral


def test_find_spectrum_roundtrip_z3_5():
    g6, T6, L6 = spectrum_from_butson(paper_h6())
    g5, T5, L5 = descend(g6, T6, L6)
    result = find_spectrum(g5, T5)
    assert result.spectral
    assert is_spectrum(g5, T5, result.spectrum).valid


def test_find_spectrum_budget_exceeded_is_distinct():
    with pytest.raises(SearchBudgetExceeded):
        find_spectrum(Z4, {(0,), (1,)}, node_budget=0)


def test_find_spectrum_agrees_with_exhaustive_small():
    """On tiny cyclic groups, compare against enumeration of all
    #T-subsets containing 0 (spectra are translation-invariant)."""
    for n in (4, 5, 6):
        g = GroupSpec.cyclic(n)
        elems = [g.unrank(r) for r in range(n)]
        for bits in range(1, 1 << (n - 1)):
            T = frozenset({(0,)} | {elems[r + 1] for r in range(n - 1) if bits >> r & 1})
            expected = any(
                is_spectrum(g, T, frozenset({(0,)}) | frozenset(c)).valid
                for c in itertools.combinations(elems[1:], len(T) - 1)
            )
            assert find_spectrum(g, T).spectral == expected


def test_spectrum_size_bound_on_zero_set():
    g6, T6, L6 = spectrum_from_butson(paper_h6())
    g5, T5, _ = descend(g6, T6, L6)
    assert len(fourier_zero_set(g5, T5)) >= len(T5) - 1


def test_zero_set_contains_spectrum_differences():
    g6, T6, L6 = spectrum_from_butson(paper_h6())
    g5, T5, L5 = descend(g6, T6, L6)
    z = fourier_zero_set(g5, T5)
    diffs = {
        g5.sub(a, b) for a in L5 for b in L5 if a != b
    }
    assert len(diffs) == 30
    assert diffs <= z


def test_canonical_classes_partition():
    g = GroupSpec.cyclic(6)
    classes = list(canonical_classes(g))
    # every nonempty subset must be a translate of exactly one class
    elems = [g.unrank(r) for r in range(6)]
    covered = set()
    for T in classes:
        for t in elems:
            covered.add(frozenset(g.translate(T, t)))
    assert len(covered) == (1 << 6) - 1
    assert len(classes) == len({min(
        tuple(sorted(g.rank(x) for x in g.translate(T, g.neg(x0))))
        for x0 in T
    ) for T in covered})


def test_scan_z4_clean():
    _, summary = fuglede_scan(Z4)
    assert not summary.spectral_non_tiles and not summary.tiles_non_spectral


def test_scan_z4_size_3():
    records, _ = fuglede_scan(Z4, size_filter=3)
    assert len(records) == 1
    rec = records[0]
    assert not rec.spectral and not rec.tiles


def test_scan_explicit_subset_z3_5():
    g6, T6, L6 = spectrum_from_butson(paper_h6())
    g5, T5, _ = descend(g6, T6, L6)
    records, summary = fuglede_scan(g5, subsets=[T5])
    assert records[0].spectral and not records[0].tiles
    assert summary.spectral_non_tiles == [records[0].elements]


def test_scan_record_json():
    records, _ = fuglede_scan(Z4, size_filter=2)
    for rec in records:
        obj = rec.to_json()
        assert set(obj) >= {"set", "spectral", "tiles"}
