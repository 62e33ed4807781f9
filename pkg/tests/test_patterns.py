from fractions import Fraction
from math import isqrt

import pytest

import brute
from residue_lab import (
    IndexSet,
    PatternTooLong,
    PatternWord,
    WrongResidueClass,
    all_patterns,
    build_context,
    char_sum,
    count_pattern,
    count_pattern_charsum,
    jacobsthal,
    pattern_curve_count,
    pattern_curve_genus,
    primes_in,
    residue_word,
    weil_bound_ok,
    weil_deviation,
)


def test_residue_word_frozen_values():
    assert str(residue_word(build_context(17))) == "XXYXYYYXXYYYXYXX"
    assert str(residue_word(build_context(5))) == "XYYX"
    assert str(residue_word(build_context(13))) == "XYXXYYYYXXYX"


def test_residue_word_balanced():
    for p in primes_in(3, 300):
        w = str(residue_word(build_context(p)))
        assert len(w) == p - 1
        assert w.count("X") == w.count("Y") == (p - 1) // 2


def test_pattern_word_validation():
    with pytest.raises(ValueError):
        PatternWord("")
    with pytest.raises(ValueError):
        PatternWord("XZ")
    assert count_pattern(build_context(17), "xyx") == 2  # case-insensitive parse


def test_count_pattern_census_17():
    ctx = build_context(17)
    for s in all_patterns(3):
        assert count_pattern(ctx, s) == (0 if s == "XXX" else 2)


def test_count_pattern_single_letter():
    for p in (5, 13, 29, 101):
        ctx = build_context(p)
        assert count_pattern(ctx, "X") == (p - 1) // 2
        assert count_pattern(ctx, "Y") == (p - 1) // 2


def test_count_pattern_matches_string_scan():
    for p in primes_in(5, 100):
        ctx = build_context(p)
        for ell in (1, 2, 3, 4):
            for s in all_patterns(ell):
                assert count_pattern(ctx, s) == brute.count_pattern_scan(p, s), (p, s)


def test_count_pattern_census_sums():
    for p in (13, 17, 101, 397):
        ctx = build_context(p)
        for ell in range(1, 6):
            assert sum(count_pattern(ctx, s) for s in all_patterns(ell)) == p - ell


def test_count_pattern_too_long():
    with pytest.raises(PatternTooLong):
        count_pattern(build_context(5), "XXXXX")
    with pytest.raises(PatternTooLong):
        count_pattern_charsum(build_context(5), "XXXXX")


def test_jacobsthal_frozen_values():
    assert jacobsthal(build_context(5)) == 2
    assert jacobsthal(build_context(13)) == -6
    assert jacobsthal(build_context(17)) == -2
    assert jacobsthal(build_context(29)) == 10
    with pytest.raises(WrongResidueClass):
        jacobsthal(build_context(7))


def test_jacobsthal_equals_truncated_oracle():
    for p in primes_in(5, 300, (1, 4)):
        assert jacobsthal(build_context(p)) == brute.jacobsthal_truncated(p)


def test_jacobsthal_structure():
    for p in primes_in(5, 2000, (1, 4)):
        J = jacobsthal(build_context(p))
        assert J % 2 == 0
        assert (J * J - 4) % 32 == 0
        b2 = p - J * J // 4
        assert isqrt(b2) ** 2 == b2, p  # J^2/4 is a summand of p


def test_char_sum_values():
    for p in (5, 7, 13, 17, 101):
        ctx = build_context(p)
        assert char_sum(ctx, (0,)) == 0
        assert char_sum(ctx, (0, 1)) == -1
    assert char_sum(build_context(13), (0, 1, 2)) == -6


def test_char_sum_matches_oracle():
    for p in primes_in(5, 60):
        ctx = build_context(p)
        for offsets in [(0, 2), (1, 3), (0, 1, 3), (0, 2, 3), (0, 1, 2, 3)]:
            assert char_sum(ctx, offsets) == brute.char_sum(p, offsets), (p, offsets)


def test_index_set_validation():
    with pytest.raises(ValueError):
        IndexSet(())
    with pytest.raises(ValueError):
        IndexSet((2, 1))
    with pytest.raises(ValueError):
        IndexSet((0, 0))
    with pytest.raises(ValueError):
        IndexSet((-1, 2))


def test_charsum_count_agrees_with_scan():
    for p in primes_in(3, 200):
        ctx = build_context(p)
        for ell in range(1, min(5, p - 1) + 1):
            for s in all_patterns(ell):
                assert count_pattern_charsum(ctx, s) == count_pattern(ctx, s), (p, s)


def test_pattern_curve_genus():
    assert pattern_curve_genus(2) == 0
    assert pattern_curve_genus(3) == 1
    assert pattern_curve_genus(4) == 5
    assert pattern_curve_genus(5) == 17
    with pytest.raises(ValueError):
        pattern_curve_genus(1)


def test_pattern_curve_count_frozen():
    assert pattern_curve_count(build_context(17), 3) == 0
    assert pattern_curve_count(build_context(17), 2) == 12
    assert pattern_curve_count(build_context(13), 2) == 8


def test_pattern_curve_count_matches_chain_enumeration():
    for p in (5, 13, 17, 29):
        for ell in (2, 3):
            assert pattern_curve_count(build_context(p), ell) == \
                brute.chain_curve_count(p, ell), (p, ell)


def test_pattern_curve_count_is_scaled_pattern_count():
    for p in primes_in(7, 1000):
        ctx = build_context(p)
        for ell in (2, 3, 4):
            assert pattern_curve_count(ctx, ell) == \
                (1 << ell) * count_pattern(ctx, "X" * ell), (p, ell)


def test_weil_deviation_17():
    ctx = build_context(17)
    dev, bound = weil_deviation(ctx, "XXXX")
    assert dev == Fraction(-1)
    assert bound == pytest.approx(3.8346, abs=1e-4)
    assert weil_bound_ok(ctx, "XXXX")
    with pytest.raises(ValueError):
        weil_deviation(ctx, "XXX")
    with pytest.raises(ValueError):
        weil_deviation(build_context(13), "XXXX")


def test_weil_bound_holds_on_sample_range():
    for p in primes_in(17, 500):
        ctx = build_context(p)
        for s in all_patterns(4):
            dev, bound = weil_deviation(ctx, s)
            assert abs(float(dev)) <= bound + 1e-9, (p, s)
            assert weil_bound_ok(ctx, s), (p, s)
