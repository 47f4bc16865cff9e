import pytest
from hypothesis import given, strategies as st

import oracles
from permcodec.coloring import ColoringParams, canonical_coloring, occurrence_start_mask
from permcodec.enumeration import enumerate_avoiders
from permcodec.errors import DomainError
from permcodec.perms import avoids, split_by_mask, staircase_pattern

SINGLETONS = ColoringParams((1,), (1,), (1,))


def test_derived_patterns():
    assert SINGLETONS.red_pattern == (1, 3, 2)
    assert SINGLETONS.blue_pattern == (2, 1, 3)
    assert SINGLETONS.split_pattern == (1, 3, 2, 4)
    wide = ColoringParams((1,), (1,), staircase_pattern(3))
    assert wide.split_pattern == staircase_pattern(6)
    assert wide.blue_pattern == staircase_pattern(5)


def test_parameters_must_be_nonempty():
    with pytest.raises(DomainError):
        ColoringParams((), (1,), (1,))


def test_worked_coloring():
    mask = canonical_coloring((3, 6, 1, 2, 7, 4, 5), SINGLETONS)
    red, blue = split_by_mask((3, 6, 1, 2, 7, 4, 5), mask)
    assert red == (3, 6, 1, 2, 7)
    assert blue == (4, 5)


def test_coloring_of_the_split_pattern_itself():
    # rule 1 forces entry 2 blue (else red 132 via 1,3,2); rule 2 then forces 4
    mask = canonical_coloring((1, 3, 2, 4), SINGLETONS)
    red, blue = split_by_mask((1, 3, 2, 4), mask)
    assert red == (1, 3)
    assert blue == (2, 4)


@pytest.mark.parametrize("k", [4, 6])
def test_split_properties_hold_for_all_avoiders(k):
    tail = staircase_pattern(k - 3) if k >= 6 else (1,)
    params = ColoringParams((1,), (1,), tail)
    for n in range(0, 7):
        for p in enumerate_avoiders(params.split_pattern, n):
            mask = canonical_coloring(p, params)
            red, blue = split_by_mask(p, mask)
            assert avoids(red, params.red_pattern)
            assert avoids(blue, params.blue_pattern)


@given(
    st.integers(0, 7).flatmap(
        lambda n: st.permutations(tuple(range(1, n + 1)))
    ).map(tuple)
)
def test_coloring_rules_on_arbitrary_permutations(p):
    """Rule shape holds even off the avoider domain (the mask is total)."""
    mask = canonical_coloring(p, SINGLETONS)
    red, _ = split_by_mask(p, mask)
    assert avoids(red, SINGLETONS.red_pattern)
    blue_values = [v for v, hit in zip(p, mask) if not hit]
    for i, v in enumerate(p):
        earlier_blue = [b for b in blue_values if b in p[:i]]
        if earlier_blue and v > min(earlier_blue):
            assert not mask[i]


def test_occurrence_start_mask_matches_brute_force():
    p = (6, 8, 7, 9, 1, 2, 4, 3, 5)
    q = (1, 3, 2)
    starts = {spots[0] for spots in oracles.brute_occurrences(p, q)}
    assert occurrence_start_mask(p, q) == tuple(
        i + 1 in starts for i in range(len(p))
    )


def test_occurrence_start_mask_worked_example():
    mask = occurrence_start_mask((6, 8, 7, 9, 1, 2, 4, 3, 5), staircase_pattern(4))
    assert mask == (True, False, False, False, True, True, False, False, False)
