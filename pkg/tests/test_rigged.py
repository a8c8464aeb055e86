from itertools import product

import pytest
from hypothesis import given, strategies as st

from boxball.rigged import (
    EMPTY_RC,
    Partition,
    RiggedConfiguration,
    bounds,
    combinatorial_stats,
    energy_rc,
    enumerate_rcs,
    evolve_riggings,
    partitions,
)
from boxball.scattering import inverse_transform
from boxball.state import energy_ctm, state_from_blocks

EX_RC = RiggedConfiguration.from_dict({1: [1, 4], 3: [-2]})
INTRO_RC = RiggedConfiguration.from_dict({1: [6, 8], 2: [0], 5: [-5]})


@st.composite
def rcs(draw, max_rows=5):
    rows = draw(
        st.lists(st.tuples(st.integers(1, 5), st.integers(-8, 8)), max_size=max_rows)
    )
    return RiggedConfiguration.from_rows(rows)


def test_partition_basics():
    lam = Partition([1, 3, 1])
    assert tuple(lam) == (3, 1, 1)
    assert lam.multiplicities == {3: 1, 1: 2}
    assert lam.weight == 5
    assert Partition.from_multiplicities({1: 2, 3: 1}) == lam
    with pytest.raises(ValueError):
        Partition([2, 0])


def test_partitions_counts():
    assert [len(list(partitions(n))) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_rc_validation():
    with pytest.raises(ValueError):
        RiggedConfiguration(((1, (3, 2)),))
    with pytest.raises(ValueError):
        RiggedConfiguration(((2, (0,)), (1, (0,))))
    with pytest.raises(ValueError):
        RiggedConfiguration(((1, ()),))


def test_rc_multiset_normal_form():
    a = RiggedConfiguration.from_rows([(1, 4), (3, -2), (1, 1)])
    assert a == EX_RC
    assert a.shape == Partition([3, 1, 1])


def test_combinatorial_stats_examples():
    stats = combinatorial_stats([3, 1, 1], 12)
    assert stats.vacancies == {1: 6, 3: 2}
    assert stats.phi == 11
    stats = combinatorial_stats([2], 4)
    assert stats.vacancies == {2: 0}
    assert stats.phi == 2
    assert combinatorial_stats([], 7) == ({}, 0)


def test_energy_rc_examples():
    assert energy_rc(EX_RC) == 14
    assert energy_rc(EMPTY_RC) == 0
    # phi(5,2,1,1) = 23, riggings add 9; equal to the CTM energy of the intro state
    assert energy_rc(INTRO_RC) == 32
    assert energy_rc(INTRO_RC) == energy_ctm(
        state_from_blocks([(0, 4), (6, 9), (11, 12), (15, 16)])
    )


def test_evolve_riggings_examples():
    one = evolve_riggings(INTRO_RC, 1)
    assert one == RiggedConfiguration.from_dict({1: [7, 9], 2: [2], 5: [0]})
    assert evolve_riggings(INTRO_RC, 2) == RiggedConfiguration.from_dict(
        {1: [8, 10], 2: [4], 5: [5]}
    )
    assert evolve_riggings(INTRO_RC, 0) == INTRO_RC


@given(rcs(), st.integers(-30, 30))
def test_evolve_riggings_invertible(rc, n):
    assert evolve_riggings(evolve_riggings(rc, n), -n) == rc


@given(rcs())
def test_flow_properties(rc):
    nxt = evolve_riggings(rc, 1)
    assert nxt.shape == rc.shape
    assert energy_rc(nxt) - energy_rc(rc) == rc.shape.weight
    if rc:
        assert bounds(nxt).rightmost_front > bounds(rc).rightmost_front


def test_bounds_examples():
    assert bounds(EX_RC) == (5, 1, 10)
    third = RiggedConfiguration.from_dict({1: [8, 10], 2: [4], 5: [5]})
    assert bounds(third).rightmost_front == 23
    assert bounds(EMPTY_RC) == (0, None, None)


@given(rcs())
def test_bounds_match_inverse_transform(rc):
    state = inverse_transform(rc)
    b = bounds(rc)
    assert b.ball_count == state.balls
    if rc:
        assert b.leftmost_tail == state.walls[0]
        assert b.rightmost_front == state.walls[-1]


def test_enumerate_rcs_examples():
    assert enumerate_rcs(4, [2], True) == [RiggedConfiguration.from_dict({2: [0]})]
    assert enumerate_rcs(4, [1, 1], True) == [RiggedConfiguration.from_dict({1: [0, 0]})]
    assert enumerate_rcs(9, [], True) == [EMPTY_RC]
    assert enumerate_rcs(9, [], False) == [EMPTY_RC]
    assert enumerate_rcs(3, [2], True) == []


def _multichoose(n, k):
    from math import comb

    return comb(n + k - 1, k) if n > 0 else int(k == 0)


@pytest.mark.parametrize("L", range(1, 9))
def test_enumerate_rcs_counts_and_bounds(L):
    for n in range(L + 1):
        for lam in partitions(n):
            stats = combinatorial_stats(lam, L)
            mult = lam.multiplicities
            for hw in (True, False):
                found = enumerate_rcs(L, lam, hw)
                expected = 1
                for i, m in mult.items():
                    lo = 0 if hw else -i
                    expected *= _multichoose(max(stats.vacancies[i] - lo + 1, 0), m)
                assert len(found) == expected
                assert len(set(found)) == len(found)
                for rc in found:
                    assert rc.shape == lam
                    for i, js in rc.riggings:
                        assert (0 if hw else -i) <= js[0]
                        assert js[-1] <= stats.vacancies[i]


def test_enumerate_rcs_brute_force():
    # every rigging tuple in the box, filtered by sortedness
    L, lam = 7, Partition([2, 1, 1])
    stats = combinatorial_stats(lam, L)
    brute = set()
    ones = range(-1, stats.vacancies[1] + 1)
    for j1a, j1b, j2 in product(ones, ones, range(-2, stats.vacancies[2] + 1)):
        if j1a <= j1b:
            brute.add(RiggedConfiguration.from_dict({1: [j1a, j1b], 2: [j2]}))
    assert set(enumerate_rcs(L, lam)) == brute
