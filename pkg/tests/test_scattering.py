import random
from bisect import insort

import pytest
from hypothesis import given, settings, strategies as st

from boxball.rigged import (
    EMPTY_RC,
    RiggedConfiguration,
    combinatorial_stats,
    enumerate_rcs,
    evolve_riggings,
    partitions,
)
from boxball.scattering import (
    EMPTY_MATRIX,
    InsertionMatrix,
    companion_state,
    direct_transform,
    inverse_matrix,
    inverse_transform,
    inverse_transform_blocks,
    omega,
    omega_set,
    phi_map,
    scattering_stages,
    solve,
    soliton_content,
    stages_to_rc,
)
from boxball.state import (
    VACUUM,
    enumerate_states,
    evolve,
    evolve_n,
    is_highest_weight,
    state_from_blocks,
    state_from_boxes,
)

EX = state_from_blocks([(1, 3), (4, 6), (9, 10)])
EX_M = InsertionMatrix.from_rows([1, 4, 9], [3, 6, 10])
EX_RC = RiggedConfiguration.from_dict({1: [1, 4], 3: [-2]})
INTRO = state_from_blocks([(0, 4), (6, 9), (11, 12), (15, 16)])
SECOND_RC = RiggedConfiguration.from_dict({1: [7, 9], 2: [2], 5: [0]})

states = st.sets(st.integers(-6, 16), max_size=10).map(state_from_boxes)


@st.composite
def rcs(draw):
    rows = draw(st.lists(st.tuples(st.integers(1, 5), st.integers(-8, 8)), max_size=5))
    return RiggedConfiguration.from_rows(rows)


# -- oracles ------------------------------------------------------------------


def lattice_path_transform(state):
    """Unit-step description: step right subtracting 1,2,3,..., or step up
    removing the smallest duplicated entry and recording it as a rigging."""
    alpha = list(state.walls)
    width = 0
    rows = []
    while alpha:
        dup = [x for x, y in zip(alpha, alpha[1:]) if x == y]
        if dup:
            v = dup[0]
            alpha.remove(v)
            alpha.remove(v)
            rows.append((width, v))
        else:
            alpha = [x - k for k, x in enumerate(alpha, start=1)]
            width += 1
    return RiggedConfiguration.from_rows(rows)


def double_insert(m, x):
    entries = list(m.entries)
    insort(entries, x)
    insort(entries, x)
    return InsertionMatrix(tuple(entries))


# -- golden examples ----------------------------------------------------------


def test_direct_transform_examples():
    assert direct_transform(EX) == EX_RC
    assert direct_transform(INTRO) == RiggedConfiguration.from_dict(
        {1: [6, 8], 2: [0], 5: [-5]}
    )
    assert direct_transform(VACUUM) == EMPTY_RC


def test_scattering_stages_example():
    assert scattering_stages(EX) == [(1, [1, 4]), (2, [-2])]
    assert stages_to_rc(scattering_stages(EX)) == EX_RC


def test_omega_examples():
    assert omega(EX_M, 5) == InsertionMatrix.from_rows([1, 4, 5, 9], [3, 5, 6, 10])
    assert omega_set(EX_M, [1, 5, 8]) == InsertionMatrix.from_rows(
        [1, 1, 4, 5, 8, 9], [1, 3, 5, 6, 8, 10]
    )
    assert omega(EMPTY_MATRIX, 0) == InsertionMatrix.from_rows([0], [0])


def test_phi_examples():
    m = omega_set(EX_M, [1, 5, 8])
    assert phi_map(m, 1) == InsertionMatrix.from_rows(
        [2, 4, 9, 12, 17, 20], [3, 7, 11, 14, 18, 22]
    )
    assert phi_map(m, 0) == InsertionMatrix.from_rows(
        [1, 3, 8, 11, 16, 19], [2, 6, 10, 13, 17, 21]
    )
    assert phi_map(InsertionMatrix.from_rows([0], [0]), 1) == InsertionMatrix.from_rows([1], [2])
    with pytest.raises(ValueError):
        phi_map(m, 2)


def test_inverse_transform_examples():
    assert inverse_matrix(SECOND_RC) == InsertionMatrix.from_rows([4, 9, 12, 16], [6, 11, 15, 18])
    assert inverse_transform(EX_RC) == EX
    assert inverse_transform(EMPTY_RC) == VACUUM


def test_companion_state_examples():
    assert companion_state(SECOND_RC) == INTRO
    assert evolve(companion_state(SECOND_RC)) == inverse_transform(SECOND_RC)
    assert companion_state(EMPTY_RC) == VACUUM


def test_solve_examples():
    assert solve(INTRO, 2) == state_from_blocks([(6, 8), (11, 12), (15, 16), (18, 23)])
    assert solve(INTRO, 0) == INTRO
    assert solve(INTRO, 1) == evolve(INTRO)


def test_matrix_validation():
    with pytest.raises(ValueError):
        InsertionMatrix((1, 2, 3))
    with pytest.raises(ValueError):
        InsertionMatrix((3, 1))
    assert not omega(EX_M, 4).is_strict()
    assert EX_M.is_strict()


# -- properties ---------------------------------------------------------------


@given(st.lists(st.integers(-10, 10), max_size=8).map(sorted).map(tuple), st.integers(-12, 12))
def test_omega_is_double_insertion(entries, x):
    if len(entries) % 2:
        entries = entries[:-1]
    m = InsertionMatrix(entries)
    assert omega(m, x) == double_insert(m, x)


@given(st.lists(st.integers(-10, 10), max_size=8).map(sorted).map(tuple),
       st.lists(st.integers(-12, 12), max_size=5), st.randoms())
def test_omega_set_order_independent(entries, xs, rnd):
    if len(entries) % 2:
        entries = entries[:-1]
    m = InsertionMatrix(entries)
    expected = omega_set(m, xs)
    shuffled = list(xs)
    rnd.shuffle(shuffled)
    out = m
    for x in shuffled:
        out = omega(out, x)
    assert out == expected


@given(states)
def test_direct_transform_matches_lattice_path(state):
    assert direct_transform(state) == lattice_path_transform(state)


@given(rcs())
def test_round_trip_from_rc(rc):
    assert direct_transform(inverse_transform(rc)) == rc


@given(states)
def test_round_trip_from_state(state):
    assert inverse_transform(direct_transform(state)) == state


@given(rcs())
def test_block_recursion_agrees(rc):
    assert inverse_transform_blocks(rc) == inverse_transform(rc)
    assert inverse_transform_blocks(rc, 0) == companion_state(rc)


@given(rcs())
def test_companion_relations(rc):
    comp = companion_state(rc)
    state = inverse_transform(rc)
    assert evolve(comp) == state
    assert comp == inverse_transform(evolve_riggings(rc, -1))
    # the first row of M equals the second row of L
    assert state.tails == comp.fronts


@given(states)
def test_linearization(state):
    rc = direct_transform(state)
    assert direct_transform(evolve(state)) == evolve_riggings(rc, 1)
    assert soliton_content(evolve(state)) == rc.shape


@settings(max_examples=60)
@given(states, st.integers(0, 20))
def test_solve_matches_repeated_evolve(state, n):
    assert solve(state, n) == evolve_n(state, n)


def test_solve_negative_steps_runs_backwards():
    assert solve(evolve_n(INTRO, 3), -3) == INTRO


@pytest.mark.parametrize("L", range(1, 9))
def test_highest_weight_iff_rigging_bounds(L):
    for s in range(L + 1):
        for p in enumerate_states(L, s):
            rc = direct_transform(p)
            vac = combinatorial_stats(rc.shape, L).vacancies
            inside = all(js[0] >= 0 and js[-1] <= vac[i] for i, js in rc.riggings)
            assert is_highest_weight(p) == inside


@pytest.mark.parametrize("L", range(1, 9))
def test_box_bijection_counts(L):
    for n in range(L + 1):
        for lam in partitions(n):
            images = {inverse_transform(rc) for rc in enumerate_rcs(L, lam)}
            expected = {p for p in enumerate_states(L, n) if soliton_content(p) == lam}
            assert images == expected


def test_pair_removal_order_invariance():
    rnd = random.Random(20240611)
    checked = 0
    for L in range(1, 10):
        for s in range(L + 1):
            for p in enumerate_states(L, s):
                expected = direct_transform(p)
                for _ in range(5):
                    order = lambda dup: rnd.sample(dup, len(dup))
                    assert stages_to_rc(scattering_stages(p, order)) == expected
                checked += 1
    assert checked == sum(2**L for L in range(1, 10))
