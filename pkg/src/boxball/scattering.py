"""Direct and inverse scattering transforms.

Two-row matrices are stored as their column-wise reading
``alpha_1, alpha_2, ..., alpha_2n`` (top row holds the odd entries).
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Sequence

from boxball.rigged import RiggedConfiguration, evolve_riggings
from boxball.state import State, state_from_walls


@dataclass(frozen=True)
class InsertionMatrix:
    entries: tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.entries) % 2:
            raise ValueError("a two-row matrix needs an even number of entries")
        for x, y in zip(self.entries, self.entries[1:]):
            if y < x:
                raise ValueError(f"entries not weakly increasing: {self.entries}")

    @classmethod
    def from_rows(cls, top: Sequence[int], bottom: Sequence[int]) -> "InsertionMatrix":
        if len(top) != len(bottom):
            raise ValueError("rows differ in length")
        return cls(tuple(x for col in zip(top, bottom) for x in col))

    @classmethod
    def of_state(cls, state: State) -> "InsertionMatrix":
        return cls(state.walls)

    @property
    def top(self) -> tuple[int, ...]:
        return self.entries[::2]

    @property
    def bottom(self) -> tuple[int, ...]:
        return self.entries[1::2]

    @property
    def columns(self) -> int:
        return len(self.entries) // 2

    def is_strict(self) -> bool:
        return all(x < y for x, y in zip(self.entries, self.entries[1:]))

    def to_state(self) -> State:
        return state_from_walls(self.entries)

    def __str__(self):
        return f"({' '.join(map(str, self.top))} / {' '.join(map(str, self.bottom))})"


EMPTY_MATRIX = InsertionMatrix()


def omega(m: InsertionMatrix, x: int) -> InsertionMatrix:
    """Insert x into the matrix, adding one column.

    With i the number of entries <= x: for odd i the x lands in the top row
    of the next column and in the bottom row of the current one; for even i
    a full column (x, x) is inserted.  Both cases amount to splicing x, x into
    the column-wise reading right after alpha_i.
    """
    a = m.entries
    i = bisect_right(a, x)
    top, bottom = list(a[::2]), list(a[1::2])
    if i % 2:
        l = (i + 1) // 2
        top.insert(l, x)
        bottom.insert(l - 1, x)
    else:
        l = i // 2
        top.insert(l, x)
        bottom.insert(l, x)
    return InsertionMatrix.from_rows(top, bottom)


def omega_set(m: InsertionMatrix, xs: Iterable[int]) -> InsertionMatrix:
    """Omega_{x_1} o ... o Omega_{x_p}: the largest x is inserted first."""
    for x in sorted(xs, reverse=True):
        m = omega(m, x)
    return m


def phi_map(m: InsertionMatrix, variant: int) -> InsertionMatrix:
    """Add the staircase 0,1,...,2n-1 (variant 0) or 1,2,...,2n (variant 1)."""
    if variant not in (0, 1):
        raise ValueError("variant must be 0 or 1")
    return InsertionMatrix(tuple(x + k + variant for k, x in enumerate(m.entries)))


def pi_map(m: InsertionMatrix, xs: Iterable[int], variant: int = 1) -> InsertionMatrix:
    return phi_map(omega_set(m, xs), variant)


# -- direct transform ---------------------------------------------------------


def scattering_stages(state: State, pair_order=None) -> list[tuple[int, list[int]]]:
    """Run the staircase-and-pair-removal loop, returning (h_i, a^i) per stage.

    ``pair_order`` optionally permutes the candidate duplicate values before
    pairs are removed (used to check order independence); it receives the
    sorted list of duplicated values and returns them in removal order.
    """
    alpha = list(state.walls)
    stages = []
    while alpha:
        h = min(y - x for x, y in zip(alpha, alpha[1:]))
        beta = [x - (k + 1) * h for k, x in enumerate(alpha)]
        removed, alpha = _remove_pairs(beta, pair_order)
        stages.append((h, removed))
    return stages


def _remove_pairs(values: list[int], pair_order=None) -> tuple[list[int], list[int]]:
    counts: dict[int, int] = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    removed: list[int] = []
    if pair_order is None:
        for v in sorted(counts):
            pairs, counts[v] = divmod(counts[v], 2)
            removed.extend([v] * pairs)
    else:
        while True:
            dup = sorted(v for v, c in counts.items() if c >= 2)
            if not dup:
                break
            v = pair_order(dup)[0]
            counts[v] -= 2
            removed.append(v)
        removed.sort()
    rest = sorted(v for v, c in counts.items() for _ in range(c))
    return removed, rest


def stages_to_rc(stages: Sequence[tuple[int, Sequence[int]]]) -> RiggedConfiguration:
    rows = []
    length = 0
    for h, riggings in stages:
        length += h
        rows.extend((length, j) for j in riggings)
    return RiggedConfiguration.from_rows(rows)


def rc_to_stages(rc: RiggedConfiguration) -> list[tuple[int, list[int]]]:
    stages = []
    prev = 0
    for i, js in rc.riggings:
        stages.append((i - prev, list(js)))
        prev = i
    return stages


def direct_transform(state: State) -> RiggedConfiguration:
    return stages_to_rc(scattering_stages(state))


def soliton_content(state: State):
    return direct_transform(state).shape


# -- inverse transform --------------------------------------------------------


def _pi_composition(rc: RiggedConfiguration, variant: int) -> InsertionMatrix:
    m = EMPTY_MATRIX
    top = max((i for i, _ in rc.riggings), default=0)
    riggings = rc.as_dict()
    for a in range(top, 0, -1):
        m = pi_map(m, riggings.get(a, ()), variant)
    return m


def inverse_matrix(rc: RiggedConfiguration) -> InsertionMatrix:
    return _pi_composition(rc, 1)


def inverse_transform(rc: RiggedConfiguration) -> State:
    return inverse_matrix(rc).to_state()


def inverse_transform_blocks(rc: RiggedConfiguration, variant: int = 1) -> State:
    """Stage-wise recursion M_i = Phi^{h_i} o Omega_{a^i}(M_{i+1}).

    Independent route to the same matrix as the row-length composition.
    """
    m = EMPTY_MATRIX
    for h, riggings in reversed(rc_to_stages(rc)):
        m = omega_set(m, riggings)
        for _ in range(h):
            m = phi_map(m, variant)
    return m.to_state()


def companion_state(rc: RiggedConfiguration) -> State:
    """The state that evolves into ``inverse_transform(rc)`` in one step."""
    return _pi_composition(rc, 0).to_state()


def solve(state: State, steps: int) -> State:
    """State after ``steps`` updates, computed through the scattering data."""
    return inverse_transform(evolve_riggings(direct_transform(state), steps))
