"""Rigged configurations: the action-angle variables of the box-ball system.

A rigged configuration is a partition, stored by multiplicities
``{row length: m_i}``, together with a sorted list of integer riggings for
each row length.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from typing import Iterable, Iterator, Mapping, NamedTuple


class Partition(tuple):
    """Weakly decreasing tuple of positive parts."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = sorted((int(p) for p in parts), reverse=True)
        if parts and parts[-1] <= 0:
            raise ValueError("partition parts must be positive")
        return super().__new__(cls, parts)

    @classmethod
    def from_multiplicities(cls, mult: Mapping[int, int]) -> "Partition":
        return cls(i for i, m in mult.items() for _ in range(m))

    @property
    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self:
            out[p] = out.get(p, 0) + 1
        return out

    @property
    def weight(self) -> int:
        return sum(self)

    def __repr__(self):
        return f"Partition({list(self)})"


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first, *rest))


@dataclass(frozen=True)
class RiggedConfiguration:
    """``riggings`` maps each row length with m_i > 0 to its sorted riggings."""

    riggings: tuple[tuple[int, tuple[int, ...]], ...] = ()

    def __post_init__(self):
        lengths = [i for i, _ in self.riggings]
        if lengths != sorted(set(lengths)):
            raise ValueError("row lengths must be distinct and ascending")
        for i, js in self.riggings:
            if i < 1:
                raise ValueError(f"row length {i} is not positive")
            if not js:
                raise ValueError(f"row length {i} carries no riggings")
            if list(js) != sorted(js):
                raise ValueError(f"riggings for length {i} are not sorted")

    @classmethod
    def from_dict(cls, data: Mapping[int, Iterable[int]]) -> "RiggedConfiguration":
        items = []
        for i in sorted(data):
            js = tuple(sorted(int(j) for j in data[i]))
            if js:
                items.append((int(i), js))
        return cls(tuple(items))

    @classmethod
    def from_rows(cls, rows: Iterable[tuple[int, int]]) -> "RiggedConfiguration":
        """Build from ``(row length, rigging)`` pairs."""
        data: dict[int, list[int]] = {}
        for i, j in rows:
            data.setdefault(i, []).append(j)
        return cls.from_dict(data)

    def as_dict(self) -> dict[int, tuple[int, ...]]:
        return dict(self.riggings)

    def rows(self) -> list[tuple[int, int]]:
        return [(i, j) for i, js in self.riggings for j in js]

    @property
    def multiplicities(self) -> dict[int, int]:
        return {i: len(js) for i, js in self.riggings}

    @property
    def shape(self) -> Partition:
        return Partition.from_multiplicities(self.multiplicities)

    def get(self, i: int) -> tuple[int, ...]:
        return dict(self.riggings).get(i, ())

    def __bool__(self):
        return bool(self.riggings)

    def __str__(self):
        from boxball.textio import format_rc

        return format_rc(self)


EMPTY_RC = RiggedConfiguration()


def _mult(shape) -> dict[int, int]:
    if isinstance(shape, Mapping):
        return {i: m for i, m in shape.items() if m > 0}
    return Partition(shape).multiplicities


def phi(shape) -> int:
    mult = _mult(shape)
    return sum(min(i, j) * mi * mj for i, mi in mult.items() for j, mj in mult.items())


def vacancy(shape, i: int, L: int) -> int:
    """p_i = L - 2 * sum_j min(i, j) m_j."""
    return L - 2 * sum(min(i, j) * mj for j, mj in _mult(shape).items())


class Stats(NamedTuple):
    vacancies: dict[int, int]
    phi: int


def combinatorial_stats(shape, L: int) -> Stats:
    mult = _mult(shape)
    return Stats({i: vacancy(mult, i, L) for i in sorted(mult)}, phi(mult))


def energy_rc(rc: RiggedConfiguration) -> int:
    return phi(rc.multiplicities) + sum(sum(js) for _, js in rc.riggings)


def evolve_riggings(rc: RiggedConfiguration, steps: int) -> RiggedConfiguration:
    """Linear flow: each rigging grows by its row length per time step."""
    return RiggedConfiguration(
        tuple((i, tuple(j + steps * i for j in js)) for i, js in rc.riggings)
    )


def wave_front_value(rc: RiggedConfiguration, i: int) -> int:
    """J^{i,1}_{m_i}: largest rigging of length i plus 2 * sum_j min(i, j) m_j."""
    mult = rc.multiplicities
    return rc.get(i)[-1] + 2 * sum(min(i, j) * mj for j, mj in mult.items())


class Bounds(NamedTuple):
    ball_count: int
    leftmost_tail: int | None
    rightmost_front: int | None


def bounds(rc: RiggedConfiguration) -> Bounds:
    """Ball count and outermost walls of the state the configuration encodes.

    The two extremes are None for the empty configuration.
    """
    count = rc.shape.weight
    if not rc:
        return Bounds(0, None, None)
    tail = min(js[0] + i for i, js in rc.riggings)
    front = max(wave_front_value(rc, i) for i, _ in rc.riggings)
    return Bounds(count, tail, front)


def enumerate_rcs(L: int, shape, highest_only: bool = False) -> list[RiggedConfiguration]:
    """All configurations of the given shape whose riggings fit the box of width L.

    Riggings at length i range over [-i, p_i], or [0, p_i] for highest weight.
    """
    mult = _mult(shape)
    if not mult:
        return [EMPTY_RC]
    choices = []
    for i in sorted(mult):
        lo = 0 if highest_only else -i
        hi = vacancy(mult, i, L)
        options = list(combinations_with_replacement(range(lo, hi + 1), mult[i]))
        if not options:
            return []
        choices.append([(i, js) for js in options])
    return [RiggedConfiguration(tuple(combo)) for combo in product(*choices)]
