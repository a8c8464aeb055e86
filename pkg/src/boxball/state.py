"""Box-ball states on the infinite line of walls.

Walls carry integer coordinates; the box between walls ``j - 1`` and ``j``
is box ``j``.  A state is stored as its maximal ball blocks ``(a, b)``:
every box strictly between walls ``a`` and ``b`` holds a ball.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Literal, Sequence

Direction = Literal["advanced", "retarded"]


class InvalidStateError(ValueError):
    pass


@dataclass(frozen=True)
class State:
    blocks: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        prev = None
        for a, b in self.blocks:
            if b - a < 1:
                raise InvalidStateError(f"empty or reversed block ({a},{b})")
            if prev is not None and a <= prev:
                raise InvalidStateError(
                    f"block ({a},{b}) overlaps or touches the previous one"
                )
            prev = b

    @property
    def balls(self) -> int:
        return sum(b - a for a, b in self.blocks)

    @property
    def walls(self) -> tuple[int, ...]:
        """Column-wise reading alpha_1 < alpha_2 < ... of the two-row matrix."""
        return tuple(w for blk in self.blocks for w in blk)

    @property
    def tails(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.blocks)

    @property
    def fronts(self) -> tuple[int, ...]:
        return tuple(b for _, b in self.blocks)

    def filled_boxes(self) -> Iterator[int]:
        for a, b in self.blocks:
            yield from range(a + 1, b + 1)

    def is_vacuum(self) -> bool:
        return not self.blocks

    def __bool__(self):
        return bool(self.blocks)

    def __str__(self):
        from boxball.textio import format_state

        return format_state(self)


VACUUM = State()


def state_from_blocks(pairs: Iterable[Sequence[int]]) -> State:
    """Build a state from ``(a, b)`` pairs given in any order.

    Raises InvalidStateError when two blocks overlap or touch, since touching
    blocks are not maximal.
    """
    blocks = sorted((int(a), int(b)) for a, b in pairs)
    return State(tuple(blocks))


def state_from_walls(walls: Sequence[int]) -> State:
    if len(walls) % 2:
        raise InvalidStateError("odd number of walls")
    for x, y in zip(walls, walls[1:]):
        if y <= x:
            raise InvalidStateError(f"walls not strictly increasing: {list(walls)}")
    return State(tuple(zip(walls[::2], walls[1::2])))


def state_from_boxes(boxes: Iterable[int]) -> State:
    """State whose filled boxes are exactly ``boxes`` (box j spans walls j-1, j)."""
    blocks: list[list[int]] = []
    for j in sorted(set(boxes)):
        if blocks and blocks[-1][1] == j - 1:
            blocks[-1][1] = j
        else:
            blocks.append([j - 1, j])
    return State(tuple((a, b) for a, b in blocks))


def occupancy(state: State, lo: int, hi: int) -> list[int]:
    """Bits for the boxes between walls ``lo`` and ``hi``."""
    if lo > hi:
        raise ValueError("window must satisfy lo <= hi")
    bits = [0] * (hi - lo)
    for j in state.filled_boxes():
        if lo < j <= hi:
            bits[j - lo - 1] = 1
    return bits


def from_occupancy(bits: Sequence[int], origin: int = 0) -> State:
    return state_from_boxes(origin + k + 1 for k, bit in enumerate(bits) if bit)


# -- arcs ---------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Arc:
    left: int
    right: int
    depth: int


def arcs(state: State, direction: Direction = "advanced") -> tuple[Arc, ...]:
    """Arc diagram of a state, sorted by left endpoint.

    A single stack pass realizes the iterated pairing: for advanced arcs a
    filled box is pushed and the next unpaired empty box closes it; retarded
    arcs do the same with roles swapped, which on the infinite line is the
    mirror image of the advanced pass.
    """
    if not state.blocks:
        return ()
    if direction == "advanced":
        return _advanced_arcs(set(state.filled_boxes()))
    if direction == "retarded":
        mirrored = {-j + 1 for j in state.filled_boxes()}
        return tuple(
            sorted(Arc(-arc.right, -arc.left, arc.depth) for arc in _advanced_arcs(mirrored))
        )
    raise ValueError(f"unknown arc direction {direction!r}")


def _advanced_arcs(filled: set[int]) -> tuple[Arc, ...]:
    first, last = min(filled), max(filled)
    # Every ball finds a partner within len(filled) empty boxes past the last ball.
    stop = last + len(filled)
    stack: list[list[int]] = []  # [box, deepest child]
    out = []
    for j in range(first, stop + 1):
        if j in filled:
            stack.append([j, 0])
        elif stack:
            box, inner = stack.pop()
            depth = inner + 1
            out.append(Arc(box - 1, j, depth))
            if stack:
                stack[-1][1] = max(stack[-1][1], depth)
    assert not stack
    return tuple(sorted(out))


def evolve(state: State) -> State:
    """One time step: every ball jumps along its advanced arc."""
    return state_from_boxes(arc.right for arc in arcs(state, "advanced"))


def evolve_n(state: State, steps: int) -> State:
    if steps < 0:
        raise ValueError("steps must be non-negative")
    for _ in range(steps):
        state = evolve(state)
    return state


# -- energy and highest weight ------------------------------------------------


def energy_ctm(state: State) -> int:
    return sum(state.tails)


def is_highest_weight(state: State) -> bool:
    if not state.blocks:
        return True
    if state.blocks[0][0] < 0:
        return False
    tails = fronts = 0
    for a, b in state.blocks:
        tails += a
        if 2 * fronts + b > 2 * tails:
            return False
        fronts += b
    return True


def enumerate_states(L: int, s: int, highest_only: bool = False) -> list[State]:
    """All states with walls in [0, L] carrying exactly ``s`` balls."""
    if s == 0:
        return [VACUUM]
    out = []
    for n in range(1, min(s, L - s + 1) + 1):
        for walls in combinations(range(L + 1), 2 * n):
            if sum(walls[1::2]) - sum(walls[::2]) != s:
                continue
            st = State(tuple(zip(walls[::2], walls[1::2])))
            if not highest_only or is_highest_weight(st):
                out.append(st)
    return out
