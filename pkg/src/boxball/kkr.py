"""Box removal on rigged configurations (sl(2) KKR bijection).

Each step shortens the shortest singular row by one box and removes the
right-most ball of the encoded state.
"""

from __future__ import annotations

from bisect import insort

from boxball.rigged import RiggedConfiguration, wave_front_value
from boxball.state import State, state_from_boxes


class EmptyConfigurationError(ValueError):
    pass


def singular_row(rc: RiggedConfiguration) -> int | None:
    """Shortest row length attaining max_i J^{i,1}_{m_i}; None if rc is empty."""
    best = None
    best_value = None
    for i, _ in rc.riggings:  # ascending, so ties keep the shorter row
        value = wave_front_value(rc, i)
        if best_value is None or value > best_value:
            best, best_value = i, value
    return best


def remove_box(rc: RiggedConfiguration) -> tuple[RiggedConfiguration, int]:
    """Return the reduced configuration and the right wall of the removed ball."""
    s = singular_row(rc)
    if s is None:
        raise EmptyConfigurationError("cannot remove a box from the empty configuration")
    ball_wall = wave_front_value(rc, s)
    data = {i: list(js) for i, js in rc.riggings}
    top = data[s].pop()
    if s > 1:
        longer = sum(m for i, m in rc.multiplicities.items() if i >= s)
        insort(data.setdefault(s - 1, []), top + 2 * longer - 1)
    return RiggedConfiguration.from_dict(data), ball_wall


def remove_all(rc: RiggedConfiguration) -> list[int]:
    """Right walls of the balls in removal order."""
    walls = []
    while rc:
        rc, wall = remove_box(rc)
        walls.append(wall)
    return walls


def kkr_inverse(rc: RiggedConfiguration) -> State:
    return state_from_boxes(remove_all(rc))
