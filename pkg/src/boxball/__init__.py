"""Box-ball system: evolution, scattering transforms and fermionic identities."""

from boxball.kkr import kkr_inverse, remove_box, singular_row
from boxball.qseries import (
    QPolynomial,
    kostka_identity_check,
    partition_function,
    partition_to_state,
    qbinomial,
    state_to_restricted_partition,
    total_partition_function,
)
from boxball.rigged import (
    Partition,
    RiggedConfiguration,
    bounds,
    combinatorial_stats,
    energy_rc,
    enumerate_rcs,
    evolve_riggings,
)
from boxball.scattering import (
    InsertionMatrix,
    companion_state,
    direct_transform,
    inverse_transform,
    omega,
    omega_set,
    phi_map,
    solve,
)
from boxball.state import (
    VACUUM,
    Arc,
    State,
    arcs,
    energy_ctm,
    enumerate_states,
    evolve,
    from_occupancy,
    is_highest_weight,
    occupancy,
    state_from_blocks,
)

__version__ = "0.1.0"
