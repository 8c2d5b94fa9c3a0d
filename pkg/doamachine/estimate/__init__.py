from .match import DoaEstimate, match_costs, match_doa
from .oracle import collision_oracle, default_collision_tolerance
from .pattern import (
    WpdpGrid,
    build_wpdp,
    oracle_grid_size,
    sine_grid,
    wpdp_frame,
    write_wpdp,
)
