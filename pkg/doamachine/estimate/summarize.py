import numpy as np
import pandas as pd

from ..phase.wrap import circular_distance


def collision_summary(self, grid_size=None, min_points=2001, collision_tolerance=None):
    """
    Documentation:

        ---
        Description:
            Run the brute-force collision oracle and tabulate each colliding pair of grid
            points with its sines, their difference and the largest circular phase gap.

        ---
        Parameters:
            grid_size : int, default=None
                Grid size. When None, the smallest grid of at least min_points that contains
                every ambiguous sine is used.
            min_points : int, default=2001
                Lower bound on the automatic grid size.
            collision_tolerance : float, default=None
                Passed to collision_oracle.

        ---
        Returns:
            df : Pandas DataFrame
                Columns g1, g2, sin1, sin2, sine_offset, max_phase_gap.
    """
    grid = self.wpdp(grid_size if grid_size is not None else self.oracle_grid_size(min_points=min_points))
    collisions = self.oracle(grid_size=grid.grid_size, collision_tolerance=collision_tolerance)

    columns = ["g1", "g2", "sin1", "sin2", "sine_offset", "max_phase_gap"]
    if not collisions:
        return pd.DataFrame(columns=columns)

    g1, g2 = (np.array(index) for index in zip(*collisions))
    gap = circular_distance(grid.pattern[g1], grid.pattern[g2])
    return pd.DataFrame(
        {
            "g1": g1,
            "g2": g2,
            "sin1": grid.sine_grid[g1],
            "sin2": grid.sine_grid[g2],
            "sine_offset": grid.sine_grid[g2] - grid.sine_grid[g1],
            "max_phase_gap": gap.max(axis=1),
        },
        columns=columns,
    )
