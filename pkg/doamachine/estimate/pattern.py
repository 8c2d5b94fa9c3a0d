import logging
import math

import numpy as np
import pandas as pd
from joblib import Parallel, delayed

from .. import config
from ..errors import GridTooLarge
from ..phase.wrap import wrapped_pattern

logger = logging.getLogger(__name__)


class WpdpGrid:
    """
    Documentation:

        ---
        Description:
            Sampled wrapped phase-difference pattern (WPDP). Phase is linear in sin(theta), so
            the grid is taken in sine space: s_g = -1 + 2g / (G - 1). The two endpoints +-1 lie
            outside the open direction domain and are pulled in to +-(1 - 1 / (2G)), which
            shortens the first and last intervals. Every interior point stays on the lattice,
            so lattice-aligned sines such as +-5/6 at G = 2401 are sampled exactly, and step
            reports the interior spacing 2 / (G - 1).

        ---
        Parameters:
            sine_grid : array, shape (G,)
                Strictly increasing sines in (-1, 1).
            pattern : array, shape (G, M)
                pattern[g, i] = wrap(pi * d[i] * sine_grid[g]).
            layout_ref : PairDistances
                Distances the pattern was built from.
    """

    def __init__(self, sine_grid, pattern, layout_ref):
        self.sine_grid = np.asarray(sine_grid, dtype=float)
        self.pattern = np.asarray(pattern, dtype=float)
        self.layout_ref = layout_ref

        # read-only once built so grids can be shared between workers
        self.sine_grid.setflags(write=False)
        self.pattern.setflags(write=False)

    @property
    def grid_size(self):
        return self.sine_grid.shape[0]

    @property
    def step(self):
        return 2.0 / (self.grid_size - 1)

    def index_of(self, sine):
        """
        Documentation:

            ---
            Description:
                Index of the grid point nearest to a sine value.
        """
        return int(np.argmin(np.abs(self.sine_grid - float(sine))))


def sine_grid(grid_size):
    """
    Documentation:

        ---
        Description:
            Sine lattice -1 + 2g / (G - 1) with the endpoints pulled in to +-(1 - 1 / (2G)).

        ---
        Parameters:
            grid_size : int
                Number of grid points G >= 2.

        ---
        Returns:
            sines : array, shape (G,)
    """
    grid_size = _check_grid_size(grid_size)
    sines = -1.0 + 2.0 * np.arange(grid_size) / (grid_size - 1)
    eps = 1.0 / (2 * grid_size)
    sines[0] = -1.0 + eps
    sines[-1] = 1.0 - eps
    return sines


def _check_grid_size(grid_size):
    if isinstance(grid_size, bool) or int(grid_size) != grid_size:
        raise ValueError("grid_size must be an integer, got {!r}".format(grid_size))
    grid_size = int(grid_size)
    if grid_size < 2:
        raise ValueError("grid_size must be ≥ 2, got {}".format(grid_size))
    if grid_size > config.GRID_SIZE_LIMIT:
        raise GridTooLarge(
            "grid_size {} exceeds the limit of {}".format(grid_size, config.GRID_SIZE_LIMIT)
        )
    return grid_size


def build_wpdp(d, grid_size, n_jobs=config.N_JOBS, block_rows=65536):
    """
    Documentation:

        ---
        Description:
            Sample the wrapped phase-difference pattern of a set of pair distances.

        ---
        Parameters:
            d : PairDistances
                Pair distances.
            grid_size : int
                Number of sine grid points, 2 <= grid_size <= config.GRID_SIZE_LIMIT.
            n_jobs : int, default=config.N_JOBS
                Number of joblib workers; rows are filled in blocks and merged in order.
            block_rows : int, default=65536
                Grid rows per work unit.

        ---
        Returns:
            grid : WpdpGrid
                The sampled pattern.
    """
    sines = sine_grid(grid_size)
    distances = d.as_array()

    if n_jobs == 1 or sines.shape[0] <= block_rows:
        pattern = wrapped_pattern(distances, sines)
    else:
        blocks = Parallel(n_jobs=n_jobs)(
            delayed(wrapped_pattern)(distances, sines[start:start + block_rows])
            for start in range(0, sines.shape[0], block_rows)
        )
        pattern = np.vstack(blocks)

    logger.debug("built %d x %d pattern", pattern.shape[0], pattern.shape[1])
    return WpdpGrid(sines, pattern, d)


def oracle_grid_size(reduction, min_points=2001):
    """
    Documentation:

        ---
        Description:
            Smallest odd grid size >= min_points whose lattice step 1 / m (m = (G - 1) / 2)
            divides every ambiguous sine offset 2k / c and every symmetric sine +-k / c of the
            reduction. With c = p / q in lowest terms this holds whenever p divides m.

        ---
        Parameters:
            reduction : RationalReduction or None
                Primitive form of the distances. None gives the plain odd size.
            min_points : int, default=2001
                Lower bound on the grid size.

        ---
        Returns:
            grid_size : int
    """
    m = max(1, math.ceil((int(min_points) - 1) / 2))
    if reduction is not None:
        p = reduction.c.numerator
        m = p * math.ceil(m / p)
    return 2 * m + 1


def wpdp_frame(grid):
    """
    Documentation:

        ---
        Description:
            Pattern as a Pandas DataFrame with columns sine, psi_1..psi_M.
    """
    columns = {"sine": grid.sine_grid}
    for i in range(grid.pattern.shape[1]):
        columns["psi_{}".format(i + 1)] = grid.pattern[:, i]
    return pd.DataFrame(columns)


def write_wpdp(grid, path_or_buf, manifest=None):
    """
    Documentation:

        ---
        Description:
            Export the pattern as a comma separated table, one row per grid point, phases in
            radians with 12 significant digits. Manifest entries, when given, are written
            first as "# key: value" lines (read back with pandas.read_csv(comment="#")).

        ---
        Parameters:
            grid : WpdpGrid
                Pattern to export.
            path_or_buf : str, path or file-like
                Destination.
            manifest : dict, default=None
                Reproducibility header.
    """
    df = wpdp_frame(grid)
    header = ""
    if manifest is not None:
        header = "".join("# {}: {}\n".format(key, value) for key, value in manifest.items())

    if hasattr(path_or_buf, "write"):
        path_or_buf.write(header)
        df.to_csv(path_or_buf, index=False, float_format="%.12g", lineterminator="\n")
    else:
        with open(path_or_buf, "w", newline="") as file:
            file.write(header)
            df.to_csv(file, index=False, float_format="%.12g", lineterminator="\n")
