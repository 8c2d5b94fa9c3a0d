import logging

import numpy as np
from joblib import Parallel, delayed

from .. import config
from ..errors import BudgetExceeded
from ..phase.wrap import circular_distance
from .pattern import build_wpdp

logger = logging.getLogger(__name__)


def default_collision_tolerance(d, grid_size):
    """
    Documentation:

        ---
        Description:
            Half the largest per-step movement of any pattern column: pi * max(d) * step / 2,
            step = 2 / (grid_size - 1). Adjacent rows therefore never collide.
    """
    step = 2.0 / (int(grid_size) - 1)
    return np.pi * float(d.as_array().max()) * step * 0.5


def _block_collisions(pattern, order, start, stop, tolerance):
    # rows start..stop-1 against every later row; columns checked widest pair first
    rows = np.arange(start, stop)
    first = order[0]

    close = circular_distance(pattern[start:stop, first][:, np.newaxis], pattern[start:, first][np.newaxis, :])
    close = close <= tolerance

    # keep g2 > g1 only
    g1_local, g2_local = np.nonzero(close)
    g1 = rows[g1_local]
    g2 = g2_local + start
    keep = g2 > g1
    g1, g2 = g1[keep], g2[keep]

    for column in order[1:]:
        if g1.size == 0:
            break
        keep = circular_distance(pattern[g1, column], pattern[g2, column]) <= tolerance
        g1, g2 = g1[keep], g2[keep]

    return np.column_stack((g1, g2))


def collision_oracle(d, grid_size, collision_tolerance=None, n_jobs=config.N_JOBS,
                     block_rows=config.ORACLE_BLOCK_ROWS, budget=config.ORACLE_BUDGET):
    """
    Documentation:

        ---
        Description:
            Brute-force check that no two directions share a wrapped phase vector: every pair of
            grid rows g1 < g2 is compared and reported when all pair phases agree within the
            collision tolerance (circular distance). An empty result means the layout has no
            ambiguity resolvable on this grid.

        ---
        Parameters:
            d : PairDistances
                Pair distances.
            grid_size : int
                Number of sine grid points. Use oracle_grid_size to place the exact
                ambiguous sines on the grid.
            collision_tolerance : float, default=None
                Per-pair tolerance in radians. Defaults to default_collision_tolerance.
            n_jobs : int, default=config.N_JOBS
                Number of joblib workers; row blocks are merged in index order.
            block_rows : int, default=config.ORACLE_BLOCK_ROWS
                Grid rows per work unit.
            budget : int, default=config.ORACLE_BUDGET
                Largest allowed grid_size ** 2 * M.

        ---
        Returns:
            collisions : list of (int, int)
                Colliding grid index pairs, sorted.
    """
    grid_size = int(grid_size)
    work = grid_size ** 2 * d.m
    if work > budget:
        raise BudgetExceeded(
            "grid_size ** 2 * pairs = {} exceeds the oracle budget of {}".format(work, budget)
        )

    if collision_tolerance is None:
        collision_tolerance = default_collision_tolerance(d, grid_size)

    grid = build_wpdp(d, grid_size)
    pattern = np.asarray(grid.pattern)
    order = np.argsort(-d.as_array(), kind="stable")

    logger.info(
        "comparing %d grid rows over %d pairs (tolerance %.3g rad)", grid_size, d.m, collision_tolerance
    )
    blocks = Parallel(n_jobs=n_jobs)(
        delayed(_block_collisions)(pattern, order, start, min(start + block_rows, grid_size), collision_tolerance)
        for start in range(0, grid_size, block_rows)
    )

    collisions = [tuple(int(g) for g in row) for block in blocks for row in block]
    collisions.sort()
    logger.info("found %d colliding row pairs", len(collisions))
    return collisions
