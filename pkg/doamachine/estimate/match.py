import logging

import numpy as np

from .. import config
from ..errors import LengthMismatch
from ..phase.wrap import wrap

logger = logging.getLogger(__name__)


class DoaEstimate:
    """
    Documentation:

        ---
        Description:
            Result of matching observed wrapped phases against a WPDP grid.

        ---
        Parameters:
            theta_hat : float
                Estimated direction, asin of the best grid sine (radians).
            cost : float
                Circular squared error at the best grid point.
            index : int
                Grid index of the best point.
            candidates : tuple of int
                Grid indices whose cost is within the candidate tolerance of the minimum,
                ascending.
            sine_grid : array
                Sines of the grid the estimate was made on.
    """

    def __init__(self, theta_hat, cost, index, candidates, sine_grid):
        self.theta_hat = theta_hat
        self.cost = cost
        self.index = index
        self.candidates = tuple(int(c) for c in candidates)
        self.sine_grid = sine_grid

    @property
    def clusters(self):
        """
        Documentation:

            ---
            Description:
                Candidates grouped into runs of adjacent grid indices. More than one cluster
                means the observation is explained equally well by separate directions.
        """
        runs = []
        for index in self.candidates:
            if runs and index == runs[-1][-1] + 1:
                runs[-1].append(index)
            else:
                runs.append([index])
        return [tuple(run) for run in runs]

    @property
    def candidate_sines(self):
        return self.sine_grid[list(self.candidates)]

    @property
    def is_ambiguous(self):
        return len(self.clusters) > 1

    def __repr__(self):
        return "DoaEstimate(theta_hat={:.6g}, cost={:.3g}, clusters={})".format(
            self.theta_hat, self.cost, len(self.clusters)
        )


def match_costs(psi_observed, grid):
    """
    Documentation:

        ---
        Description:
            Circular squared error between an observation and every grid row:
            cost[g] = sum_i wrap(psi_observed[i] - pattern[g, i]) ** 2, equal pair weights.
    """
    psi = np.asarray(psi_observed, dtype=float).reshape(-1)
    if psi.shape[0] != grid.pattern.shape[1]:
        raise LengthMismatch(
            "observation has {} phases but the grid has {} pairs".format(psi.shape[0], grid.pattern.shape[1])
        )
    residual = wrap(psi[np.newaxis, :] - grid.pattern)
    return np.sum(residual ** 2, axis=1)


def match_doa(psi_observed, grid, candidate_tolerance=config.CANDIDATE_TOLERANCE):
    """
    Documentation:

        ---
        Description:
            Grid-search DOA estimate from observed wrapped phase differences. Exact ties at the
            minimum go to the smallest |sine|, then the smaller index.

        ---
        Parameters:
            psi_observed : array, shape (M,)
                Observed wrapped phase per pair, same pair order as the grid.
            grid : WpdpGrid
                Pattern to match against.
            candidate_tolerance : float, default=config.CANDIDATE_TOLERANCE
                Grid points with cost <= min_cost + candidate_tolerance are candidates (rad^2).

        ---
        Returns:
            estimate : DoaEstimate
    """
    costs = match_costs(psi_observed, grid)
    min_cost = costs.min()

    ties = np.flatnonzero(costs == min_cost)
    order = np.lexsort((ties, np.abs(grid.sine_grid[ties])))
    best = int(ties[order[0]])

    candidates = np.flatnonzero(costs <= min_cost + candidate_tolerance)

    return DoaEstimate(
        theta_hat=float(np.arcsin(grid.sine_grid[best])),
        cost=float(max(min_cost, 0.0)),
        index=best,
        candidates=candidates,
        sine_grid=grid.sine_grid,
    )
