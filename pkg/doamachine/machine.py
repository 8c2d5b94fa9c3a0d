import logging

from . import config
from .documents import load_layout
from .estimate.match import match_doa
from .estimate.oracle import collision_oracle
from .estimate.pattern import build_wpdp, oracle_grid_size
from .geometry.layout import SensorLayout, make_layout, pair_distances
from .identify.condition import (
    ambiguous_direction_pairs,
    enumerate_ambiguity_vectors,
    report_from_distances,
)
from .simulate.monte_carlo import rmse_sweep
from .simulate.snapshot import SourceConfig, generate_snapshot, principal_phases

logger = logging.getLogger(__name__)


class ArrayMachine:
    """
    Documentation:
        Description:
            ArrayMachine binds the identifiability, pattern, estimation and simulation tools
            to one linear array layout. Pair distances and the identifiability report are
            computed once on construction; patterns are cached per grid size.
    """

    # import doamachine submodules
    from .identify.summarize import (
        ambiguity_summary,
        identifiability_summary,
    )
    from .estimate.summarize import collision_summary

    def __init__(self, positions, pairs=None, denominator_limit=config.DENOMINATOR_LIMIT):
        """
        Documentation:

            ---
            Description:
                __init__ normalizes the layout, builds the pair distances and runs the quick
                identifiability check.

            ---
            Parameters:
                positions : SensorLayout or list
                    Sensor positions in half-wavelength units (ints, Fractions, decimal or
                    "p/q" strings, or floats).
                pairs : list of (int, int), default=None
                    0-based sensor pairs to use. All pairs when None.
                denominator_limit : int, default=config.DENOMINATOR_LIMIT
                    Denominator limit for approximating float distances.

            ---
            Attributes:
                layout : SensorLayout
                    Normalized layout.
                distances : PairDistances
                    Pair distances in use.
                report : IdentifiabilityReport
                    Outcome of the quick check.
        """
        self.layout = positions if isinstance(positions, SensorLayout) else make_layout(positions)
        self.pairs = pairs
        self.denominator_limit = denominator_limit
        self.distances = pair_distances(self.layout, pairs=pairs)
        self.report = report_from_distances(self.distances, approx_denominator_limit=denominator_limit)
        self._grids = {}

        logger.info("layout %s: %s", self.layout, self.report.verdict.value)

    @classmethod
    def from_file(cls, path, denominator_limit=config.DENOMINATOR_LIMIT):
        """
        Documentation:

            ---
            Description:
                Build an ArrayMachine from a layout document, honoring its pairs field.
        """
        document = load_layout(path)
        return cls(document.layout, pairs=document.pairs, denominator_limit=denominator_limit)

    @property
    def verdict(self):
        return self.report.verdict

    @property
    def reduction(self):
        return self.report.reduction

    @property
    def q_max(self):
        return self.report.q_max

    def ambiguous_pairs(self, count=1):
        return ambiguous_direction_pairs(self.report, count=count)

    def ambiguity_vectors(self, max_vectors=None):
        return enumerate_ambiguity_vectors(self.distances, max_vectors=max_vectors)

    def oracle_grid_size(self, min_points=2001):
        return oracle_grid_size(self.reduction, min_points=min_points)

    def wpdp(self, grid_size, n_jobs=config.N_JOBS):
        """
        Documentation:

            ---
            Description:
                Wrapped phase-difference pattern on a grid of grid_size sines, cached.
        """
        if grid_size not in self._grids:
            self._grids[grid_size] = build_wpdp(self.distances, grid_size, n_jobs=n_jobs)
        return self._grids[grid_size]

    def estimate(self, psi_observed, grid_size, candidate_tolerance=config.CANDIDATE_TOLERANCE):
        return match_doa(psi_observed, self.wpdp(grid_size), candidate_tolerance=candidate_tolerance)

    def oracle(self, grid_size=None, collision_tolerance=None, n_jobs=config.N_JOBS):
        if grid_size is None:
            grid_size = self.oracle_grid_size()
        return collision_oracle(self.distances, grid_size, collision_tolerance=collision_tolerance, n_jobs=n_jobs)

    def observe(self, theta0, snr_db=float("inf"), seed=0, amplitude=1.0, frequency=1.0, time=0.0):
        """
        Documentation:

            ---
            Description:
                Generate one snapshot from a source at theta0 and return the principal phases
                of the pairs in use.

            ---
            Returns:
                psi : array, shape (M,)
        """
        source = SourceConfig(theta0=theta0, amplitude=amplitude, frequency=frequency, time=time)
        snapshot = generate_snapshot(self.layout, source, snr_db, seed)
        return principal_phases(snapshot, self.distances)

    def rmse_sweep(self, theta0, snr_db_list, trials, grid_size, seed, **kwargs):
        return rmse_sweep(self.layout, theta0, snr_db_list, trials, grid_size, seed, pairs=self.pairs, **kwargs)
