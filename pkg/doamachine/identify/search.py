import itertools
import logging
import math
from fractions import Fraction

import pandas as pd
from joblib import Parallel, delayed

from .. import config
from ..errors import SearchSpaceTooLarge
from ..geometry.layout import SensorLayout, format_rational, pair_distances, parse_rational
from .condition import Verdict, has_unwrapped_pair, report_from_distances

logger = logging.getLogger(__name__)


def _evaluate_chunk(chunk, step, approx_denominator_limit, require_wrapping):
    # zero-based lattice indices -> (positions, verdict) for every layout that survives
    kept = []
    for indices in chunk:
        positions = (Fraction(0),) + tuple(step * k for k in indices)
        d = pair_distances(SensorLayout(positions))
        if require_wrapping and has_unwrapped_pair(d):
            continue
        report = report_from_distances(d, approx_denominator_limit=approx_denominator_limit)
        if report.verdict is not Verdict.UNIDENTIFIABLE:
            kept.append((positions, report.verdict))
    return kept


class LayoutSearcher:
    """
    Documentation:

        ---
        Description:
            Enumerate layouts whose sensors sit on the lattice {0, step, 2 * step, ...} up to
            max_aperture and keep the ones that are not Unidentifiable. Results are sorted by
            descending aperture with a lexicographic tie-break on positions, so the order is
            deterministic whatever n_jobs is.

        ---
        Parameters:
            n_sensors : int
                Number of sensors, >= 2.
            max_aperture : rational
                Largest allowed aperture (half-wavelength units).
            step : rational
                Lattice step (half-wavelength units).
            approx_denominator_limit : int, default=config.DENOMINATOR_LIMIT
                Passed through to report_from_distances.
    """

    def __init__(self, n_sensors, max_aperture, step, approx_denominator_limit=config.DENOMINATOR_LIMIT):
        if int(n_sensors) < 2:
            raise ValueError("n_sensors must be at least 2, got {}".format(n_sensors))
        self.n_sensors = int(n_sensors)
        self.max_aperture = parse_rational(max_aperture)
        self.step = parse_rational(step)
        if not isinstance(self.max_aperture, Fraction):
            self.max_aperture = Fraction(self.max_aperture).limit_denominator(approx_denominator_limit)
        if not isinstance(self.step, Fraction):
            self.step = Fraction(self.step).limit_denominator(approx_denominator_limit)
        if not self.max_aperture > 0 or not self.step > 0:
            raise ValueError("max_aperture and step must be positive")
        self.approx_denominator_limit = approx_denominator_limit
        self.results = []
        self.verdicts = []

        ratio = self.max_aperture / self.step
        if ratio > config.SEARCH_LATTICE_LIMIT:
            raise SearchSpaceTooLarge(
                "max_aperture / step = {} exceeds the lattice limit of {}; increase step or "
                "reduce max_aperture".format(float(ratio), config.SEARCH_LATTICE_LIMIT)
            )
        if ratio.denominator != 1:
            logger.info("step does not divide max_aperture; lattice ends at %s", math.floor(ratio) * self.step)
        self.lattice_size = math.floor(ratio)

        self.n_candidates = math.comb(self.lattice_size, self.n_sensors - 1)
        if self.n_candidates > config.SEARCH_CANDIDATE_LIMIT:
            raise SearchSpaceTooLarge(
                "{} candidate layouts exceed the limit of {}; use fewer sensors, a coarser step "
                "or a smaller max_aperture".format(self.n_candidates, config.SEARCH_CANDIDATE_LIMIT)
            )

    def fit(self, max_results=None, require_wrapping=False, n_jobs=config.N_JOBS, chunk_size=2048):
        """
        Documentation:

            ---
            Description:
                Run the enumeration.

            ---
            Parameters:
                max_results : int, default=None
                    Keep only this many layouts after sorting. All when None.
                require_wrapping : bool, default=False
                    Skip layouts with any pair at distance <= 1, keeping only the regime where
                    every pair wraps.
                n_jobs : int, default=config.N_JOBS
                    Number of joblib workers.
                chunk_size : int, default=2048
                    Candidates per work unit.

            ---
            Returns:
                results : list of (SensorLayout, aperture)
                    Surviving layouts, best (widest) first.
        """
        logger.info(
            "searching %d candidate %d-sensor layouts on a %d-point lattice",
            self.n_candidates, self.n_sensors, self.lattice_size + 1,
        )
        combos = itertools.combinations(range(1, self.lattice_size + 1), self.n_sensors - 1)
        chunks = iter(lambda: list(itertools.islice(combos, chunk_size)), [])

        kept = Parallel(n_jobs=n_jobs)(
            delayed(_evaluate_chunk)(chunk, self.step, self.approx_denominator_limit, require_wrapping)
            for chunk in chunks
        )
        kept = [item for chunk in kept for item in chunk]
        kept.sort(key=lambda item: (-item[0][-1], item[0]))

        if max_results is not None:
            kept = kept[: int(max_results)]

        self.verdicts = [verdict for _, verdict in kept]
        self.results = [(SensorLayout(positions), positions[-1]) for positions, _ in kept]
        logger.info("kept %d layouts", len(self.results))
        return self.results

    def score_summary(self):
        """
        Documentation:

            ---
            Description:
                Search results as a Pandas DataFrame with one row per layout.

            ---
            Returns:
                df : Pandas DataFrame
                    Columns positions, aperture, verdict.
        """
        return pd.DataFrame(
            {
                "positions": [[format_rational(p) for p in layout.positions] for layout, _ in self.results],
                "aperture": [format_rational(aperture) for _, aperture in self.results],
                "verdict": [verdict.value for verdict in self.verdicts],
            }
        )


def search_identifiable_layouts(n_sensors, max_aperture, step, max_results, require_wrapping=False,
                                n_jobs=config.N_JOBS, approx_denominator_limit=config.DENOMINATOR_LIMIT):
    """
    Documentation:

        ---
        Description:
            Functional entry point to LayoutSearcher.

        ---
        Returns:
            results : list of (SensorLayout, aperture)
                Identifiable layouts sorted by descending aperture.
    """
    searcher = LayoutSearcher(
        n_sensors=n_sensors,
        max_aperture=max_aperture,
        step=step,
        approx_denominator_limit=approx_denominator_limit,
    )
    return searcher.fit(max_results=max_results, require_wrapping=require_wrapping, n_jobs=n_jobs)
