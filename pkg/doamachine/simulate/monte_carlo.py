import logging

import numpy as np
import pandas as pd
from joblib import Parallel, delayed

from .. import config
from ..errors import ZeroMagnitude
from ..estimate.match import match_doa
from ..estimate.pattern import build_wpdp
from ..geometry.layout import pair_distances
from ..phase.wrap import check_theta
from .snapshot import SourceConfig, generate_snapshot, principal_phases

logger = logging.getLogger(__name__)


def derive_trial_seed(seed, snr_index, trial_index):
    """
    Documentation:

        ---
        Description:
            Seed of one Monte Carlo trial: seed XOR h(snr_index, trial_index), with h the first
            64-bit word of numpy's SeedSequence over (snr_index, trial_index). Trials depend only
            on their own indices, so serial and parallel runs draw the same numbers.
    """
    if int(seed) < 0:
        raise ValueError("seed must be a non-negative integer, got {}".format(seed))
    mix = np.random.SeedSequence([int(snr_index), int(trial_index)]).generate_state(1, dtype=np.uint64)[0]
    return int(seed) ^ int(mix)


def _run_trial(layout, distances, grid, source, snr_db, trial_seed, candidate_aware):
    snapshot = generate_snapshot(layout, source, snr_db, trial_seed)
    try:
        psi = principal_phases(snapshot, distances)
    except ZeroMagnitude:
        return None

    estimate = match_doa(psi, grid)
    if candidate_aware:
        # score against the candidate closest to the truth
        sines = estimate.candidate_sines
        theta_hat = float(np.arcsin(sines[np.argmin(np.abs(sines - np.sin(source.theta0)))]))
    else:
        theta_hat = estimate.theta_hat
    return theta_hat - source.theta0


def rmse_sweep(layout, theta0, snr_db_list, trials, grid_size, seed, amplitude=1.0, frequency=1.0,
               pairs=None, candidate_aware=False, n_jobs=config.N_JOBS):
    """
    Documentation:

        ---
        Description:
            Monte Carlo accuracy of the snapshot -> principal phases -> grid match pipeline over
            a list of SNR values. Each trial draws its own seed from derive_trial_seed.

        ---
        Parameters:
            layout : SensorLayout
                Array layout.
            theta0 : float
                True direction in (-pi/2, pi/2) radians.
            snr_db_list : list of float
                SNR points in dB; float("inf") is allowed.
            trials : int
                Trials per SNR point, >= 1.
            grid_size : int
                Size of the WPDP grid used by the estimator.
            seed : int
                Non-negative base seed.
            amplitude : float, default=1.0
                Source amplitude.
            frequency : float, default=1.0
                Source frequency.
            pairs : list of (int, int), default=None
                0-based pair subset; all pairs when None.
            candidate_aware : bool, default=False
                Score each trial with the match candidate closest to theta0 instead of the
                arg-min, isolating ambiguity from noise.
            n_jobs : int, default=config.N_JOBS
                Number of joblib workers over trials.

        ---
        Returns:
            df : Pandas DataFrame
                Columns snr_db, rmse_rad, trials_failed; one row per SNR point, input order.
    """
    if isinstance(trials, bool) or int(trials) != trials or int(trials) < 1:
        raise ValueError("trials must be a positive integer, got {!r}".format(trials))
    trials = int(trials)
    theta0 = check_theta(theta0)

    source = SourceConfig(theta0=theta0, amplitude=amplitude, frequency=frequency)
    distances = pair_distances(layout, pairs=pairs)
    grid = build_wpdp(distances, grid_size)

    rows = []
    for snr_index, snr_db in enumerate(snr_db_list):
        errors = Parallel(n_jobs=n_jobs)(
            delayed(_run_trial)(
                layout,
                distances,
                grid,
                source,
                snr_db,
                derive_trial_seed(seed, snr_index, trial_index),
                candidate_aware,
            )
            for trial_index in range(trials)
        )
        valid = np.array([e for e in errors if e is not None], dtype=float)
        failed = trials - valid.shape[0]
        rmse = float(np.sqrt(np.mean(valid ** 2))) if valid.size else float("nan")

        logger.info("snr %s dB: rmse %.6g rad over %d trials (%d failed)", snr_db, rmse, trials, failed)
        rows.append({"snr_db": float(snr_db), "rmse_rad": rmse, "trials_failed": failed})

    return pd.DataFrame(rows, columns=["snr_db", "rmse_rad", "trials_failed"])


def monte_carlo_rmse(layout, theta0, snr_db_list, trials, grid_size, seed, **kwargs):
    """
    Documentation:

        ---
        Description:
            rmse_sweep reduced to a list of (snr_db, rmse_rad) tuples.
    """
    df = rmse_sweep(layout, theta0, snr_db_list, trials, grid_size, seed, **kwargs)
    return list(zip(df["snr_db"].tolist(), df["rmse_rad"].tolist()))
