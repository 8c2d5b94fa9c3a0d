import numpy as np
import pandas as pd

from ..geometry.layout import format_rational
from ..phase.wrap import circular_distance, wrapped_vector


def identifiability_summary(self):
    """
    Documentation:

        ---
        Description:
            Per-pair view of the identifiability check: distance, primitive integer D, cycle
            bound q_max, witness cycle count and whether the pair's phase wraps at all.

        ---
        Returns:
            df : Pandas DataFrame
                One row per pair, indexed by the 1-based pair label "u-v".
    """
    report = self.report
    reduction = report.reduction
    d = report.distances

    df = pd.DataFrame(
        {
            "d": [format_rational(value) for value in d.d],
            "D": list(reduction.D) if reduction is not None else [np.nan] * d.m,
            "q_max": list(report.q_max),
            "witness_q": list(report.witness_q) if report.witness_q is not None else [np.nan] * d.m,
            "wraps": [value > 1 for value in d.d],
        },
        index=["{}-{}".format(u + 1, v + 1) for u, v in d.pairs],
    )
    df.index.name = "pair"
    return df


def ambiguity_summary(self, count=1):
    """
    Documentation:

        ---
        Description:
            Constructed ambiguous direction pairs with their sines and the largest circular
            distance between the two wrapped phase vectors (zero up to rounding).

        ---
        Parameters:
            count : int, default=1
                Number of direction pairs.

        ---
        Returns:
            df : Pandas DataFrame
                Columns theta1, theta2, sin1, sin2, max_phase_gap.
    """
    rows = []
    for theta1, theta2 in self.ambiguous_pairs(count=count):
        gap = circular_distance(wrapped_vector(self.distances, theta1), wrapped_vector(self.distances, theta2))
        rows.append(
            {
                "theta1": theta1,
                "theta2": theta2,
                "sin1": np.sin(theta1),
                "sin2": np.sin(theta2),
                "max_phase_gap": float(np.max(gap)),
            }
        )
    return pd.DataFrame(rows, columns=["theta1", "theta2", "sin1", "sin2", "max_phase_gap"])
