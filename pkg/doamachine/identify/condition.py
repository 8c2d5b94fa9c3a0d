"""
Documentation:

    ---
    Description:
        Identifiability of a linear array layout from wrapped phase differences. Two
        directions theta1 > theta2 are confused when, for every pair i,
        pi * sin(theta1) * d[i] = pi * sin(theta2) * d[i] + 2 * pi * q[i] for non-negative
        integers q[i]. With s = sin(theta1) - sin(theta2) in (0, 2) that is s * d[i] = 2 * q[i]
        for all pairs.

        The quick check reduces d to a primitive integer vector D with d = c * D. Confusion is
        possible exactly when c > 1, and the confusing sine offsets are s = 2k / c, k = 1, 2, ...
        below 2. c = 1 only collides at the unreachable endpoint s = 2.
"""
import enum
import itertools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .. import config
from ..errors import IncommensurableDistances, NotAmbiguous
from ..geometry.layout import format_rational, pair_distances
from ..geometry.reduction import reduce_to_primitive

logger = logging.getLogger(__name__)


class Verdict(str, enum.Enum):
    IDENTIFIABLE = "Identifiable"
    UNIDENTIFIABLE = "Unidentifiable"
    BOUNDARY_IDENTIFIABLE = "BoundaryIdentifiable"
    IDENTIFIABLE_BY_INCOMMENSURABILITY = "IdentifiableByIncommensurability"

    def __str__(self):
        return self.value


def _floor_and_integral(value):
    if isinstance(value, Fraction):
        return math.floor(value), value.denominator == 1
    value = float(value)
    return math.floor(value), value.is_integer()


def q_max_vector(d):
    """
    Documentation:

        ---
        Description:
            Largest cycle count each pair can reach between two directions in the open domain
            (-pi/2, pi/2). Since sin(theta1) - sin(theta2) < 2 strictly, a pair at integral
            distance d reaches at most d - 1 cycles; otherwise floor(d).

        ---
        Parameters:
            d : PairDistances
                Pair distances.

        ---
        Returns:
            q_max : tuple of int
                One bound per pair.
    """
    bounds = []
    for value in d.d:
        floor, integral = _floor_and_integral(value)
        bounds.append(int(floor - 1 if integral else floor))
    return tuple(bounds)


def has_unwrapped_pair(d):
    """
    Documentation:

        ---
        Description:
            True when at least one pair is no longer than half a wavelength (d <= 1), so its
            phase never wraps and the layout cannot be ambiguous.
    """
    return any(value <= 1 for value in d.d)


@dataclass(frozen=True)
class IdentifiabilityReport:
    """
    Documentation:

        ---
        Description:
            Outcome of check_identifiability.

        ---
        Parameters:
            verdict : Verdict
                One of Identifiable, Unidentifiable, BoundaryIdentifiable,
                IdentifiableByIncommensurability.
            distances : PairDistances
                Pair distances the verdict was computed from.
            q_max : tuple of int
                Per-pair cycle bounds.
            reduction : RationalReduction or None
                Primitive form of the distances; None when incommensurable.
            witness_q : tuple of int or None
                Primitive cycle vector D of an ambiguity; only for Unidentifiable.
            ambiguous_sine_offsets : tuple of Fraction
                Every s in (0, 2) with s * d[i] = 2 * k * D[i]; empty unless Unidentifiable.
    """

    verdict: Verdict
    distances: object
    q_max: tuple
    reduction: object = None
    witness_q: tuple = None
    ambiguous_sine_offsets: tuple = field(default_factory=tuple)

    @property
    def is_ambiguous(self):
        return self.verdict is Verdict.UNIDENTIFIABLE

    def as_dict(self):
        reduction = self.reduction
        return {
            "verdict": self.verdict.value,
            "pairs": [[u + 1, v + 1] for u, v in self.distances.pairs],
            "d": [format_rational(v) for v in self.distances.d],
            "D": list(reduction.D) if reduction is not None else None,
            "c": format_rational(reduction.c) if reduction is not None else None,
            "I": format_rational(reduction.I) if reduction is not None else None,
            "exact": reduction.exact if reduction is not None else self.distances.exact,
            "q_max": list(self.q_max),
            "witness_q": list(self.witness_q) if self.witness_q is not None else None,
            "ambiguous_sine_offsets": [format_rational(s) for s in self.ambiguous_sine_offsets],
        }


def ambiguous_offsets(c):
    """
    Documentation:

        ---
        Description:
            Sine offsets 2k / c in (0, 2), k = 1, 2, ..., for common scale c.
    """
    c = Fraction(c)
    return tuple(Fraction(2 * k) / c for k in range(1, math.ceil(c)))


def report_from_distances(d, approx_denominator_limit=config.DENOMINATOR_LIMIT):
    """
    Documentation:

        ---
        Description:
            check_identifiability for an explicit PairDistances, e.g. a pair subset.
    """
    q_max = q_max_vector(d)

    try:
        reduction = reduce_to_primitive(d, approx_denominator_limit=approx_denominator_limit)
    except IncommensurableDistances as error:
        logger.info("distances are incommensurable: %s", error)
        return IdentifiabilityReport(
            verdict=Verdict.IDENTIFIABLE_BY_INCOMMENSURABILITY,
            distances=d,
            q_max=q_max,
        )

    if reduction.c > 1:
        verdict = Verdict.UNIDENTIFIABLE
        witness_q = reduction.D
        offsets = ambiguous_offsets(reduction.c)
    else:
        verdict = Verdict.BOUNDARY_IDENTIFIABLE if reduction.c == 1 else Verdict.IDENTIFIABLE
        witness_q = None
        offsets = ()

    logger.debug("verdict %s with D=%s, c=%s", verdict.value, reduction.D, reduction.c)

    return IdentifiabilityReport(
        verdict=verdict,
        distances=d,
        q_max=q_max,
        reduction=reduction,
        witness_q=witness_q,
        ambiguous_sine_offsets=offsets,
    )


def check_identifiability(layout, approx_denominator_limit=config.DENOMINATOR_LIMIT, pairs=None):
    """
    Documentation:

        ---
        Description:
            Decide whether a single far-field source can be located without ambiguity from the
            wrapped phase differences of the layout's sensor pairs.

        ---
        Parameters:
            layout : SensorLayout
                Array layout.
            approx_denominator_limit : int, default=config.DENOMINATOR_LIMIT
                Denominator limit for approximating float distances.
            pairs : list of (int, int), default=None
                Optional 0-based pair subset. All pairs are used when None.

        ---
        Returns:
            report : IdentifiabilityReport
                Verdict, witness and ambiguous sine offsets.
    """
    d = pair_distances(layout, pairs=pairs)
    return report_from_distances(d, approx_denominator_limit=approx_denominator_limit)


def primitive_within_q_max(report):
    """
    Documentation:

        ---
        Description:
            The elementwise form of the quick check: D[i] <= q_max[i] for every pair.
            Equivalent to report.verdict == Unidentifiable for commensurate distances.
    """
    if report.reduction is None:
        return False
    return all(D <= q for D, q in zip(report.reduction.D, report.q_max))


def enumerate_ambiguity_vectors(d, max_vectors=None):
    """
    Documentation:

        ---
        Description:
            Directly search the integer cycle vectors q, 1 <= q[i] <= q_max[i], for which
            d[i] / q[i] is the same for every pair. Each hit is an ambiguity with sine offset
            s = 2 q[i] / d[i]. Fixing q[0] fixes the common ratio, so the search is linear in
            q_max[0]. Requires exact (rational) distances.

        ---
        Parameters:
            d : PairDistances
                Exact pair distances.
            max_vectors : int, default=None
                Stop after this many hits.

        ---
        Returns:
            hits : list of (tuple of int, Fraction)
                Cycle vectors and their sine offsets, ordered by increasing offset.
    """
    if not d.exact:
        raise ValueError("enumerate_ambiguity_vectors needs exact rational distances")

    q_max = q_max_vector(d)
    hits = []
    for q0 in range(1, q_max[0] + 1):
        ratio = d.d[0] / q0
        q = []
        for value, bound in zip(d.d, q_max):
            candidate = value / ratio
            if candidate.denominator != 1 or not 1 <= candidate <= bound:
                break
            q.append(int(candidate))
        else:
            hits.append((tuple(q), 2 / ratio))
            if max_vectors is not None and len(hits) >= max_vectors:
                break
    return hits


def ambiguous_direction_pairs(report, count=1):
    """
    Documentation:

        ---
        Description:
            Construct direction pairs (theta1, theta2) that produce the same wrapped phase
            vector. The first pair of each offset s is symmetric about broadside
            (sin(theta1) = s / 2, sin(theta2) = -s / 2). When more pairs are asked for than there
            are offsets, both sines are shifted by a common amount that keeps them inside
            (-1, 1).

        ---
        Parameters:
            report : IdentifiabilityReport
                An Unidentifiable report.
            count : int, default=1
                Number of pairs wanted.

        ---
        Returns:
            pairs : list of (float, float)
                Direction pairs in radians, theta1 > theta2.
    """
    if report.verdict is not Verdict.UNIDENTIFIABLE:
        raise NotAmbiguous("layout is {}; no ambiguous directions exist".format(report.verdict.value))
    if count < 1:
        raise ValueError("count must be a positive integer, got {}".format(count))

    offsets = [float(s) for s in report.ambiguous_sine_offsets]
    shifts = [0.0]
    for r in itertools.count(1):
        if len(shifts) * len(offsets) >= count:
            break
        shifts.append((r / (r + 1)) * (1 if r % 2 else -1))

    pairs = []
    for shift in shifts:
        for s in offsets:
            room = 1.0 - s / 2.0
            delta = shift * room
            pairs.append((float(np.arcsin(s / 2.0 + delta)), float(np.arcsin(-s / 2.0 + delta))))
            if len(pairs) == count:
                return pairs
    return pairs
