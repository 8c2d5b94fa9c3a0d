import logging
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .. import config
from ..errors import IncommensurableDistances
from .layout import format_rational

logger = logging.getLogger(__name__)


def _lcm(a, b):
    return a * b // math.gcd(a, b)


@dataclass(frozen=True)
class RationalReduction:
    """
    Documentation:

        ---
        Description:
            Primitive integer form of a distance vector: d[i] = c * D[i] with gcd(D) = 1.
            The multiplier I that turns distances into the integers D is 1 / c.

        ---
        Parameters:
            D : tuple of int
                Primitive positive integer vector.
            c : Fraction
                Common scale.
            exact : bool
                False when float inputs were replaced by rational approximations.
            approx_denominator_limit : int or None
                Denominator limit used for the approximation; None when exact.
    """

    D: tuple
    c: Fraction
    exact: bool = True
    approx_denominator_limit: int = None

    @property
    def I(self):
        return 1 / self.c

    def distances(self):
        return tuple(self.c * k for k in self.D)

    def as_dict(self):
        return {
            "D": list(self.D),
            "c": format_rational(self.c),
            "I": format_rational(self.I),
            "exact": self.exact,
            "approx_denominator_limit": self.approx_denominator_limit,
        }


def _to_fraction(value, limit, rtol):
    """
    Documentation:

        ---
        Description:
            Best rational approximation (continued-fraction convergents, via
            Fraction.limit_denominator) of a float with denominator no larger than limit.
            Raises IncommensurableDistances when the best approximation is off by more than
            rtol relative to the value.
    """
    approx = Fraction(value).limit_denominator(limit)
    error = abs(float(approx) - value)
    if error > rtol * max(1.0, abs(value)):
        raise IncommensurableDistances(
            "distance {!r} has no rational approximation with denominator <= {} "
            "(best {} is off by {:.3g})".format(value, limit, approx, error)
        )
    return approx


def reduce_to_primitive(d, approx_denominator_limit=config.DENOMINATOR_LIMIT, approx_rtol=config.APPROX_RTOL):
    """
    Documentation:

        ---
        Description:
            Reduce pair distances to a primitive integer vector D and common scale c with
            d[i] = c * D[i]. Rational distances are reduced exactly. Float distances are first
            replaced by their best rational approximations with denominator
            <= approx_denominator_limit and the result is flagged inexact.

        ---
        Parameters:
            d : PairDistances
                Pair distances.
            approx_denominator_limit : int, default=config.DENOMINATOR_LIMIT
                Largest denominator allowed when approximating floats.
            approx_rtol : float, default=config.APPROX_RTOL
                Relative error an approximation may carry before the distances are declared
                incommensurable.

        ---
        Returns:
            reduction : RationalReduction
                Primitive vector, scale and exactness flag.
    """
    if approx_denominator_limit < 1:
        raise ValueError(
            "approx_denominator_limit must be a positive integer, got {}".format(approx_denominator_limit)
        )

    exact = d.exact
    if exact:
        values = list(d.d)
    else:
        warnings.warn(
            "Float distances are approximated by rationals with denominator <= {}; pass "
            "decimal strings or Fractions for an exact verdict.".format(approx_denominator_limit),
            UserWarning,
        )
        values = [
            v if isinstance(v, Fraction) else _to_fraction(float(v), approx_denominator_limit, approx_rtol)
            for v in d.d
        ]

    # clear denominators, then divide out the common factor
    multiple = reduce(_lcm, (v.denominator for v in values))
    integers = [int(v * multiple) for v in values]
    divisor = reduce(math.gcd, integers)

    D = tuple(n // divisor for n in integers)
    c = Fraction(divisor, multiple)

    logger.debug("reduced %s to D=%s, c=%s", [format_rational(v) for v in values], D, c)

    return RationalReduction(
        D=D,
        c=c,
        exact=exact,
        approx_denominator_limit=None if exact else int(approx_denominator_limit),
    )
