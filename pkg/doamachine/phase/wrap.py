"""
Wrapping arithmetic linking true phase differences phi = pi * d * sin(theta), their principal
values psi in [-pi, pi) and the integer cycle counts q with phi = psi + 2 * pi * q.
"""
from dataclasses import dataclass

import numpy as np

from .. import config
from ..errors import DomainError

TWO_PI = 2.0 * np.pi


def check_theta(theta):
    theta = float(theta)
    if not np.isfinite(theta) or abs(theta) >= np.pi / 2:
        raise DomainError("theta must lie in (-pi/2, pi/2), got {!r}".format(theta))
    return theta


def _check_distance(d):
    d = float(d)
    if not d > 0:
        raise DomainError("pair distance must be positive, got {!r}".format(d))
    return d


def wrap(phi, boundary_rtol=config.BOUNDARY_RTOL):
    """
    Documentation:

        ---
        Description:
            Principal value of a phase: mod(phi + pi, 2pi) - pi with a floored modulus, so the
            result lies in [-pi, pi) for either sign of phi. +pi never occurs.

        ---
        Parameters:
            phi : float or array
                Finite phase(s) in radians.
            boundary_rtol : float, default=config.BOUNDARY_RTOL
                Results within boundary_rtol * max(1, |phi|) below +pi are folded to -pi.
                The window is capped at config.PHASE_ATOL.

        ---
        Returns:
            psi : float or array
                Wrapped phase(s), same shape as phi.
    """
    phi = np.asarray(phi, dtype=float)
    if not np.all(np.isfinite(phi)):
        raise ValueError("phases must be finite")

    psi = np.mod(phi + np.pi, TWO_PI) - np.pi
    window = np.minimum(boundary_rtol * np.maximum(1.0, np.abs(phi)), config.PHASE_ATOL)
    psi = np.where(psi >= np.pi - window, -np.pi, psi)

    if psi.ndim == 0:
        return float(psi)
    return psi


def circular_distance(a, b):
    """
    Documentation:

        ---
        Description:
            Absolute wrapped difference |wrap(a - b)|, in [0, pi].
    """
    return np.abs(wrap(np.subtract(a, b)))


def true_phase(d, theta):
    """
    Documentation:

        ---
        Description:
            Unwrapped phase difference pi * d * sin(theta) across a pair at distance d.
    """
    d = _check_distance(d)
    theta = check_theta(theta)
    return np.pi * d * np.sin(theta)


@dataclass(frozen=True)
class PhaseDecomposition:
    """
    Documentation:

        ---
        Description:
            phi = psi + 2 * pi * q with psi in [-pi, pi).
    """

    phi: float
    q: int
    psi: float


def decompose(phi, boundary_rtol=config.BOUNDARY_RTOL):
    phi = float(phi)
    psi = wrap(phi, boundary_rtol=boundary_rtol)
    q = int(np.rint((phi - psi) / TWO_PI))
    return PhaseDecomposition(phi=phi, q=q, psi=psi)


def cycle_count(d, theta, boundary_rtol=config.BOUNDARY_RTOL):
    """
    Documentation:

        ---
        Description:
            Number of whole cycles lost when wrapping the phase of a pair: the rounding of
            d * sin(theta) / 2, with ties resolved the same way wrap resolves them.

        ---
        Parameters:
            d : float
                Pair distance in half-wavelength units.
            theta : float
                Direction of arrival in (-pi/2, pi/2) radians.

        ---
        Returns:
            q : int
                Cycle count.
    """
    return decompose(true_phase(d, theta), boundary_rtol=boundary_rtol).q


def wrapped_vector(d, theta, boundary_rtol=config.BOUNDARY_RTOL):
    """
    Documentation:

        ---
        Description:
            Wrapped phase difference of every pair for a source at theta.

        ---
        Parameters:
            d : PairDistances
                Pair distances.
            theta : float
                Direction of arrival in (-pi/2, pi/2) radians.

        ---
        Returns:
            psi : array, shape (M,)
                wrap(pi * d[i] * sin(theta)) for each pair.
    """
    theta = check_theta(theta)
    return np.atleast_1d(wrap(np.pi * d.as_array() * np.sin(theta), boundary_rtol=boundary_rtol))


def wrapped_pattern(distances, sines, boundary_rtol=config.BOUNDARY_RTOL):
    """
    Documentation:

        ---
        Description:
            Wrapped phases for many sines at once: row g holds wrap(pi * d * sines[g]).

        ---
        Parameters:
            distances : array, shape (M,)
                Pair distances as floats.
            sines : array, shape (G,)
                Sine values in (-1, 1).

        ---
        Returns:
            pattern : array, shape (G, M)
    """
    sines = np.asarray(sines, dtype=float)
    distances = np.asarray(distances, dtype=float)
    return np.atleast_2d(wrap(np.pi * np.outer(sines, distances), boundary_rtol=boundary_rtol))
