from dataclasses import dataclass

import numpy as np

from .. import config
from ..errors import ZeroMagnitude
from ..phase.wrap import check_theta, wrap


@dataclass(frozen=True)
class SourceConfig:
    """
    Documentation:

        ---
        Description:
            Far-field narrowband source.

        ---
        Parameters:
            theta0 : float
                Direction of arrival in (-pi/2, pi/2) radians.
            amplitude : float, default=1.0
                Signal amplitude A > 0.
            frequency : float, default=1.0
                Frequency f > 0 in cycles per unit time.
            time : float, default=0.0
                Snapshot time t. s(t) adds a common phase to all sensors, which cancels in
                the phase differences.
    """

    theta0: float
    amplitude: float = 1.0
    frequency: float = 1.0
    time: float = 0.0

    def __post_init__(self):
        check_theta(self.theta0)
        if not self.amplitude > 0:
            raise ValueError("amplitude must be positive, got {}".format(self.amplitude))
        if not self.frequency > 0:
            raise ValueError("frequency must be positive, got {}".format(self.frequency))

    def signal(self):
        return self.amplitude * np.exp(-2j * np.pi * self.frequency * self.time)


@dataclass(frozen=True)
class Snapshot:
    """
    Documentation:

        ---
        Description:
            Complex observations of every sensor at one time instant.

        ---
        Parameters:
            x : array of complex, shape (N,)
                Observations.
            noise_sigma : float
                Standard deviation of the complex noise (sqrt of the total variance).
    """

    x: np.ndarray
    noise_sigma: float

    @property
    def n_sensors(self):
        return self.x.shape[0]


def steering_vector(layout, theta):
    """
    Documentation:

        ---
        Description:
            Array response to a unit far-field source: element k is exp(-j * pi * r_k * sin(theta)),
            r_k in half-wavelength units, so element 0 is 1.
    """
    theta = check_theta(theta)
    return np.exp(-1j * np.pi * layout.as_array() * np.sin(theta))


def noise_variance(amplitude, snr_db):
    if np.isposinf(snr_db):
        return 0.0
    return float(amplitude) ** 2 * 10.0 ** (-float(snr_db) / 10.0)


def generate_snapshot(layout, source, snr_db, seed):
    """
    Documentation:

        ---
        Description:
            Draw one noisy snapshot of the array: x = a(theta0) * s(t) + w with w circularly
            symmetric complex Gaussian, i.i.d. across sensors, real and imaginary parts each of
            variance sigma^2 / 2.

        ---
        Parameters:
            layout : SensorLayout
                Array layout.
            source : SourceConfig
                Source parameters.
            snr_db : float
                Per-sensor signal-to-noise ratio A^2 / sigma^2 in dB. float("inf") gives a
                noise-free snapshot.
            seed : int or numpy SeedSequence
                Seed for the PCG64 generator. Identical seeds give identical snapshots.

        ---
        Returns:
            snapshot : Snapshot
    """
    snr_db = float(snr_db)
    if np.isnan(snr_db) or np.isneginf(snr_db):
        raise ValueError("snr_db must be a number or +inf, got {}".format(snr_db))

    x = steering_vector(layout, source.theta0) * source.signal()
    variance = noise_variance(source.amplitude, snr_db)

    if variance > 0:
        rng = np.random.default_rng(seed)
        n = x.shape[0]
        x = x + np.sqrt(variance / 2.0) * (rng.standard_normal(n) + 1j * rng.standard_normal(n))

    return Snapshot(x=x, noise_sigma=float(np.sqrt(variance)))


def principal_phases(snapshot, pairs, zero_magnitude=config.ZERO_MAGNITUDE):
    """
    Documentation:

        ---
        Description:
            Principal phase difference angle(x_u * conj(x_v)) in [-pi, pi) for each pair.

        ---
        Parameters:
            snapshot : Snapshot
                Observations.
            pairs : PairDistances or list of (int, int)
                0-based sensor pairs.
            zero_magnitude : float, default=config.ZERO_MAGNITUDE
                Products smaller than this in magnitude have no usable angle.

        ---
        Returns:
            psi : array, shape (M,)
    """
    pairs = getattr(pairs, "pairs", pairs)
    index = np.asarray(pairs, dtype=int).reshape(-1, 2)
    n = snapshot.n_sensors
    if index.size and (index.min() < 0 or index.max() >= n):
        raise IndexError("pair indices must lie in [0, {}), got {}".format(n, index.tolist()))

    products = snapshot.x[index[:, 0]] * np.conj(snapshot.x[index[:, 1]])
    if np.any(np.abs(products) < zero_magnitude):
        raise ZeroMagnitude("a sensor product has magnitude below {}; its phase is undefined".format(zero_magnitude))

    return np.atleast_1d(wrap(np.angle(products)))
