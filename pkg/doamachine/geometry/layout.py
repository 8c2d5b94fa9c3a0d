import itertools
import numbers
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..errors import DuplicatePosition, TooFewSensors


def parse_rational(value):
    """
    Documentation:

        ---
        Description:
            Convert a position or distance to the number type used throughout doamachine.
            Integers, Fractions, decimal strings ("8.1") and rational strings ("81/10") are
            converted exactly to Fraction. Binary floats are passed through untouched; they are
            approximated later by reduce_to_primitive, which records the loss of exactness.

        ---
        Parameters:
            value : int, Fraction, str or float
                Value to convert.

        ---
        Returns:
            value : Fraction or float
                Exact rational, or the original float.
    """
    if isinstance(value, bool):
        raise TypeError("boolean values are not valid positions: {!r}".format(value))
    if isinstance(value, Fraction):
        return value
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError("'{}' is not a decimal or 'p/q' rational string".format(value))
    if isinstance(value, numbers.Real):
        value = float(value)
        if not np.isfinite(value):
            raise ValueError("positions must be finite, got {}".format(value))
        return value
    raise TypeError("unsupported position type {}".format(type(value).__name__))


def format_rational(value):
    """
    Documentation:

        ---
        Description:
            Render an exact rational as "p" or "p/q". parse_rational(format_rational(x)) == x
            holds for every Fraction x. Floats are rendered with repr so they survive a round
            trip as well.
    """
    if isinstance(value, Fraction):
        return str(value)
    return repr(float(value))


def is_exact(values):
    return all(isinstance(v, Fraction) for v in values)


@dataclass(frozen=True)
class SensorLayout:
    """
    Documentation:

        ---
        Description:
            Ordered sensor positions on a line in half-wavelength units (physical distance
            divided by lambda/2). Positions are strictly increasing and start at 0. Use
            make_layout to build one from arbitrary input.

        ---
        Parameters:
            positions : tuple of Fraction or float
                Normalized sensor positions.
    """

    positions: tuple

    def __post_init__(self):
        if len(self.positions) < 2:
            raise TooFewSensors(
                "a layout needs at least 2 sensors, got {}".format(len(self.positions))
            )
        if self.positions[0] != 0:
            raise ValueError("layout positions must start at 0, got {}".format(self.positions[0]))
        for left, right in zip(self.positions, self.positions[1:]):
            if not right > left:
                raise ValueError(
                    "layout positions must be strictly increasing, got {} then {}".format(left, right)
                )

    @property
    def n_sensors(self):
        return len(self.positions)

    @property
    def aperture(self):
        return self.positions[-1]

    @property
    def exact(self):
        return is_exact(self.positions)

    def as_array(self):
        return np.array([float(p) for p in self.positions])

    def scaled(self, factor):
        factor = parse_rational(factor)
        return SensorLayout(tuple(p * factor for p in self.positions))

    def __str__(self):
        return "[{}]".format(", ".join(format_rational(p) for p in self.positions))


@dataclass(frozen=True)
class PairDistances:
    """
    Documentation:

        ---
        Description:
            Sensor pairs (u, v), u < v, 0-based, and the positive distance of each pair. M is
            the number of pairs.

        ---
        Parameters:
            pairs : tuple of (int, int)
                Pair indices into the layout.
            d : tuple of Fraction or float
                d[i] = positions[v] - positions[u] for pairs[i] = (u, v).
    """

    pairs: tuple
    d: tuple

    def __post_init__(self):
        if len(self.pairs) != len(self.d):
            raise ValueError(
                "got {} pairs but {} distances".format(len(self.pairs), len(self.d))
            )
        if len(self.d) == 0:
            raise ValueError("at least one sensor pair is required")
        for value in self.d:
            if not value > 0:
                raise ValueError("pair distances must be positive, got {}".format(value))

    @property
    def m(self):
        return len(self.d)

    @property
    def exact(self):
        return is_exact(self.d)

    def as_array(self):
        return np.array([float(v) for v in self.d])

    def subset(self, indices):
        """
        Documentation:

            ---
            Description:
                Keep only the pairs at the given positions of this pair list.
        """
        indices = list(indices)
        return PairDistances(
            tuple(self.pairs[i] for i in indices),
            tuple(self.d[i] for i in indices),
        )


def make_layout(positions):
    """
    Documentation:

        ---
        Description:
            Build a SensorLayout from raw positions: values are parsed (exactly where
            possible), sorted ascending and translated so the first sensor sits at 0.

        ---
        Parameters:
            positions : list
                Sensor positions in half-wavelength units. Ints, Fractions, decimal or
                "p/q" strings, or floats.

        ---
        Returns:
            layout : SensorLayout
                Normalized layout.
    """
    positions = list(positions)
    if len(positions) < 2:
        raise TooFewSensors("a layout needs at least 2 sensors, got {}".format(len(positions)))

    values = [parse_rational(p) for p in positions]

    # a single float contaminates the layout; keep a uniform number type
    if not is_exact(values):
        values = [float(v) for v in values]

    values = sorted(values)
    for left, right in zip(values, values[1:]):
        if left == right:
            raise DuplicatePosition("two sensors share position {}".format(format_rational(left)))

    origin = values[0]
    return SensorLayout(tuple(v - origin for v in values))


def pair_distances(layout, pairs=None):
    """
    Documentation:

        ---
        Description:
            Distances between sensor pairs. By default all N(N-1)/2 unordered pairs are used,
            in lexicographic order (1,2), (1,3), ..., (2,3), ...

        ---
        Parameters:
            layout : SensorLayout
                Array layout.
            pairs : list of (int, int), default=None
                Optional 0-based pair subset. Each pair is normalized to u < v.

        ---
        Returns:
            distances : PairDistances
                Pairs and their distances.
    """
    n = layout.n_sensors
    if pairs is None:
        pairs = list(itertools.combinations(range(n), 2))
    else:
        checked = []
        for pair in pairs:
            u, v = (int(i) for i in pair)
            if u == v:
                raise ValueError("pair ({}, {}) joins a sensor with itself".format(u, v))
            u, v = min(u, v), max(u, v)
            if u < 0 or v >= n:
                raise ValueError(
                    "pair ({}, {}) is out of range for a {}-sensor layout".format(u, v, n)
                )
            checked.append((u, v))
        pairs = checked

    positions = layout.positions
    return PairDistances(
        tuple(tuple(p) for p in pairs),
        tuple(positions[v] - positions[u] for u, v in pairs),
    )


def layout_from_spacing(delta, ratio):
    """
    Documentation:

        ---
        Description:
            Three-sensor layout [0, delta, delta * (1 + ratio)]: a first spacing delta followed
            by a second spacing ratio times as long.
    """
    delta = parse_rational(delta)
    ratio = parse_rational(ratio)
    return make_layout([0, delta, delta * (1 + ratio)])


def uniform_layout(n_sensors, spacing):
    """
    Documentation:

        ---
        Description:
            Uniform linear array of n_sensors with a constant spacing (half-wavelength units).
    """
    spacing = parse_rational(spacing)
    return make_layout([k * spacing for k in range(int(n_sensors))])
