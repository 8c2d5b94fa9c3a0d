from .layout import (
    PairDistances,
    SensorLayout,
    format_rational,
    layout_from_spacing,
    make_layout,
    pair_distances,
    parse_rational,
    uniform_layout,
)
from .reduction import RationalReduction, reduce_to_primitive
