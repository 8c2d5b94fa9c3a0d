from .wrap import (
    PhaseDecomposition,
    circular_distance,
    cycle_count,
    decompose,
    true_phase,
    wrap,
    wrapped_pattern,
    wrapped_vector,
)
