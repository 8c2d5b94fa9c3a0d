from .condition import (
    IdentifiabilityReport,
    Verdict,
    ambiguous_direction_pairs,
    ambiguous_offsets,
    check_identifiability,
    enumerate_ambiguity_vectors,
    has_unwrapped_pair,
    primitive_within_q_max,
    q_max_vector,
    report_from_distances,
)
from .search import LayoutSearcher, search_identifiable_layouts
