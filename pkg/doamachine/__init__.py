__version__ = "0.1.0"

from .geometry import make_layout, pair_distances, reduce_to_primitive
from .identify import Verdict, check_identifiability
from .machine import ArrayMachine
