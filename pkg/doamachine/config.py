# float inputs are approximated by rationals with denominators no larger than this
DENOMINATOR_LIMIT = 10 ** 6

# relative error allowed when a float distance is replaced by a rational
APPROX_RTOL = 1e-9

# phase comparison tolerance (radians)
PHASE_ATOL = 1e-9

# relative distance below +pi at which a wrapped phase is folded onto -pi, capped at PHASE_ATOL
BOUNDARY_RTOL = 1e-12

# cost slack (rad^2) for a grid point to count as a match candidate
CANDIDATE_TOLERANCE = 1e-6

# guards
GRID_SIZE_LIMIT = 10 ** 7
ORACLE_BUDGET = 10 ** 9
SEARCH_LATTICE_LIMIT = 10 ** 4
SEARCH_CANDIDATE_LIMIT = 10 ** 6

# smallest |x_u * conj(x_v)| with a usable angle
ZERO_MAGNITUDE = 1e-300

# rows of the pattern grid compared per oracle work unit
ORACLE_BLOCK_ROWS = 256

N_JOBS = 1
