from .monte_carlo import derive_trial_seed, monte_carlo_rmse, rmse_sweep
from .snapshot import (
    Snapshot,
    SourceConfig,
    generate_snapshot,
    noise_variance,
    principal_phases,
    steering_vector,
)
