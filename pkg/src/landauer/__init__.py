"""Joint position/momentum information and erasure thermodynamics for a molecule in a box."""

from .analytic import gaussian_entropy, joint_bound, min_uncertainty_sigma_p, uniform_entropy
from .demon import DemonParams, DemonReport, demon_feasibility, sweep_photon_energy
from .entropy import EntropyReport, differential_entropy, joint_information, thermodynamic_entropy
from .thermo import (
    MemoryScenario,
    ThermoLedger,
    evaluate_reset,
    isothermal_compression_ledger,
    measurement_ledger,
    verify_measurement_numerically,
)
from .wavegrid import (
    GaussianWindow,
    Grid,
    HalfBox,
    MomentumState,
    PositionState,
    make_gaussian,
    make_uniform,
    measure_position,
    random_state,
    scale_state,
    to_momentum,
    to_position,
)

__version__ = "0.1.0"
