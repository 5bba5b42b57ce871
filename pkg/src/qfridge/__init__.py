"""Exact steady states, reset-model dynamics, and speed-limit bounds for
the three-qubit absorption refrigerator.

The machine: three qubits (cold, room, hot) with E_r = E_c + E_h, each
coupled to its own bath by probabilistic thermal resets, plus the
three-body swap interaction g(|010><101| + h.c.). The package computes
the closed-form steady state, integrates the master equation, evaluates
the quantum-speed-limit time tau for the transient, and builds the
figure-of-merit chi = Q_c / tau together with its closed forms, sweeps,
and optimizers.
"""

from .errors import (BoundaryMaximumError, ConfigError, DegenerateKernelError,
                     FridgeError, IntegrationError, PoleError,
                     SingularRatesError, UndefinedChiError)
from .model import (IDX_INNER, IDX_OUTER, CohSubspace, FridgeParams,
                    PerturbativeRegimeWarning, ThermalPopulations,
                    build_hamiltonian, coherence_matrix, ground_pop,
                    initial_state, interaction_hamiltonian,
                    thermal_populations, thermal_qubit)
from .linalg import (commutator, hs_inner, hs_norm, partial_trace, tensor,
                     trace_distance, trace_product)
from .steady import (NoCouplingWarning, ResetCombos, SteadyReport, bias_delta,
                     carnot_cop, gamma_amplitude, lambda_weight, omega_weights,
                     reset_combos, sigma_matrix, steady_state)
from .dynamics import (Trajectory, avg_transient_power, convergence_time,
                       default_dt, default_t_end, evolve, heat_current_cold,
                       liouvillian_apply, liouvillian_matrix)
from .qsl import (CoherentCoeffs, NonCoolingWarning, QslReport, TradeoffCoeffs,
                  TrivialEvolutionWarning, bsocr, bsocr_closed_equal_p,
                  bsocr_coherent_coeffs, chi_from_g_form, chi_from_p_form,
                  lindblad_adjoint_initial, qsl_time, tradeoff_coeffs)
from .analysis import (HighTemperatureValidityWarning, Optimum, SweepRecord,
                       SweepSpec, chi_highT, eta_opt_asymptotic, f_function,
                       maximize_chi_over_eta, run_sweep, write_sweep_csv)

__all__ = [
    "BoundaryMaximumError", "ConfigError", "DegenerateKernelError",
    "FridgeError", "IntegrationError", "PoleError", "SingularRatesError",
    "UndefinedChiError",
    "IDX_INNER", "IDX_OUTER", "CohSubspace", "FridgeParams",
    "PerturbativeRegimeWarning", "ThermalPopulations", "build_hamiltonian",
    "coherence_matrix", "ground_pop", "initial_state",
    "interaction_hamiltonian", "thermal_populations", "thermal_qubit",
    "commutator", "hs_inner", "hs_norm", "partial_trace", "tensor",
    "trace_distance", "trace_product",
    "NoCouplingWarning", "ResetCombos", "SteadyReport", "bias_delta",
    "carnot_cop", "gamma_amplitude", "lambda_weight", "omega_weights",
    "reset_combos", "sigma_matrix", "steady_state",
    "Trajectory", "avg_transient_power", "convergence_time", "default_dt",
    "default_t_end", "evolve", "heat_current_cold", "liouvillian_apply",
    "liouvillian_matrix",
    "CoherentCoeffs", "NonCoolingWarning", "QslReport", "TradeoffCoeffs",
    "TrivialEvolutionWarning", "bsocr", "bsocr_closed_equal_p",
    "bsocr_coherent_coeffs", "chi_from_g_form", "chi_from_p_form",
    "lindblad_adjoint_initial", "qsl_time", "tradeoff_coeffs",
    "HighTemperatureValidityWarning", "Optimum", "SweepRecord", "SweepSpec",
    "chi_highT", "eta_opt_asymptotic", "f_function", "maximize_chi_over_eta",
    "run_sweep", "write_sweep_csv",
]

__version__ = "0.1.0"
