"""Thermal quantum discord and entanglement of two coupled Josephson charge qubits."""

from ._core import (
    BracketError,
    DeviceParams,
    EffectiveParams,
    Error,
    NotAState,
    SpecError,
    charge_energy,
    closed_form_thermal,
    concurrence,
    discord_grid_oracle,
    effective_params,
    eof,
    eof_from_concurrence,
    esd_temperature,
    figure,
    gibbs_state,
    ground_state,
    ground_state_discord_analytic,
    hamiltonian,
    interbit_coupling,
    mutual_information,
    optimal_ratio,
    quantum_discord,
    sweep,
    thermal_state,
    von_neumann_entropy,
)

__all__ = [
    "BracketError",
    "DeviceParams",
    "EffectiveParams",
    "Error",
    "NotAState",
    "SpecError",
    "charge_energy",
    "closed_form_thermal",
    "concurrence",
    "discord_grid_oracle",
    "effective_params",
    "eof",
    "eof_from_concurrence",
    "esd_temperature",
    "figure",
    "gibbs_state",
    "ground_state",
    "ground_state_discord_analytic",
    "hamiltonian",
    "interbit_coupling",
    "mutual_information",
    "optimal_ratio",
    "quantum_discord",
    "sweep",
    "thermal_state",
    "von_neumann_entropy",
]

__version__ = "0.1.0"
