"""Automatic Python configuration file."""

# Discrete objective
from .block_view import BlockView
from .coupled_problem import (
    CoupledProblem,
    apply_coupled,
    apply_jacobian,
    energy,
    energy_parts,
    grad_norm,
    half_energy,
    min_ratio,
    rayleigh,
    residual,
)
from .iterate_state import IterateState
from .multiblock_problem import MultiBlockProblem
