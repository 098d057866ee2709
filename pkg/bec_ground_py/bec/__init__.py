"""Automatic Python configuration file."""

# Physical specifications
from .bec_spec import BecSpec, Family, INTERACTION_NAMES
from .reductions import reduce_spin1, reduce_spin2
from .spin_half import build_problem, build_spin_half, has_unique_ground_state
from .wavefunctions import component_masses, magnetization, recover_wavefunctions, spinor_components, total_mass
