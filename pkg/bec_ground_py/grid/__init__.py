"""Automatic Python configuration file."""

# Grids
from .domain import Domain
from .grid import Grid, Scheme, build_grid

# Potentials
from .potentials import HarmonicLatticePotential, CustomPotential, constant_potential, sample_potential

# Single-particle operators
from .operators import (
    Structure,
    SymmetricOperator,
    build_fd_operator,
    build_operator,
    build_spectral_operator,
    second_difference,
    squared_wavenumbers,
)
