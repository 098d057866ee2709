"""Automatic Python configuration file."""

# Potentials
from .harmonic_lattice_potential import HarmonicLatticePotential
from .custom_potential import CustomPotential, constant_potential
from .sample_potential import sample_potential
