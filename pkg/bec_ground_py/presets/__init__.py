"""Automatic Python configuration file."""

# Experiment builders
from .optical_lattice_spin_half import optical_lattice_spin_half_1d
from .optical_lattice_spinor import (
    optical_lattice_spin1_2d,
    optical_lattice_spin1_3d,
    optical_lattice_spin2_2d,
    optical_lattice_spin2_3d,
    sine_lattice,
)

PRESETS = {
    "optical_lattice_spin_half_1d": optical_lattice_spin_half_1d,
    "optical_lattice_spin1_2d": optical_lattice_spin1_2d,
    "optical_lattice_spin1_3d": optical_lattice_spin1_3d,
    "optical_lattice_spin2_2d": optical_lattice_spin2_2d,
    "optical_lattice_spin2_3d": optical_lattice_spin2_3d,
}
