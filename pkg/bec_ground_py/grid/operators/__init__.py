"""Automatic Python configuration file."""

# Operators
from .symmetric_operator import Structure, SymmetricOperator
from .finite_difference import build_fd_operator, second_difference
from .spectral import build_spectral_operator, squared_wavenumbers
from .build_operator import build_operator
