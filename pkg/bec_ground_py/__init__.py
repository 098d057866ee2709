"""Automatic Python configuration file."""
__version__ = "1.0.0"

# Errors
from .errors import BecGroundError, ConfigError, ErrorCode

# Discretization
from .grid import Domain, Grid, Scheme, SymmetricOperator, build_grid, build_operator
from .grid import CustomPotential, HarmonicLatticePotential, constant_potential

# Discrete objective
from .nonlinearities import NonlinearityPlugin, plugin_modified_gpe, plugin_quartic, plugin_saturable
from .model import BlockView, CoupledProblem, IterateState, MultiBlockProblem, energy, grad_norm

# Linear solves and ground-state solvers
from .linsolve import Backend, LinearSolverConfig
from .solvers import BlockSpec, SolveReport, SolverConfig, Termination, alm, anni, multiblock_anni, nni

# Physical specifications and experiments
from .bec import BecSpec, Family, build_problem, build_spin_half, recover_wavefunctions, reduce_spin1, reduce_spin2
from .presets import PRESETS

# Experiment orchestration
from .result_row import ResultRow
from .run_config import RunConfig, load_config
from .runner import Runner, dump_state, load_state
