"""Automatic Python configuration file."""

# Solver settings and results
from .solver_config import InitialGuess, SolverConfig, initial_blocks
from .solve_report import IterationRecord, SolveReport, Termination
from .stopping import check_stop

# Building blocks
from .shifts import effective_tau2, select_block_shift, select_shift
from .line_search import LineSearchStep, block_line_search, line_search
from .newton_noda_step import BlockStep, at_round_off, bordered_with_retries, newton_noda_step, positivity_search
from .nni import NniResult, block_nni, nni

# Solvers
from .block_solver import BlockSolver
from .anni import AnniSolver, anni
from .alm import AlmSolver, alm
from .multiblock import BlockSpec, build_multiblock_problem, multiblock_anni
