"""Automatic Python configuration file."""

# Linear solves
from .linear_solver_config import Backend, LinearSolverConfig, STRONG_PRECOND_SHIFT, WEAK_PRECOND_SHIFT
from .tridiagonal import solve_tridiagonal_spd
from .preconditioner import FourierPreconditioner, precondition
from .pcg import pcg
from .lanczos import estimate_min_eigenvalue
from .bordered import (
    BorderedSolution,
    solve_block_bordered,
    solve_block_jacobian,
    solve_bordered,
    solve_jacobian,
    uses_direct_backend,
)
