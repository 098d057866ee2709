"""Contains the Jacobian and bordered Newton solves of one block.

The bordered Newton system

    [ J   -u ] [ du    ]   [ -r ]
    [ u^T  0 ] [ delta ] = [  0 ]

is reduced to two solves with J: y1 = J^-1 u and y2 = J^-1 r give delta = u^T y2 / u^T y1 and du = delta y1 - y2.
"""

# Python libraries
import logging
from dataclasses import dataclass

import numpy as np

# bec_ground_py components
from ..errors import BecGroundError, ErrorCode
from .linear_solver_config import Backend, LinearSolverConfig
from .pcg import pcg
from .preconditioner import FourierPreconditioner
from .tridiagonal import solve_tridiagonal_spd

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BorderedSolution:
    """Tangent Newton step du and shift increment delta."""

    delta_u: np.ndarray
    delta: float
    linear_iterations: int = 0


def uses_direct_backend(block: object, config: LinearSolverConfig) -> bool:
    """Decides whether a block's Jacobian is solved by the banded direct backend.

    Args:
        block (BlockView): Subproblem whose Jacobian is solved.
        config (LinearSolverConfig): Linear-solve settings.

    Returns:
        direct (bool): True for the direct backend, False for PCG.
    """
    direct_possible = block.operator.supports_direct_solve and block.nonlinearity.hessian_is_diagonal

    if config.backend == Backend.DIRECT_TRIDIAG and not direct_possible:
        raise BecGroundError(
            ErrorCode.INVALID_SPEC,
            "The DIRECT_TRIDIAG backend needs a 1D finite-difference operator and a diagonal nonlinearity Hessian.",
        )

    return direct_possible and config.backend != Backend.PCG


def solve_block_jacobian(
    block: object, u: np.ndarray, lam: float, rhs: np.ndarray, config: LinearSolverConfig, precond_shift: float
) -> tuple:
    """Solves J(u, lambda) Y = rhs for one or more right-hand sides.

    Args:
        block (BlockView): Subproblem whose Jacobian is solved.
        u (np.ndarray): Current iterate.
        lam (float): Shift.
        rhs (np.ndarray): Right-hand side vector, or a matrix with one right-hand side per column.
        config (LinearSolverConfig): Linear-solve settings.
        precond_shift (float): Constant c of the Fourier preconditioner.

    Returns:
        solution, iterations (tuple): Solutions with the shape of rhs and the total PCG iteration count (0 when direct).
    """
    if uses_direct_backend(block, config):
        diagonal, off_diagonal = block.operator.tridiagonal_bands()
        return solve_tridiagonal_spd(diagonal + block.jacobian_diagonal(u, lam), off_diagonal, rhs), 0

    preconditioner = FourierPreconditioner(grid=block.operator.grid, shift=precond_shift)

    columns = rhs.reshape(block.size, -1)
    solutions, total_iterations = [], 0
    for column in columns.T:
        solution, iterations = pcg(
            apply=lambda x: block.apply_jacobian(u, lam, x),
            b=column,
            precondition=preconditioner.apply,
            tol=config.pcg_tol,
            maxit=config.pcg_maxit,
        )
        solutions.append(solution)
        total_iterations += iterations

    return np.column_stack(solutions).reshape(rhs.shape), total_iterations


def solve_block_bordered(
    block: object, u: np.ndarray, lam: float, config: LinearSolverConfig, precond_shift: float
) -> BorderedSolution:
    """Computes the bordered Newton step of one block by two Jacobian solves.

    Args:
        block (BlockView): Subproblem of the block.
        u (np.ndarray): Current unit iterate.
        lam (float): Shift.
        config (LinearSolverConfig): Linear-solve settings.
        precond_shift (float): Constant c of the Fourier preconditioner.

    Returns:
        solution (BorderedSolution): Step du with u^T du = 0 and increment delta.
    """
    r = block.residual(u, lam)
    solutions, iterations = solve_block_jacobian(block, u, lam, np.column_stack([u, r]), config, precond_shift)
    y1, y2 = solutions[:, 0], solutions[:, 1]

    border = float(u @ y1)
    if border <= 0:
        raise BecGroundError(ErrorCode.DEGENERATE_BORDER, f"u^T J^-1 u = {border:.3e} is not positive at shift {lam:.6g}.")

    delta = float(u @ y2) / border
    logger.debug("bordered solve: lambda=%.10g delta=%.3e linear_iterations=%d", lam, delta, iterations)

    return BorderedSolution(delta_u=delta * y1 - y2, delta=delta, linear_iterations=iterations)


def solve_jacobian(
    p: object, u: np.ndarray, v: np.ndarray, lam: float, b: np.ndarray, config: LinearSolverConfig
) -> np.ndarray:
    """Solves J_v(u, lambda) y = b for the first component of a CoupledProblem.

    Args:
        p (CoupledProblem): Problem data.
        u (np.ndarray): Current iterate.
        v (np.ndarray): Frozen partner.
        lam (float): Shift.
        b (np.ndarray): Right-hand side.
        config (LinearSolverConfig): Linear-solve settings.

    Returns:
        y (np.ndarray): Solution.
    """
    solution, _ = solve_block_jacobian(p.u_block(v), u, lam, b, config, config.resolve_precond_shift(p.physical_betas))
    return solution


def solve_bordered(p: object, u: np.ndarray, v: np.ndarray, lam: float, config: LinearSolverConfig) -> BorderedSolution:
    """Computes the bordered Newton step of the first component of a CoupledProblem.

    Args:
        p (CoupledProblem): Problem data.
        u (np.ndarray): Current unit iterate.
        v (np.ndarray): Frozen partner.
        lam (float): Shift.
        config (LinearSolverConfig): Linear-solve settings.

    Returns:
        solution (BorderedSolution): Step du and increment delta.
    """
    return solve_block_bordered(p.u_block(v), u, lam, config, config.resolve_precond_shift(p.physical_betas))
