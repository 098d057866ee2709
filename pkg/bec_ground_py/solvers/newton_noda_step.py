"""Contains the one-step modified Newton-Noda update of a single block."""

# Python libraries
import logging
from dataclasses import dataclass

import numpy as np

# bec_ground_py components
from ..errors import BecGroundError, ErrorCode
from ..linsolve import BorderedSolution, solve_block_bordered
from .line_search import block_line_search
from .shifts import effective_tau2, select_block_shift
from .solver_config import SolverConfig

logger = logging.getLogger(__name__)

# Failures that a smaller shift can cure
RETRYABLE_CODES = (ErrorCode.INDEFINITE_JACOBIAN, ErrorCode.DEGENERATE_BORDER)


@dataclass(frozen=True)
class BlockStep:
    """Outcome of one block update. theta = 0 marks a skipped update (u already an eigenvector of A(u))."""

    u_next: np.ndarray
    shift: float
    delta: float
    theta: float
    halvings: int
    linear_iterations: int
    tangency: float = 0.0


def bordered_with_retries(block: object, u: np.ndarray, lam: float, config: SolverConfig, precond_shift: float) -> tuple:
    """Runs the bordered solve, halving lambda toward tau1 when the shifted Jacobian turns out indefinite.

    Args:
        block (BlockView): Subproblem of the block.
        u (np.ndarray): Current unit iterate.
        lam (float): First shift to try.
        config (SolverConfig): Solver settings (shift_retries, tau1 and the linear-solve settings).
        precond_shift (float): Constant c of the Fourier preconditioner.

    Returns:
        solution, lam (tuple): Bordered solution and the shift it was computed with.
    """
    for attempt in range(config.shift_retries + 1):
        try:
            return solve_block_bordered(block, u, lam, config.inner, precond_shift), lam
        except BecGroundError as error:
            if error.code not in RETRYABLE_CODES or attempt == config.shift_retries:
                raise

            smaller = 0.5 * (lam + config.tau1)
            logger.warning("%s at shift %.10g; retrying with %.10g", error.code.value, lam, smaller)
            lam = smaller


def at_round_off(block: object, u: np.ndarray, config: SolverConfig) -> bool:
    """Whether the projected residual of u is too small for the energy to resolve a descent step."""
    residual_norm = float(np.linalg.norm(block.projected_residual(u)))
    return residual_norm <= config.stall_residual_tol * max(1.0, abs(block.rayleigh(u)))


def newton_noda_step(block: object, u: np.ndarray, config: SolverConfig, precond_shift: float) -> BlockStep:
    """Performs one shift selection, bordered solve and descent line search on a block.

    Args:
        block (BlockView): Subproblem of the block with its partners frozen.
        u (np.ndarray): Current unit iterate.
        config (SolverConfig): Solver settings.
        precond_shift (float): Constant c of the Fourier preconditioner.

    Returns:
        step (BlockStep): Updated block and diagnostics.
    """
    lam = select_block_shift(block, u, config, effective_tau2(block, u, config))
    solution, lam = bordered_with_retries(block, u, lam, config, precond_shift)

    skipped = BlockStep(
        u_next=u, shift=lam, delta=solution.delta, theta=0.0, halvings=0, linear_iterations=solution.linear_iterations
    )
    if np.linalg.norm(solution.delta_u) <= config.min_step_norm:
        return skipped

    try:
        search = block_line_search(block, u, solution.delta_u, max_halvings=config.max_halvings)
    except BecGroundError as error:
        if error.code != ErrorCode.LINE_SEARCH_STALL or not at_round_off(block, u, config):
            raise
        logger.debug("line search found no descent at round-off residual; skipping the update")
        return skipped

    return BlockStep(
        u_next=search.u_next,
        shift=lam,
        delta=solution.delta,
        theta=search.theta,
        halvings=search.halvings,
        linear_iterations=solution.linear_iterations,
        tangency=abs(float(u @ solution.delta_u)),
    )


def positivity_search(block: object, u: np.ndarray, solution: BorderedSolution, lam: float, max_halvings: int = 60) -> tuple:
    """Halves theta from 1 until u_hat = (u + theta du) / |u + theta du| gives A(u_hat) u_hat - lambda u_hat > 0.

    Args:
        block (BlockView): Subproblem of the block (M-matrix operator).
        u (np.ndarray): Current positive unit iterate.
        solution (BorderedSolution): Bordered step at shift lam.
        lam (float): Noda shift of the current iterate.
        max_halvings (int, optional): Halving cap. Defaults to 60.

    Returns:
        u_next, theta, halvings (tuple): Accepted iterate, step length and number of halvings.
    """
    theta = 1.0
    for halvings in range(max_halvings + 1):
        w = u + theta * solution.delta_u
        u_hat = w / np.linalg.norm(w)

        if np.all(u_hat > 0) and np.all(block.residual(u_hat, lam) > 0):
            return u_hat, theta, halvings

        theta *= 0.5

    raise BecGroundError(
        ErrorCode.LINE_SEARCH_STALL, f"No positive h(theta) after {max_halvings} halvings at shift {lam:.10g}."
    )
