"""Contains the Newton-Noda iteration that solves a single-block subproblem to tolerance."""

# Python libraries
import logging
from dataclasses import dataclass

import numpy as np

# bec_ground_py components
from ..errors import BecGroundError, ErrorCode
from ..linsolve import solve_block_bordered
from .line_search import block_line_search
from .newton_noda_step import at_round_off, bordered_with_retries, positivity_search
from .shifts import effective_tau2, select_block_shift
from .solver_config import SolverConfig

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NniResult:
    """Eigenvector, Rayleigh-quotient eigenvalue and work counters of a subproblem solve."""

    u: np.ndarray
    lam: float
    iterations: int
    linear_iterations: int = 0


def block_nni(block: object, u0: np.ndarray, config: SolverConfig, precond_shift: float) -> NniResult:
    """Iterates Newton-Noda steps on one block until |A(u) u - (u^T A(u) u) u| <= inner_nni_tol.

    On M-matrix operators every step uses the Noda shift min_i (A(u) u)_i / u_i and accepts theta once
    A(u_hat) u_hat - lambda u_hat > 0, so the shifts increase strictly and every iterate stays positive. Other
    operators use the general shift rule and strict descent of the block objective.

    Args:
        block (BlockView): Subproblem with the partner blocks frozen.
        u0 (np.ndarray): Initial unit iterate (strictly positive on M-matrix operators).
        config (SolverConfig): Solver settings (inner_nni_tol and inner_max_iter bound the loop).
        precond_shift (float): Constant c of the Fourier preconditioner.

    Returns:
        result (NniResult): Converged eigenvector and its eigenvalue.
    """
    u = u0
    linear_iterations = 0
    positive_path = block.operator.m_matrix

    for iteration in range(config.inner_max_iter + 1):
        residual_norm = float(np.linalg.norm(block.projected_residual(u)))
        if residual_norm <= config.inner_nni_tol:
            return NniResult(u=u, lam=block.rayleigh(u), iterations=iteration, linear_iterations=linear_iterations)

        if iteration == config.inner_max_iter:
            break

        if positive_path:
            lam = block.min_ratio(u)
            solution = solve_block_bordered(block, u, lam, config.inner, precond_shift)
        else:
            lam = select_block_shift(block, u, config, effective_tau2(block, u, config))
            solution, lam = bordered_with_retries(block, u, lam, config, precond_shift)

        linear_iterations += solution.linear_iterations

        if not np.any(solution.delta_u):
            return NniResult(u=u, lam=block.rayleigh(u), iterations=iteration + 1, linear_iterations=linear_iterations)

        try:
            if positive_path:
                u, theta, halvings = positivity_search(block, u, solution, lam, max_halvings=config.max_halvings)
            else:
                search = block_line_search(block, u, solution.delta_u, max_halvings=config.max_halvings)
                u, theta, halvings = search.u_next, search.theta, search.halvings
        except BecGroundError as error:
            if error.code != ErrorCode.LINE_SEARCH_STALL or not at_round_off(block, u, config):
                raise
            return NniResult(u=u, lam=block.rayleigh(u), iterations=iteration + 1, linear_iterations=linear_iterations)

        logger.debug("nni %d: lambda=%.12g residual=%.3e theta=%g halvings=%d", iteration, lam, residual_norm, theta, halvings)

    raise BecGroundError(
        ErrorCode.NO_CONVERGENCE,
        f"Subproblem residual {residual_norm:.3e} above {config.inner_nni_tol:g} after {config.inner_max_iter} iterations.",
    )


def nni(p: object, v: np.ndarray, u0: np.ndarray, cfg: SolverConfig) -> tuple:
    """Solves the first-component subproblem of a CoupledProblem with v frozen.

    Args:
        p (CoupledProblem): Problem data.
        v (np.ndarray): Frozen partner.
        u0 (np.ndarray): Initial unit iterate.
        cfg (SolverConfig): Solver settings.

    Returns:
        u, lam (tuple): Converged eigenvector and its eigenvalue.
    """
    result = block_nni(p.u_block(v), u0, cfg, cfg.inner.resolve_precond_shift(p.physical_betas))
    return result.u, result.lam
