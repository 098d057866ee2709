"""Contains the shift selection of Newton-Noda steps."""

# Python libraries
import logging

import numpy as np

# bec_ground_py components
from ..errors import BecGroundError, ErrorCode
from ..linsolve import estimate_min_eigenvalue
from .solver_config import SolverConfig

logger = logging.getLogger(__name__)


def effective_tau2(block: object, u: np.ndarray, config: SolverConfig) -> float:
    """Resolves the upper end of the shift window for one block.

    Args:
        block (BlockView): Subproblem of the block.
        u (np.ndarray): Current unit iterate.
        config (SolverConfig): Shift settings.

    Returns:
        tau2 (float): Explicit tau2, +inf on M-matrix operators in AUTO mode, or a Lanczos-based bound otherwise.
    """
    if not config.tau2_is_auto:
        return float(config.tau2)

    if block.operator.m_matrix:
        return np.inf

    estimate = estimate_min_eigenvalue(lambda x: block.apply_coupled(u, x), start=u, steps=config.lanczos_steps)
    return config.tau2_safety * estimate


def select_block_shift(block: object, u: np.ndarray, config: SolverConfig, tau2: float = np.inf) -> float:
    """Selects lambda in [tau1, tau2] for one block.

    On M-matrix operators the candidate is the Noda shift min_i (A(u) u)_i / u_i, which keeps the Jacobian a positive
    definite M-matrix; when u has lost positivity the shift falls back to tau1. Elsewhere the candidate is the Rayleigh
    quotient, which the clamp to tau2 pulls below the smallest eigenvalue of A(u).

    Args:
        block (BlockView): Subproblem of the block.
        u (np.ndarray): Current unit iterate.
        config (SolverConfig): Shift settings.
        tau2 (float, optional): Upper end of the window. Defaults to +inf.

    Returns:
        lam (float): Selected shift.
    """
    if block.operator.m_matrix:
        try:
            candidate = block.min_ratio(u)
        except BecGroundError as error:
            if error.code != ErrorCode.NONPOSITIVE_ITERATE:
                raise
            logger.warning("Noda shift unavailable (%s); falling back to tau1 = %g", error.message, config.tau1)
            candidate = config.tau1
    else:
        candidate = block.rayleigh(u)

    lam = max(config.tau1, candidate)
    if np.isfinite(tau2):
        lam = min(lam, tau2)

    return max(lam, config.tau1)


def select_shift(p: object, u: np.ndarray, v: np.ndarray, config: SolverConfig) -> float:
    """Selects the shift of the first component of a CoupledProblem.

    Args:
        p (CoupledProblem): Problem data.
        u (np.ndarray): Current unit iterate.
        v (np.ndarray): Frozen partner.
        config (SolverConfig): Shift settings.

    Returns:
        lam (float): Selected shift.
    """
    block = p.u_block(v)
    return select_block_shift(block, u, config, effective_tau2(block, u, config))
