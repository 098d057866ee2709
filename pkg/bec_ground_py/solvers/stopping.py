"""Contains the outer stopping rule."""

# bec_ground_py components
from .solve_report import Termination
from .solver_config import SolverConfig


def check_stop(state: object, prev_state: object, config: SolverConfig, iteration: int = 0) -> Termination:
    """Decides whether an outer iteration loop stops.

    The tests run in order: gradient norm, relative energy change |f_k+1 - f_k| / (|f_k| + 1), iteration cap.

    Args:
        state (IterateState): Current iterate.
        prev_state (IterateState): Previous iterate, or None before the first iteration.
        config (SolverConfig): Thresholds.
        iteration (int, optional): Number of outer iterations done so far. Defaults to 0.

    Returns:
        termination (Termination): Reason to stop, or None to keep iterating.
    """
    if state.grad_norm <= config.grad_tol:
        return Termination.GRAD_TOL

    if prev_state is not None and abs(state.energy - prev_state.energy) / (abs(prev_state.energy) + 1) <= config.energy_tol:
        return Termination.ENERGY_TOL

    if iteration >= config.max_iter:
        return Termination.MAX_ITER

    return None
