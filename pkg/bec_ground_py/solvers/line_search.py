"""Contains the step-halving line search that enforces strict descent of a block objective."""

# Python libraries
from dataclasses import dataclass

import numpy as np

# bec_ground_py components
from ..errors import BecGroundError, ErrorCode

TANGENCY_TOLERANCE = 1e-8


@dataclass(frozen=True)
class LineSearchStep:
    """Accepted step length, normalized new iterate, number of halvings and achieved decrease d(theta) < 0."""

    theta: float
    u_next: np.ndarray
    halvings: int
    decrease: float


def block_line_search(block: object, u: np.ndarray, delta_u: np.ndarray, max_halvings: int = 60) -> LineSearchStep:
    """Halves theta from 1 until u_hat = (u + theta du) / |u + theta du| strictly decreases the block objective.

    Args:
        block (BlockView): Subproblem of the block.
        u (np.ndarray): Current unit iterate.
        delta_u (np.ndarray): Nonzero tangent step (u^T du = 0).
        max_halvings (int, optional): Halving cap. Defaults to 60.

    Returns:
        step (LineSearchStep): First theta in {1, 1/2, 1/4, ...} with d(theta) < 0.
    """
    step_norm = float(np.linalg.norm(delta_u))
    if step_norm == 0:
        raise BecGroundError(ErrorCode.NONTANGENT_STEP, "Line search needs a nonzero step.")

    tangency = abs(float(u @ delta_u))
    if tangency > TANGENCY_TOLERANCE * max(1.0, step_norm):
        raise BecGroundError(ErrorCode.NONTANGENT_STEP, f"Step is not tangent to the sphere (|u^T du| = {tangency:.3e}).")

    theta = 1.0
    for halvings in range(max_halvings + 1):
        w = u + theta * delta_u
        u_hat = w / np.linalg.norm(w)

        decrease = block.increment(u, u_hat - u)
        if decrease < 0:
            return LineSearchStep(theta=theta, u_next=u_hat, halvings=halvings, decrease=decrease)

        theta *= 0.5

    raise BecGroundError(
        ErrorCode.LINE_SEARCH_STALL,
        f"No descent after {max_halvings} halvings (|du| = {step_norm:.3e}, last d = {decrease:.3e}).",
    )


def line_search(p: object, u: np.ndarray, delta_u: np.ndarray, v: np.ndarray, max_halvings: int = 60) -> tuple:
    """Runs the descent line search on the first component of a CoupledProblem.

    Args:
        p (CoupledProblem): Problem data.
        u (np.ndarray): Current unit iterate.
        delta_u (np.ndarray): Tangent step.
        v (np.ndarray): Frozen partner.
        max_halvings (int, optional): Halving cap. Defaults to 60.

    Returns:
        theta, u_next (tuple): Accepted step length and normalized new iterate.
    """
    step = block_line_search(p.u_block(v), u, delta_u, max_halvings=max_halvings)
    return step.theta, step.u_next
