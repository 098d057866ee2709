"""Contains the settings shared by the ANNI, ALM and multi-block solvers."""

# Python libraries
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

# bec_ground_py components
from ..errors import BecGroundError, ErrorCode
from ..linsolve import LinearSolverConfig


class InitialGuess(str, Enum):
    """Initial iterates. Both are strictly positive unit vectors."""

    ONES = "ONES"
    GAUSSIAN = "GAUSSIAN"


@dataclass(frozen=True)
class SolverConfig:
    """Shift window, stopping thresholds, iteration caps and linear-solve settings.

    tau2 = None means AUTO: no upper clamp on M-matrix operators, and 0.95 times a Lanczos estimate of the smallest
    eigenvalue of the block operator elsewhere.

    Steps with |du| <= min_step_norm are at the round-off level of the bordered solve and skip the update. A line search
    that finds no descent also skips when the projected residual is at most stall_residual_tol relative to the
    Rayleigh quotient.
    """

    tau1: float = 0.0
    tau2: float = None
    grad_tol: float = 1e-6
    energy_tol: float = 1e-12
    max_iter: int = 200
    max_halvings: int = 60
    inner: LinearSolverConfig = field(default_factory=LinearSolverConfig)
    inner_nni_tol: float = 1e-8
    inner_max_iter: int = 100
    init: InitialGuess = InitialGuess.ONES
    shift_retries: int = 5
    lanczos_steps: int = 10
    tau2_safety: float = 0.95
    min_step_norm: float = float(np.sqrt(np.finfo(float).eps))
    stall_residual_tol: float = 1e-6

    def __post_init__(self):
        if not isinstance(self.init, InitialGuess):
            object.__setattr__(self, "init", InitialGuess(str(self.init).upper()))

        if self.tau2 is not None and not self.tau1 < self.tau2:
            raise BecGroundError(ErrorCode.INVALID_SPEC, f"tau1 must be smaller than tau2 (got {self.tau1} and {self.tau2}).")

        for name in ("grad_tol", "energy_tol", "inner_nni_tol", "min_step_norm", "stall_residual_tol"):
            if not getattr(self, name) > 0:
                raise BecGroundError(ErrorCode.INVALID_SPEC, f"{name} must be positive (got {getattr(self, name)}).")

        for name in ("max_iter", "inner_max_iter", "lanczos_steps"):
            if getattr(self, name) < 1:
                raise BecGroundError(ErrorCode.INVALID_SPEC, f"{name} must be at least 1 (got {getattr(self, name)}).")

        if self.max_halvings < 0 or self.shift_retries < 0:
            raise BecGroundError(ErrorCode.INVALID_SPEC, "max_halvings and shift_retries must be nonnegative.")

        if not 0 < self.tau2_safety < 1:
            raise BecGroundError(ErrorCode.INVALID_SPEC, f"tau2_safety must lie in (0, 1) (got {self.tau2_safety}).")

    @property
    def tau2_is_auto(self) -> bool:
        """Whether the upper shift bound is estimated at run time."""
        return self.tau2 is None


def initial_blocks(problem: object, init: InitialGuess, m: int = None) -> list:
    """Builds strictly positive unit initial iterates.

    Args:
        problem (MultiBlockProblem or CoupledProblem): Problem whose grid and size define the iterates.
        init (InitialGuess): ONES, or GAUSSIAN (exp(-|x|^2 / 2) on the grid nodes).
        m (int, optional): Number of blocks. Defaults to problem.m.

    Returns:
        blocks (list): One unit vector per block.
    """
    m = problem.m if m is None else m
    size = problem.size if hasattr(problem, "size") else problem.n

    if InitialGuess(init) == InitialGuess.GAUSSIAN and problem.grid is not None:
        vector = np.exp(-0.5 * np.sum(problem.grid.nodes() ** 2, axis=1))
    else:
        vector = np.ones(size)

    vector = vector / np.linalg.norm(vector)
    return [vector.copy() for _ in range(m)]
