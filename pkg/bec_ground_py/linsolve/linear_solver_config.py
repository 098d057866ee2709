"""Contains the settings of the inner Newton linear solves."""

# Python libraries
from dataclasses import dataclass
from enum import Enum

# bec_ground_py components
from ..errors import BecGroundError, ErrorCode

# Preconditioner shifts used for weak and strong self-interactions
WEAK_PRECOND_SHIFT = 3.0
STRONG_PRECOND_SHIFT = 30.0


class Backend(str, Enum):
    """Linear-solve backends. AUTO picks DIRECT_TRIDIAG for 1D finite differences and PCG otherwise."""

    AUTO = "AUTO"
    DIRECT_TRIDIAG = "DIRECT_TRIDIAG"
    PCG = "PCG"


@dataclass(frozen=True)
class LinearSolverConfig:
    """Settings of the Jacobian solves.

    precond_shift is the constant c of the (cI - Laplacian)^-1 preconditioner. When left as None it is 30 if the
    largest physical self-interaction exceeds strong_interaction_threshold and 3 otherwise.
    """

    backend: Backend = Backend.AUTO
    pcg_tol: float = 1e-8
    pcg_maxit: int = 500
    precond_shift: float = None
    strong_interaction_threshold: float = 50.0

    def __post_init__(self):
        if not isinstance(self.backend, Backend):
            object.__setattr__(self, "backend", Backend(str(self.backend).upper()))

        if not 0 < self.pcg_tol < 1:
            raise BecGroundError(ErrorCode.INVALID_SPEC, f"pcg_tol must lie in (0, 1) (got {self.pcg_tol}).")

        if self.pcg_maxit < 1:
            raise BecGroundError(ErrorCode.INVALID_SPEC, f"pcg_maxit must be at least 1 (got {self.pcg_maxit}).")

        if self.precond_shift is not None and not self.precond_shift > 0:
            raise BecGroundError(ErrorCode.INVALID_SPEC, f"precond_shift must be positive (got {self.precond_shift}).")

    def resolve_precond_shift(self, physical_betas: tuple) -> float:
        """Picks the preconditioner shift c.

        Args:
            physical_betas (tuple): Continuum self-interaction coefficients of the problem.

        Returns:
            shift (float): Configured shift, or the weak/strong default.
        """
        if self.precond_shift is not None:
            return float(self.precond_shift)

        return STRONG_PRECOND_SHIFT if max(physical_betas) > self.strong_interaction_threshold else WEAK_PRECOND_SHIFT
