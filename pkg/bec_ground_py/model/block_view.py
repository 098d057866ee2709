"""Contains the single-block subproblem obtained by freezing every other block."""

# Python libraries
import numpy as np

# bec_ground_py components
from ..errors import BecGroundError, ErrorCode

# Components smaller than this cannot carry a meaningful Noda ratio
POSITIVITY_FLOOR = 1e-300


class BlockView:
    """Subproblem f(u) = 2 h~(u) + u^T A u + u^T diag(background) u of one block with its partners frozen.

    Freezing the partners of a block turns every coupling term into a diagonal potential, the "background". With this
    view the per-block operator is A(u) = diag(rho(u)) + A + diag(background) and the Jacobian of the residual
    A(u) u - lambda u is J(u, lambda) = Hess h~(u) + A + diag(background) - lambda I.
    """

    def __init__(self, operator: object, nonlinearity: object, background: np.ndarray) -> object:
        """Creates a BlockView object.

        Args:
            operator (SymmetricOperator): Linear part A of the block.
            nonlinearity (NonlinearityPlugin): Nonlinear part h~ of the block.
            background (np.ndarray): Diagonal potential produced by the frozen partner blocks.

        Returns:
            object: Created BlockView object.
        """
        self.operator = operator
        self.nonlinearity = nonlinearity
        self.background = background
        self.size = operator.size

    def apply_coupled(self, u: np.ndarray, x: np.ndarray) -> np.ndarray:
        """Computes A(u) x."""
        return self.operator.apply(x) + (self.nonlinearity.ratio(u) + self.background) * x

    def residual(self, u: np.ndarray, lam: float) -> np.ndarray:
        """Computes A(u) u - lambda u."""
        return self.apply_coupled(u, u) - lam * u

    def jacobian_diagonal(self, u: np.ndarray, lam: float) -> np.ndarray:
        """Returns the diagonal that the Jacobian adds to A (exact only for plugins with a diagonal Hessian)."""
        return self.nonlinearity.curvature_diag(u) + self.background - lam

    def apply_jacobian(self, u: np.ndarray, lam: float, x: np.ndarray) -> np.ndarray:
        """Computes J(u, lambda) x."""
        return self.operator.apply(x) + self.nonlinearity.hessian_apply(u, x) + (self.background - lam) * x

    def value(self, u: np.ndarray) -> float:
        """Computes the block objective with the partner-only terms dropped."""
        return 2.0 * self.nonlinearity.value(u) + float(u @ self.operator.apply(u)) + float(np.sum(self.background * u**2))

    def increment(self, u: np.ndarray, e: np.ndarray) -> float:
        """Computes value(u + e) - value(u) without subtracting two nearly equal energies.

        Args:
            u (np.ndarray): Base point.
            e (np.ndarray): Increment.

        Returns:
            difference (float): Exact change of the block objective.
        """
        quadratic = 2.0 * float(e @ self.operator.apply(u)) + float(e @ self.operator.apply(e))
        background = float(np.sum(self.background * e * (2 * u + e)))
        return 2.0 * self.nonlinearity.increment(u, e) + quadratic + background

    def rayleigh(self, u: np.ndarray) -> float:
        """Computes u^T A(u) u."""
        return float(u @ self.apply_coupled(u, u))

    def min_ratio(self, u: np.ndarray) -> float:
        """Computes the Noda shift min_i (A(u) u)_i / u_i.

        Args:
            u (np.ndarray): Strictly positive iterate.

        Returns:
            ratio (float): Smallest componentwise ratio.
        """
        if np.any(u <= POSITIVITY_FLOOR):
            index = int(np.argmin(u))
            raise BecGroundError(
                ErrorCode.NONPOSITIVE_ITERATE,
                f"Iterate lost strict positivity at component {index} (value {u[index]:.3e}).",
            )

        return float(np.min(self.apply_coupled(u, u) / u))

    def projected_residual(self, u: np.ndarray) -> np.ndarray:
        """Computes A(u) u - (u^T A(u) u) u."""
        au = self.apply_coupled(u, u)
        return au - float(u @ au) * u
