""" Contains the cubic (Gross-Pitaevskii) nonlinearity."""

# Python libraries
import numpy as np

# bec_ground_py components
from ..errors import BecGroundError, ErrorCode
from .nonlinearity_plugin import NonlinearityPlugin


class QuarticNonlinearity(NonlinearityPlugin):
    """h~(u) = beta/4 sum u_i^4, so rho(u) = beta u^2 and the Hessian is diag(3 beta u^2).

    beta = 0 is accepted and gives the linear eigenproblem.
    """

    def __init__(self, beta: float) -> object:
        """Creates a QuarticNonlinearity object.

        Args:
            beta (float): Self-interaction coefficient.

        Returns:
            object: Created QuarticNonlinearity object.
        """
        if not np.isfinite(beta) or beta < 0:
            raise BecGroundError(ErrorCode.INVALID_SPEC, f"Quartic nonlinearities need a finite beta >= 0 (got {beta}).")

        self.beta = float(beta)
        self.name = f"quartic(beta={self.beta:g})"

    def value(self, u: np.ndarray) -> float:
        return 0.25 * self.beta * float(np.sum(u**4))

    def ratio(self, u: np.ndarray) -> np.ndarray:
        return self.beta * u**2

    def curvature_diag(self, u: np.ndarray) -> np.ndarray:
        return 3.0 * self.beta * u**2

    def increment(self, u: np.ndarray, e: np.ndarray) -> float:
        # (u + e)^4 - u^4 in expanded form
        return 0.25 * self.beta * float(np.sum(e * (4 * u**3 + e * (6 * u**2 + e * (4 * u + e)))))


def plugin_quartic(beta: float) -> QuarticNonlinearity:
    """Creates the quartic plugin h~(u) = beta/4 sum u^4.

    Args:
        beta (float): Self-interaction coefficient.

    Returns:
        plugin (QuarticNonlinearity): Created plugin.
    """
    return QuarticNonlinearity(beta=beta)
