""" Contains the saturable nonlinearity."""

# Python libraries
import numpy as np

# bec_ground_py components
from ..errors import BecGroundError, ErrorCode
from .nonlinearity_plugin import NonlinearityPlugin


class SaturableNonlinearity(NonlinearityPlugin):
    """h~(u) = sum(u_i^2 - ln(1 + u_i^2 / a_i)) from saturable nonlinear Schroedinger models.

    Then rho(u) = 2 (1 - 1 / (a + u^2)) and the Hessian diagonal is 2 - 2 / (a + u^2) + 4 u^2 / (a + u^2)^2.
    """

    def __init__(self, saturation) -> object:
        """Creates a SaturableNonlinearity object.

        Args:
            saturation (float or np.ndarray): Saturation levels a_i > 0 (one value is shared by every component).

        Returns:
            object: Created SaturableNonlinearity object.
        """
        saturation = np.asarray(saturation, dtype=float)
        if np.any(~np.isfinite(saturation)) or np.any(saturation <= 0):
            raise BecGroundError(ErrorCode.INVALID_SPEC, "Saturable nonlinearities need finite saturation levels a > 0.")

        self.saturation = saturation
        self.name = f"saturable(a={saturation.ravel()[0]:g})" if saturation.size == 1 else f"saturable(n={saturation.size})"

    def value(self, u: np.ndarray) -> float:
        return float(np.sum(u**2 - np.log1p(u**2 / self.saturation)))

    def ratio(self, u: np.ndarray) -> np.ndarray:
        return 2.0 * (1.0 - 1.0 / (self.saturation + u**2))

    def curvature_diag(self, u: np.ndarray) -> np.ndarray:
        denominator = self.saturation + u**2
        return 2.0 - 2.0 / denominator + 4.0 * u**2 / denominator**2

    def increment(self, u: np.ndarray, e: np.ndarray) -> float:
        change = e * (2 * u + e)
        return float(np.sum(change - np.log1p(change / (self.saturation + u**2))))


def plugin_saturable(saturation) -> SaturableNonlinearity:
    """Creates the saturable plugin h~(u) = sum(u^2 - ln(1 + u^2 / a)).

    Args:
        saturation (float or np.ndarray): Saturation levels a_i > 0.

    Returns:
        plugin (SaturableNonlinearity): Created plugin.
    """
    return SaturableNonlinearity(saturation=saturation)
