""" Contains the nonlocal quartic nonlinearity of modified Gross-Pitaevskii models."""

# Python libraries
import numpy as np
import scipy.sparse as sparse

# bec_ground_py components
from ..errors import BecGroundError, ErrorCode
from .nonlinearity_plugin import NonlinearityPlugin


class ModifiedGpeNonlinearity(NonlinearityPlugin):
    """h~(u) = (u^2)^T G (u^2) for a symmetric nonnegative kernel G.

    For symmetric G the gradient is 4 (G u^2) * u, so rho(u) = 4 G u^2. The Hessian 4 diag(G u^2) + 8 diag(u) G diag(u)
    is diagonal only when G is.
    """

    def __init__(self, kernel) -> object:
        """Creates a ModifiedGpeNonlinearity object.

        Args:
            kernel (np.ndarray or sparse.spmatrix): Symmetric nonnegative matrix G.

        Returns:
            object: Created ModifiedGpeNonlinearity object.
        """
        kernel = sparse.csr_matrix(kernel, dtype=float)
        if kernel.shape[0] != kernel.shape[1]:
            raise BecGroundError(ErrorCode.INVALID_SPEC, f"The modified GPE kernel must be square (got {kernel.shape}).")
        if abs(kernel - kernel.T).max() > 1e-12 * max(abs(kernel).max(), 1.0):
            raise BecGroundError(ErrorCode.INVALID_SPEC, "The modified GPE kernel must be symmetric.")
        if kernel.nnz > 0 and kernel.data.min() < 0:
            raise BecGroundError(ErrorCode.INVALID_SPEC, "The modified GPE kernel must be entrywise nonnegative.")

        self.kernel = kernel
        self.kernel_diagonal = kernel.diagonal()
        self.hessian_is_diagonal = (kernel - sparse.diags(self.kernel_diagonal)).count_nonzero() == 0
        self.name = f"modified_gpe(n={kernel.shape[0]})"

    def value(self, u: np.ndarray) -> float:
        density = u**2
        return float(density @ (self.kernel @ density))

    def ratio(self, u: np.ndarray) -> np.ndarray:
        return 4.0 * (self.kernel @ u**2)

    def curvature_diag(self, u: np.ndarray) -> np.ndarray:
        return 4.0 * (self.kernel @ u**2) + 8.0 * self.kernel_diagonal * u**2

    def hessian_apply(self, u: np.ndarray, x: np.ndarray) -> np.ndarray:
        return 4.0 * (self.kernel @ u**2) * x + 8.0 * u * (self.kernel @ (u * x))


def plugin_modified_gpe(kernel) -> ModifiedGpeNonlinearity:
    """Creates the modified GPE plugin h~(u) = (u^2)^T G (u^2).

    Args:
        kernel (np.ndarray or sparse.spmatrix): Symmetric nonnegative matrix G.

    Returns:
        plugin (ModifiedGpeNonlinearity): Created plugin.
    """
    return ModifiedGpeNonlinearity(kernel=kernel)
