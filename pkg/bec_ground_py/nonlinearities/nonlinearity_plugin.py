""" Contains the base class of separable-energy nonlinearities used by block solvers."""

# Python libraries
import numpy as np


class NonlinearityPlugin:
    """Nonlinear part h~ of a block energy h(u) = 2 h~(u) + u^T A u.

    Subclasses supply the value h~(u), the ratio field rho(u) with grad h~(u) = rho(u) * u, and the diagonal of the
    Hessian of h~. Plugins whose Hessian is not diagonal also override hessian_apply and set hessian_is_diagonal to False.
    """

    name = "nonlinearity"
    hessian_is_diagonal = True

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(name='{self.name}')"

    def value(self, u: np.ndarray) -> float:
        """Computes h~(u)."""
        raise NotImplementedError

    def ratio(self, u: np.ndarray) -> np.ndarray:
        """Computes rho(u), the componentwise ratio grad h~(u) / u."""
        raise NotImplementedError

    def curvature_diag(self, u: np.ndarray) -> np.ndarray:
        """Computes the diagonal of the Hessian of h~ at u."""
        raise NotImplementedError

    def gradient(self, u: np.ndarray) -> np.ndarray:
        """Computes grad h~(u) = rho(u) * u."""
        return self.ratio(u) * u

    def hessian_apply(self, u: np.ndarray, x: np.ndarray) -> np.ndarray:
        """Computes the Hessian of h~ at u applied to x.

        Args:
            u (np.ndarray): Point where the Hessian is evaluated.
            x (np.ndarray): Direction.

        Returns:
            hx (np.ndarray): Hessian-vector product.
        """
        return self.curvature_diag(u) * x

    def increment(self, u: np.ndarray, e: np.ndarray) -> float:
        """Computes h~(u + e) - h~(u). Subclasses with closed forms avoid the cancellation of the plain difference.

        Args:
            u (np.ndarray): Base point.
            e (np.ndarray): Increment.

        Returns:
            difference (float): Change of h~.
        """
        return self.value(u + e) - self.value(u)

    def finite_difference_check(self, u: np.ndarray, epsilon: float = 1e-6) -> tuple:
        """Compares ratio and curvature against central finite differences of value and gradient.

        Args:
            u (np.ndarray): Point where the derivatives are compared.
            epsilon (float, optional): Step of the central differences. Defaults to 1e-6.

        Returns:
            gradient_error, curvature_error (tuple): Relative errors of rho(u) * u and of the Hessian diagonal.
        """
        u = np.asarray(u, dtype=float)
        identity = np.eye(u.size)

        forward, backward = u + epsilon * identity, u - epsilon * identity

        numeric_gradient = np.array([self.value(f) - self.value(b) for f, b in zip(forward, backward)]) / (2 * epsilon)
        numeric_curvature = np.array(
            [self.gradient(f)[i] - self.gradient(b)[i] for i, (f, b) in enumerate(zip(forward, backward))]
        ) / (2 * epsilon)

        gradient_error = np.linalg.norm(numeric_gradient - self.gradient(u)) / max(np.linalg.norm(numeric_gradient), 1.0)
        curvature_error = np.linalg.norm(numeric_curvature - self.curvature_diag(u)) / max(np.linalg.norm(numeric_curvature), 1.0)

        return gradient_error, curvature_error
