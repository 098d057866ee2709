"""Contains the preconditioned conjugate gradient method with a nonpositive-curvature guard."""

# Python libraries
from typing import Callable

import numpy as np

# bec_ground_py components
from ..errors import BecGroundError, ErrorCode


def pcg(apply: Callable, b: np.ndarray, precondition: Callable, tol: float = 1e-8, maxit: int = 500) -> tuple:
    """Solves J y = b for a symmetric J expected to be positive definite.

    The iteration stops once |J y - b| <= tol |b|. A search direction p with p^T J p <= 0 proves that J is not positive
    definite and aborts the solve.

    Args:
        apply (Callable): Action x -> J x.
        b (np.ndarray): Right-hand side.
        precondition (Callable): Action of a symmetric positive definite preconditioner.
        tol (float, optional): Relative residual tolerance. Defaults to 1e-8.
        maxit (int, optional): Iteration cap. Defaults to 500.

    Returns:
        y, iterations (tuple): Solution and number of iterations used.
    """
    y = np.zeros_like(b)
    b_norm = np.linalg.norm(b)
    if b_norm == 0:
        return y, 0

    r = b.copy()
    z = precondition(r)
    p = z.copy()
    rz = float(r @ z)

    for iteration in range(1, maxit + 1):
        jp = apply(p)
        curvature = float(p @ jp)
        if curvature <= 0:
            raise BecGroundError(
                ErrorCode.INDEFINITE_JACOBIAN,
                f"PCG met nonpositive curvature {curvature:.3e} at iteration {iteration}.",
            )

        step = rz / curvature
        y += step * p
        r -= step * jp

        if np.linalg.norm(r) <= tol * b_norm:
            return y, iteration

        z = precondition(r)
        rz_next = float(r @ z)
        p = z + (rz_next / rz) * p
        rz = rz_next

    raise BecGroundError(
        ErrorCode.NO_CONVERGENCE,
        f"PCG reached {maxit} iterations with relative residual {np.linalg.norm(r) / b_norm:.3e} > {tol:.1e}.",
    )
