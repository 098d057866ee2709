"""Contains a short Lanczos estimate of the smallest eigenvalue of a symmetric operator."""

# Python libraries
from typing import Callable

import numpy as np
from scipy.linalg import eigh_tridiagonal


def estimate_min_eigenvalue(apply: Callable, start: np.ndarray, steps: int = 10) -> float:
    """Runs a few Lanczos steps from start and returns the smallest Ritz value.

    The Ritz value is an upper bound of the smallest eigenvalue; it is sharp when start is close to the corresponding
    eigenvector, which is the case for iterates of a ground-state solver.

    Args:
        apply (Callable): Action x -> A x of a symmetric operator.
        start (np.ndarray): Nonzero starting vector.
        steps (int, optional): Maximum Krylov dimension. Defaults to 10.

    Returns:
        estimate (float): Smallest Ritz value.
    """
    basis = [start / np.linalg.norm(start)]
    alphas, betas = [], []

    for step in range(steps):
        w = apply(basis[-1])
        alphas.append(float(basis[-1] @ w))

        # Full reorthogonalization
        for vector in basis:
            w -= float(vector @ w) * vector

        beta = float(np.linalg.norm(w))
        if step == steps - 1 or beta <= 1e-12 * max(abs(alphas[-1]), 1.0):
            break

        betas.append(beta)
        basis.append(w / beta)

    if len(alphas) == 1:
        return alphas[0]

    ritz_values = eigh_tridiagonal(np.array(alphas), np.array(betas), eigvals_only=True, select="i", select_range=(0, 0))
    return float(ritz_values[0])
