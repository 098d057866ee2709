"""Contains the Fourier pseudo-spectral (periodic) operator builder."""

# Python libraries
import numpy as np
import scipy.fft as fft

# bec_ground_py components
from ..grid import Scheme, build_grid
from ..potentials import sample_potential
from .symmetric_operator import Structure, SymmetricOperator


def squared_wavenumbers(shape: tuple, spacings: tuple) -> np.ndarray:
    """Computes |k|^2 on the half spectrum used by real FFTs.

    The wavenumbers along an axis with m nodes and spacing h are 2 pi fftfreq(m, d=h), i.e. the integer frequencies in
    [-m/2, m/2) scaled by 2 pi / (m h). The last axis keeps only the nonnegative frequencies (rfftfreq).

    Args:
        shape (tuple): Nodes per axis.
        spacings (tuple): Mesh width per axis.

    Returns:
        k_squared (np.ndarray): Array of shape rfftn(x).shape.
    """
    wavenumbers = [2 * np.pi * fft.fftfreq(points, d=spacing) for points, spacing in zip(shape[:-1], spacings[:-1])]
    wavenumbers.append(2 * np.pi * fft.rfftfreq(shape[-1], d=spacings[-1]))

    k_squared = np.zeros([len(k) for k in wavenumbers])
    for axis, k in enumerate(wavenumbers):
        expand = [np.newaxis] * len(wavenumbers)
        expand[axis] = slice(None)
        k_squared = k_squared + k[tuple(expand)] ** 2

    return k_squared


def build_spectral_operator(domain: object, n, potential: object) -> SymmetricOperator:
    """Builds A = -1/2 Laplacian + diag(V) with Fourier collocation on a periodic box.

    Args:
        domain (Domain): Truncated domain (one period per axis).
        n (int or tuple): Points per axis, each a power of two.
        potential (object): Potential specification.

    Returns:
        operator (SymmetricOperator): Matrix-free operator whose kinetic part has symbol 1/2 |k|^2.
    """
    grid = build_grid(domain=domain, counts=n, scheme=Scheme.SPECTRAL)
    potential_values = sample_potential(potential=potential, grid=grid)

    return SymmetricOperator(
        grid=grid,
        potential_values=potential_values,
        structure=Structure.FOURIER_DIAGONAL_PLUS_DIAGONAL,
        kinetic_symbol=0.5 * squared_wavenumbers(grid.shape, grid.spacings),
    )
