"""Contains the maps from solver output back to physical wave functions."""

# Python libraries
import numpy as np

# bec_ground_py components
from .bec_spec import BecSpec, Family


def recover_wavefunctions(p: object, state: object) -> tuple:
    """Undoes the grid rescaling: phi1 = sqrt(alpha / h^d) u and phi2 = sqrt((1 - alpha) / h^d) v.

    Args:
        p (CoupledProblem): Problem the state belongs to.
        state (IterateState): Solver iterate.

    Returns:
        phi1, phi2 (tuple): Wave functions shaped like the grid.
    """
    shape = p.grid.shape if p.grid is not None else (p.n,)
    return (p.rescale[0] * state.u).reshape(shape), (p.rescale[1] * state.v).reshape(shape)


def spinor_components(spec: BecSpec, phi1: np.ndarray, phi2: np.ndarray) -> list:
    """Expands the two populated components into the full spinor, ordered from the largest magnetic quantum number down.

    Args:
        spec (BecSpec): Description that fixes the spinor size.
        phi1 (np.ndarray): First populated component.
        phi2 (np.ndarray): Second populated component.

    Returns:
        components (list): (phi1, phi2) for spin-1/2, (phi_+1, phi_0, phi_-1) for spin-1, five components for spin-2.
    """
    empty = np.zeros_like(phi1)

    if spec.family == Family.SPIN1_REDUCED:
        return [phi1, empty, phi2]

    if spec.family == Family.SPIN2_REDUCED:
        return [phi1, empty, empty.copy(), empty.copy(), phi2]

    return [phi1, phi2]


def component_masses(phi1: np.ndarray, phi2: np.ndarray, grid: object) -> tuple:
    """Integrates |phi1|^2 and |phi2|^2 over the grid."""
    return grid.cell_volume * float(np.sum(phi1**2)), grid.cell_volume * float(np.sum(phi2**2))


def total_mass(phi1: np.ndarray, phi2: np.ndarray, grid: object) -> float:
    """Computes h^d sum(phi1^2 + phi2^2), which is 1 for every recovered state.

    Args:
        phi1 (np.ndarray): First component.
        phi2 (np.ndarray): Second component.
        grid (Grid): Grid the components live on.

    Returns:
        mass (float): Total mass.
    """
    return sum(component_masses(phi1, phi2, grid))


def magnetization(spec: BecSpec, phi1: np.ndarray, phi2: np.ndarray, grid: object) -> float:
    """Computes h^d sum_l l |phi_l|^2 over the spinor.

    Spin-1/2 specs report the population imbalance N1 - N2; for the reduced spin-1 and spin-2 families the result equals
    the magnetization the spec was built with.

    Args:
        spec (BecSpec): Description that fixes the magnetic quantum numbers.
        phi1 (np.ndarray): First populated component.
        phi2 (np.ndarray): Second populated component.
        grid (Grid): Grid the components live on.

    Returns:
        M (float): Magnetization.
    """
    first, second = component_masses(phi1, phi2, grid)
    quantum_number = 2.0 if spec.family == Family.SPIN2_REDUCED else 1.0

    return quantum_number * (first - second)
