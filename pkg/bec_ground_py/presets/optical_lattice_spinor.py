"""Contains the anti-ferromagnetic spin-1 and spin-2 condensates in a harmonic trap with a sine lattice."""

# Python libraries
import numpy as np

# bec_ground_py components
from ..bec import BecSpec, Family
from ..grid import Domain, HarmonicLatticePotential, Scheme


def sine_lattice(amplitude: float) -> HarmonicLatticePotential:
    """Creates V(x) = |x|^2 / 2 + amplitude sum_i sin^2(pi x_i / 2).

    Args:
        amplitude (float): Lattice depth.

    Returns:
        potential (HarmonicLatticePotential): Potential.
    """
    return HarmonicLatticePotential(lattice_amplitude=amplitude, lattice_wavenumber=np.pi / 2, lattice_profile="sin")


def _spinor_spec(
    family: Family, interactions: tuple, magnetization: float, dims: int, n: int, half_width: float, amplitude: float
) -> BecSpec:
    return BecSpec(
        family=family,
        domain=Domain.symmetric(half_width, dims=dims),
        n=n,
        scheme=Scheme.SPECTRAL,
        potential=sine_lattice(amplitude),
        interactions=interactions,
        magnetization=magnetization,
        label=f"{family.value.lower()}_{dims}d({', '.join(f'{value:g}' for value in interactions)}, M={magnetization:g})",
    )


def optical_lattice_spin1_2d(beta0: float, beta1: float, magnetization: float, n: int = 512, half_width: float = 4.0) -> BecSpec:
    """Creates the 2D spin-1 condensate with lattice depth 10, discretized by the Fourier pseudo-spectral scheme.

    Args:
        beta0 (float): Density interaction.
        beta1 (float): Spin-exchange interaction (positive).
        magnetization (float): Magnetization M.
        n (int, optional): Points per axis. Defaults to 512.
        half_width (float, optional): Half of the box edge. Defaults to 4.0.

    Returns:
        spec (BecSpec): Physical description.
    """
    return _spinor_spec(Family.SPIN1_REDUCED, (beta0, beta1), magnetization, 2, n, half_width, amplitude=10.0)


def optical_lattice_spin1_3d(beta0: float, beta1: float, magnetization: float, n: int = 128, half_width: float = 2.0) -> BecSpec:
    """Creates the 3D spin-1 condensate on [-2, 2]^3 with lattice depth 100."""
    return _spinor_spec(Family.SPIN1_REDUCED, (beta0, beta1), magnetization, 3, n, half_width, amplitude=100.0)


def optical_lattice_spin2_2d(
    beta0: float, beta1: float, beta2: float, magnetization: float, n: int = 512, half_width: float = 8.0
) -> BecSpec:
    """Creates the 2D spin-2 condensate with lattice depth 10, discretized by the Fourier pseudo-spectral scheme.

    Args:
        beta0 (float): Density interaction.
        beta1 (float): Spin-exchange interaction.
        beta2 (float): Singlet-pair interaction (negative).
        magnetization (float): Magnetization M.
        n (int, optional): Points per axis. Defaults to 512.
        half_width (float, optional): Half of the box edge. Defaults to 8.0.

    Returns:
        spec (BecSpec): Physical description.
    """
    return _spinor_spec(Family.SPIN2_REDUCED, (beta0, beta1, beta2), magnetization, 2, n, half_width, amplitude=10.0)


def optical_lattice_spin2_3d(
    beta0: float, beta1: float, beta2: float, magnetization: float, n: int = 128, half_width: float = 2.0
) -> BecSpec:
    """Creates the 3D spin-2 condensate on [-2, 2]^3 with lattice depth 100."""
    return _spinor_spec(Family.SPIN2_REDUCED, (beta0, beta1, beta2), magnetization, 3, n, half_width, amplitude=100.0)
