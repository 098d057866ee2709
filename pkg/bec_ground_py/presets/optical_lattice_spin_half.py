"""Contains the one-dimensional spin-1/2 condensate in a harmonic trap with a cosine lattice."""

# bec_ground_py components
from ..bec import BecSpec, Family
from ..grid import Domain, HarmonicLatticePotential, Scheme

# Interaction ratios beta11 : beta22 : beta12 relative to beta
SPIN_HALF_RATIOS = (1.03, 1.0, 0.97)


def optical_lattice_spin_half_1d(beta: float, alpha: float, n: int = 1024, half_width: float = 16.0) -> BecSpec:
    """Creates the spin-1/2 condensate with V(x) = x^2 / 2 + 24 cos^2(x) on [-16, 16], discretized by finite differences.

    Args:
        beta (float): Interaction scale; (beta11, beta22, beta12) = (1.03, 1, 0.97) beta.
        alpha (float): Share of the first component.
        n (int, optional): Number of subintervals. Defaults to 1024.
        half_width (float, optional): Half of the box length. Defaults to 16.0.

    Returns:
        spec (BecSpec): Physical description.
    """
    return BecSpec(
        family=Family.SPIN_HALF,
        domain=Domain.symmetric(half_width, dims=1),
        n=n,
        scheme=Scheme.FD,
        potential=HarmonicLatticePotential(lattice_amplitude=24.0),
        interactions=tuple(ratio * beta for ratio in SPIN_HALF_RATIOS),
        alpha=alpha,
        label=f"spin_half_1d(beta={beta:g}, alpha={alpha:g})",
    )
