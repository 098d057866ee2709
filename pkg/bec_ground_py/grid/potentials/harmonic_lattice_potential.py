""" Contains a trapping potential definition."""

# Python libraries
import numpy as np

SUPPORTED_LATTICE_PROFILES = ["cos", "sin"]


class HarmonicLatticePotential:
    """Harmonic trap plus an optical lattice, V(x) = 1/2 sum_i w_i x_i^2 + a sum_i trig^2(k x_i).

    Examples:
        'HarmonicLatticePotential(lattice_amplitude=24)' gives 1/2 x^2 + 24 cos^2(x).
        'HarmonicLatticePotential(lattice_amplitude=10, lattice_wavenumber=np.pi / 2, lattice_profile="sin")' gives
        1/2 |x|^2 + 10 sum_i sin^2(pi x_i / 2).
    """

    kind = "HARMONIC_LATTICE"

    def __init__(
        self,
        harmonic_weights=1.0,
        lattice_amplitude: float = 0.0,
        lattice_wavenumber: float = 1.0,
        lattice_profile: str = "cos",
    ) -> object:
        """Creates a HarmonicLatticePotential object.

        Args:
            harmonic_weights (float or tuple, optional): Trap weight per axis (one value is shared by all axes). Defaults to 1.0.
            lattice_amplitude (float, optional): Lattice depth a. Defaults to 0.0.
            lattice_wavenumber (float, optional): Lattice wavenumber k. Defaults to 1.0.
            lattice_profile (str, optional): Either "cos" or "sin". Defaults to "cos".

        Returns:
            object: Created HarmonicLatticePotential object.
        """
        weights = np.atleast_1d(np.asarray(harmonic_weights, dtype=float))
        if np.any(weights < 0) or not np.all(np.isfinite(weights)):
            raise ValueError(f"Harmonic weights must be finite and nonnegative (got {harmonic_weights}).")

        if lattice_profile not in SUPPORTED_LATTICE_PROFILES:
            raise ValueError(
                f"Unsupported lattice profile {lattice_profile}. Supported profiles are {SUPPORTED_LATTICE_PROFILES}."
            )

        self.harmonic_weights = tuple(weights)
        self.lattice_amplitude = float(lattice_amplitude)
        self.lattice_wavenumber = float(lattice_wavenumber)
        self.lattice_profile = lattice_profile

    def __repr__(self) -> str:
        return (
            f"HarmonicLatticePotential(harmonic_weights={self.harmonic_weights}, lattice_amplitude={self.lattice_amplitude}, "
            f"lattice_wavenumber={self.lattice_wavenumber}, lattice_profile='{self.lattice_profile}')"
        )

    def evaluate(self, coordinates: tuple) -> np.ndarray:
        """Evaluates the potential pointwise.

        Args:
            coordinates (tuple): One coordinate array per axis, all of the same shape.

        Returns:
            values (np.ndarray): Potential values, shaped like the coordinate arrays.
        """
        weights = self.harmonic_weights
        if len(weights) == 1:
            weights = weights * len(coordinates)
        elif len(weights) != len(coordinates):
            raise ValueError(f"Got {len(weights)} harmonic weights for {len(coordinates)} axes.")

        trig = np.cos if self.lattice_profile == "cos" else np.sin

        values = np.zeros_like(coordinates[0], dtype=float)
        for weight, x in zip(weights, coordinates):
            values += 0.5 * weight * x**2
            if self.lattice_amplitude != 0.0:
                values += self.lattice_amplitude * trig(self.lattice_wavenumber * x) ** 2

        return values
