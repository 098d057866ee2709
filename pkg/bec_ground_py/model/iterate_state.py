"""Contains the snapshot of a solver iterate."""

# Python libraries
from dataclasses import dataclass

import numpy as np

NORMALIZATION_TOLERANCE = 1e-12


@dataclass(frozen=True)
class IterateState:
    """Unit-norm blocks with their shifts, energy and gradient norm.

    Two-component runs store (u, v) and (lambda, mu); multi-block runs store m blocks and m shifts.
    """

    blocks: tuple
    shifts: tuple
    energy: float
    grad_norm: float

    def __post_init__(self):
        for index, block in enumerate(self.blocks):
            deviation = abs(float(np.linalg.norm(block)) - 1.0)
            if deviation > NORMALIZATION_TOLERANCE:
                raise ValueError(f"Block {index} of an iterate state is not normalized (|norm - 1| = {deviation:.2e}).")

    @property
    def u(self) -> np.ndarray:
        """First component."""
        return self.blocks[0]

    @property
    def v(self) -> np.ndarray:
        """Second component."""
        return self.blocks[1]

    @property
    def lam(self) -> float:
        """Shift of the first component."""
        return self.shifts[0]

    @property
    def mu(self) -> float:
        """Shift of the second component."""
        return self.shifts[1]

    def _to_dict(self) -> dict:
        """Method that overrides the way the object is formatted to JSON.

        Returns:
            dict: JSON-friendly representation of the object.
        """
        return {
            "energy": self.energy,
            "grad_norm": self.grad_norm,
            "shifts": [float(shift) for shift in self.shifts],
            "blocks": [block.tolist() for block in self.blocks],
        }
