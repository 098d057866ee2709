"""Contains the truncated computational domain definition."""

# Python libraries
from dataclasses import dataclass

# bec_ground_py components
from ..errors import BecGroundError, ErrorCode


@dataclass(frozen=True)
class Domain:
    """Axis-aligned box U = [lower_1, upper_1] x ... x [lower_d, upper_d] in dimensionless trap units."""

    lower: tuple
    upper: tuple

    def __post_init__(self):
        object.__setattr__(self, "lower", tuple(float(value) for value in self.lower))
        object.__setattr__(self, "upper", tuple(float(value) for value in self.upper))

        if len(self.lower) != len(self.upper):
            raise BecGroundError(
                ErrorCode.INVALID_GRID, f"Domain bounds disagree on the axis count: {self.lower} vs {self.upper}."
            )

        if self.dims not in (1, 2, 3):
            raise BecGroundError(ErrorCode.INVALID_GRID, f"Domains must have 1, 2 or 3 axes (got {self.dims}).")

        for axis, (low, high) in enumerate(zip(self.lower, self.upper)):
            if not low < high:
                raise BecGroundError(ErrorCode.INVALID_GRID, f"Axis {axis} has lower bound {low} >= upper bound {high}.")

    @classmethod
    def symmetric(cls, half_width: float, dims: int) -> object:
        """Creates the box [-half_width, half_width]^dims.

        Args:
            half_width (float): Half of the edge length.
            dims (int): Number of axes.

        Returns:
            domain (Domain): Created domain.
        """
        return cls(lower=(-half_width,) * dims, upper=(half_width,) * dims)

    @property
    def dims(self) -> int:
        """Number of axes."""
        return len(self.lower)

    @property
    def lengths(self) -> tuple:
        """Edge length per axis."""
        return tuple(high - low for low, high in zip(self.lower, self.upper))
