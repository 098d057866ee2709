"""Contains the tensor grid definition used by every discretization scheme."""

# Python libraries
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import numpy as np

# bec_ground_py components
from ..errors import BecGroundError, ErrorCode
from .domain import Domain


class Scheme(str, Enum):
    """Discretization schemes."""

    FD = "FD"
    SPECTRAL = "SPECTRAL"


@dataclass(frozen=True)
class Grid:
    """Tensor grid on a Domain.

    The FD scheme keeps the n-1 interior nodes per axis (homogeneous Dirichlet, both endpoints excluded). The SPECTRAL
    scheme keeps n nodes per axis (periodic, right endpoint excluded). Nodes are always flattened in row-major order, so
    the last axis varies fastest.
    """

    domain: Domain
    counts: tuple
    scheme: Scheme

    def __post_init__(self):
        counts = self.counts
        if np.isscalar(counts):
            counts = (counts,) * self.domain.dims
        counts = tuple(int(count) for count in counts)
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "scheme", Scheme(self.scheme))

        if len(counts) != self.domain.dims:
            raise BecGroundError(ErrorCode.INVALID_GRID, f"Got {len(counts)} point counts for a {self.domain.dims}D domain.")

        if self.scheme == Scheme.FD and min(counts) < 3:
            raise BecGroundError(ErrorCode.INVALID_GRID, f"Finite differences need n >= 3 per axis (got {counts}).")

        if self.scheme == Scheme.SPECTRAL and any(count < 2 or count & (count - 1) for count in counts):
            raise BecGroundError(ErrorCode.INVALID_GRID, f"Spectral grids need a power of two per axis (got {counts}).")

    @property
    def dims(self) -> int:
        """Number of axes."""
        return self.domain.dims

    @property
    def spacings(self) -> tuple:
        """Mesh width h = (upper - lower) / n per axis."""
        return tuple(length / count for length, count in zip(self.domain.lengths, self.counts))

    @property
    def shape(self) -> tuple:
        """Number of stored nodes per axis."""
        offset = 1 if self.scheme == Scheme.FD else 0
        return tuple(count - offset for count in self.counts)

    @property
    def size(self) -> int:
        """Total number of unknowns."""
        return int(np.prod(self.shape))

    @property
    def cell_volume(self) -> float:
        """Quadrature weight h^d."""
        return float(np.prod(self.spacings))

    @cached_property
    def axes(self) -> tuple:
        """Coordinates of the stored nodes along each axis."""
        first = 1 if self.scheme == Scheme.FD else 0
        return tuple(
            low + spacing * np.arange(first, first + points)
            for low, spacing, points in zip(self.domain.lower, self.spacings, self.shape)
        )

    def mesh(self) -> tuple:
        """Returns one coordinate array per axis, each shaped like the grid.

        Returns:
            coordinates (tuple): Arrays of node coordinates in "ij" indexing.
        """
        return tuple(np.meshgrid(*self.axes, indexing="ij"))

    def nodes(self) -> np.ndarray:
        """Returns the node coordinates in row-major order.

        Returns:
            nodes (np.ndarray): Array of shape (size, dims).
        """
        return np.stack([coordinate.ravel() for coordinate in self.mesh()], axis=1)


def build_grid(domain: Domain, counts, scheme) -> Grid:
    """Creates a grid, accepting either one count per axis or a single count shared by every axis.

    Args:
        domain (Domain): Truncated domain.
        counts (int or tuple): Points per axis (n).
        scheme (Scheme or str): FD or SPECTRAL.

    Returns:
        grid (Grid): Created grid.
    """
    return Grid(domain=domain, counts=counts, scheme=Scheme(scheme))
