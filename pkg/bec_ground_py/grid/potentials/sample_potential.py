"""Contains the function that samples a potential on grid nodes."""

# Python libraries
import numpy as np

# bec_ground_py components
from ...errors import BecGroundError, ErrorCode


def sample_potential(potential: object, grid: object) -> np.ndarray:
    """Samples V at the grid nodes.

    Args:
        potential (object): Potential specification (HarmonicLatticePotential or CustomPotential).
        grid (Grid): Grid whose nodes are sampled.

    Returns:
        values (np.ndarray): Potential values in row-major node order.
    """
    values = np.asarray(potential.evaluate(grid.mesh()), dtype=float).ravel()

    if values.size != grid.size:
        raise BecGroundError(ErrorCode.NONFINITE_POTENTIAL, f"{potential} returned {values.size} values for {grid.size} nodes.")

    bad_nodes = np.flatnonzero(~np.isfinite(values))
    if bad_nodes.size > 0:
        first = tuple(grid.nodes()[bad_nodes[0]])
        raise BecGroundError(
            ErrorCode.NONFINITE_POTENTIAL,
            f"{potential} is not finite at {bad_nodes.size} node(s), first at x = {first}.",
        )

    return values
