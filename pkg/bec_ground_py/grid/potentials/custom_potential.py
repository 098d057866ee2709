""" Contains a user-defined potential wrapper."""

# Python libraries
from importlib import import_module
from typing import Callable

import numpy as np


class CustomPotential:
    """Wraps a pointwise evaluator V(x_1, ..., x_d) supplied by the user."""

    kind = "CUSTOM"

    def __init__(self, evaluator: Callable, name: str = None) -> object:
        """Creates a CustomPotential object.

        Args:
            evaluator (Callable): Function receiving one coordinate array per axis and returning the potential values.
            name (str, optional): Label used in logs and result tables. Defaults to the evaluator's name.

        Returns:
            object: Created CustomPotential object.
        """
        if not callable(evaluator):
            raise TypeError(f"Custom potentials need a callable evaluator (got {type(evaluator).__name__}).")

        self.evaluator = evaluator
        self.name = name if name is not None else getattr(evaluator, "__name__", "custom")

    def __repr__(self) -> str:
        return f"CustomPotential(name='{self.name}')"

    @classmethod
    def from_reference(cls, reference: str) -> object:
        """Creates a CustomPotential from a "package.module:function" reference.

        Args:
            reference (str): Import path of the evaluator.

        Returns:
            potential (CustomPotential): Created potential.
        """
        module_name, _, attribute = reference.partition(":")
        if not module_name or not attribute:
            raise ValueError(f"Custom potential references look like 'package.module:function' (got '{reference}').")

        evaluator = getattr(import_module(module_name), attribute)
        return cls(evaluator=evaluator, name=reference)

    def evaluate(self, coordinates: tuple) -> np.ndarray:
        """Evaluates the potential pointwise, broadcasting scalar results to the grid shape.

        Args:
            coordinates (tuple): One coordinate array per axis.

        Returns:
            values (np.ndarray): Potential values, shaped like the coordinate arrays.
        """
        values = np.asarray(self.evaluator(*coordinates), dtype=float)
        return np.broadcast_to(values, coordinates[0].shape).copy()


def constant_potential(value: float = 0.0) -> CustomPotential:
    """Creates the constant potential V(x) = value.

    Args:
        value (float, optional): Constant level. Defaults to 0.0.

    Returns:
        potential (CustomPotential): Created potential.
    """
    return CustomPotential(evaluator=lambda *coordinates: np.full(coordinates[0].shape, float(value)), name=f"constant({value})")
