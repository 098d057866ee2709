"""Contains the scheme dispatcher for operator builders."""

# bec_ground_py components
from ..grid import Scheme
from .finite_difference import build_fd_operator
from .spectral import build_spectral_operator
from .symmetric_operator import SymmetricOperator


def build_operator(domain: object, n, potential: object, scheme) -> SymmetricOperator:
    """Dispatches to the finite-difference or spectral builder.

    Args:
        domain (Domain): Truncated domain.
        n (int or tuple): Points per axis.
        potential (object): Potential specification.
        scheme (Scheme or str): FD or SPECTRAL.

    Returns:
        operator (SymmetricOperator): Built operator.
    """
    if Scheme(scheme) == Scheme.FD:
        return build_fd_operator(domain=domain, n=n, potential=potential)

    return build_spectral_operator(domain=domain, n=n, potential=potential)
