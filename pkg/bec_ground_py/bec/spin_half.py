"""Contains the builders that turn a BecSpec into a CoupledProblem."""

# Python libraries
import logging

import numpy as np

# bec_ground_py components
from ..errors import BecGroundError, ErrorCode
from ..grid import build_operator
from ..model import CoupledProblem
from .bec_spec import BecSpec, Family

logger = logging.getLogger(__name__)


def has_unique_ground_state(beta11: float, beta22: float, beta12: float) -> bool:
    """Checks the sufficient conditions for a unique nonnegative ground state.

    Args:
        beta11 (float): First self-interaction.
        beta22 (float): Second self-interaction.
        beta12 (float): Inter-component interaction.

    Returns:
        unique (bool): True when beta11, beta22 > 0 and either beta11 beta22 >= beta12^2 or beta12 > 0.
    """
    if not (beta11 > 0 and beta22 > 0):
        return False

    return beta11 * beta22 - beta12**2 >= 0 or beta12 > 0


def build_spin_half(spec: BecSpec) -> CoupledProblem:
    """Discretizes a two-component condensate so that the discrete objective equals the truncated energy.

    With cell volume h^d the unknowns are u = sqrt(h^d / alpha) phi1 and v = sqrt(h^d / (1 - alpha)) phi2, which gives
    A1 = alpha A, A2 = (1 - alpha) A, beta11~ = beta11 alpha^2 / h^d, beta22~ = beta22 (1 - alpha)^2 / h^d and
    beta12~ = beta12 alpha (1 - alpha) / h^d. Reduced spin-1 and spin-2 specs go through their reduction first.

    Args:
        spec (BecSpec): Physical description.

    Returns:
        problem (CoupledProblem): Discrete problem with its rescale factors.
    """
    if spec.family == Family.CUSTOM:
        raise BecGroundError(ErrorCode.INVALID_SPEC, "CUSTOM specs carry rescaled coefficients; use build_problem().")

    beta11, beta22, beta12, alpha = spec.two_component_coefficients()
    if not has_unique_ground_state(beta11, beta22, beta12):
        logger.warning("(%g, %g, %g) does not guarantee a unique ground state", beta11, beta22, beta12)

    operator = build_operator(spec.domain, spec.n, spec.potential, spec.scheme)
    volume = operator.grid.cell_volume

    return CoupledProblem(
        a1=operator.scaled(alpha),
        a2=operator.scaled(1 - alpha),
        beta11=beta11 * alpha**2 / volume,
        beta22=beta22 * (1 - alpha) ** 2 / volume,
        beta12=beta12 * alpha * (1 - alpha) / volume,
        grid=operator.grid,
        rescale=(float(np.sqrt(alpha / volume)), float(np.sqrt((1 - alpha) / volume))),
        physical_betas=(beta11, beta22),
        label=spec.label,
    )


def build_problem(spec: BecSpec) -> CoupledProblem:
    """Builds the discrete problem of any family.

    Args:
        spec (BecSpec): Physical description, or a CUSTOM spec whose interactions are used as they are.

    Returns:
        problem (CoupledProblem): Discrete problem.
    """
    if spec.family != Family.CUSTOM:
        return build_spin_half(spec)

    operator = build_operator(spec.domain, spec.n, spec.potential, spec.scheme)
    beta11, beta22, beta12 = spec.interactions

    return CoupledProblem(
        a1=operator, a2=operator, beta11=beta11, beta22=beta22, beta12=beta12, grid=operator.grid, label=spec.label
    )
