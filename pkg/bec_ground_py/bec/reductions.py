"""Contains the reductions of anti-ferromagnetic spin-1 and spin-2 condensates to two-component problems."""

# bec_ground_py components
from ..errors import BecGroundError, ErrorCode


def reduce_spin1(beta0: float, beta1: float, M: float) -> tuple:
    """Maps spin-1 interactions and magnetization to (beta11, beta22, beta12, alpha).

    With beta1 > 0 the ground state has an empty middle component and the remaining pair behaves as a two-component
    condensate with beta11 = beta22 = beta0 + beta1, beta12 = beta0 - beta1 and alpha = (1 + M) / 2.

    Args:
        beta0 (float): Density interaction.
        beta1 (float): Spin-exchange interaction (must be positive).
        M (float): Magnetization in (-1, 1).

    Returns:
        beta11, beta22, beta12, alpha (tuple): Two-component coefficients.
    """
    if not beta1 > 0:
        raise BecGroundError(
            ErrorCode.INVALID_SPEC, f"Spin-1 reduction needs the anti-ferromagnetic regime beta1 > 0 (got {beta1})."
        )
    if not -1 < M < 1:
        raise BecGroundError(ErrorCode.INVALID_SPEC, f"Spin-1 magnetization must lie in (-1, 1) (got {M}).")
    if not beta0 > beta1:
        raise BecGroundError(
            ErrorCode.INVALID_SPEC, f"Spin-1 reduction needs beta12 = beta0 - beta1 > 0 (got {beta0} - {beta1})."
        )

    return beta0 + beta1, beta0 + beta1, beta0 - beta1, (1 + M) / 2


def reduce_spin2(beta0: float, beta1: float, beta2: float, M: float) -> tuple:
    """Maps spin-2 interactions and magnetization to (beta11, beta22, beta12, alpha).

    For beta2 < 0 and beta1 > beta2 / 20 only the m = +2 and m = -2 components are populated, giving
    beta11 = beta22 = beta0 + 4 beta1, beta12 = beta0 - 4 beta1 + 2 beta2 / 5 and alpha = (2 + M) / 4.

    Args:
        beta0 (float): Density interaction.
        beta1 (float): Spin-exchange interaction.
        beta2 (float): Singlet-pair interaction (must be negative).
        M (float): Magnetization in (-2, 2).

    Returns:
        beta11, beta22, beta12, alpha (tuple): Two-component coefficients.
    """
    if not beta2 < 0:
        raise BecGroundError(ErrorCode.INVALID_SPEC, f"Spin-2 reduction needs beta2 < 0 (got {beta2}).")
    if not beta1 > beta2 / 20:
        raise BecGroundError(ErrorCode.INVALID_SPEC, f"Spin-2 reduction needs beta1 > beta2 / 20 (got {beta1} and {beta2}).")
    if not -2 < M < 2:
        raise BecGroundError(ErrorCode.INVALID_SPEC, f"Spin-2 magnetization must lie in (-2, 2) (got {M}).")

    beta12 = beta0 - 4 * beta1 + 0.4 * beta2
    if not beta12 > 0:
        raise BecGroundError(
            ErrorCode.INVALID_SPEC, f"Spin-2 reduction needs beta12 = beta0 - 4 beta1 + 2 beta2 / 5 > 0 (got {beta12})."
        )

    return beta0 + 4 * beta1, beta0 + 4 * beta1, beta12, (2 + M) / 4
