"""Contains the discrete two-component objective and its derived quantities.

The objective is

    f(u, v) = beta11/2 sum u^4 + u^T A1 u + beta22/2 sum v^4 + v^T A2 v + beta12 sum u^2 v^2

on the product of unit spheres. Freezing v gives the half energy f_v(u) whose stationarity conditions define the
per-block operator A_v(u) = beta11 diag(u^2) + A1 + beta12 diag(v^2).
"""

# Python libraries
from dataclasses import dataclass, field

import numpy as np

# bec_ground_py components
from ..errors import BecGroundError, ErrorCode
from ..nonlinearities import QuarticNonlinearity
from .block_view import BlockView
from .multiblock_problem import MultiBlockProblem


@dataclass(frozen=True)
class CoupledProblem:
    """Data of the discrete objective: two operators, three interaction coefficients and rescaling metadata.

    The coefficients are the rescaled (discrete) ones. rescale holds the amplitude factors sqrt(alpha / h^d) and
    sqrt((1 - alpha) / h^d) that map (u, v) back to wave functions, and physical_betas the continuum self-interactions
    (beta11, beta22) before rescaling.
    """

    a1: object
    a2: object
    beta11: float
    beta22: float
    beta12: float
    grid: object = None
    rescale: tuple = (1.0, 1.0)
    physical_betas: tuple = None
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.a1.size != self.a2.size:
            raise BecGroundError(ErrorCode.INVALID_SPEC, f"A1 and A2 disagree on the size ({self.a1.size} vs {self.a2.size}).")

        for name in ("beta11", "beta22", "beta12"):
            value = float(getattr(self, name))
            if not np.isfinite(value):
                raise BecGroundError(ErrorCode.INVALID_SPEC, f"{name} must be finite (got {value}).")
            object.__setattr__(self, name, value)

        if self.beta11 < 0 or self.beta22 < 0:
            raise BecGroundError(
                ErrorCode.INVALID_SPEC, f"Self-interactions must be nonnegative (got {self.beta11}, {self.beta22})."
            )

        if self.physical_betas is None:
            object.__setattr__(self, "physical_betas", (self.beta11, self.beta22))

    @property
    def n(self) -> int:
        """Unknown count per component."""
        return self.a1.size

    @property
    def m_matrix(self) -> bool:
        """Whether both operators are irreducible nonsingular M-matrices (positivity-preserving path)."""
        return bool(self.a1.m_matrix and self.a2.m_matrix)

    def swapped(self) -> object:
        """Returns the problem with the roles of (u, A1, beta11) and (v, A2, beta22) exchanged.

        Returns:
            problem (CoupledProblem): Mirrored problem.
        """
        return CoupledProblem(
            a1=self.a2,
            a2=self.a1,
            beta11=self.beta22,
            beta22=self.beta11,
            beta12=self.beta12,
            grid=self.grid,
            rescale=self.rescale[::-1],
            physical_betas=self.physical_betas[::-1],
            label=self.label,
        )

    def as_multiblock(self) -> MultiBlockProblem:
        """Returns the same objective as a two-block problem with quartic nonlinearities.

        Returns:
            problem (MultiBlockProblem): Equivalent multi-block problem.
        """
        return MultiBlockProblem(
            operators=[self.a1, self.a2],
            nonlinearities=[QuarticNonlinearity(self.beta11), QuarticNonlinearity(self.beta22)],
            couplings=np.array([[0.0, self.beta12], [self.beta12, 0.0]]),
            grid=self.grid,
            physical_betas=self.physical_betas,
            label=self.label,
        )

    def u_block(self, v: np.ndarray) -> BlockView:
        """Returns the subproblem in u with v frozen."""
        return BlockView(operator=self.a1, nonlinearity=QuarticNonlinearity(self.beta11), background=self.beta12 * v**2)

    def v_block(self, u: np.ndarray) -> BlockView:
        """Returns the subproblem in v with u frozen."""
        return BlockView(operator=self.a2, nonlinearity=QuarticNonlinearity(self.beta22), background=self.beta12 * u**2)


def energy(p: CoupledProblem, u: np.ndarray, v: np.ndarray) -> float:
    """Evaluates f(u, v).

    Args:
        p (CoupledProblem): Problem data.
        u (np.ndarray): First component (unit norm by caller contract).
        v (np.ndarray): Second component (unit norm by caller contract).

    Returns:
        f (float): Objective value.
    """
    return float(sum(energy_parts(p, u, v).values()))


def energy_parts(p: CoupledProblem, u: np.ndarray, v: np.ndarray) -> dict:
    """Splits f(u, v) into its quadratic, quartic and coupling contributions.

    Args:
        p (CoupledProblem): Problem data.
        u (np.ndarray): First component.
        v (np.ndarray): Second component.

    Returns:
        parts (dict): Contributions keyed by quadratic_u, quadratic_v, quartic_u, quartic_v and coupling.
    """
    return {
        "quadratic_u": float(u @ p.a1.apply(u)),
        "quadratic_v": float(v @ p.a2.apply(v)),
        "quartic_u": 0.5 * p.beta11 * float(np.sum(u**4)),
        "quartic_v": 0.5 * p.beta22 * float(np.sum(v**4)),
        "coupling": p.beta12 * float(np.sum(u**2 * v**2)),
    }


def half_energy(p: CoupledProblem, u: np.ndarray, v_fixed: np.ndarray) -> float:
    """Evaluates f_v(u) = beta11/2 sum u^4 + u^T (A1 + beta12 diag(v^2)) u."""
    return p.u_block(v_fixed).value(u)


def apply_coupled(p: CoupledProblem, u: np.ndarray, v: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Computes A_v(u) x."""
    return p.u_block(v).apply_coupled(u, x)


def residual(p: CoupledProblem, u: np.ndarray, v: np.ndarray, lam: float) -> np.ndarray:
    """Computes r_v(u, lambda) = A_v(u) u - lambda u."""
    return p.u_block(v).residual(u, lam)


def apply_jacobian(p: CoupledProblem, u: np.ndarray, v: np.ndarray, lam: float, x: np.ndarray) -> np.ndarray:
    """Computes J_v(u, lambda) x with J_v(u, lambda) = 3 beta11 diag(u^2) + A1 + beta12 diag(v^2) - lambda I."""
    return p.u_block(v).apply_jacobian(u, lam, x)


def rayleigh(p: CoupledProblem, u: np.ndarray, v: np.ndarray) -> float:
    """Computes u^T A_v(u) u."""
    return p.u_block(v).rayleigh(u)


def min_ratio(p: CoupledProblem, u: np.ndarray, v: np.ndarray) -> float:
    """Computes the Noda shift min_i (A_v(u) u)_i / u_i, raising NONPOSITIVE_ITERATE unless u > 0."""
    return p.u_block(v).min_ratio(u)


def grad_norm(p: CoupledProblem, u: np.ndarray, v: np.ndarray) -> float:
    """Computes the combined projected-residual norm of both blocks.

    Args:
        p (CoupledProblem): Problem data.
        u (np.ndarray): First component.
        v (np.ndarray): Second component.

    Returns:
        norm (float): sqrt(|A_v(u) u - (u^T A_v(u) u) u|^2 + |A_u(v) v - (v^T A_u(v) v) v|^2).
    """
    residual_u = p.u_block(v).projected_residual(u)
    residual_v = p.v_block(u).projected_residual(v)
    return float(np.sqrt(residual_u @ residual_u + residual_v @ residual_v))
