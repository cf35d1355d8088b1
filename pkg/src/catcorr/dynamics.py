"""Independent single-mode dephasing on both modes of the pair.

Populations are untouched while the two X-state coherences decay by
1 - gamma = exp(-rate * t).  Entanglement dies at a finite time whenever
the cross-branch weight p^(n-2) is below one; the measurement-optimized
discord survives past that point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .correlations import DEFAULT_GRID, discord_brute_force
from .errors import DomainError
from .states import SuperpositionSpec, TwoQubitState, normalization, reduced_rho12


@dataclass(frozen=True)
class DephasingChannel:
    """Dephasing for a time t at a fixed decay rate.

    gamma = 1 - exp(-rate t) grows monotonically from 0 to 1.  The
    single-mode Kraus pair diag(1, sqrt(1-gamma)), diag(0, sqrt(gamma))
    resolves the identity; that is checked at construction.
    """

    gamma_rate: float
    t: float

    def __post_init__(self) -> None:
        if self.gamma_rate < 0.0 or math.isnan(self.gamma_rate):
            raise DomainError(f"decay rate must be nonnegative, got {self.gamma_rate}")
        if self.t < 0.0 or math.isnan(self.t):
            raise DomainError(f"time must be nonnegative, got {self.t}")
        e0, e1 = self.kraus_single()
        closure = e0.conj().T @ e0 + e1.conj().T @ e1
        if np.max(np.abs(closure - np.eye(2))) > 1e-14:
            raise DomainError("Kraus pair does not resolve the identity")

    @property
    def gamma(self) -> float:
        return -math.expm1(-self.gamma_rate * self.t)

    @classmethod
    def from_gamma(cls, gamma: float, gamma_rate: float = 1.0) -> "DephasingChannel":
        """Channel reaching the prescribed gamma in [0, 1] at the given rate."""
        if not 0.0 <= gamma <= 1.0:
            raise DomainError(f"gamma must lie in [0, 1], got {gamma}")
        if gamma_rate <= 0.0:
            raise DomainError(f"decay rate must be positive, got {gamma_rate}")
        if gamma == 1.0:
            return cls(gamma_rate, math.inf)
        return cls(gamma_rate, -math.log1p(-gamma) / gamma_rate)

    def kraus_single(self) -> tuple[np.ndarray, np.ndarray]:
        g = self.gamma
        e0 = np.diag([1.0, math.sqrt(1.0 - g)]).astype(complex)
        e1 = np.diag([0.0, math.sqrt(g)]).astype(complex)
        return e0, e1


def apply_dephasing(state: TwoQubitState, channel: DephasingChannel) -> TwoQubitState:
    """Kraus-sum evolution with the dephasing pair acting on each mode.

    Diagonal entries are preserved; the X-state coherences pick up the
    factor 1 - gamma.
    """
    e0, e1 = channel.kraus_single()
    out = np.zeros((4, 4), dtype=complex)
    for first in (e0, e1):
        for second in (e0, e1):
            op = np.kron(first, second)
            out += op @ state.matrix @ op.conj().T
    return TwoQubitState(out)


def concurrence_t(spec: SuperpositionSpec, channel: DephasingChannel) -> float:
    """Closed-form concurrence of the dephased pair.

    Twice the larger of the two X-state branches
    2 N^2 a^2 b^2 [(1-gamma)(1 +/- q sign) - (1 -/+ q sign)], floored at 0.
    """
    ab = (1.0 - spec.p * spec.p) / 4.0  # a^2 b^2
    scale = 2.0 * normalization(spec) ** 2 * ab
    qc = spec.q * spec.branch_sign
    decay = 1.0 - channel.gamma
    branch_corner = scale * (decay * (1.0 + qc) - (1.0 - qc))
    branch_inner = scale * (decay * (1.0 - qc) - (1.0 + qc))
    return 2.0 * max(0.0, branch_corner, branch_inner)


def sudden_death_time(spec: SuperpositionSpec, gamma_rate: float) -> float:
    """Time at which the dephased concurrence hits zero:
    (1/rate) [ln(1 + p^(n-2)) - ln(1 - p^(n-2))].

    Infinite when the cross-branch weight is one (n = 2, or p = 1 with
    even parity); zero when p = 0.
    """
    if gamma_rate <= 0.0:
        raise DomainError(f"decay rate must be positive, got {gamma_rate}")
    q = spec.q
    if q >= 1.0:
        return math.inf
    return (math.log1p(q) - math.log1p(-q)) / gamma_rate


def discord_t(
    spec: SuperpositionSpec,
    channel: DephasingChannel,
    grid: tuple[int, int] = DEFAULT_GRID,
    refine_tol: float = 1e-12,
) -> float:
    """Measurement-optimized discord of the dephased pair.

    Computed by the brute-force projective scan.  Once dephasing raises
    the rank above two this is an upper bound on the unrestricted-POVM
    discord; it is tight in every X-state cross-check performed here.
    """
    evolved = apply_dephasing(reduced_rho12(spec), channel)
    return discord_brute_force(evolved, grid=grid, refine_tol=refine_tol).discord


def default_time_grid(
    spec: SuperpositionSpec, gamma_rate: float, steps: int = 200
) -> np.ndarray:
    """Uniform sweep times: [0, 3 t_death] when the death time is finite
    and positive, otherwise [0, 5/rate]."""
    if steps < 2:
        raise DomainError(f"need at least 2 time steps, got {steps}")
    t_death = sudden_death_time(spec, gamma_rate)
    horizon = 3.0 * t_death if 0.0 < t_death < math.inf else 5.0 / gamma_rate
    return np.linspace(0.0, horizon, steps)
