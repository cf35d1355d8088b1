"""Entropic and entanglement measures for the two-qubit pictures.

Every closed form here (mutual information, the Koashi-Winter minimum of
the measurement-conditioned entropy, quantum discord) is paired with an
independent brute-force route that scans projective measurement
directions on a theta-phi grid and refines the best one by coordinate
descent; agreement between the two routes is the correctness standard of
the package.  All entropies are in bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .states import (
    PSD_TOL,
    PAULI,
    PureBipartition,
    SuperpositionSpec,
    TwoQubitState,
    bloch_matrix,
    marginals,
)

DEFAULT_GRID = (181, 361)
LINE_SEARCH_STEP_TOL = 1e-10
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class MeasurementBasis:
    """Projective measurement direction on the first qubit.

    theta in [0, pi], phi in [0, 2 pi); the two projectors point along
    plus/minus the unit vector (sin t cos f, sin t sin f, cos t).
    """

    theta: float
    phi: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.theta <= math.pi + 1e-12:
            raise DomainError(f"theta must lie in [0, pi], got {self.theta}")
        if not 0.0 <= self.phi <= 2.0 * math.pi + 1e-12:
            raise DomainError(f"phi must lie in [0, 2 pi), got {self.phi}")

    def direction(self) -> tuple[float, float, float]:
        st = math.sin(self.theta)
        return st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)


@dataclass(frozen=True)
class CorrelationReport:
    """Pairwise correlation measures of one state, all entropies in bits."""

    mutual_info: float
    classical_corr: float
    discord: float
    concurrence: float
    eof: float
    s_cond_min: float
    argmin: MeasurementBasis

    def __post_init__(self) -> None:
        if abs(self.discord - (self.mutual_info - self.classical_corr)) > 1e-9:
            raise DomainError("discord must equal mutual information minus classical part")
        for name in ("mutual_info", "classical_corr", "discord", "eof", "s_cond_min"):
            if getattr(self, name) < -1e-12:
                raise DomainError(f"{name} must be nonnegative, got {getattr(self, name)}")
        if not -1e-12 <= self.concurrence <= 1.0 + 1e-12:
            raise DomainError(f"concurrence must lie in [0, 1], got {self.concurrence}")


def binary_entropy(x: float) -> float:
    """H(x) = -x log2 x - (1-x) log2(1-x), with H(0) = H(1) = 0.

    Arguments are accepted within 1e-12 of [0, 1] and clamped.
    """
    if not -1e-12 <= x <= 1.0 + 1e-12:
        raise DomainError(f"binary entropy argument must lie in [0, 1], got {x}")
    x = min(max(float(x), 0.0), 1.0)
    if x == 0.0 or x == 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def _h2(x):
    # vectorized binary entropy, inputs assumed near [0, 1]
    x = np.clip(np.asarray(x, dtype=float), 0.0, 1.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        raw = -x * np.log2(x) - (1.0 - x) * np.log2(1.0 - x)
    return np.where((x <= 0.0) | (x >= 1.0), 0.0, raw)


def von_neumann_entropy(state) -> float:
    """Von Neumann entropy in bits.

    Accepts a TwoQubitState (X-shaped ones use the analytic block
    eigenvalues) or a square Hermitian PSD ndarray of any dimension.
    """
    if isinstance(state, TwoQubitState):
        vals = state.eigenvalues()
    else:
        m = np.asarray(state, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DomainError(f"density matrix must be square, got shape {m.shape}")
        if np.max(np.abs(m - m.conj().T)) > 1e-10:
            raise DomainError("density matrix must be Hermitian")
        vals = np.linalg.eigvalsh(m)
    vals = np.asarray(vals, dtype=float)
    if vals.min() < -PSD_TOL:
        raise DomainError("density matrix has a negative eigenvalue beyond tolerance")
    vals = np.clip(vals, 0.0, 1.0)
    pos = vals[vals > 0.0]
    return float(-(pos * np.log2(pos)).sum())


def concurrence_pure(bp: PureBipartition) -> float:
    """Concurrence 2 |c00 c11 - c01 c10| of the pure block splitting."""
    return 2.0 * abs(bp.c00 * bp.c11 - bp.c01 * bp.c10)


def discord_pure(bp: PureBipartition) -> CorrelationReport:
    """Correlation report of the pure block splitting.

    Measuring one side of a pure state leaves the other side pure, so the
    conditional entropy vanishes for every direction and discord,
    classical correlation and entanglement of formation all equal the
    marginal entropy H((1 + sqrt(1 - C^2))/2).
    """
    conc = concurrence_pure(bp)
    ent = binary_entropy(0.5 + 0.5 * math.sqrt(max(0.0, 1.0 - conc * conc)))
    return CorrelationReport(
        mutual_info=2.0 * ent,
        classical_corr=ent,
        discord=ent,
        concurrence=conc,
        eof=ent,
        s_cond_min=0.0,
        argmin=MeasurementBasis(math.pi / 2.0, 0.0),
    )


def concurrence_x(state: TwoQubitState) -> float:
    """Wootters concurrence of a two-qubit state.

    X-shaped matrices use the two-branch shortcut
    2 max(0, |rho_14| - sqrt(rho_22 rho_33), |rho_23| - sqrt(rho_11 rho_44));
    everything else goes through the spin-flip spectrum.
    """
    m = state.matrix
    if state.is_x:
        corner = abs(m[0, 3]) - math.sqrt(max(0.0, m[1, 1].real * m[2, 2].real))
        inner = abs(m[1, 2]) - math.sqrt(max(0.0, m[0, 0].real * m[3, 3].real))
        return 2.0 * max(0.0, corner, inner)
    flip = np.kron(PAULI[2], PAULI[2])
    vals = np.linalg.eigvals(m @ flip @ m.conj() @ flip)
    roots = np.sort(np.sqrt(np.clip(vals.real, 0.0, None)))[::-1]
    return float(max(0.0, roots[0] - roots[1] - roots[2] - roots[3]))


def _eof_from_concurrence(conc: float) -> float:
    return binary_entropy(0.5 + 0.5 * math.sqrt(max(0.0, 1.0 - conc * conc)))


def _marginal_eigenvalue(spec: SuperpositionSpec) -> float:
    p, n, c = spec.p, spec.n, spec.branch_sign
    return 0.5 * (1.0 + p) * (1.0 + p ** (n - 1) * c) / (1.0 + p**n * c)


def _joint_eigenvalue(spec: SuperpositionSpec) -> float:
    p, n, c = spec.p, spec.n, spec.branch_sign
    return 0.5 * (1.0 + p * p) * (1.0 + p ** (n - 2) * c) / (1.0 + p**n * c)


def mutual_information(spec: SuperpositionSpec) -> float:
    """Closed-form mutual information of the two-mode reduction:
    2 H(marginal eigenvalue) - H(joint eigenvalue)."""
    return 2.0 * binary_entropy(_marginal_eigenvalue(spec)) - binary_entropy(
        _joint_eigenvalue(spec)
    )


def conditional_entropy(state: TwoQubitState, basis: MeasurementBasis) -> float:
    """Average entropy of the second qubit after measuring the first
    along `basis`, weighted by the outcome probabilities."""
    table = bloch_matrix(state).R
    d1, d2, d3 = basis.direction()
    return float(
        _cond_entropy_field(table, np.float64(d1), np.float64(d2), np.float64(d3))
    )


def _cond_entropy_field(table, d1, d2, d3):
    """Measurement-conditioned entropy, vectorized over direction arrays.

    For each outcome the conditional qubit has Bloch vector
    (R[0,b] + sum_i R[i,b] s_i) / (1 + sum_i R[i,0] s_i) with s the signed
    direction, so its entropy is H((1 + |r|)/2); zero-probability
    outcomes contribute nothing.
    """
    total = 0.0
    for sign in (1.0, -1.0):
        u = sign * (table[1, 0] * d1 + table[2, 0] * d2 + table[3, 0] * d3)
        weight = 0.5 * (1.0 + u)
        v1 = table[0, 1] + sign * (table[1, 1] * d1 + table[2, 1] * d2 + table[3, 1] * d3)
        v2 = table[0, 2] + sign * (table[1, 2] * d1 + table[2, 2] * d2 + table[3, 2] * d3)
        v3 = table[0, 3] + sign * (table[1, 3] * d1 + table[2, 3] * d2 + table[3, 3] * d3)
        with np.errstate(divide="ignore", invalid="ignore"):
            r = np.sqrt(v1 * v1 + v2 * v2 + v3 * v3) / np.abs(1.0 + u)
        live = weight > 1e-15
        r = np.where(live, np.minimum(r, 1.0), 0.0)
        total = total + np.where(live, weight, 0.0) * _h2(0.5 + 0.5 * r)
    return total


def _complement_concurrence_sq(spec: SuperpositionSpec) -> float:
    p, n, c = spec.p, spec.n, spec.branch_sign
    return p * p * (1.0 - p * p) * (1.0 - p ** (2 * n - 4)) / (1.0 + p**n * c) ** 2


def koashi_winter_min(spec: SuperpositionSpec) -> float:
    """Minimum conditional entropy of the two-mode reduction.

    The rank-two purification adds a single ancilla qubit, so the minimum
    equals the entanglement of formation between the unmeasured mode and
    the ancilla: H((1 + sqrt(1 - Q))/2) with
    Q = p^2 (1 - p^2)(1 - p^(2n-4)) / (1 + p^n sign)^2.
    The minimizing direction is equatorial, theta = pi/2, phi = 0.
    """
    q_sq = _complement_concurrence_sq(spec)
    return binary_entropy(0.5 + 0.5 * math.sqrt(max(0.0, 1.0 - q_sq)))


def _initial_concurrence(spec: SuperpositionSpec) -> float:
    p, n, c = spec.p, spec.n, spec.branch_sign
    return max(0.0, (p ** (n - 2) - p**n) / (1.0 + p**n * c))


def discord_mixed_closed(spec: SuperpositionSpec) -> CorrelationReport:
    """Closed-form correlation report of the two-mode reduction.

    Discord = marginal entropy + Koashi-Winter minimum - joint entropy;
    the optimal measurement is equatorial.  The concurrence column is the
    undamped X-state value (p^(n-2) - p^n) / (1 + p^n sign).
    """
    s_marg = binary_entropy(_marginal_eigenvalue(spec))
    s_joint = binary_entropy(_joint_eigenvalue(spec))
    s_min = koashi_winter_min(spec)
    info = 2.0 * s_marg - s_joint
    disc = s_marg + s_min - s_joint
    conc = _initial_concurrence(spec)
    return CorrelationReport(
        mutual_info=info,
        classical_corr=info - disc,
        discord=disc,
        concurrence=conc,
        eof=_eof_from_concurrence(conc),
        s_cond_min=s_min,
        argmin=MeasurementBasis(math.pi / 2.0, 0.0),
    )


_DIRECTION_CACHE: dict[tuple[int, int], tuple] = {}


def _direction_grid(n_theta: int, n_phi: int):
    key = (n_theta, n_phi)
    if key not in _DIRECTION_CACHE:
        theta = np.linspace(0.0, math.pi, n_theta)
        phi = np.linspace(0.0, 2.0 * math.pi, n_phi)
        tt, pp = np.meshgrid(theta, phi, indexing="ij")
        st = np.sin(tt)
        _DIRECTION_CACHE[key] = (theta, phi, st * np.cos(pp), st * np.sin(pp), np.cos(tt))
    return _DIRECTION_CACHE[key]


def _golden_section(fun, lo: float, hi: float, step_tol: float = LINE_SEARCH_STEP_TOL):
    """Golden-section minimum of a scalar function on [lo, hi]."""
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = fun(c), fun(d)
    while b - a > step_tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = fun(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = fun(d)
    if fc <= fd:
        return c, fc
    return d, fd


def discord_brute_force(
    state: TwoQubitState,
    grid: tuple[int, int] = DEFAULT_GRID,
    refine_tol: float = 1e-12,
) -> CorrelationReport:
    """Correlation report with the conditional-entropy minimum found by an
    exhaustive scan over projective measurement directions.

    Fully independent of the closed forms: entropies come from eigenvalue
    solvers and the minimum from direct evaluation of the measurement
    average on a theta-phi grid (default 181 x 361, ties resolved to the
    smallest (theta, phi)), refined by golden-section coordinate descent.
    A direction tied with the equatorial one within 1e-12 is reported as
    the canonical (pi/2, 0), so flat objectives (pure states) resolve
    deterministically.
    """
    n_theta, n_phi = grid
    if n_theta < 64 or n_phi < 128:
        raise DomainError(f"scan grid must be at least 64 x 128, got {grid}")
    table = bloch_matrix(state).R
    theta, phi, d1, d2, d3 = _direction_grid(n_theta, n_phi)
    values = _cond_entropy_field(table, d1, d2, d3)
    flat = int(np.argmin(values))  # first occurrence: lexicographic (theta, phi)
    i, j = divmod(flat, n_phi)
    best_theta, best_phi = float(theta[i]), float(phi[j])
    best_val = float(values[i, j])

    def objective(th: float, ph: float) -> float:
        st = math.sin(th)
        return float(
            _cond_entropy_field(
                table,
                np.float64(st * math.cos(ph)),
                np.float64(st * math.sin(ph)),
                np.float64(math.cos(th)),
            )
        )

    step_t = math.pi / (n_theta - 1)
    step_p = 2.0 * math.pi / (n_phi - 1)
    for _ in range(20):
        previous = best_val
        cand, val = _golden_section(
            lambda th: objective(th, best_phi),
            max(0.0, best_theta - step_t),
            min(math.pi, best_theta + step_t),
        )
        if val < best_val:
            best_theta, best_val = cand, val
        cand, val = _golden_section(
            lambda ph: objective(best_theta, ph),
            best_phi - step_p,
            best_phi + step_p,
        )
        if val < best_val:
            best_phi, best_val = cand, val
        if previous - best_val < refine_tol:
            break

    equatorial = objective(math.pi / 2.0, 0.0)
    if equatorial <= best_val + 1e-12:
        best_theta, best_phi = math.pi / 2.0, 0.0
        best_val = min(best_val, equatorial)
    else:
        at_phi0 = objective(best_theta, 0.0)
        if at_phi0 <= best_val + 1e-12:  # flat phi direction
            best_phi = 0.0
            best_val = min(best_val, at_phi0)
    best_phi %= 2.0 * math.pi

    rho_a, rho_b = marginals(state)
    s_a = von_neumann_entropy(rho_a)
    s_b = von_neumann_entropy(rho_b)
    s_ab = von_neumann_entropy(state)
    info = s_a + s_b - s_ab
    disc = s_a + best_val - s_ab
    conc = concurrence_x(state)
    return CorrelationReport(
        mutual_info=info,
        classical_corr=info - disc,
        discord=disc,
        concurrence=conc,
        eof=_eof_from_concurrence(conc),
        s_cond_min=best_val,
        argmin=MeasurementBasis(best_theta, best_phi),
    )


def werner_discord(n: int) -> float:
    """Pairwise discord of the n-mode single-excitation (W-type) state:
    H(1 - 1/n) + H(1/2 + sqrt(n^2 - 4n + 8)/(2n)) - H(1 - 2/n).

    Equals 1 at n = 2 and decays to zero for large n.
    """
    if n != int(n) or n < 2:
        raise DomainError(f"mode count must be an integer >= 2, got {n}")
    root = math.sqrt(n * n - 4.0 * n + 8.0) / n
    return (
        binary_entropy(1.0 - 1.0 / n)
        + binary_entropy(0.5 + 0.5 * root)
        - binary_entropy(1.0 - 2.0 / n)
    )
