"""Independent finite-difference eigensolver for the radial equation.

Discretizes -R'' + W(r; E_frozen) R = lambda R with Dirichlet ends on a
uniform grid (second-order central differences) and extracts single
eigenvalues of the symmetric tridiagonal matrix by Sturm-sequence
counting with bisection.  The quadratic E-dependence of the original
equation is closed self-consistently: a bound state is a root of
g(E) = lambda_k(E) - (E^2 - M^2).

This solver shares no algebra with the quantization-equation path and
serves as its cross-check.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import ComplexChannel, ConvergenceFailure, DomainError, NoRootInBracket
from .params import ParticleParams, PotentialParams, QuantumNumbers
from .rootfind import bisect, sign_change_brackets
from .solver import solve_energy, SolverOptions

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    njit = None


def _sturm_count_py(diag, e2: float, x: float) -> int:
    count = 0
    q = 1.0
    for i in range(diag.shape[0]):
        if i == 0:
            q = diag[0] - x
        else:
            if q == 0.0:
                q = 1e-300
            q = diag[i] - x - e2 / q
        if q < 0.0:
            count += 1
    return count


if njit is not None:
    _sturm_count = njit(cache=True)(_sturm_count_py)
else:  # pragma: no cover
    _sturm_count = _sturm_count_py


@dataclass(frozen=True)
class RadialGrid:
    """Uniform grid on [r_min, r_max] with Dirichlet ends."""

    r_min: float
    r_max: float
    points: int

    def __post_init__(self):
        if not (0.0 < self.r_min < self.r_max):
            raise DomainError(f"need 0 < r_min < r_max, got [{self.r_min}, {self.r_max}]")
        if self.points < 100:
            raise DomainError(f"points must be >= 100, got {self.points}")

    @property
    def spacing(self) -> float:
        return (self.r_max - self.r_min) / (self.points - 1)

    def nodes(self) -> np.ndarray:
        return np.linspace(self.r_min, self.r_max, self.points)

    def doubled(self) -> "RadialGrid":
        return RadialGrid(self.r_min, self.r_max, 2 * self.points)


@dataclass(frozen=True)
class OracleResult:
    """Eigensolver energy with a grid-refinement error estimate.

    richardson_estimate extrapolates the (points, 2*points) pair assuming
    second-order convergence; |energy - richardson_estimate| is the
    grid-convergence error of ``energy``.
    """

    energy: float
    eigen_index: int
    grid: RadialGrid
    richardson_estimate: float


def default_oracle_grid(epsilon_estimate: float, points: int = 16000) -> RadialGrid:
    """Long-tailed default: r_max covers 40 decay lengths of the state."""
    if not (epsilon_estimate > 0.0):
        raise DomainError(f"epsilon estimate must be > 0, got {epsilon_estimate}")
    return RadialGrid(r_min=1e-4, r_max=max(400.0, 40.0 / epsilon_estimate), points=points)


def effective_ode_coefficient(
    r,
    E: float,
    pp: PotentialParams,
    mp: ParticleParams,
    qn: QuantumNumbers,
    mode: str,
):
    """Coefficient multiplying R in the reduced radial equation R'' + c(r)R = 0.

    mode "exact" uses the bare 1/r and 1/r^2 singular terms; mode
    "approximated" uses their exponential-rational replacements, i.e. the
    same equation the quantization path solves analytically.
    """
    m = mp.mass
    if not (-m < E < m):
        raise DomainError(f"E must lie in (-M, M), got {E}")
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0.0):
        raise DomainError("r must be > 0")
    eps2 = m * m - E * E
    quad = pp.v0 * pp.v0 - pp.s0 * pp.s0
    coul = 2.0 * (m * pp.s0 + E * pp.v0)
    cf = qn.centrifugal_constant()
    a = pp.a
    if mode == "exact":
        out = (
            -eps2
            + quad * np.exp(-2.0 * a * r) / r**2
            + coul * np.exp(-a * r) / r
            - cf / r**2
        )
    elif mode == "approximated":
        ex = np.exp(-2.0 * a * r)
        den = 1.0 - ex
        out = (
            -eps2
            + 4.0 * a * a * quad * ex * ex / den**2
            + 2.0 * a * coul * ex / den
            - 4.0 * a * a * cf * ex / den**2
        )
    else:
        raise DomainError(f"mode must be 'exact' or 'approximated', got {mode!r}")
    return float(out) if out.ndim == 0 else out


def _frozen_potential(r, E, pp, mp, qn, mode):
    """W(r; E_frozen) with the constant -eps^2 term removed, so that
    -R'' + W R = (E^2 - M^2) R reproduces the radial equation."""
    eps2 = mp.mass * mp.mass - E * E
    return -(effective_ode_coefficient(r, E, pp, mp, qn, mode) + eps2)


def _tridiag(E, pp, mp, qn, grid: RadialGrid, mode):
    r = grid.nodes()[1:-1]
    h = grid.spacing
    diag = 2.0 / h**2 + _frozen_potential(r, E, pp, mp, qn, mode)
    e2 = 1.0 / h**4  # square of the constant off-diagonal -1/h^2
    return diag, e2


def eigenvalue_k(
    E_frozen: float,
    pp: PotentialParams,
    mp: ParticleParams,
    qn: QuantumNumbers,
    grid: RadialGrid,
    mode: str,
    k: int,
) -> float:
    """k-th eigenvalue (k = 0 lowest) of -d^2/dr^2 + W(r; E_frozen) with
    Dirichlet conditions at both grid ends, by Sturm-count bisection."""
    if k < 0:
        raise DomainError(f"eigenvalue index must be >= 0, got {k}")
    diag, e2 = _tridiag(E_frozen, pp, mp, qn, grid, mode)
    if k >= diag.shape[0]:
        raise DomainError(f"index {k} out of range for {diag.shape[0]} interior nodes")
    e_abs = math.sqrt(e2)
    lo = float(np.min(diag)) - 2.0 * e_abs
    hi = float(np.max(diag)) + 2.0 * e_abs
    for _ in range(300):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            return mid
        if _sturm_count(diag, e2, mid) > k:
            hi = mid
        else:
            lo = mid
        if hi - lo <= 1e-14 * max(1.0, abs(lo), abs(hi)):
            return 0.5 * (lo + hi)
    raise ConvergenceFailure(f"eigenvalue bisection failed to collapse [{lo}, {hi}]")


def _closure(E, pp, mp, qn, grid, mode, k):
    lam = eigenvalue_k(E, pp, mp, qn, grid, mode, k)
    return lam - (E * E - mp.mass * mp.mass)


def _closure_root(pp, mp, qn, grid, mode, k, bracket, scan_points, tol):
    m = mp.mass

    def g(E: float) -> float:
        return _closure(E, pp, mp, qn, grid, mode, k)

    if bracket is None:
        lo, hi = -m * (1.0 - 1e-6), m * (1.0 - 1e-6)
    else:
        # clip into the open interval; states near +-M produce brackets
        # that stick out past the branch points
        lo = max(bracket[0], -m * (1.0 - 1e-9))
        hi = min(bracket[1], m * (1.0 - 1e-9))
        if not (lo < hi):
            raise DomainError(f"bracket {bracket} does not intersect (-M, M)")
    Es = np.linspace(lo, hi, scan_points)
    gs = np.array([g(E) for E in Es])
    brackets = sign_change_brackets(Es, gs)
    if not brackets:
        raise NoRootInBracket(
            f"closure g(E) has no sign change on [{lo:.6f}, {hi:.6f}] "
            f"for {qn} at eigen_index {k} ({mode} mode)"
        )
    b_lo, b_hi = brackets[0]
    root, _ = bisect(g, b_lo, b_hi, tol)
    return root


def oracle_energy(
    pp: PotentialParams,
    mp: ParticleParams,
    qn: QuantumNumbers,
    grid: RadialGrid,
    mode: str,
    eigen_index: Optional[int] = None,
    bracket: Optional[tuple[float, float]] = None,
    scan_points: int = 101,
    tol: float = 1e-12,
) -> OracleResult:
    """Self-consistent bound-state energy from the frozen-E eigenproblem.

    Bisects g(E) = lambda_k(E) - (E^2 - M^2) on the given bracket (or on
    a coarse scan of (-M, M) when none is given) and Richardson-
    extrapolates against the doubled grid.  eigen_index defaults to
    n - 1, pairing the node ordering with the radial label; when the
    pairing (or the bracket) is wrong this raises
    :class:`NoRootInBracket` rather than silently reindexing.
    """
    k = qn.n - 1 if eigen_index is None else eigen_index
    root = _closure_root(pp, mp, qn, grid, mode, k, bracket, scan_points, tol)

    fine = grid.doubled()
    half = max(5.0 * abs(tol) * max(1.0, abs(root)), 1e-4)
    fine_bracket = (root - half, root + half)
    try:
        root_fine = _closure_root(pp, mp, qn, fine, mode, k, fine_bracket, 21, tol)
    except NoRootInBracket:
        root_fine = _closure_root(pp, mp, qn, fine, mode, k, bracket, scan_points, tol)
    rho = (fine.points - 1) / (grid.points - 1)  # spacing ratio h/h_fine
    richardson = (root_fine * rho**2 - root) / (rho**2 - 1.0)
    return OracleResult(energy=root, eigen_index=k, grid=grid, richardson_estimate=richardson)


@dataclass(frozen=True)
class OracleComparison:
    """Outcome of cross-checking one quantization-equation energy against
    the eigensolver.

    status "validated" means a closure root exists in the +-half_width
    bracket around the solver energy; "no_root_in_bracket" is the labeled
    discrepancy case, with the nearest full-range closure root (same
    eigen_index) reported when one exists.
    """

    qn: QuantumNumbers
    mode: str
    e_solver: float
    status: str
    eigen_index: int
    e_oracle: Optional[float] = None
    richardson: Optional[float] = None
    delta: Optional[float] = None
    nearest_root: Optional[float] = None
    nearest_delta: Optional[float] = None


def cross_validate(
    pp: PotentialParams,
    mp: ParticleParams,
    qn: QuantumNumbers,
    mode: str = "approximated",
    points: int = 16000,
    half_width: float = 5e-3,
    eigen_index: Optional[int] = None,
    opts: Optional[SolverOptions] = None,
) -> OracleComparison:
    """Compare the quantization-equation energy with the eigensolver.

    Tries the bracket [E_solver - half_width, E_solver + half_width]
    first; on failure scans the whole of (-M, M) for the nearest closure
    root at the same eigen_index and reports the mismatch explicitly.
    """
    k = qn.n - 1 if eigen_index is None else eigen_index
    e_solver = solve_energy(pp, mp, qn, opts).energy
    eps_est = math.sqrt(mp.mass**2 - e_solver**2)
    grid = default_oracle_grid(eps_est, points=points)
    try:
        res = oracle_energy(
            pp, mp, qn, grid, mode, eigen_index=k,
            bracket=(e_solver - half_width, e_solver + half_width), scan_points=11,
        )
        return OracleComparison(
            qn=qn, mode=mode, e_solver=e_solver, status="validated", eigen_index=k,
            e_oracle=res.energy, richardson=res.richardson_estimate,
            delta=abs(res.richardson_estimate - e_solver),
        )
    except (NoRootInBracket, ComplexChannel):
        pass
    try:
        res = oracle_energy(pp, mp, qn, grid, mode, eigen_index=k, bracket=None)
        return OracleComparison(
            qn=qn, mode=mode, e_solver=e_solver, status="no_root_in_bracket",
            eigen_index=k, nearest_root=res.energy,
            nearest_delta=abs(res.energy - e_solver),
        )
    except NoRootInBracket:
        return OracleComparison(
            qn=qn, mode=mode, e_solver=e_solver, status="no_root_in_bracket",
            eigen_index=k,
        )
