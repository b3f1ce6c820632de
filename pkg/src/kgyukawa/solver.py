"""Bound-state energies and radial wavefunctions for the D-dimensional
Klein-Gordon equation with unequal scalar/vector Yukawa couplings.

The radial equation, with 1/r and 1/r^2 replaced by their exponential
approximants (valid for a*r << 1), maps under s = exp(-2ar) onto the
canonical hypergeometric-type form handled by :mod:`kgyukawa.nu`.  The
resulting quantization condition is transcendental in E; it is solved
by dense scanning plus bisection.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .errors import (
    ComplexChannel,
    DomainError,
    KgYukawaError,
    NoRootInBracket,
    NormalizationFailure,
)
from .nu import NuProblem, derive_coefficients, energy_relation_residual, wavefunction_exponents
from .params import ParticleParams, PotentialParams, QuantumNumbers
from .rootfind import bisect, sign_change_brackets
from .special import jacobi_eval

# Margin keeping the scan strictly inside (-M, M).
SCAN_EDGE = 1e-9
# A root is accepted only if the mapped canonical-form quantization
# residual also vanishes there.
_NU_CONSISTENCY_TOL = 1e-8


@dataclass(frozen=True)
class SolverOptions:
    """Root-search controls for :func:`solve_energy`."""

    tolerance: float = 5e-14
    scan_points: int = 20000

    def __post_init__(self):
        if not (self.tolerance > 0.0):
            raise DomainError(f"tolerance must be > 0, got {self.tolerance}")
        if self.scan_points < 2:
            raise DomainError(f"scan_points must be >= 2, got {self.scan_points}")


@dataclass(frozen=True)
class EnergySolution:
    """A converged eigenvalue with diagnostics.

    energy and epsilon in fm^-1 with epsilon = sqrt(M^2 - E^2); bracket
    is the scan interval the root was refined in.
    """

    energy: float
    epsilon: float
    residual: float
    bracket: tuple[float, float]
    iterations: int


def channel_constant(pp: PotentialParams, qn: QuantumNumbers) -> float:
    """(d+2l-2)^2 + 4*(s0^2 - v0^2); negative means the vector coupling is
    too strong for a real solution (raises :class:`ComplexChannel`)."""
    k = qn.kappa()
    value = k * k + 4.0 * (pp.s0 * pp.s0 - pp.v0 * pp.v0)
    if value < 0.0:
        raise ComplexChannel(
            f"(d+2l-2)^2 + 4(s0^2 - v0^2) = {value} < 0 for {qn}"
        )
    return value


def map_to_nu(
    pp: PotentialParams,
    mp: ParticleParams,
    qn: QuantumNumbers,
    energy_trial: float,
) -> NuProblem:
    """Canonical-form constants of the approximated radial equation at a
    trial energy.

    With eps^2 = M^2 - E^2 and the substitution s = exp(-2ar):
        c1 = c2 = c3 = 1,
        p0 = eps^2/(4a^2),
        p1 = 2*eps^2/(4a^2) + (M*s0 + E*v0)/a - ((d+2l-2)^2 - 1)/4,
        p2 = eps^2/(4a^2) - (v0^2 - s0^2) + (M*s0 + E*v0)/a.
    """
    m = mp.mass
    if not (-m < energy_trial < m):
        raise DomainError(f"trial energy must lie in (-M, M), got {energy_trial}")
    channel_constant(pp, qn)
    eps2 = m * m - energy_trial * energy_trial
    q = (m * pp.s0 + energy_trial * pp.v0) / pp.a
    p0 = eps2 / (4.0 * pp.a * pp.a)
    p1 = 2.0 * p0 + q - qn.centrifugal_constant()
    p2 = p0 - (pp.v0 * pp.v0 - pp.s0 * pp.s0) + q
    return NuProblem(c1=1.0, c2=1.0, c3=1.0, p0=p0, p1=p1, p2=p2)


def energy_equation_residual(
    E, pp: PotentialParams, mp: ParticleParams, qn: QuantumNumbers
):
    """Quantization residual in closed form,

        (2n+1 + sqrt((d+2l-2)^2 + 4(s0^2-v0^2)) - eps/a)^2
            - [-(E/a - 2 v0)^2 + (M/a + 2 s0)^2],

    continuous in E on (-M, M); a bound state makes it zero.  Accepts a
    scalar or ndarray E.
    """
    lam = math.sqrt(channel_constant(pp, qn))
    m, a = mp.mass, pp.a
    E = np.asarray(E, dtype=float)
    if np.any(np.abs(E) >= m):
        raise DomainError("E must lie strictly inside (-M, M)")
    eps = np.sqrt(m * m - E * E)
    lhs = (2 * qn.n + 1 + lam - eps / a) ** 2
    rhs = -((E / a - 2 * pp.v0) ** 2) + (m / a + 2 * pp.s0) ** 2
    out = lhs - rhs
    return float(out) if out.ndim == 0 else out


def _nu_residual_at(pp, mp, qn, energy: float) -> float:
    problem = map_to_nu(pp, mp, qn, energy)
    coeffs = derive_coefficients(problem)
    return energy_relation_residual(problem, coeffs, qn.n)


def solve_energy(
    pp: PotentialParams,
    mp: ParticleParams,
    qn: QuantumNumbers,
    opts: Optional[SolverOptions] = None,
) -> EnergySolution:
    """Lowest bound-state energy for the given couplings and (n, l, d).

    Scans the residual on a uniform grid over (-M, M), brackets every
    sign change, refines each by bisection to |dE| < opts.tolerance, and
    keeps roots at which the mapped canonical-form quantization residual
    also vanishes (guards against refinement landing on a kink).  The
    lowest-energy accepted root is returned.

    Raises :class:`NoRootInBracket` when no sign change exists: no bound
    state for these quantum numbers at these couplings.
    """
    opts = opts or SolverOptions()
    m = mp.mass
    channel_constant(pp, qn)
    grid = np.linspace(-m * (1.0 - SCAN_EDGE), m * (1.0 - SCAN_EDGE), opts.scan_points)
    values = energy_equation_residual(grid, pp, mp, qn)
    brackets = sign_change_brackets(grid, values)
    if not brackets:
        raise NoRootInBracket(
            f"no sign change over ({grid[0]}, {grid[-1]}) for {qn}: no bound state"
        )

    def f(E: float) -> float:
        return energy_equation_residual(E, pp, mp, qn)

    best: Optional[EnergySolution] = None
    for lo, hi in brackets:
        root, iters = bisect(f, lo, hi, opts.tolerance)
        if abs(_nu_residual_at(pp, mp, qn, root)) > _NU_CONSISTENCY_TOL:
            continue
        if best is None or root < best.energy:
            eps = math.sqrt(m * m - root * root)
            best = EnergySolution(
                energy=root,
                epsilon=eps,
                residual=f(root),
                bracket=(lo, hi),
                iterations=iters,
            )
    if best is None:
        raise NoRootInBracket(f"all bracketed roots failed the consistency check for {qn}")
    return best


@dataclass(frozen=True)
class TableCell:
    """One (d, n, l) entry of an energy table."""

    dim: int
    n: int
    l: int
    status: str  # "ok" | "no_bound_state" | "complex_channel" | "error"
    energy: Optional[float] = None
    residual: Optional[float] = None
    message: str = ""


@dataclass(frozen=True)
class EnergyTable:
    """Grid of independent energy solutions over d x n x l."""

    pp: PotentialParams
    mp: ParticleParams
    cells: tuple[TableCell, ...] = field(default_factory=tuple)

    CSV_HEADER = ("dim", "n", "l", "energy", "residual", "status")


def _solve_cell(pp, mp, d, n, l, opts) -> TableCell:
    try:
        qn = QuantumNumbers(n=n, l=l, d=d)
        sol = solve_energy(pp, mp, qn, opts)
        return TableCell(dim=d, n=n, l=l, status="ok", energy=sol.energy, residual=sol.residual)
    except NoRootInBracket as exc:
        return TableCell(dim=d, n=n, l=l, status="no_bound_state", message=str(exc))
    except ComplexChannel as exc:
        return TableCell(dim=d, n=n, l=l, status="complex_channel", message=str(exc))
    except KgYukawaError as exc:
        return TableCell(dim=d, n=n, l=l, status="error", message=str(exc))


def solve_table(
    pp: PotentialParams,
    mp: ParticleParams,
    n_range: Sequence[int],
    l_range: Sequence[int],
    d_range: Sequence[int],
    opts: Optional[SolverOptions] = None,
    threads: int = 1,
) -> EnergyTable:
    """Solve every cell of the Cartesian product d_range x n_range x l_range.

    Cells are independent; per-cell failures are recorded in the cell
    status and never abort the grid.  With threads > 1 the cells are
    evaluated concurrently; output order is deterministic either way.
    """
    opts = opts or SolverOptions()
    tasks = [(d, n, l) for d in d_range for n in n_range for l in l_range]
    if threads > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            cells = list(pool.map(lambda t: _solve_cell(pp, mp, *t, opts), tasks))
    else:
        cells = [_solve_cell(pp, mp, *t, opts) for t in tasks]
    return EnergyTable(pp=pp, mp=mp, cells=tuple(cells))


# --------------------------------------------------------------------------
# Radial wavefunctions
# --------------------------------------------------------------------------

DEFAULT_WF_POINTS = 4096
# Geometric grid reaching this many decay lengths into the tail; the
# origin end is small enough that R(r_min)/max(R) < 1e-8 for all
# admissible channels (the origin exponent is >= (1 + kappa)/2 >= 1/2).
DEFAULT_WF_RMIN = 1e-9
DEFAULT_WF_TAIL = 30.0
# Tail samples with R^2 below this fraction of the peak are excluded
# from the normalization quadrature.
_NORM_CUTOFF = 1e-16


@dataclass(frozen=True)
class RadialWavefunction:
    """Sampled, numerically normalized radial wavefunction.

    samples has shape (points, 2) with columns (r, R(r)); norm is the
    achieved value of the quadrature of R^2 (1 after normalization).
    """

    qn: QuantumNumbers
    jacobi_alpha: float
    jacobi_beta: float
    samples: np.ndarray
    norm: float

    @property
    def r(self) -> np.ndarray:
        return self.samples[:, 0]

    @property
    def values(self) -> np.ndarray:
        return self.samples[:, 1]


def default_radial_grid(epsilon: float, points: int = DEFAULT_WF_POINTS) -> np.ndarray:
    """Geometric grid on [r_min, 30/epsilon] resolving both the power-law
    origin behavior and the exponential tail."""
    if not (epsilon > 0.0):
        raise DomainError(f"epsilon must be > 0, got {epsilon}")
    return np.geomspace(DEFAULT_WF_RMIN, DEFAULT_WF_TAIL / epsilon, points)


def radial_wavefunction(
    sol: EnergySolution,
    pp: PotentialParams,
    mp: ParticleParams,
    qn: QuantumNumbers,
    grid: Optional[np.ndarray] = None,
) -> RadialWavefunction:
    """Sample R(r) = N * exp(-eps*r) * (1-exp(-2ar))^((1+Lambda)/2)
    * P_n^(eps/a, Lambda)(1 - 2 exp(-2ar)) with N fixed by the trapezoid
    quadrature of R^2 on the grid (far tail truncated).

    Lambda = sqrt((d+2l-2)^2 + 4(s0^2 - v0^2)); the exponents and Jacobi
    parameters are produced by the canonical-form pipeline, which
    enforces the admissibility constraints.
    """
    exps = wavefunction_exponents(
        derive_coefficients(map_to_nu(pp, mp, qn, sol.energy))
    )
    alpha, beta = exps.jacobi
    phi_s, phi_1ms = exps.phi
    if grid is None:
        grid = default_radial_grid(sol.epsilon)
    r = np.asarray(grid, dtype=float)
    if np.any(r <= 0.0) or np.any(np.diff(r) <= 0.0):
        raise DomainError("grid must be strictly positive and increasing")

    s = np.exp(-2.0 * pp.a * r)
    raw = s**phi_s * (1.0 - s) ** phi_1ms * jacobi_eval(qn.n, alpha, beta, 1.0 - 2.0 * s)

    density = raw * raw
    peak = density.max()
    if not (np.isfinite(peak) and peak > 0.0):
        raise NormalizationFailure("wavefunction vanished or overflowed on the grid")
    keep = np.nonzero(density >= _NORM_CUTOFF * peak)[0][-1] + 1
    integral = np.trapezoid(density[:keep], r[:keep])
    if not (np.isfinite(integral) and integral > 0.0):
        raise NormalizationFailure(f"normalization integral is {integral}")
    values = raw / math.sqrt(integral)

    samples = np.column_stack([r, values])
    norm = float(np.trapezoid(values[:keep] ** 2, r[:keep]))
    return RadialWavefunction(
        qn=qn, jacobi_alpha=alpha, jacobi_beta=beta, samples=samples, norm=norm
    )


def count_nodes(wf: RadialWavefunction, threshold: float = 1e-9) -> int:
    """Interior sign changes of R, ignoring samples below threshold*max|R|."""
    v = wf.values
    significant = v[np.abs(v) > threshold * np.max(np.abs(v))]
    signs = np.sign(significant)
    return int(np.sum(signs[:-1] != signs[1:]))
