"""Finite-difference eigensolver: discretization quality and the
cross-check of the quantization-equation energies."""
import math

import numpy as np
import pytest

from kgyukawa import (
    DomainError,
    NoRootInBracket,
    ParticleParams,
    PotentialParams,
    QuantumNumbers,
    RadialGrid,
    cross_validate,
    effective_ode_coefficient,
    eigenvalue_k,
    oracle_energy,
    solve_bound_branch,
)

MP = ParticleParams(mass=1.0)
# zero-coupling parameters make the s-wave d=3 problem a particle in a box
FREE = PotentialParams(v0=0.0, s0=0.0, a=0.05)
BOX_QN = QuantumNumbers(n=1, l=0, d=3)


def box_grid(points=800, length=1.0):
    return RadialGrid(r_min=1e-9, r_max=length, points=points)


def test_grid_validation():
    with pytest.raises(DomainError):
        RadialGrid(r_min=0.0, r_max=1.0, points=200)
    with pytest.raises(DomainError):
        RadialGrid(r_min=1.0, r_max=0.5, points=200)
    with pytest.raises(DomainError):
        RadialGrid(r_min=0.1, r_max=1.0, points=50)
    grid = RadialGrid(r_min=0.0001, r_max=400.0, points=16000)
    assert grid.spacing == pytest.approx((400.0 - 0.0001) / 15999)
    assert grid.doubled().points == 32000


def test_coefficient_equal_mixture_has_no_quadratic_channel():
    pp = PotentialParams(v0=0.2, s0=0.2, a=0.05)
    qn = QuantumNumbers(n=1, l=1, d=3)
    r = np.linspace(0.01, 5.0, 50)
    got = effective_ode_coefficient(r, -0.9, pp, MP, qn, "exact")
    eps2 = 1 - 0.81
    coul = 2 * (0.2 + (-0.9) * 0.2) * np.exp(-0.05 * r) / r
    cf = qn.centrifugal_constant() / r**2
    assert np.allclose(got, -eps2 + coul - cf, rtol=1e-13)


def test_coefficient_s_wave_has_no_centrifugal_term():
    pp = PotentialParams(v0=0.2, s0=0.1, a=0.05)
    qn = QuantumNumbers(n=1, l=0, d=3)
    assert qn.centrifugal_constant() == 0.0
    r = 2.0
    for mode in ("exact", "approximated"):
        with_cf = effective_ode_coefficient(r, -0.9, pp, MP, qn, mode)
        qn5 = QuantumNumbers(n=1, l=0, d=5)  # nonzero centrifugal for contrast
        without = effective_ode_coefficient(r, -0.9, pp, MP, qn5, mode)
        assert with_cf != without


def test_coefficient_modes_agree_at_small_ar(pp_half):
    qn = QuantumNumbers(n=1, l=1, d=4)
    E = -0.98885705
    r = np.linspace(1e-3, 0.05 / pp_half.a, 400)
    exact = effective_ode_coefficient(r, E, pp_half, MP, qn, "exact")
    approx = effective_ode_coefficient(r, E, pp_half, MP, qn, "approximated")
    assert np.max(np.abs(approx / exact - 1.0)) < 0.01


def test_coefficient_guards(pp_half):
    qn = QuantumNumbers(n=1, l=0, d=3)
    with pytest.raises(DomainError):
        effective_ode_coefficient(-1.0, -0.9, pp_half, MP, qn, "exact")
    with pytest.raises(DomainError):
        effective_ode_coefficient(1.0, 1.5, pp_half, MP, qn, "exact")
    with pytest.raises(DomainError):
        effective_ode_coefficient(1.0, -0.9, pp_half, MP, qn, "numerological")


def test_box_eigenvalues():
    grid = box_grid()
    h = grid.spacing
    for k in range(3):
        got = eigenvalue_k(0.0, FREE, MP, BOX_QN, grid, "exact", k)
        exact = ((k + 1) * math.pi / 1.0) ** 2
        # leading discretization error is lambda^2 h^2 / 12
        assert abs(got - exact) < exact * exact * h * h / 6.0
    e0 = eigenvalue_k(0.0, FREE, MP, BOX_QN, grid, "exact", 0)
    e1 = eigenvalue_k(0.0, FREE, MP, BOX_QN, grid, "exact", 1)
    e2 = eigenvalue_k(0.0, FREE, MP, BOX_QN, grid, "exact", 2)
    assert e0 < e1 < e2


def test_box_convergence_is_second_order():
    exact = math.pi**2
    errors = []
    for points in (400, 800, 1600):
        got = eigenvalue_k(0.0, FREE, MP, BOX_QN, box_grid(points), "exact", 0)
        errors.append(abs(got - exact))
    order01 = math.log2(errors[0] / errors[1])
    order12 = math.log2(errors[1] / errors[2])
    assert order01 == pytest.approx(2.0, abs=0.2)
    assert order12 == pytest.approx(2.0, abs=0.2)
    assert errors[0] / errors[1] >= 3.5
    assert errors[1] / errors[2] >= 3.5


def test_eigenvalue_index_guards():
    grid = box_grid(points=100)
    with pytest.raises(DomainError):
        eigenvalue_k(0.0, FREE, MP, BOX_QN, grid, "exact", -1)
    with pytest.raises(DomainError):
        eigenvalue_k(0.0, FREE, MP, BOX_QN, grid, "exact", 200)


# --------------------------------------------------------------------------
# closure on the physical (decaying-wavefunction) branch
# --------------------------------------------------------------------------


def oracle_grid(points=4000):
    return RadialGrid(r_min=1e-4, r_max=400.0, points=points)


def test_oracle_confirms_decaying_branch_state(pp_plus):
    # the genuine one-node bound state of the equal-mixture problem
    qn = QuantumNumbers(n=1, l=0, d=3)
    ref = solve_bound_branch(pp_plus, MP, qn).energy
    assert ref == pytest.approx(0.99503719, abs=1e-8)
    res = oracle_energy(
        pp_plus, MP, qn, oracle_grid(16000), "approximated",
        eigen_index=1, bracket=(ref - 5e-3, ref + 5e-3), scan_points=11,
    )
    assert abs(res.richardson_estimate - ref) < 5e-5
    assert abs(res.energy - ref) < 5e-4


def test_oracle_kappa_degeneracy():
    # identical d + 2l gives the identical discrete operator in both modes
    pp = PotentialParams(v0=0.2, s0=0.2, a=0.05)
    qa = QuantumNumbers(n=1, l=1, d=3)
    qb = QuantumNumbers(n=1, l=0, d=5)
    grid = oracle_grid(4000)
    for mode in ("approximated", "exact"):
        ea = oracle_energy(pp, MP, qa, grid, mode, eigen_index=0).energy
        eb = oracle_energy(pp, MP, qb, grid, mode, eigen_index=0).energy
        assert ea == pytest.approx(eb, abs=1e-9)


def test_oracle_exact_vs_approximated_gap(pp_plus):
    # the two modes differ by the approximant quality at a = 0.05;
    # the gap is recorded, not asserted against a reference value
    qn = QuantumNumbers(n=1, l=0, d=3)
    ref = solve_bound_branch(pp_plus, MP, qn).energy
    grid = oracle_grid(8000)
    bracket = (ref - 5e-3, ref + 5e-3)
    e_app = oracle_energy(pp_plus, MP, qn, grid, "approximated",
                          eigen_index=1, bracket=bracket, scan_points=11).energy
    e_ex = oracle_energy(pp_plus, MP, qn, grid, "exact",
                         eigen_index=1, bracket=bracket, scan_points=11).energy
    gap = abs(e_app - e_ex)
    print(f"\napproximation gap at a=0.05: {gap:.3e} fm^-1")
    assert math.isfinite(gap)


def test_oracle_rejects_bracket_without_root(pp_plus):
    qn = QuantumNumbers(n=1, l=0, d=3)
    with pytest.raises(NoRootInBracket):
        oracle_energy(
            pp_plus, MP, qn, oracle_grid(2000), "approximated",
            eigen_index=0, bracket=(-0.6, -0.5), scan_points=11,
        )


def test_cross_validation_surfaces_branch_discrepancy(pp_plus):
    # The quantization equation that reproduces the published tables has
    # no eigenfunction-backed root near its energies: the eigensolver
    # must label the mismatch rather than confirm it.
    qn = QuantumNumbers(n=1, l=0, d=3)
    cmp_ = cross_validate(pp_plus, MP, qn, mode="approximated", points=2000)
    assert cmp_.status == "no_root_in_bracket"
    assert cmp_.e_solver == pytest.approx(-0.99503719, abs=1e-7)
    assert cmp_.nearest_root is not None
    # the nearest genuine root at eigen_index n-1 is the nodeless state
    assert cmp_.nearest_root == pytest.approx(0.9411, abs=1e-3)
