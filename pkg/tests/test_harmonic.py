from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from cubelab.cubegraphs import pow_tricube_laplacian, tricube_laplacian
from cubelab.harmonic import kernel_basis, min_energy_search, pseudoinverse, solve_min_norm


def test_kernel_is_constant_direction():
    v = kernel_basis(tricube_laplacian(3))[0]
    assert np.allclose(v, np.ones(8) / np.sqrt(8.0), atol=1e-10)
    v = kernel_basis(pow_tricube_laplacian(2))[0]
    assert np.allclose(v, np.ones(9) / 3.0, atol=1e-10)
    v = kernel_basis(tricube_laplacian(1))[0]
    assert np.allclose(v, np.ones(2) / np.sqrt(2.0), atol=1e-12)


def test_kernel_rejects_disconnected():
    L = np.kron(np.eye(2), [[1.0, -1.0], [-1.0, 1.0]])
    with pytest.raises(ValueError):
        kernel_basis(L)


def parity_vector(n):
    return np.array([1.0 if bin(i).count("1") % 2 else -1.0 for i in range(2**n)])


def test_solve_min_norm_parity_rhs():
    L = tricube_laplacian(3)
    f = parity_vector(3)
    sol = solve_min_norm(L, f)
    assert np.allclose(sol.u, f / 6.0, atol=1e-12)
    assert sol.energy == pytest.approx(2.0 / 3.0, abs=1e-12)
    assert sol.norm_l2 == pytest.approx(np.sqrt(2.0) / 3.0, abs=1e-12)
    assert sol.residual <= 1e-10


def test_solve_min_norm_trivial_and_infeasible():
    L = tricube_laplacian(2)
    sol = solve_min_norm(L, np.zeros(4))
    assert np.allclose(sol.u, 0.0) and sol.energy == 0.0
    sol = solve_min_norm(L, np.ones(4))
    assert sol.residual > 1.0  # kernel obstruction is reported, not raised


def test_solve_min_norm_representative_has_zero_mean():
    L = tricube_laplacian(3)
    rng = np.random.default_rng(3)
    f = rng.standard_normal(8)
    f -= f.mean()
    sol = solve_min_norm(L, f)
    assert abs(sol.u.sum()) <= 1e-10
    assert sol.residual <= 1e-9


def test_energy_agrees_between_routes():
    """Eigendecomposition pseudoinverse vs direct quadratic form."""
    L = tricube_laplacian(3)
    pinv = pseudoinverse(L)
    for plus in combinations(range(8), 4):
        f = -np.ones(8)
        f[list(plus)] = 1.0
        direct = 0.5 * float(f @ pinv @ f)
        assert solve_min_norm(L, f).energy == pytest.approx(direct, abs=1e-10)


def test_min_energy_search_1():
    # L = [[1,-1],[-1,1]], f = (1,-1): u = f/2, energy = u.L.u/2 = 1/2
    result = min_energy_search(1)
    assert result.best_energy == pytest.approx(0.5, abs=1e-12)
    assert result.best_patterns == ((0,), (1,))
    sol = solve_min_norm(tricube_laplacian(1), np.array([1.0, -1.0]))
    assert np.allclose(sol.u, [0.5, -0.5], atol=1e-12)


def test_min_energy_search_2():
    # parity f is the eigenvalue-4 eigenvector: energy = (1/2)*4/4 = 1/2
    result = min_energy_search(2)
    assert result.best_energy == pytest.approx(0.5, abs=1e-12)
    assert result.best_patterns == ((0, 3), (1, 2))


def test_min_energy_search_3():
    result = min_energy_search(3)
    assert result.best_energy == pytest.approx(2.0 / 3.0, abs=1e-10)
    assert result.energy_as_fraction() == Fraction(2, 3)
    assert result.best_patterns == ((0, 3, 5, 6), (1, 2, 4, 7))
    assert result.norm_l2 == pytest.approx(np.sqrt(2.0) / 3.0, abs=1e-10)


def test_min_energy_patterns_closed_under_complement():
    for n in (1, 2, 3):
        result = min_energy_search(n)
        patterns = set(result.best_patterns)
        full = set(range(2**n))
        for pattern in patterns:
            assert tuple(sorted(full - set(pattern))) in patterns


def test_min_energy_search_all_energies_positive():
    L = tricube_laplacian(3)
    pinv = pseudoinverse(L)
    energies = []
    for plus in combinations(range(8), 4):
        f = -np.ones(8)
        f[list(plus)] = 1.0
        energies.append(0.5 * float(f @ pinv @ f))
    assert len(energies) == 70
    assert min(energies) > 0.0
    # the parity patterns are strictly minimal
    second = sorted(set(round(e, 9) for e in energies))[1]
    assert second > 2.0 / 3.0 + 1e-9


def test_min_energy_search_too_large():
    with pytest.raises(ValueError):
        min_energy_search(5)
