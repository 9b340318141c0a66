"""Kernel characterization and Poisson solving on cube Laplacians.

The Laplacians here come from connected graphs, so the kernel is spanned
by the constant vector and Lu = f is solvable exactly when f sums to zero.
The minimum-norm solution is built from the eigendecomposition
pseudoinverse; the balanced-sign-pattern search scans every f with equally
many +1 and -1 entries for the one of least Dirichlet energy.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .cubegraphs import GraphMatrix, tricube_laplacian
from .spectra import eig_sym

_KERNEL_CUT = 1e-9


@dataclass(frozen=True)
class PoissonSolution:
    u: np.ndarray
    residual: float
    energy: float
    pattern: tuple | None = None

    @property
    def norm_l2(self) -> float:
        return float(np.linalg.norm(self.u))


@dataclass(frozen=True)
class MinEnergyResult:
    n: int
    best_energy: float
    best_patterns: tuple
    norm_l2: float

    def energy_as_fraction(self, max_denominator: int = 10**6) -> Fraction:
        return Fraction(self.best_energy).limit_denominator(max_denominator)


def _entries(L) -> np.ndarray:
    return L.entries if isinstance(L, GraphMatrix) else np.asarray(L, dtype=float)


def kernel_basis(L) -> list[np.ndarray]:
    """Unit basis of the kernel; must be the single constant direction."""
    entries = _entries(L)
    spec = eig_sym(entries)
    scale = max(float(np.abs(spec.values).max()), 1.0)
    idx = np.flatnonzero(np.abs(spec.values) <= _KERNEL_CUT * scale)
    if idx.size != 1:
        raise ValueError(f"kernel dimension {idx.size}, expected 1 (connected graph)")
    v = spec.vectors[:, idx[0]]
    if v.sum() < 0:
        v = -v
    if np.linalg.norm(entries @ v) > 1e-9 * scale:
        raise ValueError("kernel vector fails the residual check")
    return [v]


def pseudoinverse(L) -> np.ndarray:
    """Moore-Penrose inverse from the eigendecomposition, zeroing
    eigenvalues below the kernel cutoff."""
    entries = _entries(L)
    values, vectors = np.linalg.eigh(entries)
    scale = max(float(np.abs(values).max()), 1.0)
    keep = np.abs(values) > _KERNEL_CUT * scale
    inv = np.zeros_like(values)
    inv[keep] = 1.0 / values[keep]
    return (vectors * inv) @ vectors.T


def solve_min_norm(L, f, pattern=None) -> PoissonSolution:
    """Minimum-norm solution of Lu = f.

    When f is orthogonal to the kernel this is the unique solution with
    zero mean; otherwise it is the least-squares u and the reported
    residual is nonzero.
    """
    entries = _entries(L)
    f = np.asarray(f, dtype=float)
    if f.shape[0] != entries.shape[0]:
        raise ValueError(f"dimension mismatch: {f.shape[0]} vs {entries.shape[0]}")
    u = pseudoinverse(entries) @ f
    residual = float(np.linalg.norm(entries @ u - f))
    energy = 0.5 * float(u @ entries @ u)
    return PoissonSolution(u=u, residual=residual, energy=energy, pattern=pattern)


def min_energy_search(n: int, ordering="binary") -> MinEnergyResult:
    """Scan all balanced +-1 right-hand sides on the triangulated cube for
    the minimum Dirichlet energy.

    Patterns are reported as 0-based index tuples of the +1 entries; the
    winners always come in complement pairs (flipping f's sign leaves the
    energy unchanged).
    """
    if n > 4:
        raise ValueError(f"exhaustive search over C(2^{n}, 2^{n - 1}) patterns is too large")
    L = tricube_laplacian(n, ordering)
    N = L.N
    pinv = pseudoinverse(L)
    best_energy = None
    best_patterns: list[tuple] = []
    best_u = None
    for plus in combinations(range(N), N // 2):
        f = -np.ones(N)
        f[list(plus)] = 1.0
        energy = 0.5 * float(f @ pinv @ f)
        if best_energy is None or energy < best_energy - 1e-9:
            best_energy = energy
            best_patterns = [plus]
            best_u = pinv @ f
        elif abs(energy - best_energy) <= 1e-9:
            best_patterns.append(plus)
    return MinEnergyResult(
        n=n,
        best_energy=float(best_energy),
        best_patterns=tuple(sorted(best_patterns)),
        norm_l2=float(np.linalg.norm(best_u)),
    )
