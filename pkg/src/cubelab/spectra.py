"""Symmetric eigensolving, multiplicity clustering, and spectrum checks.

Eigendecomposition is delegated to LAPACK through numpy.linalg.eigh, which
is deterministic per platform; every returned pair is residual-checked.
Clustering groups eigenvalues whose spread stays within an absolute
tolerance (default 1e-6; the spectra handled here have true gaps of at
least sqrt(2) - 1).
"""

import math
from dataclasses import dataclass

import numpy as np

from .cubegraphs import GraphMatrix

CLUSTER_TOL = 1e-6


@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalues with tolerance-clustered multiplicity groups."""

    values: np.ndarray
    clusters: tuple
    source: dict
    vectors: np.ndarray | None = None

    def multiplicity_map(self) -> dict:
        return {rep: mult for rep, mult in self.clusters}


@dataclass(frozen=True)
class CentroBlocks:
    minus_block: np.ndarray
    plus_block: np.ndarray
    offdiag_norm: float


@dataclass(frozen=True)
class SpectralStats:
    radius: float
    eigengap: float | None
    spectral_gap: float | None
    trace: float


@dataclass(frozen=True)
class RamanujanResult:
    is_ramanujan: bool
    max_nontrivial: float
    bound: float
    degree: int


@dataclass(frozen=True)
class IdentityResult:
    lhs: float
    rhs: float
    agree: bool


def _as_array(M) -> tuple[np.ndarray, dict]:
    if isinstance(M, GraphMatrix):
        meta = {"family": M.family, "kind": M.kind, "n": M.n, "ordering": M.ordering}
        return M.entries, meta
    return np.asarray(M, dtype=float), {}


def cluster_eigenvalues(values, tol: float = CLUSTER_TOL) -> tuple:
    """Greedy ascending grouping; within a cluster max - min <= tol."""
    clusters = []
    group: list[float] = []
    for v in values:
        if group and v - group[0] > tol:
            clusters.append((float(np.mean(group)), len(group)))
            group = []
        group.append(float(v))
    if group:
        clusters.append((float(np.mean(group)), len(group)))
    return tuple(clusters)


def eig_sym(M, tol: float = 1e-8, cluster_tol: float = CLUSTER_TOL) -> Spectrum:
    """Full eigendecomposition of a symmetric matrix.

    Raises on non-symmetric input; verifies ||Mv - lambda v|| <= tol*||M||
    for every pair before returning.
    """
    entries, meta = _as_array(M)
    if np.abs(entries - entries.T).max() > 1e-10:
        raise ValueError("matrix is not symmetric")
    values, vectors = np.linalg.eigh(entries)
    norm = float(np.abs(values).max()) if values.size else 0.0
    residual = np.linalg.norm(entries @ vectors - vectors * values, axis=0)
    if residual.max() > tol * max(norm, 1.0):
        raise RuntimeError(f"eigenpair residual {residual.max():.3e} exceeds tolerance")
    return Spectrum(
        values=values,
        clusters=cluster_eigenvalues(values, cluster_tol),
        source=meta,
        vectors=vectors,
    )


def classify_lattice(spec: Spectrum, unit: float, tol: float = CLUSTER_TOL):
    """Map eigenvalues to integer multiples of `unit`.

    Returns {k: multiplicity} when every eigenvalue sits within tol of
    k*unit for some integer k, otherwise None.
    """
    if unit <= 0:
        raise ValueError("unit must be positive")
    counts: dict[int, int] = {}
    for v in spec.values:
        k = round(v / unit)
        if abs(v - k * unit) > tol:
            return None
        counts[k] = counts.get(k, 0) + 1
    return counts


def spectral_stats(spec: Spectrum) -> SpectralStats:
    """Radius, minimal gap between distinct eigenvalues, gap between the
    two largest distinct eigenvalues, and the trace."""
    if len(spec.values) == 0:
        raise ValueError("empty spectrum")
    reps = [rep for rep, _ in spec.clusters]
    diffs = [b - a for a, b in zip(reps, reps[1:])]
    return SpectralStats(
        radius=float(np.abs(spec.values).max()),
        eigengap=min(diffs) if diffs else None,
        spectral_gap=diffs[-1] if diffs else None,
        trace=float(spec.values.sum()),
    )


def exchange_matrix(m: int) -> np.ndarray:
    return np.fliplr(np.eye(m))


def centro_block_diagonalize(M) -> CentroBlocks:
    """Orthogonal block-diagonalization of a bisymmetric matrix.

    Uses K = (1/sqrt(2)) [[I, -J], [I, J]], with a sqrt(2) center row
    inserted for odd dimension.  The minus block carries the eigenvalues
    of antisymmetric eigenvectors (Jx = -x), the plus block the symmetric
    ones.
    """
    entries, _ = _as_array(M)
    N = entries.shape[0]
    J = exchange_matrix(N)
    if np.abs(entries - entries.T).max() > 1e-10 or np.abs(J @ entries @ J - entries).max() > 1e-10:
        raise ValueError("matrix is not bisymmetric")
    m = N // 2
    Jm = exchange_matrix(m)
    K = np.zeros((N, N))
    if N % 2 == 0:
        K[:m, :m] = np.eye(m)
        K[:m, m:] = -Jm
        K[m:, :m] = np.eye(m)
        K[m:, m:] = Jm
    else:
        K[:m, :m] = np.eye(m)
        K[:m, m + 1 :] = -Jm
        K[m, m] = math.sqrt(2.0)
        K[m + 1 :, :m] = np.eye(m)
        K[m + 1 :, m + 1 :] = Jm
    K /= math.sqrt(2.0)
    O = K @ entries @ K.T
    offdiag = float(max(np.abs(O[:m, m:]).max(), np.abs(O[m:, :m]).max()))
    return CentroBlocks(minus_block=O[:m, :m], plus_block=O[m:, m:], offdiag_norm=offdiag)


def ramanujan_check(adj, degree: int | None = None, slack: float = 1e-9) -> RamanujanResult:
    """Compare the largest nontrivial adjacency eigenvalue magnitude with
    the Ramanujan bound 2*sqrt(degree - 1).

    Every eigenvalue of magnitude equal to the degree is trivial (this
    covers -degree on bipartite graphs).
    """
    entries, _ = _as_array(adj)
    degrees = entries.sum(axis=1)
    if degree is None:
        degree = int(round(degrees[0]))
    if np.abs(degrees - degree).max() > 1e-9:
        raise ValueError("graph is not regular of the stated degree")
    values = np.linalg.eigvalsh(entries)
    nontrivial = np.abs(values)[np.abs(np.abs(values) - degree) > 1e-6]
    max_nontrivial = float(nontrivial.max()) if nontrivial.size else 0.0
    bound = 2.0 * math.sqrt(degree - 1)
    return RamanujanResult(
        is_ramanujan=max_nontrivial <= bound + slack,
        max_nontrivial=max_nontrivial,
        bound=bound,
        degree=degree,
    )


def eig_identity_check(L, B, tol: float = 1e-6) -> IdentityResult:
    """Determinant identity tying a singular Laplacian to its kernel vector.

    For N x (N-1) matrix B and unit kernel vector x of L (simple zero
    eigenvalue required):

        det(B^T L B) = (product of nonzero eigenvalues) * det([B | x])^2

    This is the Cauchy-Binet-type consequence of det(B^T (t I - L) B)
    = p'_L(t) |det([B | x])|^2 evaluated at the kernel eigenvalue t = 0.
    """
    entries, _ = _as_array(L)
    B = np.asarray(B, dtype=float)
    N = entries.shape[0]
    if B.shape != (N, N - 1):
        raise ValueError(f"B must be {N}x{N - 1}, got {B.shape}")
    values, vectors = np.linalg.eigh(entries)
    scale = max(float(np.abs(values).max()), 1.0)
    kernel = np.flatnonzero(np.abs(values) <= 1e-9 * scale)
    if kernel.size != 1:
        raise ValueError(f"kernel dimension {kernel.size}, identity needs a simple kernel")
    x = vectors[:, kernel[0]]
    nonzero = np.delete(values, kernel[0])
    lhs = float(np.linalg.det(B.T @ entries @ B))
    rhs = float(np.prod(nonzero) * np.linalg.det(np.column_stack([B, x])) ** 2)
    agree = abs(lhs - rhs) <= tol * max(abs(lhs), abs(rhs), 1.0)
    return IdentityResult(lhs=lhs, rhs=rhs, agree=agree)


def spectrum_to_csv(spec: Spectrum, path) -> None:
    """CSV rows (value, multiplicity, cluster_representative), one per
    eigenvalue."""
    rows = []
    for rep, mult in spec.clusters:
        rows.extend([(rep, mult)] * mult)
    with open(path, "w") as fh:
        fh.write("value,multiplicity,cluster_representative\n")
        for value, (rep, mult) in zip(spec.values, rows):
            fh.write(f"{float(value)!r},{mult},{rep!r}\n")
