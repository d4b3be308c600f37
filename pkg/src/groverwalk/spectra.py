"""
Spectra of adjacency, discriminant and evolution matrices.

Exact spectra come from closed formulas (circulant characters, Ramanujan
sums); numeric spectra come from a symmetric eigensolver and are clustered
into multiplicities. Evolution spectra are reported as angles in
``[0, 2 pi)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .graphs import CirculantSpec, Graph, unitary_cayley_spec
from .numtheory import ramanujan_closed

__all__ = [
    "SpectrumReport",
    "Eigenprojector",
    "cluster",
    "circulant_spectrum",
    "uc_spectrum",
    "numeric_spectrum",
    "snap_unit",
    "spectral_map",
    "evolution_angles",
    "match_angles",
    "eigenprojectors",
    "eigenvalue_support",
    "hoffman_check",
    "is_walk_regular",
    "TOL_CLUSTER",
]

TOL_CLUSTER = 1e-6
TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class SpectrumReport:
    """Distinct eigenvalues with multiplicities, sorted descending.

    ``source`` is ``"adjacency"``, ``"discriminant"`` or ``"evolution"``; for
    the latter the values are angles. ``indexed`` keeps the unmerged list in
    index order when the spectrum came from an indexed formula.
    """

    eigenvalues: tuple[tuple[float, int], ...]
    exact: bool
    source: str
    indexed: tuple[float, ...] | None = None

    @property
    def values(self) -> list[float]:
        return [v for v, _ in self.eigenvalues]

    @property
    def dimension(self) -> int:
        return sum(k for _, k in self.eigenvalues)

    def multiplicity(self, value: float, tol: float = TOL_CLUSTER) -> int:
        return sum(k for v, k in self.eigenvalues if abs(v - value) <= tol)

    def multiset(self) -> np.ndarray:
        """All eigenvalues repeated by multiplicity, descending."""
        return np.repeat([v for v, _ in self.eigenvalues], [k for _, k in self.eigenvalues])

    def scaled(self, factor: float, source: str) -> "SpectrumReport":
        idx = None if self.indexed is None else tuple(x * factor for x in self.indexed)
        pairs = sorted(((v * factor, k) for v, k in self.eigenvalues), reverse=True)
        return SpectrumReport(tuple(pairs), self.exact, source, idx)


def cluster(values: Iterable[float], tol: float = TOL_CLUSTER) -> tuple[tuple[float, int], ...]:
    """Merge sorted values closer than ``tol`` to the first member of their run."""
    xs = sorted((float(v) for v in values), reverse=True)
    out: list[tuple[float, int]] = []
    run: list[float] = []
    for x in xs:
        if run and run[0] - x > tol:
            out.append((float(np.mean(run)), len(run)))
            run = []
        run.append(x)
    if run:
        out.append((float(np.mean(run)), len(run)))
    return tuple(out)


def circulant_spectrum(spec: CirculantSpec, tol: float = 1e-9) -> SpectrumReport:
    """
    Adjacency eigenvalues ``lambda_j = sum_{s in C} cos(2 pi j s / n)`` of a circulant.

    The phase ``j s mod n`` is folded to ``min(r, n - r)`` in integers, so
    ``lambda_j`` and ``lambda_{n-j}`` come out bit-identical.
    """
    n = spec.n
    conn = sorted(spec.connection_set)
    lam = []
    for j in range(n):
        total = 0.0
        for s in conn:
            r = j * s % n
            total += np.cos(TWO_PI * min(r, n - r) / n)
        lam.append(float(total))
    return SpectrumReport(cluster(lam, tol), True, "adjacency", tuple(lam))


def uc_spectrum(n: int) -> SpectrumReport:
    """Adjacency spectrum of UC(n) as exact Ramanujan sums ``R(j, n)``."""
    unitary_cayley_spec(n)  # validates n
    lam = [ramanujan_closed(j, n) for j in range(n)]
    counts: dict[int, int] = {}
    for x in lam:
        counts[x] = counts.get(x, 0) + 1
    pairs = tuple((float(v), counts[v]) for v in sorted(counts, reverse=True))
    return SpectrumReport(pairs, True, "adjacency", tuple(float(x) for x in lam))


def numeric_spectrum(
    m: np.ndarray, tol_cluster: float = TOL_CLUSTER, source: str = "adjacency", sym_tol: float = 1e-12
) -> SpectrumReport:
    """Spectrum of a real symmetric matrix by ``numpy.linalg.eigvalsh``."""
    m = np.asarray(m, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if np.max(np.abs(m - m.T), initial=0.0) > sym_tol:
        raise ValueError("matrix is not symmetric")
    return SpectrumReport(cluster(np.linalg.eigvalsh(m), tol_cluster), False, source)


def snap_unit(mu: float, tol: float = 1e-9) -> float:
    """Clamp ``mu`` to ``[-1, 1]``, snapping values within ``tol`` of ``+-1`` onto them.

    Raises ``ValueError`` if ``|mu| > 1 + tol``.
    """
    if abs(mu) > 1.0 + tol:
        raise ValueError(f"discriminant eigenvalue {mu} outside [-1, 1]")
    if mu >= 1.0 - tol:
        return 1.0
    if mu <= -1.0 + tol:
        return -1.0
    return float(mu)


def spectral_map(
    disc_eigs: Sequence[float], edges: int, vertices: int, bipartite: bool, tol: float = 1e-9
) -> SpectrumReport:
    """
    Evolution spectrum (as angles) predicted from the discriminant spectrum.

    Each ``mu`` strictly inside ``(-1, 1)`` contributes the pair of angles
    ``+-arccos(mu)``; ``mu = 1`` and ``mu = -1`` contribute the single angles
    ``0`` and ``pi``. On top come ``b1 = edges - vertices + 1`` extra angles
    ``0`` and ``b1 - 1 + [bipartite]`` extra angles ``pi``. The total
    multiplicity is ``2 * edges``.

    Parameters
    ----------
    disc_eigs : sequence of float
        All ``vertices`` discriminant eigenvalues, repeated by multiplicity.
    edges, vertices : int
        Edge and vertex counts of the (connected) graph.
    bipartite : bool
        Whether the graph is bipartite.
    tol : float
        Snapping tolerance towards ``+-1``.
    """
    if len(disc_eigs) != vertices:
        raise ValueError(f"expected {vertices} discriminant eigenvalues, got {len(disc_eigs)}")
    angles: list[float] = []
    for mu in disc_eigs:
        mu = snap_unit(mu, tol)
        if mu == 1.0:
            angles.append(0.0)
        elif mu == -1.0:
            angles.append(np.pi)
        else:
            theta = float(np.arccos(mu))
            angles += [theta, TWO_PI - theta]
    b1 = edges - vertices + 1
    n_minus = b1 - 1 + int(bipartite)
    if b1 < 0 or n_minus < 0:
        raise ValueError("edge/vertex counts inconsistent with a connected graph")
    angles += [0.0] * b1 + [np.pi] * n_minus
    if len(angles) != 2 * edges:
        raise ValueError(
            f"mapped multiplicity {len(angles)} != 2|E| = {2 * edges}; "
            "check that +-1 multiplicities match connectivity/bipartiteness"
        )
    return SpectrumReport(_cluster_angles(angles, 1e-7), True, "evolution")


def _normalise_angles(angles: Iterable[float], tol: float) -> np.ndarray:
    a = np.mod(np.asarray(list(angles), dtype=np.float64), TWO_PI)
    a[a > TWO_PI - tol] -= TWO_PI  # fold values just below 2 pi onto 0
    return a


def _cluster_angles(angles: Iterable[float], tol: float) -> tuple[tuple[float, int], ...]:
    pairs = cluster(_normalise_angles(angles, tol), tol)
    return tuple(sorted(((0.0 if abs(v) < tol else v, k) for v, k in pairs), reverse=True))


def evolution_angles(u: np.ndarray) -> np.ndarray:
    """Eigenphases of a unitary matrix in ``[0, 2 pi)``, via a general eigensolver."""
    return np.mod(np.angle(np.linalg.eigvals(u)), TWO_PI)


def match_angles(a: Iterable[float], b: Iterable[float], tol: float = 1e-7) -> float:
    """
    Largest circular distance in the sorted matching of two angle multisets.

    Returns ``inf`` if the sizes differ. A return value below ``tol`` means
    the multisets agree within ``tol``, multiplicities included.
    """
    x, y = _normalise_angles(a, tol), _normalise_angles(b, tol)
    if x.shape != y.shape:
        return float("inf")
    x.sort()
    y.sort()
    diff = np.abs(x - y)
    return float(np.max(np.minimum(diff, TWO_PI - diff), initial=0.0))


@dataclass(frozen=True)
class Eigenprojector:
    eigenvalue: float
    projector: np.ndarray

    @property
    def rank(self) -> int:
        return int(round(np.trace(self.projector)))


def eigenprojectors(p: np.ndarray, tol_cluster: float = TOL_CLUSTER) -> list[Eigenprojector]:
    """Orthogonal projectors onto the eigenspaces of a symmetric matrix, eigenvalues descending."""
    p = np.asarray(p, dtype=np.float64)
    if np.max(np.abs(p - p.T), initial=0.0) > 1e-12:
        raise ValueError("matrix is not symmetric")
    w, v = np.linalg.eigh(p)
    order = np.argsort(-w, kind="stable")
    w, v = w[order], v[:, order]
    out = []
    start = 0
    for i in range(1, len(w) + 1):
        if i == len(w) or w[start] - w[i] > tol_cluster:
            block = v[:, start:i]
            out.append(Eigenprojector(float(np.mean(w[start:i])), block @ block.T))
            start = i
    return out


def eigenvalue_support(projs: Sequence[Eigenprojector], u: int, tol: float = 1e-8) -> set[float]:
    """Eigenvalues whose projector does not annihilate ``e_u``."""
    n = projs[0].projector.shape[0]
    if not 0 <= u < n:
        raise ValueError(f"vertex {u} out of range for n={n}")
    return {e.eigenvalue for e in projs if np.linalg.norm(e.projector[:, u]) > tol}


def hoffman_check(g: Graph, spectrum: SpectrumReport, tol: float = 1e-8) -> tuple[bool, float]:
    """
    Check ``q(A) = q(k)/n J`` with ``q(x) = prod_{i>=2} (x - lambda_i)``.

    ``spectrum`` supplies the distinct adjacency eigenvalues; the largest must
    be the degree ``k``. Returns ``(residual < tol, residual)``.
    """
    k = g.regular_degree()
    if k is None:
        raise ValueError("Hoffman's identity needs a regular graph")
    vals = spectrum.values
    if abs(vals[0] - k) > TOL_CLUSTER:
        raise ValueError(f"largest eigenvalue {vals[0]} is not the degree {k}")
    a = g.adjacency.astype(np.float64)
    q = np.eye(g.n)
    qk = 1.0
    for lam in vals[1:]:
        q = q @ (a - lam * np.eye(g.n))
        qk *= k - lam
    residual = float(np.max(np.abs(q - qk / g.n * np.ones((g.n, g.n)))))
    return residual < tol, residual


def is_walk_regular(g: Graph, r_max: int = 8) -> bool:
    """True iff ``diag(A^r)`` is constant for every ``r <= r_max``."""
    if r_max < 2:
        raise ValueError("r_max must be at least 2")
    a = g.adjacency.astype(object)  # exact integers, no overflow
    power = a
    for _ in range(2, r_max + 1):
        power = power.dot(a)
        diag = np.diagonal(power)
        if any(x != diag[0] for x in diag):
            return False
    return True
