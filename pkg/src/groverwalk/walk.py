"""
Grover walk operators on the symmetric arcs of a graph.

The four matrices are the boundary ``d`` (vertices x arcs), the shift ``S``,
the time evolution ``U = S (2 d^T d - I)`` and the discriminant ``P = d S d^T``.
All four are real for the Grover coin, so they are stored as ``float64``;
arc states may be complex.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError
from .graphs import ArcSpace, Graph, arc_space

__all__ = [
    "WalkOperators",
    "build_operators",
    "evolution_entries",
    "vertex_state",
    "evolve",
    "matrix_power",
    "DEFAULT_TOL",
]

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class WalkOperators:
    graph: Graph
    arcs: ArcSpace
    boundary: np.ndarray
    shift: np.ndarray
    evolution: np.ndarray
    discriminant: np.ndarray

    @property
    def n_arcs(self) -> int:
        return len(self.arcs)


def evolution_entries(g: Graph, arcs: ArcSpace) -> np.ndarray:
    """Evolution matrix from the entry formula ``2/deg t(b) [o(a) = t(b)] - [a = b^-1]``."""
    o, t = arcs.origin, arcs.terminus
    deg = g.degrees
    u = np.where(o[:, None] == t[None, :], 2.0 / deg[t][None, :], 0.0)
    u[arcs.inverse, np.arange(len(arcs))] -= 1.0
    return u


def build_operators(g: Graph, arcs: ArcSpace | None = None, tol: float = DEFAULT_TOL) -> WalkOperators:
    """
    Build ``d``, ``S``, ``U`` and ``P`` for the Grover walk on ``g``.

    ``U`` is formed as the product ``S (2 d^T d - I)`` and checked entrywise
    against :func:`evolution_entries` and for unitarity. On a ``k``-regular
    graph ``P`` is taken as ``A / k`` directly and the product ``d S d^T`` is
    only used as a check.

    Raises
    ------
    ConsistencyError
        If any of those checks exceeds ``tol``.
    """
    if arcs is None:
        arcs = arc_space(g)
    na = len(arcs)
    deg = g.degrees.astype(np.float64)

    d = np.zeros((g.n, na))
    d[arcs.terminus, np.arange(na)] = 1.0 / np.sqrt(deg[arcs.terminus])
    s = np.zeros((na, na))
    s[np.arange(na), arcs.inverse] = 1.0

    u = s @ (2.0 * (d.T @ d) - np.eye(na))
    err = np.max(np.abs(u - evolution_entries(g, arcs)))
    if err > tol:
        raise ConsistencyError(f"evolution matrix deviates from entry formula by {err:.3e}")
    err = np.max(np.abs(u @ u.T - np.eye(na)))
    if err > tol:
        raise ConsistencyError(f"evolution matrix not unitary (residual {err:.3e})")

    p = d @ s @ d.T
    k = g.regular_degree()
    if k is not None:
        p_exact = g.adjacency / float(k)
        err = np.max(np.abs(p - p_exact))
        if err > tol:
            raise ConsistencyError(f"discriminant deviates from A/k by {err:.3e}")
        p = p_exact

    for a in (d, s, u, p):
        a.flags.writeable = False
    return WalkOperators(g, arcs, d, s, u, p)


def vertex_state(ops: WalkOperators, u: int) -> np.ndarray:
    """Vertex-type state ``d^T e_u``: weight ``1/sqrt(deg u)`` on each arc into ``u``."""
    if not 0 <= u < ops.graph.n:
        raise ValueError(f"vertex {u} out of range for n={ops.graph.n}")
    return ops.boundary[u].astype(np.complex128)


def matrix_power(ops: WalkOperators, tau: int) -> np.ndarray:
    """``U**tau`` by repeated squaring."""
    if tau < 0:
        raise ValueError("tau must be non-negative")
    return np.linalg.matrix_power(ops.evolution, tau)


def evolve(ops: WalkOperators, state: np.ndarray, tau: int) -> np.ndarray:
    """Apply ``U`` to ``state`` ``tau`` times."""
    if tau < 0:
        raise ValueError("tau must be non-negative")
    out = np.asarray(state, dtype=np.complex128).copy()
    for _ in range(tau):
        out = ops.evolution @ out
    return out
