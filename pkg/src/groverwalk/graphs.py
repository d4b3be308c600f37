"""
Graph families and the arc space a Grover walk acts on.

Vertices are always the dense integers ``0..n-1``. Every :class:`Graph` is
simple, undirected and connected; disconnected input is rejected when the
graph is built.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import GraphValidationError
from .numtheory import units

__all__ = [
    "Graph",
    "ArcSpace",
    "CirculantSpec",
    "cayley",
    "unitary_cayley",
    "named_graph",
    "arc_space",
    "parse_edge_list",
    "read_edge_list",
    "write_edge_list",
]


def _frozen(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class Graph:
    """Simple connected undirected graph on vertices ``0..n-1``.

    ``edges`` is normalised to a sorted tuple of pairs ``(u, v)`` with ``u < v``.
    ``labels`` optionally records the original vertex names of ingested files.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphValidationError(f"a graph needs at least one vertex, got n={self.n}")
        norm = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphValidationError(f"edge ({u}, {v}) out of range for n={self.n}")
            if u == v:
                raise GraphValidationError(f"loop at vertex {u}")
            e = (min(u, v), max(u, v))
            if e in norm:
                raise GraphValidationError(f"parallel edge {e}")
            norm.add(e)
        object.__setattr__(self, "edges", tuple(sorted(norm)))
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphValidationError("label map must name every vertex")
        if not self._connected():
            raise GraphValidationError("graph is disconnected")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, tuple((int(u), int(v)) for u, v in edges))

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @cached_property
    def neighbours(self) -> tuple[tuple[int, ...], ...]:
        nb: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].append(v)
            nb[v].append(u)
        return tuple(tuple(sorted(x)) for x in nb)

    @cached_property
    def adjacency(self) -> np.ndarray:
        """0/1 adjacency matrix as ``int64``."""
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        return _frozen(a)

    @cached_property
    def degrees(self) -> np.ndarray:
        return _frozen(np.array([len(x) for x in self.neighbours], dtype=np.int64))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u, v])

    def regular_degree(self) -> int | None:
        """Common degree if the graph is regular, else ``None``."""
        d = self.degrees
        return int(d[0]) if np.all(d == d[0]) else None

    @cached_property
    def is_bipartite(self) -> bool:
        colour = [-1] * self.n
        colour[0] = 0
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for y in self.neighbours[x]:
                if colour[y] < 0:
                    colour[y] = 1 - colour[x]
                    queue.append(y)
                elif colour[y] == colour[x]:
                    return False
        return True

    @property
    def betti_number(self) -> int:
        """First Betti number ``|E| - |V| + 1`` of a connected graph."""
        return self.m - self.n + 1

    def _connected(self) -> bool:
        nb: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].append(v)
            nb[v].append(u)
        seen = {0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for y in nb[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return len(seen) == self.n


@dataclass(frozen=True)
class ArcSpace:
    """Symmetric arcs of a graph, in lexicographic order of ``(origin, terminus)``.

    ``inverse[a]`` is the index of the reversed arc.
    """

    arcs: np.ndarray
    inverse: np.ndarray

    def __len__(self) -> int:
        return len(self.arcs)

    @property
    def origin(self) -> np.ndarray:
        return self.arcs[:, 0]

    @property
    def terminus(self) -> np.ndarray:
        return self.arcs[:, 1]

    def index(self, o: int, t: int) -> int:
        """Index of arc ``(o, t)``; raises ``KeyError`` if absent."""
        hit = np.flatnonzero((self.arcs[:, 0] == o) & (self.arcs[:, 1] == t))
        if hit.size == 0:
            raise KeyError((o, t))
        return int(hit[0])


def arc_space(g: Graph) -> ArcSpace:
    if g.m == 0:
        raise ValueError("arc space of a graph without edges is empty")
    arcs = sorted([(u, v) for u, v in g.edges] + [(v, u) for u, v in g.edges])
    pos = {a: i for i, a in enumerate(arcs)}
    inverse = np.array([pos[(t, o)] for o, t in arcs], dtype=np.int64)
    return ArcSpace(_frozen(np.array(arcs, dtype=np.int64)), _frozen(inverse))


@dataclass(frozen=True)
class CirculantSpec:
    """Circulant graph data: modulus ``n`` and an inverse-closed connection set."""

    n: int
    connection_set: frozenset[int]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise GraphValidationError(f"circulant needs n >= 2, got {self.n}")
        c = frozenset(int(s) for s in self.connection_set)
        if any(not 0 <= s < self.n for s in c):
            raise GraphValidationError(f"connection set must hold residues in [0, {self.n})")
        if 0 in c:
            raise GraphValidationError("0 may not be in the connection set")
        missing = sorted(s for s in c if (self.n - s) not in c)
        if missing:
            raise GraphValidationError(
                f"connection set is not inverse-closed: {missing[0]} present but "
                f"{self.n - missing[0]} absent"
            )
        object.__setattr__(self, "connection_set", c)

    @property
    def degree(self) -> int:
        return len(self.connection_set)

    def generates(self) -> bool:
        """True iff the connection set generates Z_n, i.e. the graph is connected."""
        g = self.n
        for s in self.connection_set:
            g = gcd(g, s)
        return g == 1


def cayley(spec: CirculantSpec) -> Graph:
    """Circulant graph ``Cay(Z_n, C)``: ``u ~ v`` iff ``(u - v) mod n`` lies in ``C``."""
    if not spec.generates():
        raise GraphValidationError(
            f"connection set {sorted(spec.connection_set)} does not generate Z_{spec.n}"
        )
    edges = [(u, (u + s) % spec.n) for u in range(spec.n) for s in spec.connection_set]
    return Graph(spec.n, tuple({(min(e), max(e)) for e in edges}))


def unitary_cayley_spec(n: int) -> CirculantSpec:
    if n < 2:
        raise ValueError(f"unitary Cayley graph needs n >= 2, got {n}")
    return CirculantSpec(n, frozenset(units(n)))


def unitary_cayley(n: int) -> Graph:
    """UC(n): the circulant on Z_n whose connection set is the group of units."""
    return cayley(unitary_cayley_spec(n))


def _complete_multipartite(parts: Sequence[int]) -> Graph:
    if len(parts) < 2 or any(p < 1 for p in parts):
        raise ValueError(f"invalid part sizes {list(parts)}")
    block = []
    for i, p in enumerate(parts):
        block += [i] * p
    n = len(block)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if block[u] != block[v]]
    return Graph(n, tuple(edges))


def named_graph(family: str, params: Sequence[int]) -> Graph:
    """
    Build a standard graph by family name.

    Families and parameters:

    * ``cycle [n]`` (n >= 3)
    * ``complete [n]`` (n >= 2)
    * ``complete_bipartite [m]`` or ``[r, s]``
    * ``complete_tripartite [m]`` or ``[a, b, c]``
    * ``hamming [s, t]`` (s >= 1, t >= 2); vertices are s-tuples over ``range(t)``
      in lexicographic order
    """
    params = [int(p) for p in params]
    if family == "cycle":
        if len(params) != 1 or params[0] < 3:
            raise ValueError("cycle takes one parameter n >= 3")
        n = params[0]
        return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))
    if family == "complete":
        if len(params) != 1 or params[0] < 2:
            raise ValueError("complete takes one parameter n >= 2")
        n = params[0]
        return Graph(n, tuple(itertools.combinations(range(n), 2)))
    if family == "complete_bipartite":
        if len(params) not in (1, 2):
            raise ValueError("complete_bipartite takes [m] or [r, s]")
        return _complete_multipartite(params * 2 if len(params) == 1 else params)
    if family == "complete_tripartite":
        if len(params) not in (1, 3):
            raise ValueError("complete_tripartite takes [m] or [a, b, c]")
        return _complete_multipartite(params * 3 if len(params) == 1 else params)
    if family == "hamming":
        if len(params) != 2 or params[0] < 1 or params[1] < 2:
            raise ValueError("hamming takes [s, t] with s >= 1, t >= 2")
        s, t = params
        verts = list(itertools.product(range(t), repeat=s))
        edges = [
            (i, j)
            for i, j in itertools.combinations(range(len(verts)), 2)
            if sum(a != b for a, b in zip(verts[i], verts[j])) == 1
        ]
        return Graph(len(verts), tuple(edges))
    raise ValueError(f"unknown graph family {family!r}")


def parse_edge_list(text: str) -> Graph:
    """
    Parse the edge-list format: a header ``n m`` followed by ``m`` lines ``u v``.

    Vertices given as integers in ``[0, n)`` are used as is. Any other tokens
    are treated as labels and relabelled to ``0..n-1`` in order of first
    appearance; the original names are kept in ``Graph.labels``.
    """
    tokens = text.split()
    if len(tokens) < 2:
        raise GraphValidationError("missing header line 'n m'")
    try:
        n, m = int(tokens[0]), int(tokens[1])
    except ValueError as exc:
        raise GraphValidationError("header must be two integers 'n m'") from exc
    body = tokens[2:]
    if len(body) != 2 * m:
        raise GraphValidationError(f"header promises {m} edges, found {len(body) / 2:g}")
    pairs = list(zip(body[0::2], body[1::2]))

    def as_index(tok: str) -> int | None:
        try:
            x = int(tok)
        except ValueError:
            return None
        return x if 0 <= x < n else None

    if all(as_index(a) is not None and as_index(b) is not None for a, b in pairs):
        return Graph(n, tuple((int(a), int(b)) for a, b in pairs))

    label_map: dict[str, int] = {}
    for tok in itertools.chain.from_iterable(pairs):
        label_map.setdefault(tok, len(label_map))
    if len(label_map) != n:
        raise GraphValidationError(f"found {len(label_map)} distinct vertex labels, expected {n}")
    edges = tuple((label_map[a], label_map[b]) for a, b in pairs)
    return Graph(n, edges, labels=tuple(label_map))


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text(encoding="ascii"))


def write_edge_list(g: Graph, path: str | Path) -> None:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    Path(path).write_text("\n".join(lines) + "\n", encoding="ascii")
