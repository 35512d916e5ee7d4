"""Simple undirected graphs, cut predicates, bridges and the l-stretch.

Vertices are the integers ``0..n-1``.  Vertex sets are exposed as
``frozenset`` objects; internally most routines work on integer bitmasks,
where bit ``v`` stands for vertex ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

Edge = tuple[int, int]
VertexSet = frozenset


class GraphError(ValueError):
    """Invalid graph, cut or graph operation argument."""


class DisconnectedGraphError(GraphError):
    """Raised where an operation is only defined for connected graphs."""


class GraphFormatError(GraphError):
    """Malformed graph file; ``lineno`` is 1-based (0 when not line specific)."""

    def __init__(self, message: str, lineno: int = 0):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno else message)


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` is kept as a lexicographically sorted tuple of pairs
    ``(u, v)`` with ``u < v``; duplicate pairs given to the constructor are
    merged.
    """

    n: int
    edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        normed = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {e} has an endpoint outside [0, {self.n})")
            normed.add(_norm_edge(u, v))
        object.__setattr__(self, "edges", tuple(sorted(normed)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbourhood bitmask of every vertex."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    def neighbors(self, v: int) -> list[int]:
        a = self.adjacency[v]
        return [w for w in range(self.n) if a >> w & 1]

    def relabel(self, perm) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, tuple(_norm_edge(perm[u], perm[v]) for u, v in self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def full_mask(n: int) -> int:
    return (1 << n) - 1


def to_mask(s: Iterable[int]) -> int:
    mask = 0
    for v in s:
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> VertexSet:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def _component_of(adj, start: int, within: int) -> int:
    """Bitmask of the component of ``start`` inside the vertex mask ``within``."""
    reach = 1 << start
    frontier = reach
    while frontier:
        v = (frontier & -frontier).bit_length() - 1
        frontier &= frontier - 1
        new = adj[v] & within & ~reach
        reach |= new
        frontier |= new
    return reach


def mask_is_connected(adj, mask: int) -> bool:
    """True iff the vertices in ``mask`` induce a connected subgraph (or none)."""
    if not mask:
        return True
    start = (mask & -mask).bit_length() - 1
    return _component_of(adj, start, mask) == mask


def component_masks(n: int, adj, edges_removed: Iterable[Edge] = ()) -> list[int]:
    removed = set(edges_removed)
    if removed:
        adj = list(adj)
        for u, v in removed:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
    left = full_mask(n)
    comps = []
    while left:
        start = (left & -left).bit_length() - 1
        comp = _component_of(adj, start, left)
        comps.append(comp)
        left &= ~comp
    return comps


def components(g: Graph) -> list[VertexSet]:
    """Connected components, ordered by their smallest vertex."""
    return [from_mask(c) for c in component_masks(g.n, g.adjacency)]


def is_connected(g: Graph) -> bool:
    return len(component_masks(g.n, g.adjacency)) <= 1


def induces_connected(g: Graph, s: Iterable[int]) -> bool:
    """Whether ``s`` induces a connected subgraph; the empty set does."""
    mask = to_mask(s)
    if mask >> g.n:
        raise GraphError("vertex set is not a subset of the graph's vertices")
    return mask_is_connected(g.adjacency, mask)


@dataclass(frozen=True)
class Cut:
    """Unordered bipartition of the vertices into two non-empty shores.

    ``shore0`` always contains vertex 0, so each partition has exactly one
    representative.
    """

    shore0: VertexSet
    shore1: VertexSet

    @classmethod
    def from_shore(cls, n: int, shore: Iterable[int]) -> "Cut":
        return cls.from_mask(n, to_mask(shore))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Cut":
        full = full_mask(n)
        if mask & ~full:
            raise GraphError("shore is not a subset of the graph's vertices")
        if mask & 1:
            mask = full & ~mask
        if mask == 0 or mask == full:
            raise GraphError("both shores of a cut must be non-empty")
        return cls(from_mask(full & ~mask), from_mask(mask))

    @property
    def mask1(self) -> int:
        return to_mask(self.shore1)

    def validate(self, g: Graph) -> None:
        s0, s1 = to_mask(self.shore0), to_mask(self.shore1)
        if s0 & s1 or (s0 | s1) != full_mask(g.n) or not s0 or not s1:
            raise GraphError("shores do not partition the vertex set")
        if not s0 & 1:
            raise GraphError("vertex 0 must lie in shore0")


def iter_cuts(g: Graph) -> Iterator[Cut]:
    """All cuts of ``g``: ``2**(n-1) - 1`` of them when ``n >= 1``."""
    for half in range(1, 1 << max(g.n - 1, 0)):
        yield Cut.from_mask(g.n, half << 1)


def crossing_mask_edges(g: Graph, shore_mask: int) -> frozenset[Edge]:
    return frozenset(e for e in g.edges if (shore_mask >> e[0] ^ shore_mask >> e[1]) & 1)


def crossing_set(g: Graph, c: Cut) -> frozenset[Edge]:
    """Edges with one endpoint in each shore."""
    c.validate(g)
    return crossing_mask_edges(g, c.mask1)


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("cocircuits are only defined for connected graphs")


def is_cocircuit(g: Graph, c: Cut) -> bool:
    """A cut is a cocircuit iff deleting its crossing set leaves two components."""
    _require_connected(g)
    removed = crossing_set(g, c)
    return len(component_masks(g.n, g.adjacency, removed)) == 2


def bridges(g: Graph) -> frozenset[Edge]:
    """Edges whose deletion increases the number of components (Tarjan lowpoints)."""
    disc = [-1] * g.n
    low = [0] * g.n
    found = set()
    counter = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = counter
        counter += 1
        # iterative DFS; stack holds (vertex, parent, neighbour iterator)
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if parent >= 0:
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        found.add(_norm_edge(parent, v))
    return frozenset(found)


def stretch(g: Graph, l: int) -> tuple[Graph, dict[Edge, tuple[int, ...]]]:
    """Replace every edge by a path with ``l`` edges.

    Returns the stretched graph and, for each original edge ``(u, v)``, the
    vertex sequence of its path from ``u`` to ``v``.  Internal vertices of
    the path for the ``i``-th edge (edges in sorted order) get the ids
    ``n + (l-1)*i + t`` for ``t = 0..l-2``.
    """
    if l < 1:
        raise GraphError(f"stretch length must be at least 1, got {l}")
    new_edges = []
    paths = {}
    for i, (u, v) in enumerate(g.edges):
        inner = [g.n + (l - 1) * i + t for t in range(l - 1)]
        path = (u, *inner, v)
        paths[(u, v)] = path
        new_edges.extend(zip(path, path[1:]))
    return Graph(g.n + g.m * (l - 1), tuple(new_edges)), paths


def parse_graph(text: str) -> Graph:
    """Read the ``p edge`` text format (1-based endpoints)."""
    n = expected = None
    edges: list[Edge] = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphFormatError("duplicate header", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphFormatError("expected 'p edge <n> <m>'", lineno)
            try:
                n, expected = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphFormatError("non-integer in header", lineno) from None
            if n < 0 or expected < 0:
                raise GraphFormatError("negative count in header", lineno)
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError("edge line before header", lineno)
            if len(parts) != 3:
                raise GraphFormatError("expected 'e <u> <v>'", lineno)
            try:
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
            except ValueError:
                raise GraphFormatError("non-integer endpoint", lineno) from None
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"endpoint out of range 1..{n}", lineno)
            if u == v:
                raise GraphFormatError(f"loop at vertex {u + 1}", lineno)
            e = _norm_edge(u, v)
            if e in seen:
                raise GraphFormatError(f"duplicate edge {u + 1} {v + 1}", lineno)
            seen.add(e)
            edges.append(e)
        else:
            raise GraphFormatError(f"unrecognised line {line!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p edge' header")
    if len(edges) != expected:
        raise GraphFormatError(f"header announces {expected} edges, found {len(edges)}")
    return Graph(n, tuple(edges))


def serialize_graph(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))
