"""Simple undirected graphs and their structural invariants.

Vertices are dense integers 0..n-1.  Adjacency is stored as per-vertex
sorted neighbor tuples, so iteration order is deterministic and degree
lookup is O(1).  Graph values are immutable after construction and safe
to share across worker processes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Invalid graph construction or operation input."""


class DisconnectedGraphError(GraphError):
    """Raised by invariants that are only defined on connected graphs."""


Edge = tuple[int, int]


class Graph:
    """Immutable simple undirected graph.

    Invariants: no self-loops, no multi-edges, symmetric adjacency, and
    ``m`` equal to half the sum of neighbor-list lengths.
    """

    __slots__ = ("n", "adj", "m", "degrees")

    def __init__(self, n: int, adj: tuple[tuple[int, ...], ...], m: int):
        self.n = n
        self.adj = adj
        self.m = m
        self.degrees = tuple(len(nbrs) for nbrs in adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> Iterator[Edge]:
        """Yield edges as (u, v) with u < v, in lexicographic order."""
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if v > u:
                    yield (u, v)

    def edge_list(self) -> list[Edge]:
        return list(self.edges())

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on vertices 0..n-1 from unordered vertex pairs.

    Rejects self-loops, duplicate edges, and out-of-range vertices.
    """
    if not isinstance(n, int) or n < 1:
        raise GraphError(f"vertex count must be a positive integer, got {n!r}")
    nbrs: list[list[int]] = [[] for _ in range(n)]
    seen: set[Edge] = set()
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        e = _normalize_edge(u, v)
        if e in seen:
            raise GraphError(f"duplicate edge ({e[0]}, {e[1]})")
        seen.add(e)
        nbrs[u].append(v)
        nbrs[v].append(u)
    adj = tuple(tuple(sorted(a)) for a in nbrs)
    return Graph(n, adj, len(seen))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """Return a new graph with edge (u, v) added."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"edge ({u}, {v}) out of range for n={g.n}")
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    if g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) already present")
    adj = list(g.adj)
    adj[u] = tuple(sorted(adj[u] + (v,)))
    adj[v] = tuple(sorted(adj[v] + (u,)))
    return Graph(g.n, tuple(adj), g.m + 1)


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    """Return a new graph with edge (u, v) removed (graph may disconnect)."""
    if not g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) not present")
    adj = list(g.adj)
    adj[u] = tuple(w for w in adj[u] if w != v)
    adj[v] = tuple(w for w in adj[v] if w != u)
    return Graph(g.n, tuple(adj), g.m - 1)


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0."""
    if g.n == 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for v in g.adj[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                stack.append(v)
    return count == g.n


def _require_connected(g: Graph, what: str) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError(f"{what} is undefined on disconnected graphs")


def _bfs_eccentricity(g: Graph, source: int) -> int:
    dist = [-1] * g.n
    dist[source] = 0
    q = deque([source])
    ecc = 0
    while q:
        u = q.popleft()
        du = dist[u]
        if du > ecc:
            ecc = du
        for v in g.adj[u]:
            if dist[v] < 0:
                dist[v] = du + 1
                q.append(v)
    return ecc


@dataclass(frozen=True)
class DistanceProfile:
    eccentricities: tuple[int, ...]
    radius: int
    diameter: int


def distance_profile(g: Graph) -> DistanceProfile:
    """All-sources BFS eccentricities plus their min (radius) and max (diameter)."""
    _require_connected(g, "eccentricity")
    ecc = tuple(_bfs_eccentricity(g, s) for s in range(g.n))
    return DistanceProfile(ecc, min(ecc), max(ecc))


def radius(g: Graph) -> int:
    return distance_profile(g).radius


def cyclomatic_number(g: Graph) -> int:
    """Circuit rank m - n + 1 (number of independent cycles) of a connected graph."""
    _require_connected(g, "cyclomatic number")
    return g.m - g.n + 1


class GraphKind(Enum):
    TREE = "tree"
    EVEN_PATH = "even_path"
    ODD_PATH = "odd_path"
    EVEN_CYCLE = "even_cycle"
    ODD_CYCLE = "odd_cycle"
    UNICYCLIC = "unicyclic"
    GENERAL = "general"


_TREE_KINDS = frozenset({GraphKind.TREE, GraphKind.EVEN_PATH, GraphKind.ODD_PATH})
_CYCLE_KINDS = frozenset({GraphKind.EVEN_CYCLE, GraphKind.ODD_CYCLE})


@dataclass(frozen=True)
class GraphClass:
    """Most specific structural class of a connected graph, with its circuit rank."""

    kind: GraphKind
    cyclomatic: int

    def __post_init__(self) -> None:
        k = self.cyclomatic
        if self.kind in _TREE_KINDS and k != 0:
            raise ValueError(f"{self.kind.value} requires cyclomatic number 0, got {k}")
        if (self.kind in _CYCLE_KINDS or self.kind is GraphKind.UNICYCLIC) and k != 1:
            raise ValueError(f"{self.kind.value} requires cyclomatic number 1, got {k}")
        if self.kind is GraphKind.GENERAL and k < 2:
            raise ValueError(f"general class requires cyclomatic number >= 2, got {k}")

    @property
    def is_tree_like(self) -> bool:
        return self.kind in _TREE_KINDS

    @property
    def is_cycle(self) -> bool:
        return self.kind in _CYCLE_KINDS

    @property
    def is_even_path(self) -> bool:
        return self.kind is GraphKind.EVEN_PATH


def _is_path_shaped(g: Graph) -> bool:
    if g.n == 1:
        return True
    degs = g.degrees
    return max(degs) <= 2 and sum(1 for d in degs if d == 1) == 2


def classify(g: Graph) -> GraphClass:
    """Classify a connected graph, returning the most specific tag.

    Even/odd paths refine trees; even/odd cycles refine unicyclic graphs.
    """
    _require_connected(g, "classification")
    k = g.m - g.n + 1
    if k == 0:
        if _is_path_shaped(g):
            kind = GraphKind.EVEN_PATH if g.n % 2 == 0 else GraphKind.ODD_PATH
        else:
            kind = GraphKind.TREE
        return GraphClass(kind, 0)
    if k == 1:
        if all(d == 2 for d in g.degrees):
            kind = GraphKind.EVEN_CYCLE if g.n % 2 == 0 else GraphKind.ODD_CYCLE
        else:
            kind = GraphKind.UNICYCLIC
        return GraphClass(kind, 1)
    return GraphClass(GraphKind.GENERAL, k)


# Named constructions used throughout the tests and docs.

def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """Star K_{1,leaves}: vertex 0 adjacent to 1..leaves."""
    if leaves < 1:
        raise GraphError(f"star needs at least 1 leaf, got {leaves}")
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)
