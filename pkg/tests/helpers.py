"""Independent oracles used by the test suite.

Everything here is deliberately written from scratch against the
definitions (plain per-edge sums, dict-based BFS, brute-force subsets
and permutations) so that it shares no code path with the library
implementations it checks.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from fractions import Fraction

from harmrad.graphs import Graph, build_graph


def harmonic_oracle(g: Graph) -> Fraction:
    """Plain per-edge rational sum, no grouping."""
    deg = [0] * g.n
    edges = g.edge_list()
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    total = Fraction(0)
    for u, v in edges:
        total += Fraction(2, deg[u] + deg[v])
    return total


def randic_oracle(g: Graph) -> float:
    """Plain left-to-right float sum (not fsum)."""
    deg = [0] * g.n
    edges = g.edge_list()
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    total = 0.0
    for u, v in edges:
        total += (deg[u] * deg[v]) ** -0.5
    return total


def eccentricities_oracle(g: Graph) -> list[int]:
    """Dict-based BFS from every vertex; graph must be connected."""
    out = []
    for s in range(g.n):
        dist = {s: 0}
        q = deque([s])
        while q:
            u = q.popleft()
            for v in g.adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    q.append(v)
        assert len(dist) == g.n, "oracle needs a connected graph"
        out.append(max(dist.values()))
    return out


def radius_oracle(g: Graph) -> int:
    return min(eccentricities_oracle(g))


def connected_count_recurrence(n: int) -> int:
    """Labeled connected graph count by the inclusion-exclusion recurrence:
    C(n) = 2^C(n,2) - sum_{k=1}^{n-1} binom(n-1, k-1) C(k) 2^C(n-k,2)."""
    C = [0, 1]
    for m in range(2, n + 1):
        total = 1 << (m * (m - 1) // 2)
        for k in range(1, m):
            total -= math.comb(m - 1, k - 1) * C[k] * (1 << ((m - k) * (m - k - 1) // 2))
        C.append(total)
    return C[n]


def unicyclic_count_formula(n: int) -> int:
    """Labeled connected unicyclic count: sum over cycle lengths l of
    binom(n,l) * (l-1)!/2 * (rooted forests with l fixed roots)."""
    total = 0
    for l in range(3, n + 1):
        cycles = math.comb(n, l) * math.factorial(l - 1) // 2
        forests = 1 if l == n else l * n ** (n - l - 1)
        total += cycles * forests
    return total


def labeled_path_count(n: int) -> int:
    """Number of labeled paths on n >= 2 vertices."""
    return math.factorial(n) // 2


def labeled_cycle_count(n: int) -> int:
    """Number of labeled cycles on n >= 3 vertices."""
    return math.factorial(n - 1) // 2


def brute_connected_masks(n: int) -> list[int]:
    """All edge-subset bitmasks of connected graphs, via dict BFS.

    Pair (i, j), i < j sits at bit j*(j-1)//2 + i (matching the library's
    layout so counts and masks can be compared directly).
    """
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    out = []
    for mask in range(1 << len(pairs)):
        adj = {v: [] for v in range(n)}
        for p, (i, j) in enumerate(pairs):
            if mask >> p & 1:
                adj[i].append(j)
                adj[j].append(i)
        seen = {0}
        q = deque([0])
        while q:
            u = q.popleft()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    q.append(v)
        if len(seen) == n:
            out.append(mask)
    return out


def graphs_from_masks(n: int, masks: list[int]) -> list[Graph]:
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    out = []
    for mask in masks:
        edges = [pairs[p] for p in range(len(pairs)) if mask >> p & 1]
        out.append(build_graph(n, edges))
    return out


def is_isomorphic_brute(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(g1.degrees) != sorted(g2.degrees):
        return False
    e2 = set(g2.edges())
    for perm in itertools.permutations(range(g1.n)):
        if all(
            ((perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])) in e2
            for u, v in g1.edges()
        ):
            return True
    return False


def permute_graph(g: Graph, perm: list[int]) -> Graph:
    edges = [(perm[u], perm[v]) for u, v in g.edges()]
    return build_graph(g.n, edges)
