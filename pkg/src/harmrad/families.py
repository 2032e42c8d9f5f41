"""Exhaustive generation of small labeled graph families.

Families:
  connected  -- every labeled simple connected graph on n vertices,
                enumerated as edge-subset bitmasks filtered by connectivity
  trees      -- every labeled tree on n vertices via Prufer decoding
  unicyclic  -- every labeled connected graph with m = n, generated as
                tree + one chord, deduplicated by a canonical witness rule

With dedup enabled, one representative per isomorphism class is emitted
(the one whose adjacency bit string is minimal over all relabelings).

Edge bitmask layout: pair (i, j) with i < j occupies bit j*(j-1)/2 + i,
i.e. pairs ordered (0,1), (0,2), (1,2), (0,3), ...  This matches the
column-major bit order of the graph6 format.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence

from .graphs import Edge, Graph, build_graph, is_connected


class Family(Enum):
    CONNECTED = "connected"
    TREES = "trees"
    UNICYCLIC = "unicyclic"


# Feasibility caps: beyond these the labeled counts explode.
FAMILY_CAPS = {Family.CONNECTED: 8, Family.TREES: 10, Family.UNICYCLIC: 9}


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    n: int
    dedup: bool = False
    allow_large: bool = False

    def validate(self) -> None:
        minimum = 3 if self.family is Family.UNICYCLIC else 1
        if self.n < minimum:
            raise ValueError(
                f"{self.family.value} family requires n >= {minimum}, got {self.n}"
            )
        cap = FAMILY_CAPS[self.family]
        if self.n > cap and not self.allow_large:
            raise ValueError(
                f"{self.family.value} family capped at n = {cap} "
                f"(got {self.n}); set allow_large to override"
            )


def pair_index(i: int, j: int) -> int:
    """Bit position of pair (i, j), i < j."""
    return j * (j - 1) // 2 + i


def pair_table(n: int) -> list[Edge]:
    """Pairs by bit position: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def edge_mask(n: int, edges: Sequence[Edge]) -> int:
    mask = 0
    for u, v in edges:
        if u > v:
            u, v = v, u
        mask |= 1 << pair_index(u, v)
    return mask


def graph_from_mask(n: int, mask: int) -> Graph:
    pairs = pair_table(n)
    edges = []
    m = mask
    while m:
        b = m & -m
        edges.append(pairs[b.bit_length() - 1])
        m ^= b
    return build_graph(n, edges)


def canonical_mask(n: int, mask: int) -> int:
    """Edge mask of the canonical relabeling: the vertex permutation whose
    pair-ordered adjacency bit string is lexicographically minimal.

    Exact branch-and-bound over permutations.  Assigning new label t
    fixes exactly the t bits of pairs (0,t)..(t-1,t), which occupy the
    next t consecutive positions in pair order, so prefixes compare
    directly against the best complete string.  Low-degree vertices are
    tried first purely as an ordering heuristic; no candidate is skipped.
    """
    pairs = pair_table(n)
    adj = [0] * n
    m = mask
    while m:
        b = m & -m
        i, j = pairs[b.bit_length() - 1]
        adj[i] |= 1 << j
        adj[j] |= 1 << i
        m ^= b
    deg = [a.bit_count() for a in adj]
    order = sorted(range(n), key=lambda v: (deg[v], v))

    best: list[int] | None = None
    assigned: list[int] = []
    bits: list[int] = []

    def extend() -> None:
        nonlocal best
        t = len(assigned)
        if t == n:
            if best is None or bits < best:
                best = bits.copy()
            return
        for w in order:
            if w in assigned:
                continue
            new_bits = [(adj[assigned[i]] >> w) & 1 for i in range(t)]
            pos = len(bits)
            if best is not None:
                prefix = bits + new_bits
                if prefix > best[: pos + t]:
                    continue
            assigned.append(w)
            bits.extend(new_bits)
            extend()
            assigned.pop()
            del bits[pos:]

    extend()
    assert best is not None
    out = 0
    for p, bit in enumerate(best):
        if bit:
            out |= 1 << p
    return out


def connected_graphs(spec: FamilySpec) -> Iterator[Graph]:
    """All labeled simple connected graphs on spec.n vertices, in
    ascending edge-bitmask order (one per isomorphism class if dedup)."""
    if spec.family is not Family.CONNECTED:
        raise ValueError(f"spec is for family {spec.family.value}, not connected")
    spec.validate()
    n = spec.n
    min_edges = n - 1
    # masks below 2^C(n-1,2) have no edge at vertex n-1, so skip them
    start = 1 << ((n - 1) * (n - 2) // 2) if n >= 2 else 0
    for mask in range(start, 1 << (n * (n - 1) // 2)):
        if mask.bit_count() < min_edges:
            continue
        g = graph_from_mask(n, mask)
        if not is_connected(g):
            continue
        if spec.dedup and canonical_mask(n, mask) != mask:
            continue
        yield g


def prufer_decode(seq: Sequence[int], n: int) -> list[Edge]:
    """Edges of the labeled tree on n vertices encoded by a Prufer
    sequence of length n-2 over 0..n-1 (n >= 3)."""
    if n < 3 or len(seq) != n - 2:
        raise ValueError(f"need a length-{max(n - 2, 0)} sequence for n={n}")
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    edges: list[Edge] = []
    ptr = 0
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for x in seq:
        edges.append((leaf, x) if leaf < x else (x, leaf))
        deg[x] -= 1
        if deg[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    last = n - 1
    edges.append((leaf, last) if leaf < last else (last, leaf))
    return edges


def labeled_trees(spec: FamilySpec) -> Iterator[Graph]:
    """All n^(n-2) labeled trees (Cayley), in Prufer-sequence order."""
    if spec.family is not Family.TREES:
        raise ValueError(f"spec is for family {spec.family.value}, not trees")
    spec.validate()
    n = spec.n
    if n == 1:
        yield build_graph(1, [])
        return
    if n == 2:
        yield build_graph(2, [(0, 1)])
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        edges = prufer_decode(seq, n)
        if spec.dedup:
            mask = edge_mask(n, edges)
            if canonical_mask(n, mask) != mask:
                continue
        yield build_graph(n, edges)


def _tree_adjacency(n: int, edges: Sequence[Edge]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def _parents_from(root: int, adj: list[list[int]]) -> list[int]:
    parent = [-1] * len(adj)
    parent[root] = root
    stack = [root]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if parent[w] < 0:
                parent[w] = u
                stack.append(w)
    return parent


def _chord_is_canonical_witness(
    u: int, v: int, parent_u: list[int]
) -> bool:
    # The unique cycle of tree+chord (u,v) is the tree path u..v plus the
    # chord; emit only if the chord is its lexicographically smallest edge,
    # so each unicyclic graph appears for exactly one (tree, chord) pair.
    w = v
    while w != u:
        p = parent_u[w]
        e = (p, w) if p < w else (w, p)
        if e < (u, v):
            return False
        w = p
    return True


def unicyclic_graphs(spec: FamilySpec) -> Iterator[Graph]:
    """All labeled connected graphs with m = n (cyclomatic number 1)."""
    if spec.family is not Family.UNICYCLIC:
        raise ValueError(f"spec is for family {spec.family.value}, not unicyclic")
    spec.validate()
    n = spec.n
    tree_spec = FamilySpec(Family.TREES, n, dedup=False, allow_large=True)
    for tree in labeled_trees(tree_spec):
        tree_edges = tree.edge_list()
        adj = _tree_adjacency(n, tree_edges)
        parents = [_parents_from(u, adj) for u in range(n)]
        for u in range(n):
            for v in range(u + 1, n):
                if v in adj[u]:
                    continue
                if not _chord_is_canonical_witness(u, v, parents[u]):
                    continue
                edges = tree_edges + [(u, v)]
                if spec.dedup:
                    mask = edge_mask(n, edges)
                    if canonical_mask(n, mask) != mask:
                        continue
                yield build_graph(n, edges)


def generate(spec: FamilySpec) -> Iterator[Graph]:
    if spec.family is Family.CONNECTED:
        return connected_graphs(spec)
    if spec.family is Family.TREES:
        return labeled_trees(spec)
    return unicyclic_graphs(spec)
