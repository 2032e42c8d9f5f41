"""Degree-based topological indices.

The Harmonic index H(G) = sum over edges of 2/(d_u + d_v) is computed in
exact rational arithmetic so that equality cases (e.g. H(G) = r(G) on
even cycles) are decidable.  The Randic index R(G) = sum over edges of
1/sqrt(d_u * d_v) has irrational terms and stays in floating point; all
comparisons against it carry an explicit tolerance.

By the AM-GM inequality every edge term satisfies 1/sqrt(d_u d_v) >=
2/(d_u + d_v), so R(G) >= H(G), with equality edge-wise iff d_u = d_v.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, GraphClass, classify, cyclomatic_number, distance_profile


def harmonic_index(g: Graph) -> Fraction:
    """Exact Harmonic index; 0 for edgeless graphs, defined on disconnected input."""
    degs = g.degrees
    counts = Counter(degs[u] + degs[v] for u, v in g.edges())
    total = Fraction(0)
    for s in sorted(counts):
        total += Fraction(2 * counts[s], s)
    return total


def randic_index(g: Graph) -> float:
    """Randic index as a correctly-rounded float sum (math.fsum, order independent)."""
    degs = g.degrees
    return math.fsum(1.0 / math.sqrt(degs[u] * degs[v]) for u, v in g.edges())


def path_harmonic_closed_form(n: int) -> Fraction:
    """H(P_n) = n/2 - 1/6 for n >= 3.

    The two end edges contribute 2/3 each and the n-3 interior edges 1/2
    each.  Not valid below n=3 (P_2 has H = 1, not 5/6), hence the guard.
    """
    if n < 3:
        raise ValueError(f"closed form requires n >= 3, got {n}")
    return Fraction(n, 2) - Fraction(1, 6)


@dataclass(frozen=True)
class IndexReport:
    """Indices and radius of one connected graph."""

    harmonic: Fraction
    randic: float
    radius: int
    cyclomatic: int
    graph_class: GraphClass


def index_report(g: Graph) -> IndexReport:
    profile = distance_profile(g)
    return IndexReport(
        harmonic=harmonic_index(g),
        randic=randic_index(g),
        radius=profile.radius,
        cyclomatic=cyclomatic_number(g),
        graph_class=classify(g),
    )
