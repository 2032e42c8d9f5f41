"""Verification sweeps over exhaustively enumerated graph families.

A sweep applies each requested claim's checker to every graph of a
family, tallying outcomes, collecting replayable violation certificates,
and tracking the minimum-slack witness per claim.

Performance: the sweep does not construct Graph objects or Fractions in
its inner loop.  Harmonic indices are carried as integer numerators over
the fixed denominator D = lcm(1..2(n-1)) (every edge term 2/(d_u+d_v)
divides it), so every harmonic comparison is exact integer arithmetic.
Adjacency is kept as per-vertex bitmasks and all BFS runs on ints.
Randic values use the same math.fsum over the same per-edge doubles as
randic_index, so floats agree bit-for-bit with the public checkers.

Determinism: the index space (edge bitmasks for the connected family,
Prufer indices for trees/unicyclic) is split into contiguous ascending
ranges; per-range partials are merged in range order.  Tallies are sums,
violations concatenate in index order, and extremal witnesses merge by
(slack, edge-bitmask) minimum, so the report is byte-identical for any
worker count.
"""

from __future__ import annotations

import itertools
import math
import multiprocessing
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional, Union

from .bounds import (
    EXEMPT,
    HOLDS,
    HOLDS_WITH_EQUALITY,
    RANDIC_TOLERANCE,
    VIOLATED,
    check_claim,
)
from .families import (
    Family,
    FamilySpec,
    canonical_mask,
    pair_index,
    pair_table,
    prufer_decode,
)
from .graphs import Edge, Graph, build_graph

Value = Union[Fraction, float]

SKIPPED = "skipped"
STATUS_ORDER = (HOLDS, HOLDS_WITH_EQUALITY, EXEMPT, VIOLATED, SKIPPED)

# Which claims may be swept over which family.  theorem1's universal
# claim ranges over trees only; theorem2/theorem3 run on any family
# whose members can satisfy their cyclomatic-number domain, with
# out-of-domain members tallied as skipped.
FAMILY_CLAIMS = {
    Family.TREES: ("theorem1", "conjecture1", "conjecture2", "conjecture3", "rgeh"),
    Family.UNICYCLIC: (
        "theorem2",
        "theorem3",
        "conjecture1",
        "conjecture2",
        "conjecture3",
        "rgeh",
    ),
    Family.CONNECTED: (
        "theorem2",
        "theorem3",
        "conjecture1",
        "conjecture2",
        "conjecture3",
        "rgeh",
    ),
}

_EXACT_CLAIMS = frozenset({"theorem1", "theorem2", "theorem3", "conjecture3"})

# Exact minimum of H - (r - 1) over swept graphs with 1 <= k <= 4; a
# strictly positive value certifies H > r - 1 on that range directly.
AUX_MARGIN_KEY = "theorem3_k_le_4_margin"


@dataclass(frozen=True)
class Certificate:
    """A claim verdict on one explicit graph, replayable from its edge list."""

    claim: str
    n: int
    edges: tuple[Edge, ...]
    status: str
    bound: Value
    actual: Value
    slack: Value


@dataclass(frozen=True)
class ExtremalWitness:
    edges: tuple[Edge, ...]
    slack: Value


@dataclass(frozen=True)
class MarginWitness:
    edges: tuple[Edge, ...]
    value: Fraction


@dataclass(frozen=True)
class SweepReport:
    family: str
    n: int
    dedup: bool
    claims: tuple[str, ...]
    graphs_examined: int
    tallies: dict
    violations: tuple[Certificate, ...]
    extremal: dict
    aux: dict


def replay_certificate(cert: Certificate) -> "object":
    """Rebuild the certificate's graph and re-run its claim checker."""
    g = build_graph(cert.n, cert.edges)
    return check_claim(cert.claim, g)


def certificate_replays(cert: Certificate) -> bool:
    """True iff replaying reproduces the certificate exactly."""
    res = replay_certificate(cert)
    return (
        res.status == cert.status
        and res.bound == cert.bound
        and res.actual == cert.actual
        and res.slack == cert.slack
    )


# ---------------------------------------------------------------------------
# internal machinery


@dataclass(frozen=True)
class _Context:
    family: Family
    n: int
    dedup: bool
    claims: tuple[str, ...]


@dataclass
class _Partial:
    examined: int
    tallies: dict  # claim -> [holds, equality, exempt, violated, skipped]
    violations: list
    ext: dict  # claim -> [key or None, mask, edges]; key is int num or float
    aux: list  # [num or None, mask, edges]


def _new_partial(claims: tuple[str, ...]) -> _Partial:
    return _Partial(
        examined=0,
        tallies={c: [0, 0, 0, 0, 0] for c in claims},
        violations=[],
        ext={c: [None, 0, ()] for c in claims},
        aux=[None, 0, ()],
    )


def _harmonic_tables(n: int) -> tuple[int, list[int]]:
    # D is divisible by every possible degree sum 2..2(n-1).
    D = lcm(*range(2, 2 * n - 1)) if n >= 2 else 1
    contrib = [0] * (4 * n + 1)
    for s in range(2, 2 * n - 1):
        contrib[s] = 2 * D // s
    return D, contrib


def _randic_table(n: int) -> list[list[float]]:
    rt = [[0.0] * n for _ in range(n)]
    for a in range(1, n):
        for b in range(1, n):
            rt[a][b] = 1.0 / math.sqrt(a * b)
    return rt


def _radius_all_sources(adjm: list[int], n: int) -> int:
    bl = int.bit_length
    best = n
    for s in range(n):
        reach = 1 << s
        frontier = adjm[s]
        ecc = 0
        while True:
            nf = frontier & ~reach
            if not nf:
                break
            ecc += 1
            reach |= nf
            upd = 0
            while nf:
                b = nf & -nf
                upd |= adjm[bl(b) - 1]
                nf ^= b
            frontier = upd
        if ecc < best:
            best = ecc
    return best


def _far_bfs(adjm: list[int], s: int) -> tuple[int, int]:
    # (eccentricity of s, frontier mask of the last BFS level)
    bl = int.bit_length
    reach = 1 << s
    frontier = adjm[s]
    ecc = 0
    last = reach
    while True:
        nf = frontier & ~reach
        if not nf:
            break
        ecc += 1
        reach |= nf
        last = nf
        upd = 0
        while nf:
            b = nf & -nf
            upd |= adjm[bl(b) - 1]
            nf ^= b
        frontier = upd
    return ecc, last


def _make_evaluator(ctx: _Context, D: int, part: _Partial):
    """One shared per-graph claim evaluator for all family scans.

    Must reproduce the public checkers exactly: integer comparisons for
    the rational claims, the same fsum floats for the Randic claims.
    """
    n = ctx.n
    claims = ctx.claims
    cset = set(claims)
    do_t1 = "theorem1" in cset
    do_t2 = "theorem2" in cset
    do_t3 = "theorem3" in cset
    do_c1 = "conjecture1" in cset
    do_c2 = "conjecture2" in cset
    do_c3 = "conjecture3" in cset
    do_rgeh = "rgeh" in cset
    need_randic = do_c1 or do_c2 or do_rgeh
    need_shape = do_t1 or do_c2 or do_c3
    rt = _randic_table(n) if need_randic else None
    fsum = math.fsum

    tal = part.tallies
    t1 = tal.get("theorem1")
    t2 = tal.get("theorem2")
    t3 = tal.get("theorem3")
    c1 = tal.get("conjecture1")
    c2 = tal.get("conjecture2")
    c3 = tal.get("conjecture3")
    rg = tal.get("rgeh")
    ext = part.ext
    e_t1 = ext.get("theorem1")
    e_t2 = ext.get("theorem2")
    e_t3 = ext.get("theorem3")
    e_c1 = ext.get("conjecture1")
    e_c2 = ext.get("conjecture2")
    e_c3 = ext.get("conjecture3")
    e_rg = ext.get("rgeh")
    aux = part.aux
    violations = part.violations
    tol = RANDIC_TOLERANCE

    def _cert_exact(claim: str, edges, bound: Fraction, hnum: int) -> None:
        h = Fraction(hnum, D)
        violations.append(
            Certificate(
                claim, n, tuple(sorted(edges)), VIOLATED, bound, h, h - bound
            )
        )

    def _cert_float(claim: str, edges, bound: float, actual: float) -> None:
        violations.append(
            Certificate(
                claim,
                n,
                tuple(sorted(edges)),
                VIOLATED,
                bound,
                actual,
                actual - bound,
            )
        )

    def evaluate(mask, edges, deg, hnum, radius, k):
        if need_shape:
            path_shaped = k == 0 and (n == 1 or max(deg) <= 2)
            even_path = path_shaped and n % 2 == 0
        else:
            even_path = False
        if need_randic:
            R = fsum(rt[deg[i]][deg[j]] for i, j in edges)
        else:
            R = 0.0

        if do_t1:
            if k != 0 or not edges:
                t1[4] += 1
            elif even_path:
                t1[2] += 1
                # even paths of >= 4 vertices satisfy H = r - 1/6 exactly
                if n >= 3 and 6 * hnum != D * (6 * radius - 1):
                    raise RuntimeError(
                        f"even path identity failed on n={n}, edges={sorted(edges)}"
                    )
            else:
                num = 15 * hnum - D * (15 * radius + 1)
                if num > 0:
                    t1[0] += 1
                elif num == 0:
                    t1[1] += 1
                else:
                    t1[3] += 1
                    _cert_exact(
                        "theorem1", edges, Fraction(15 * radius + 1, 15), hnum
                    )
                b = e_t1[0]
                if b is None or num < b or (num == b and mask < e_t1[1]):
                    e_t1[0] = num
                    e_t1[1] = mask
                    e_t1[2] = tuple(sorted(edges))

        if do_t2:
            if k != 1:
                t2[4] += 1
            else:
                num = hnum - D * radius
                even_cycle = n % 2 == 0 and max(deg) == 2
                if (num == 0) != even_cycle:
                    raise RuntimeError(
                        "equality characterization failed on "
                        f"n={n}, edges={sorted(edges)}"
                    )
                if num > 0:
                    t2[0] += 1
                elif num == 0:
                    t2[1] += 1
                else:
                    t2[3] += 1
                    _cert_exact("theorem2", edges, Fraction(radius), hnum)
                b = e_t2[0]
                if b is None or num < b or (num == b and mask < e_t2[1]):
                    e_t2[0] = num
                    e_t2[1] = mask
                    e_t2[2] = tuple(sorted(edges))

        if do_t3:
            if k < 1:
                t3[4] += 1
            else:
                num = 105 * hnum - D * (105 * radius - 31 * (k - 1))
                if num > 0:
                    t3[0] += 1
                elif num == 0:
                    t3[1] += 1
                else:
                    t3[3] += 1
                    _cert_exact(
                        "theorem3",
                        edges,
                        Fraction(105 * radius - 31 * (k - 1), 105),
                        hnum,
                    )
                b = e_t3[0]
                if b is None or num < b or (num == b and mask < e_t3[1]):
                    e_t3[0] = num
                    e_t3[1] = mask
                    e_t3[2] = tuple(sorted(edges))
                if 1 <= k <= 4:
                    mnum = hnum - D * (radius - 1)
                    b = aux[0]
                    if b is None or mnum < b or (mnum == b and mask < aux[1]):
                        aux[0] = mnum
                        aux[1] = mask
                        aux[2] = tuple(sorted(edges))

        if do_c1:
            slack = R - (radius - 1)
            if slack < -tol:
                c1[3] += 1
                _cert_float("conjecture1", edges, float(radius - 1), R)
            else:
                c1[0] += 1
            b = e_c1[0]
            if b is None or slack < b or (slack == b and mask < e_c1[1]):
                e_c1[0] = slack
                e_c1[1] = mask
                e_c1[2] = tuple(sorted(edges))

        if do_c2:
            if even_path:
                c2[2] += 1
            else:
                slack = R - radius
                if slack < -tol:
                    c2[3] += 1
                    _cert_float("conjecture2", edges, float(radius), R)
                else:
                    c2[0] += 1
                b = e_c2[0]
                if b is None or slack < b or (slack == b and mask < e_c2[1]):
                    e_c2[0] = slack
                    e_c2[1] = mask
                    e_c2[2] = tuple(sorted(edges))

        if do_c3:
            if even_path:
                c3[2] += 1
            else:
                num = hnum - D * radius
                if num > 0:
                    c3[0] += 1
                elif num == 0:
                    c3[1] += 1
                else:
                    c3[3] += 1
                    _cert_exact("conjecture3", edges, Fraction(radius), hnum)
                b = e_c3[0]
                if b is None or num < b or (num == b and mask < e_c3[1]):
                    e_c3[0] = num
                    e_c3[1] = mask
                    e_c3[2] = tuple(sorted(edges))

        if do_rgeh:
            hfloat = hnum / D
            slack = R - hfloat
            if slack < -tol:
                rg[3] += 1
                _cert_float("rgeh", edges, hfloat, R)
            else:
                rg[0] += 1
            b = e_rg[0]
            if b is None or slack < b or (slack == b and mask < e_rg[1]):
                e_rg[0] = slack
                e_rg[1] = mask
                e_rg[2] = tuple(sorted(edges))

    return evaluate


def _scan_connected(ctx: _Context, lo: int, hi: int) -> _Partial:
    n = ctx.n
    npairs = n * (n - 1) // 2
    pairs = pair_table(n)
    D, contrib = _harmonic_tables(n)
    part = _new_partial(ctx.claims)
    evaluate = _make_evaluator(ctx, D, part)

    # table-driven adjacency: split the bitmask into two halves and
    # precompute per-vertex neighbor masks for each half value
    lo_bits = npairs // 2
    hi_bits = npairs - lo_bits

    def half_table(nbits: int, offset: int) -> list[tuple[int, ...]]:
        out = []
        for m in range(1 << nbits):
            adj = [0] * n
            mm = m
            while mm:
                b = mm & -mm
                i, j = pairs[b.bit_length() - 1 + offset]
                adj[i] |= 1 << j
                adj[j] |= 1 << i
                mm ^= b
            out.append(tuple(adj))
        return out

    lo_tab = half_table(lo_bits, 0)
    hi_tab = half_table(hi_bits, lo_bits)
    lo_mask = (1 << lo_bits) - 1
    full = (1 << n) - 1
    min_edges = n - 1
    dedup = ctx.dedup
    bl = int.bit_length
    rng = range(n)

    for mask in range(lo, hi):
        pc = mask.bit_count()
        if pc < min_edges:
            continue
        alo = lo_tab[mask & lo_mask]
        ahi = hi_tab[mask >> lo_bits]
        adjm = [alo[v] | ahi[v] for v in rng]

        reach = 1
        frontier = adjm[0]
        while True:
            nf = frontier & ~reach
            if not nf:
                break
            reach |= nf
            upd = 0
            while nf:
                b = nf & -nf
                upd |= adjm[bl(b) - 1]
                nf ^= b
            frontier = upd
        if reach != full:
            continue
        if dedup and canonical_mask(n, mask) != mask:
            continue

        deg = [a.bit_count() for a in adjm]
        edges = []
        hnum = 0
        mm = mask
        while mm:
            b = mm & -mm
            e = pairs[bl(b) - 1]
            edges.append(e)
            hnum += contrib[deg[e[0]] + deg[e[1]]]
            mm ^= b
        radius = _radius_all_sources(adjm, n)
        part.examined += 1
        evaluate(mask, edges, deg, hnum, radius, pc - n + 1)
    return part


def _scan_trees(ctx: _Context, lo: int, hi: int) -> _Partial:
    n = ctx.n
    D, contrib = _harmonic_tables(n)
    part = _new_partial(ctx.claims)
    evaluate = _make_evaluator(ctx, D, part)

    if n <= 2:
        if lo == 0 and hi > 0:
            part.examined += 1
            if n == 1:
                evaluate(0, [], [0], 0, 0, 0)
            else:
                evaluate(1, [(0, 1)], [1, 1], contrib[2], 1, 0)
        return part

    dedup = ctx.dedup
    seqs = itertools.islice(itertools.product(range(n), repeat=n - 2), lo, hi)
    for seq in seqs:
        edges = prufer_decode(seq, n)
        deg = [1] * n
        for x in seq:
            deg[x] += 1
        adjm = [0] * n
        hnum = 0
        mask = 0
        for u, v in edges:
            adjm[u] |= 1 << v
            adjm[v] |= 1 << u
            hnum += contrib[deg[u] + deg[v]]
            mask |= 1 << (v * (v - 1) // 2 + u)
        if dedup and canonical_mask(n, mask) != mask:
            continue
        # tree radius = ceil(diameter / 2); diameter via double BFS
        _, lastf = _far_bfs(adjm, 0)
        a = (lastf & -lastf).bit_length() - 1
        diam, _ = _far_bfs(adjm, a)
        part.examined += 1
        evaluate(mask, edges, deg, hnum, (diam + 1) // 2, 0)
    return part


def _scan_unicyclic(ctx: _Context, lo: int, hi: int) -> _Partial:
    n = ctx.n
    D, contrib = _harmonic_tables(n)
    part = _new_partial(ctx.claims)
    evaluate = _make_evaluator(ctx, D, part)
    dedup = ctx.dedup

    seqs = itertools.islice(itertools.product(range(n), repeat=n - 2), lo, hi)
    for seq in seqs:
        tree_edges = prufer_decode(seq, n)
        deg0 = [1] * n
        for x in seq:
            deg0[x] += 1
        adj: list[list[int]] = [[] for _ in range(n)]
        adjm0 = [0] * n
        tmask = 0
        for u, v in tree_edges:
            adj[u].append(v)
            adj[v].append(u)
            adjm0[u] |= 1 << v
            adjm0[v] |= 1 << u
            tmask |= 1 << (v * (v - 1) // 2 + u)
        parents = []
        for root in range(n):
            parent = [-1] * n
            parent[root] = root
            stack = [root]
            while stack:
                x = stack.pop()
                for w in adj[x]:
                    if parent[w] < 0:
                        parent[w] = x
                        stack.append(w)
            parents.append(parent)

        for u in range(n):
            pu = parents[u]
            au = adj[u]
            for v in range(u + 1, n):
                if v in au:
                    continue
                # chord must be the lex-smallest edge on its cycle
                uv = (u, v)
                w = v
                ok = True
                while w != u:
                    p = pu[w]
                    if ((p, w) if p < w else (w, p)) < uv:
                        ok = False
                        break
                    w = p
                if not ok:
                    continue
                mask = tmask | 1 << (v * (v - 1) // 2 + u)
                if dedup and canonical_mask(n, mask) != mask:
                    continue
                deg = deg0.copy()
                deg[u] += 1
                deg[v] += 1
                hnum = contrib[deg[u] + deg[v]]
                for a, b in tree_edges:
                    hnum += contrib[deg[a] + deg[b]]
                adjm = adjm0.copy()
                adjm[u] |= 1 << v
                adjm[v] |= 1 << u
                radius = _radius_all_sources(adjm, n)
                edges = tree_edges + [uv]
                part.examined += 1
                evaluate(mask, edges, deg, hnum, radius, 1)
    return part


_SCANNERS = {
    Family.CONNECTED: _scan_connected,
    Family.TREES: _scan_trees,
    Family.UNICYCLIC: _scan_unicyclic,
}


def _index_space(family: Family, n: int) -> int:
    if family is Family.CONNECTED:
        return 1 << (n * (n - 1) // 2)
    return n ** (n - 2) if n >= 3 else 1


def _run_partition(args) -> _Partial:
    family, n, dedup, claims, lo, hi = args
    ctx = _Context(family, n, dedup, claims)
    return _SCANNERS[family](ctx, lo, hi)


def _split_ranges(total: int, chunks: int) -> list[tuple[int, int]]:
    chunks = max(1, min(chunks, total))
    step = total // chunks
    extra = total % chunks
    ranges = []
    start = 0
    for i in range(chunks):
        end = start + step + (1 if i < extra else 0)
        ranges.append((start, end))
        start = end
    return ranges


def _merge(parts: list[_Partial], claims: tuple[str, ...]) -> _Partial:
    out = parts[0]
    for p in parts[1:]:
        out.examined += p.examined
        for c in claims:
            a = out.tallies[c]
            b = p.tallies[c]
            for i in range(5):
                a[i] += b[i]
            ea = out.ext[c]
            eb = p.ext[c]
            if eb[0] is not None and (
                ea[0] is None
                or eb[0] < ea[0]
                or (eb[0] == ea[0] and eb[1] < ea[1])
            ):
                out.ext[c] = eb
        out.violations.extend(p.violations)
        if p.aux[0] is not None and (
            out.aux[0] is None
            or p.aux[0] < out.aux[0]
            or (p.aux[0] == out.aux[0] and p.aux[1] < out.aux[1])
        ):
            out.aux = p.aux
    return out


def sweep(
    spec: FamilySpec, claims: list[str] | tuple[str, ...], jobs: int = 1
) -> SweepReport:
    """Run every requested claim over the whole family described by spec.

    jobs > 1 partitions the enumeration index space into contiguous
    ranges scanned by worker processes; the merged report is identical
    to the single-process one.
    """
    spec.validate()
    allowed = FAMILY_CLAIMS[spec.family]
    ordered: list[str] = []
    for c in claims:
        if c not in allowed:
            raise ValueError(
                f"claim {c!r} not applicable to family {spec.family.value!r} "
                f"(allowed: {', '.join(allowed)})"
            )
        if c not in ordered:
            ordered.append(c)
    if not ordered:
        raise ValueError("no claims requested")
    claims_t = tuple(ordered)

    total = _index_space(spec.family, spec.n)
    if jobs <= 1:
        partials = [
            _run_partition(
                (spec.family, spec.n, spec.dedup, claims_t, 0, total)
            )
        ]
    else:
        ranges = _split_ranges(total, jobs * 4)
        args = [
            (spec.family, spec.n, spec.dedup, claims_t, a, b) for a, b in ranges
        ]
        with multiprocessing.get_context("fork").Pool(jobs) as pool:
            partials = pool.map(_run_partition, args, chunksize=1)
    merged = _merge(partials, claims_t)

    D, _ = _harmonic_tables(spec.n)
    slack_den = {
        "theorem1": 15 * D,
        "theorem2": D,
        "theorem3": 105 * D,
        "conjecture3": D,
    }
    extremal = {}
    for c in claims_t:
        key, _mask, edges = merged.ext[c]
        if key is None:
            extremal[c] = None
        elif c in _EXACT_CLAIMS:
            extremal[c] = ExtremalWitness(edges, Fraction(key, slack_den[c]))
        else:
            extremal[c] = ExtremalWitness(edges, key)
    aux = {}
    if "theorem3" in claims_t and merged.aux[0] is not None:
        aux[AUX_MARGIN_KEY] = MarginWitness(
            merged.aux[2], Fraction(merged.aux[0], D)
        )

    return SweepReport(
        family=spec.family.value,
        n=spec.n,
        dedup=spec.dedup,
        claims=claims_t,
        graphs_examined=merged.examined,
        tallies={
            c: dict(zip(STATUS_ORDER, merged.tallies[c])) for c in claims_t
        },
        violations=tuple(merged.violations),
        extremal=extremal,
        aux=aux,
    )
