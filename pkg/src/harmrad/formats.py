"""Graph serialization: graph6 strings and edge-list text files.

graph6 (the standard ASCII encoding): the vertex count n is encoded in
the leading byte as n+63 for n <= 62, or as '~' followed by three bytes
carrying an 18-bit n.  The upper triangle of the adjacency matrix
follows, bits ordered column-major over pairs (i, j) with i < j -- i.e.
(0,1), (0,2), (1,2), (0,3), ... -- packed six bits per byte, most
significant bit first, each byte offset by 63.  Padding bits up to a
multiple of six must be zero.  All bytes lie in [63, 126].

Edge-list text: '#' starts a comment, blank lines are skipped; the first
data line is "n m" and each of the next m data lines is "u v" with
0-based vertex labels.
"""

from __future__ import annotations

from .graphs import Graph, build_graph

_MAX_PARSED_N = 512  # sanity cap far above anything the tool can sweep


class FormatError(ValueError):
    """Malformed graph6 or edge-list input."""


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line into a Graph."""
    s = line.strip()
    if not s:
        raise FormatError("empty graph6 string")
    data = [ord(ch) - 63 for ch in s]
    for ch, v in zip(s, data):
        if not (0 <= v <= 63):
            raise FormatError(f"byte {ch!r} outside graph6 range [63, 126]")
    if data[0] <= 62:
        n = data[0]
        body = data[1:]
    else:
        if len(data) < 4 or data[1] > 62:
            raise FormatError("truncated or oversized graph6 header")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    if n < 1:
        raise FormatError(f"unsupported vertex count {n}")
    if n > _MAX_PARSED_N:
        raise FormatError(f"vertex count {n} beyond supported maximum {_MAX_PARSED_N}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) != nbytes:
        raise FormatError(
            f"graph6 body for n={n} needs {nbytes} bytes, got {len(body)}"
        )
    edges = []
    p = 0
    for j in range(1, n):
        for i in range(j):
            if body[p // 6] & (1 << (5 - p % 6)):
                edges.append((i, j))
            p += 1
    # remaining pad bits must be zero
    while p < 6 * nbytes:
        if body[p // 6] & (1 << (5 - p % 6)):
            raise FormatError("nonzero padding bits in graph6 body")
        p += 1
    return build_graph(n, edges)


def to_graph6(g: Graph) -> str:
    """Encode a Graph as a graph6 line (shortest header form)."""
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    else:
        raise FormatError(f"vertex count {n} too large for this encoder")
    bits = []
    for j in range(1, n):
        adj_j = g.adj[j]
        for i in range(j):
            bits.append(1 if i in adj_j else 0)
    body = []
    for start in range(0, len(bits), 6):
        chunk = bits[start : start + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = (val << 1) | b
        body.append(val + 63)
    return "".join(chr(c) for c in head + body)


def parse_edge_list(text: str) -> Graph:
    """Parse the "n m" / "u v" edge-list format (comments with '#')."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise FormatError(f"line {lineno}: expected two integers, got {raw!r}")
    if not rows:
        raise FormatError("edge-list input has no data lines")
    n, m = rows[0]
    edges = rows[1:]
    if m != len(edges):
        raise FormatError(f"header declares m={m} edges but {len(edges)} follow")
    try:
        return build_graph(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def to_edge_list(g: Graph) -> str:
    """Serialize to the edge-list format (edges in sorted order)."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
