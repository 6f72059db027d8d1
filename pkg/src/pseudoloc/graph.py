"""Immutable graph core: construction, text formats, and BFS distances.

Vertices are dense 0-based integers.  Every constructor validates that the
graph is simple and connected; everything downstream relies on both.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass

from .errors import (
    Disconnected,
    DuplicateEdge,
    MalformedGraph6,
    NotPseudotree,
    SelfLoop,
    SizeCapExceeded,
    VertexOutOfRange,
)

DEFAULT_GRAPH_CAP = 64
CAP_ENV_VAR = "PSEUDOLOC_MAX_N"

GRAPH6_HEADER = ">>graph6<<"


def cap_override() -> int | None:
    """Value of the PSEUDOLOC_MAX_N override, or None when unset."""
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None or raw == "":
        return None
    return int(raw)


def graph_cap() -> int:
    override = cap_override()
    return DEFAULT_GRAPH_CAP if override is None else override


@dataclass(frozen=True)
class Graph:
    """Simple connected undirected graph with sorted adjacency lists."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances of a connected graph."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def d(self, u: int, v: int) -> int:
        return self.rows[u][v]

    def __getitem__(self, u: int) -> tuple[int, ...]:
        return self.rows[u]

    def diameter(self) -> int:
        return max(max(row) for row in self.rows)


def _check_connected(n: int, adjacency: list[list[int]]) -> bool:
    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for w in adjacency[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == n


def from_edge_list(n: int, pairs) -> Graph:
    """Build the canonical Graph on vertices 0..n-1 from unordered pairs.

    Rejects self-loops, duplicate edges, out-of-range endpoints and
    disconnected input.
    """
    if n < 1:
        raise VertexOutOfRange(f"vertex count must be >= 1, got {n}")
    if n > graph_cap():
        raise SizeCapExceeded(f"n={n} exceeds graph cap {graph_cap()}")
    seen: set[tuple[int, int]] = set()
    canonical: list[tuple[int, int]] = []
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdge(f"edge {e} listed twice")
        seen.add(e)
        canonical.append(e)
    canonical.sort()
    adjacency: list[list[int]] = [[] for _ in range(n)]
    for u, v in canonical:
        adjacency[u].append(v)
        adjacency[v].append(u)
    for lst in adjacency:
        lst.sort()
    if not _check_connected(n, adjacency):
        raise Disconnected(f"graph on {n} vertices is not connected")
    return Graph(
        n=n,
        adjacency=tuple(tuple(a) for a in adjacency),
        edges=tuple(canonical),
    )


def parse_edgelist(text: str) -> Graph:
    """Parse the plain edge-list format: first line n, then one "u v" per line.

    '#' starts a comment (whole line or trailing).
    """
    tokens: list[str] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            tokens.append(line)
    if not tokens:
        raise MalformedGraph6("empty edge-list input")
    try:
        n = int(tokens[0])
    except ValueError as exc:
        raise MalformedGraph6(f"expected vertex count, got {tokens[0]!r}") from exc
    pairs = []
    for line in tokens[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise MalformedGraph6(f"expected 'u v' pair, got {line!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise MalformedGraph6(f"non-integer endpoint in {line!r}") from exc
    return from_edge_list(n, pairs)


def format_edgelist(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def _g6_encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    # 63..258047: '~' then 18 bits in three 6-bit groups
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def encode_graph6(g: Graph) -> str:
    """Encode per the standard graph6 format (6-bit groups, bias 63)."""
    bits: list[int] = []
    for j in range(1, g.n):
        row = g.adjacency[j]
        for i in range(j):
            bits.append(1 if i in row else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = (value << 1) | b
        chars.append(chr(value + 63))
    return _g6_encode_n(g.n) + "".join(chars)


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 line (optional '>>graph6<<' header) into a Graph."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    if not s:
        raise MalformedGraph6("empty graph6 input")
    for ch in s:
        if not (63 <= ord(ch) <= 126):
            raise MalformedGraph6(f"invalid graph6 character {ch!r}")
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise MalformedGraph6("graph6 orders above 258047 are not supported")
        if len(s) < 4:
            raise MalformedGraph6("truncated graph6 order field")
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if n < 1:
        raise MalformedGraph6(f"graph6 order {n} out of range")
    if n > graph_cap():
        raise SizeCapExceeded(f"graph6 order {n} exceeds graph cap {graph_cap()}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) != nbytes:
        raise MalformedGraph6(
            f"graph6 body has {len(body)} bytes, expected {nbytes} for n={n}"
        )
    bits: list[int] = []
    for ch in body:
        value = ord(ch) - 63
        for s6 in range(5, -1, -1):
            bits.append((value >> s6) & 1)
    if any(bits[nbits:]):
        raise MalformedGraph6("nonzero padding bits in graph6 body")
    pairs = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                pairs.append((i, j))
            idx += 1
    return from_edge_list(n, pairs)


def distance_matrix(g: Graph) -> DistanceMatrix:
    """BFS-exact hop distances between all vertex pairs."""
    rows = []
    for src in range(g.n):
        dist = [-1] * g.n
        dist[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            du = dist[u]
            for w in g.adjacency[u]:
                if dist[w] < 0:
                    dist[w] = du + 1
                    queue.append(w)
        rows.append(tuple(dist))
    return DistanceMatrix(rows=tuple(rows))


def girth_and_cycle(g: Graph) -> tuple[int, list[int]] | None:
    """Girth and the unique cycle of a unicyclic graph, None for trees.

    The cycle is listed in traversal order starting at its smallest vertex,
    stepping first to the smaller of that vertex's two cycle neighbours.
    """
    if g.m == g.n - 1:
        return None
    if g.m > g.n:
        raise NotPseudotree(f"m={g.m} > n={g.n}: more than one cycle")
    # m == n: strip leaves until only the cycle remains
    degree = [g.degree(v) for v in range(g.n)]
    alive = [True] * g.n
    queue = deque(v for v in range(g.n) if degree[v] == 1)
    while queue:
        u = queue.popleft()
        alive[u] = False
        for w in g.adjacency[u]:
            if alive[w]:
                degree[w] -= 1
                if degree[w] == 1:
                    queue.append(w)
    core = [v for v in range(g.n) if alive[v]]
    start = core[0]
    cycle_neighbors = [w for w in g.adjacency[start] if alive[w]]
    walk = [start, min(cycle_neighbors)]
    while True:
        prev, cur = walk[-2], walk[-1]
        nxt = next(w for w in g.adjacency[cur] if alive[w] and w != prev)
        if nxt == start:
            break
        walk.append(nxt)
    return len(walk), walk


def is_bipartite(g: Graph) -> bool:
    """BFS parity check for 2-colourability."""
    color = [-1] * g.n
    color[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if color[w] < 0:
                color[w] = color[u] ^ 1
                queue.append(w)
            elif color[w] == color[u]:
                return False
    return True
