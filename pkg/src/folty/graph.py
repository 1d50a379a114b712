"""Temporal multigraph ingestion, static projection, degeneracy orientation.

The input format is one directed temporal edge per line, "src dst t", with
ids as non-negative integers and timestamps as signed 64-bit integers
(seconds). Lines starting with '#' are comments. Self-loops are dropped at
parse time. Parallel edges, including exact duplicate lines, are kept as
distinct edges.

Vertex ids are remapped to dense [0, n) by ascending original id; original
ids are kept for output. Edges are sorted by (timestamp, input order) and the
position in that order is the edge id used by every per-edge array.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import IO, Iterable, Iterator, NamedTuple

_I64_MIN = -(2**63)
_I64_MAX = 2**63 - 1

#: Shared empty pair list: (eids, timestamps).
EMPTY_PAIR: tuple[list[int], list[int]] = ([], [])


class ParseError(ValueError):
    """Raised for malformed edge-list input; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str, source: str | None = None):
        prefix = f"{source}: " if source else ""
        super().__init__(f"{prefix}line {lineno}: {message}")
        self.lineno = lineno
        self.message = message
        self.source = source


class TemporalEdge(NamedTuple):
    src: int
    dst: int
    t: int
    eid: int


class TemporalGraph:
    """Immutable temporal multigraph with per-directed-pair edge lists.

    Attributes
    ----------
    n, m : vertex and edge counts
    src, dst, ts : per-edge arrays indexed by eid (dense vertex ids)
    pairs : dict mapping a directed dense pair (x, y) to (eids, timestamps),
        both sorted ascending by (t, eid); only pairs with >= 1 edge appear
    orig : dense id -> original id
    """

    __slots__ = ("n", "m", "src", "dst", "ts", "pairs", "orig", "self_loops_dropped")

    def __init__(
        self,
        src: list[int],
        dst: list[int],
        ts: list[int],
        orig: list[int],
        self_loops_dropped: int = 0,
    ):
        self.src = src
        self.dst = dst
        self.ts = ts
        self.orig = orig
        self.n = len(orig)
        self.m = len(src)
        self.self_loops_dropped = self_loops_dropped
        pairs: dict[tuple[int, int], tuple[list[int], list[int]]] = {}
        for eid in range(self.m):
            key = (src[eid], dst[eid])
            entry = pairs.get(key)
            if entry is None:
                entry = ([], [])
                pairs[key] = entry
            entry[0].append(eid)
            entry[1].append(ts[eid])
        self.pairs = pairs

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int, int]]) -> "TemporalGraph":
        """Build from (src, dst, t) triples; same semantics as parsing."""
        kept: list[tuple[int, int, int]] = []
        dropped = 0
        for u, v, t in edges:
            if u == v:
                dropped += 1
            else:
                kept.append((u, v, t))
        kept.sort(key=lambda e: e[2])
        vertices = sorted({u for u, _, _ in kept} | {v for _, v, _ in kept})
        index = {orig: i for i, orig in enumerate(vertices)}
        src = [index[u] for u, _, _ in kept]
        dst = [index[v] for _, v, _ in kept]
        ts = [t for _, _, t in kept]
        return cls(src, dst, ts, vertices, dropped)

    def edge(self, eid: int) -> TemporalEdge:
        return TemporalEdge(self.src[eid], self.dst[eid], self.ts[eid], eid)

    def iter_edges(self) -> Iterator[TemporalEdge]:
        for eid in range(self.m):
            yield TemporalEdge(self.src[eid], self.dst[eid], self.ts[eid], eid)

    def pair(self, x: int, y: int) -> tuple[list[int], list[int]]:
        """(eids, timestamps) of edges x -> y; empty lists if none."""
        return self.pairs.get((x, y), EMPTY_PAIR)

    def sigma(self, x: int, y: int) -> int:
        """Number of parallel edges x -> y."""
        entry = self.pairs.get((x, y))
        return len(entry[0]) if entry else 0

    def sigma_max(self) -> int:
        """Max total multiplicity sigma(u,v) + sigma(v,u) over unordered pairs."""
        best = 0
        for (x, y), (eids, _) in self.pairs.items():
            if y < x and (y, x) in self.pairs:
                continue  # counted from the other direction
            total = len(eids) + self.sigma(y, x)
            if total > best:
                best = total
        return best


def parse_edge_list(data: str | bytes | IO) -> TemporalGraph:
    """Parse "src dst t" lines into a TemporalGraph.

    Accepts a str, bytes, or file object (text or binary; file objects are
    consumed line by line without loading the whole file). Lines may be in
    any order; '#' comment lines and blank lines are ignored; LF and CRLF
    both work. Malformed lines raise ParseError with the line number.
    """
    if isinstance(data, bytes):
        lines: Iterable[str | bytes] = data.decode("utf-8").splitlines()
    elif isinstance(data, str):
        lines = data.splitlines()
    else:
        lines = data

    triples: list[tuple[int, int, int]] = []
    dropped = 0
    for lineno, line in enumerate(lines, start=1):
        if isinstance(line, bytes):
            try:
                line = line.decode("utf-8")
            except UnicodeDecodeError:
                raise ParseError(lineno, "invalid UTF-8") from None
        fields = line.split()
        if not fields or fields[0].startswith("#"):
            continue
        if len(fields) != 3:
            raise ParseError(lineno, f"expected 'src dst t', got {line.strip()!r}")
        try:
            u = int(fields[0])
            v = int(fields[1])
            t = int(fields[2])
        except ValueError:
            raise ParseError(lineno, f"non-integer field in {line.strip()!r}") from None
        if u < 0 or v < 0:
            raise ParseError(lineno, f"negative vertex id in {line.strip()!r}")
        if not (_I64_MIN <= t <= _I64_MAX):
            raise ParseError(lineno, f"timestamp out of 64-bit range: {t}")
        if u == v:
            dropped += 1
            continue
        triples.append((u, v, t))

    triples.sort(key=lambda e: e[2])  # stable: input order breaks ties
    vertices = sorted({u for u, _, _ in triples} | {v for _, v, _ in triples})
    index = {orig: i for i, orig in enumerate(vertices)}
    src = [index[u] for u, _, _ in triples]
    dst = [index[v] for _, v, _ in triples]
    ts = [t for _, _, t in triples]
    return TemporalGraph(src, dst, ts, vertices, dropped)


def serialize_edge_list(g: TemporalGraph) -> str:
    """Canonical text form: one "src dst t" line per edge in eid order."""
    orig = g.orig
    lines = [f"{orig[g.src[i]]} {orig[g.dst[i]]} {g.ts[i]}" for i in range(g.m)]
    return "\n".join(lines) + ("\n" if lines else "")


class StaticGraph:
    """Undirected simple projection of a temporal multigraph.

    Common-neighbor counts per static edge are computed on first use by
    stepping through the lower-degree endpoint's neighbors and testing
    adjacency with the other endpoint.
    """

    __slots__ = ("n", "adj", "degree", "edges", "edge_degree", "_adj_sets", "_common")

    def __init__(self, n: int, adj: list[list[int]]):
        self.n = n
        self.adj = adj
        self.degree = [len(a) for a in adj]
        self.edges = [(u, v) for u in range(n) for v in adj[u] if u < v]
        self.edge_degree = [min(self.degree[u], self.degree[v]) for u, v in self.edges]
        self._adj_sets: list[set[int]] | None = None
        self._common: dict[tuple[int, int], int] | None = None

    @property
    def adj_sets(self) -> list[set[int]]:
        if self._adj_sets is None:
            self._adj_sets = [set(a) for a in self.adj]
        return self._adj_sets

    def common_counts(self) -> dict[tuple[int, int], int]:
        """(u, v) -> |N(u) & N(v)| for every static edge, u < v."""
        if self._common is None:
            sets = self.adj_sets
            common: dict[tuple[int, int], int] = {}
            for u, v in self.edges:
                x, y = (u, v) if self.degree[u] <= self.degree[v] else (v, u)
                other = sets[y]
                common[(u, v)] = sum(1 for w in self.adj[x] if w in other)
            self._common = common
        return self._common

    def common_of(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        return self.common_counts()[key]

    def sum_edge_degree(self) -> int:
        return sum(self.edge_degree)


def build_static(g: TemporalGraph) -> StaticGraph:
    """Erase directions, timestamps, and multiplicities."""
    neighbor_sets: list[set[int]] = [set() for _ in range(g.n)]
    for x, y in g.pairs:
        neighbor_sets[x].add(y)
        neighbor_sets[y].add(x)
    adj = [sorted(s) for s in neighbor_sets]
    return StaticGraph(g.n, adj)


@dataclass
class DegeneracyOrdering:
    """Min-degree peeling order and the orientation it induces.

    pi[u] is u's rank in the removal order (0 removed first); alpha is the
    largest residual degree seen at any removal; out_adj[u] lists the static
    neighbors of u with larger rank, sorted by id.
    """

    pi: list[int]
    order: list[int]
    alpha: int
    out_adj: list[list[int]]


def degeneracy_order(static: StaticGraph) -> DegeneracyOrdering:
    """Repeatedly remove the lowest-degree vertex, smallest id first on ties.

    Uses a lazy min-heap keyed by (current degree, id), which honors the id
    tie rule exactly at O((n + m) log n) cost.
    """
    n = static.n
    deg = list(static.degree)
    heap: list[tuple[int, int]] = [(deg[v], v) for v in range(n)]
    heapq.heapify(heap)
    removed = [False] * n
    pi = [0] * n
    order: list[int] = []
    alpha = 0
    for rank in range(n):
        while True:
            d, v = heapq.heappop(heap)
            if not removed[v] and d == deg[v]:
                break
        removed[v] = True
        pi[v] = rank
        order.append(v)
        if d > alpha:
            alpha = d
        for u in static.adj[v]:
            if not removed[u]:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    out_adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in static.edges:
        if pi[u] < pi[v]:
            out_adj[u].append(v)
        else:
            out_adj[v].append(u)
    for lst in out_adj:
        lst.sort()
    return DegeneracyOrdering(pi, order, alpha, out_adj)


@dataclass
class GraphStats:
    """Read-only summary used by reports and the CLI."""

    n: int
    m: int
    alpha: int
    sigma_max: int
    sum_edge_degree: int

    def as_dict(self) -> dict[str, int]:
        return {
            "n": self.n,
            "m": self.m,
            "alpha": self.alpha,
            "sigma_max": self.sigma_max,
            "sum_edge_degree": self.sum_edge_degree,
        }


def graph_stats(
    g: TemporalGraph, static: StaticGraph, ordering: DegeneracyOrdering
) -> GraphStats:
    return GraphStats(
        n=g.n,
        m=g.m,
        alpha=ordering.alpha,
        sigma_max=g.sigma_max(),
        sum_edge_degree=static.sum_edge_degree(),
    )
