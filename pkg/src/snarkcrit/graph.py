"""Immutable simple graphs with canonically indexed edges, and edge-set masks."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for structurally invalid graphs (loops, parallel edges, bad degrees)."""


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


@dataclass(frozen=True)
class EdgeSet:
    """A subset of a host graph's edges, stored as a bit vector.

    Bit ``i`` set means edge ``i`` of the host is a member. ``size`` is the
    host edge count; operations between sets of different hosts are rejected.
    """

    bits: int
    size: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.size:
            raise ValueError(f"bits 0x{self.bits:x} out of range for {self.size} edges")

    @classmethod
    def from_indices(cls, indices: Iterable[int], size: int) -> EdgeSet:
        bits = 0
        for i in indices:
            if not 0 <= i < size:
                raise IndexError(f"edge index {i} out of range for {size} edges")
            bits |= 1 << i
        return cls(bits, size)

    @classmethod
    def empty(cls, size: int) -> EdgeSet:
        return cls(0, size)

    @classmethod
    def full(cls, size: int) -> EdgeSet:
        return cls((1 << size) - 1, size)

    def _check(self, other: EdgeSet) -> None:
        if self.size != other.size:
            raise ValueError(f"edge sets over different hosts ({self.size} vs {other.size} edges)")

    def __or__(self, other: EdgeSet) -> EdgeSet:
        self._check(other)
        return EdgeSet(self.bits | other.bits, self.size)

    def __and__(self, other: EdgeSet) -> EdgeSet:
        self._check(other)
        return EdgeSet(self.bits & other.bits, self.size)

    def __sub__(self, other: EdgeSet) -> EdgeSet:
        self._check(other)
        return EdgeSet(self.bits & ~other.bits, self.size)

    def __le__(self, other: EdgeSet) -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __lt__(self, other: EdgeSet) -> bool:
        return self <= other and self.bits != other.bits

    def __ge__(self, other: EdgeSet) -> bool:
        return other <= self

    def __gt__(self, other: EdgeSet) -> bool:
        return other < self

    def __contains__(self, index: int) -> bool:
        return 0 <= index < self.size and bool(self.bits >> index & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def complement(self) -> EdgeSet:
        return EdgeSet(((1 << self.size) - 1) & ~self.bits, self.size)

    def with_edge(self, index: int) -> EdgeSet:
        return EdgeSet(self.bits | 1 << index, self.size)

    def without_edge(self, index: int) -> EdgeSet:
        return EdgeSet(self.bits & ~(1 << index), self.size)

    def indices(self) -> list[int]:
        return list(iter_bits(self.bits))

    def __repr__(self) -> str:
        return f"EdgeSet({self.indices()}, size={self.size})"


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on vertices ``0..n_vertices-1``.

    Edges are stored as ``(u, v)`` pairs with ``u < v`` sorted lexicographically,
    so edge ``i`` always refers to the same pair for a given vertex-pair set.
    Equality compares vertex count and edge list only.
    """

    n_vertices: int
    edges: tuple[tuple[int, int], ...]
    name: str = ""
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        canon = []
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise GraphError(f"edge ({u}, {v}) out of range for {self.n_vertices} vertices")
            canon.append((u, v) if u < v else (v, u))
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise GraphError(f"parallel edge {a}")
        object.__setattr__(self, "edges", tuple(canon))
        if self.labels is not None and len(self.labels) != self.n_vertices:
            raise GraphError("labels must name every vertex")

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[int]], n_vertices: int | None = None,
                   name: str = "", labels: Sequence[str] | None = None) -> Graph:
        pairs = [(int(e[0]), int(e[1])) for e in edges]
        if n_vertices is None:
            n_vertices = 1 + max((max(p) for p in pairs), default=-1)
        return cls(n_vertices, tuple(pairs), name, None if labels is None else tuple(labels))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n_vertices == other.n_vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n_vertices, self.edges))

    def __repr__(self) -> str:
        tag = f"{self.name!r}, " if self.name else ""
        return f"Graph({tag}n={self.n_vertices}, m={self.n_edges})"

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the ``(neighbour, edge_index)`` pairs in edge-index order."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n_vertices)]
        for i, (u, v) in enumerate(self.edges):
            adj[u].append((v, i))
            adj[v].append((u, i))
        return tuple(tuple(a) for a in adj)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def incident_bits(self) -> tuple[int, ...]:
        """Per vertex, the bitmask of incident edges."""
        out = [0] * self.n_vertices
        for i, (u, v) in enumerate(self.edges):
            out[u] |= 1 << i
            out[v] |= 1 << i
        return tuple(out)

    @cached_property
    def edge_neighbour_bits(self) -> tuple[int, ...]:
        """Per edge, the bitmask of other edges sharing an endpoint with it."""
        inc = self.incident_bits
        return tuple((inc[u] | inc[v]) & ~(1 << i) for i, (u, v) in enumerate(self.edges))

    def index_of(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return self.edge_index[key]
        except KeyError:
            raise KeyError(f"no edge {key}") from None

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def is_subcubic(self) -> bool:
        return self.max_degree <= 3

    def is_cubic(self) -> bool:
        return self.n_vertices > 0 and all(d == 3 for d in self.degrees())

    def require_subcubic(self) -> None:
        if not self.is_subcubic():
            raise GraphError(f"{self!r} has a vertex of degree {self.max_degree} > 3")

    def require_cubic(self) -> None:
        if not self.is_cubic():
            raise GraphError(f"{self!r} is not cubic")

    def all_edges(self) -> EdgeSet:
        return EdgeSet.full(self.n_edges)

    def edge_set(self, indices: Iterable[int]) -> EdgeSet:
        return EdgeSet.from_indices(indices, self.n_edges)

    def vertices_of(self, edges: EdgeSet | int) -> set[int]:
        bits = edges.bits if isinstance(edges, EdgeSet) else edges
        out: set[int] = set()
        for i in iter_bits(bits):
            out.update(self.edges[i])
        return out

    def degrees_within(self, edges: EdgeSet | int) -> dict[int, int]:
        """Degree of every vertex that touches ``edges`` (absent vertices omitted)."""
        bits = edges.bits if isinstance(edges, EdgeSet) else edges
        deg: dict[int, int] = {}
        for i in iter_bits(bits):
            u, v = self.edges[i]
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        return deg

    def edges_touching(self, vertices: Iterable[int]) -> int:
        bits = 0
        for v in vertices:
            bits |= self.incident_bits[v]
        return bits

    def subgraph(self, edges: EdgeSet) -> EdgeInducedSubgraph:
        return EdgeInducedSubgraph(self, edges)

    def girth(self) -> float:
        """Length of a shortest cycle, ``inf`` for forests (BFS from every vertex)."""
        best = float("inf")
        for s in range(self.n_vertices):
            dist = {s: 0}
            parent = {s: -1}
            queue = [s]
            for x in queue:
                for y, _ in self.adjacency[x]:
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        parent[y] = x
                        queue.append(y)
                    elif parent[x] != y:
                        best = min(best, dist[x] + dist[y] + 1)
        return best

    def relabel(self, perm: Sequence[int], name: str | None = None) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n_vertices, tuple((perm[u], perm[v]) for u, v in self.edges),
                     self.name if name is None else name)


@dataclass(frozen=True)
class EdgeInducedSubgraph:
    """The subgraph of ``host`` formed by an edge set and the vertices it touches."""

    host: Graph
    edge_set: EdgeSet

    def __post_init__(self) -> None:
        if self.edge_set.size != self.host.n_edges:
            raise ValueError("edge set does not match host edge count")

    @property
    def bits(self) -> int:
        return self.edge_set.bits

    @cached_property
    def degrees(self) -> dict[int, int]:
        return self.host.degrees_within(self.edge_set)

    @property
    def vertices(self) -> set[int]:
        return set(self.degrees)

    def __len__(self) -> int:
        return len(self.edge_set)

    def edge_pairs(self) -> list[tuple[int, int]]:
        return [self.host.edges[i] for i in self.edge_set]

    def is_bridgeless(self) -> bool:
        return not bridges(self.host, self.edge_set.bits)


def bridges(g: Graph, bits: int) -> list[int]:
    """Edge indices of the bridges of the edge-induced subgraph ``bits``."""
    adj: dict[int, list[tuple[int, int]]] = {}
    for i in iter_bits(bits):
        u, v = g.edges[i]
        adj.setdefault(u, []).append((v, i))
        adj.setdefault(v, []).append((u, i))
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    out: list[int] = []
    counter = 0
    for root in sorted(adj):
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            x, via, it = stack[-1]
            advanced = False
            for y, i in it:
                if i == via:
                    continue
                if y in disc:
                    low[x] = min(low[x], disc[y])
                else:
                    disc[y] = low[y] = counter
                    counter += 1
                    stack.append((y, i, iter(adj[y])))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[x])
                    if low[x] > disc[p]:
                        out.append(via)
    return sorted(out)
