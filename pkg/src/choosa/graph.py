"""Simple undirected graphs, DIMACS I/O, family generators and degeneracy.

Vertices are ``0..n-1`` everywhere in this package.  DIMACS files use
1-indexed endpoints; the conversion happens only in :func:`parse_dimacs`
and :func:`write_dimacs`.
"""

from __future__ import annotations

import heapq
import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator

MAX_ENUMERATION_ORDER = 6


class DimacsError(ValueError):
    """Malformed DIMACS ``.col`` input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``edges`` holds normalized pairs ``(u, v)`` with ``u < v``;
    ``adjacency`` is derived from it.
    """

    n: int
    edges: frozenset[tuple[int, int]] = frozenset()
    adjacency: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            normalized.add((min(u, v), max(u, v)))
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in normalized:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "edges", frozenset(normalized))
        object.__setattr__(self, "adjacency", tuple(frozenset(a) for a in adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        return cls(n, frozenset(tuple(e) for e in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def __len__(self) -> int:
        return self.n


@dataclass(frozen=True)
class DegeneracyResult:
    degeneracy: int
    ordering: tuple[int, ...]


# DIMACS


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS ``.col`` text into a :class:`Graph`.

    Duplicate ``e`` lines (in either orientation) collapse to one edge.
    Every error carries the offending line number.
    """
    n: int | None = None
    edges: set[tuple[int, int]] = set()
    pending: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        tokens = line.split()
        tag = tokens[0]
        if tag == "p":
            if n is not None:
                raise DimacsError("duplicate 'p' line", lineno)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise DimacsError(f"expected 'p edge <n> <m>', got {line!r}", lineno)
            n = _parse_int(tokens[2], lineno)
            _parse_int(tokens[3], lineno)
            if n < 0:
                raise DimacsError("negative vertex count", lineno)
        elif tag == "e":
            if len(tokens) != 3:
                raise DimacsError(f"expected 'e <u> <v>', got {line!r}", lineno)
            if n is None:
                raise DimacsError("'e' line before 'p' line", lineno)
            pending.append((_parse_int(tokens[1], lineno), _parse_int(tokens[2], lineno), lineno))
        else:
            raise DimacsError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise DimacsError("missing 'p' line")
    for u, v, lineno in pending:
        for x in (u, v):
            if not 1 <= x <= n:
                raise DimacsError(f"endpoint {x} out of range 1..{n}", lineno)
        if u == v:
            raise DimacsError(f"self-loop 'e {u} {v}'", lineno)
        edges.add((min(u, v) - 1, max(u, v) - 1))
    return Graph(n, frozenset(edges))


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise DimacsError(f"malformed integer {token!r}", lineno) from None


def write_dimacs(graph: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"c {c}" for c in comment.splitlines())
    lines.append(f"p edge {graph.n} {graph.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in graph.sorted_edges())
    return "\n".join(lines) + "\n"


# Families


def gen_complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}; vertices ``0..a-1`` form one side, ``a..a+b-1`` the other."""
    if a < 1 or b < 1:
        raise ValueError("both sides of K_{a,b} need at least one vertex")
    return Graph(a + b, frozenset((i, a + j) for i in range(a) for j in range(b)))


def gen_complete(n: int) -> Graph:
    return Graph(n, frozenset(itertools.combinations(range(n), 2)))


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def gen_petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def gen_random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree decoded from a seeded random Prüfer sequence."""
    if n < 1:
        raise ValueError("a tree needs at least one vertex")
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, frozenset({(0, 1)}))
    rng = random.Random(seed)
    return _prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)


def _prufer_decode(seq: list[int], n: int) -> Graph:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return Graph.from_edges(n, edges)


def gen_maximal_outerplanar(n: int, seed: int, drop: float = 0.0) -> Graph:
    """Random triangulation of the polygon ``0, 1, ..., n-1``.

    Ears are clipped in seeded random order; each clip adds the chord
    joining the ear tip's two polygon neighbours.  With ``drop > 0`` every
    edge is then removed independently with that probability, giving an
    outerplanar graph that is no longer maximal.
    """
    if n < 3:
        raise ValueError("an outerplanar triangulation needs at least 3 vertices")
    if not 0.0 <= drop <= 1.0:
        raise ValueError("drop must be a probability")
    rng = random.Random(seed)
    edges = {(i, (i + 1) % n) for i in range(n)}
    polygon = list(range(n))
    while len(polygon) > 3:
        i = rng.randrange(len(polygon))
        edges.add((polygon[i - 1], polygon[(i + 1) % len(polygon)]))
        del polygon[i]
    if drop:
        edges = {e for e in sorted(Graph.from_edges(n, edges).edges) if rng.random() >= drop}
    return Graph.from_edges(n, edges)


def nonisomorphic_trees(n: int) -> Iterator[Graph]:
    """All unlabeled trees on ``n`` vertices, one labeled representative each."""
    import networkx as nx

    if n == 1:
        yield Graph(1)
        return
    for t in nx.nonisomorphic_trees(n):
        yield Graph.from_edges(n, t.edges())


# Degeneracy


def degeneracy_ordering(graph: Graph) -> DegeneracyResult:
    """Repeatedly remove a minimum-degree vertex (lowest index on ties).

    The removal order is returned; every vertex has at most ``degeneracy``
    neighbours removed after it.
    """
    degree = [graph.degree(v) for v in range(graph.n)]
    removed = [False] * graph.n
    heap = [(degree[v], v) for v in range(graph.n)]
    heapq.heapify(heap)
    order: list[int] = []
    d = 0
    while heap:
        deg, v = heapq.heappop(heap)
        if removed[v] or deg != degree[v]:
            continue
        removed[v] = True
        order.append(v)
        d = max(d, deg)
        for u in graph.adjacency[v]:
            if not removed[u]:
                degree[u] -= 1
                heapq.heappush(heap, (degree[u], u))
    return DegeneracyResult(d, tuple(order))


def back_degree(graph: Graph, ordering: tuple[int, ...]) -> int:
    """Largest number of neighbours any vertex has later in ``ordering``."""
    pos = {v: i for i, v in enumerate(ordering)}
    return max((sum(pos[u] > pos[v] for u in graph.adjacency[v]) for v in ordering), default=0)


# Enumeration


def enumerate_graphs(n: int, allow_large: bool = False) -> Iterator[Graph]:
    """Every labeled simple graph on ``n`` vertices, by increasing edge mask.

    Bit ``j`` of the mask selects the ``j``-th pair of
    ``itertools.combinations(range(n), 2)``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > MAX_ENUMERATION_ORDER and not allow_large:
        raise ValueError(
            f"enumerating graphs on {n} vertices is too large; pass allow_large=True"
        )
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for j, p in enumerate(pairs) if mask >> j & 1))
