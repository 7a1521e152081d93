"""Immutable simple graphs stored as bitset rows.

Row ``rows[u]`` is a Python int whose bit ``v`` is set iff ``uv`` is an edge.
All neighbourhood algebra (intersections, differences, complements) is then
plain integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Iterator, Optional, Sequence

from .errors import InvalidVertex, TooLarge

MAX_VERTICES = 4096
MAX_ISO_VERTICES = 8


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple
    labels: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise TooLarge(f"graph has {self.n} vertices, limit is {MAX_VERTICES}")
        if len(self.rows) != self.n:
            raise ValueError("rows must have length n")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row & ~full or (row >> u) & 1:
                raise ValueError(f"row {u} has a loop or out-of-range bit")
            for v in iter_bits(row):
                if not (self.rows[v] >> u) & 1:
                    raise ValueError(f"adjacency not symmetric at ({u},{v})")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels must have length n")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable, labels: Optional[Sequence[str]] = None) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertex(f"edge ({u},{v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), tuple(labels) if labels is not None else None)

    @classmethod
    def from_predicate(cls, items: Sequence, adjacent, labels: Optional[Sequence[str]] = None) -> "Graph":
        """Build a graph on ``items`` with ``adjacent(a, b)`` deciding each pair."""
        n = len(items)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if adjacent(items[i], items[j])]
        return cls.from_edges(n, edges, labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbours(self, u: int) -> int:
        return self.rows[u]

    def degree(self, u: int) -> int:
        return popcount(self.rows[u])

    def edges(self) -> list:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(popcount(r) for r in self.rows) // 2

    def label(self, u: int) -> str:
        return self.labels[u] if self.labels is not None else str(u)

    def index_of(self, label: str) -> int:
        if self.labels is None:
            raise KeyError(label)
        return self.labels.index(label)

    def components(self, mask: Optional[int] = None) -> list:
        """Connected components (as bitmasks) of the subgraph induced on ``mask``."""
        if mask is None:
            mask = self.full_mask
        comps = []
        remaining = mask
        while remaining:
            seed = remaining & -remaining
            comp = seed
            frontier = seed
            while frontier:
                reach = 0
                for v in iter_bits(frontier):
                    reach |= self.rows[v]
                frontier = reach & remaining & ~comp
                comp |= frontier
            comps.append(comp)
            remaining &= ~comp
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


def _check_vertex(g: Graph, u: int) -> None:
    if not isinstance(u, int) or not 0 <= u < g.n:
        raise InvalidVertex(f"vertex {u!r} not in range 0..{g.n - 1}")


def check_vertex_list(g: Graph, vs: Sequence[int]) -> None:
    for u in vs:
        _check_vertex(g, u)
    if len(set(vs)) != len(vs):
        raise InvalidVertex(f"duplicate vertex in {list(vs)}")


def complement(g: Graph) -> Graph:
    full = g.full_mask
    rows = tuple(full & ~row & ~(1 << u) for u, row in enumerate(g.rows))
    return Graph(g.n, rows, g.labels)


def induced_subgraph(g: Graph, vs: Sequence[int]) -> Graph:
    check_vertex_list(g, vs)
    rows = []
    for u in vs:
        row = 0
        for i, v in enumerate(vs):
            if g.has_edge(u, v):
                row |= 1 << i
        rows.append(row)
    labels = tuple(g.labels[v] for v in vs) if g.labels is not None else None
    return Graph(len(vs), tuple(rows), labels)


@dataclass(frozen=True)
class DistanceLayers:
    source: int
    layers: tuple  # of bitmasks, layers[i] = vertices at distance i
    unreachable: int

    def layer(self, i: int) -> int:
        return self.layers[i] if i < len(self.layers) else 0

    def sizes(self) -> tuple:
        return tuple(popcount(layer) for layer in self.layers)


def distance_layers(g: Graph, u: int) -> DistanceLayers:
    _check_vertex(g, u)
    seen = 1 << u
    layers = [seen]
    frontier = seen
    while True:
        reach = 0
        for v in iter_bits(frontier):
            reach |= g.rows[v]
        frontier = reach & ~seen
        if not frontier:
            break
        layers.append(frontier)
        seen |= frontier
    return DistanceLayers(u, tuple(layers), g.full_mask & ~seen)


def shortest_cycle(g: Graph) -> Optional[list]:
    """A shortest cycle as a vertex list, or None for a forest.

    BFS from every root; a non-tree edge (a, b) closes the walk root..a b..root.
    Walks that are not simple are discarded, which is safe because the minimum
    is attained by a root lying on a shortest cycle.
    """
    best = None
    for root in range(g.n):
        parent = {root: None}
        depth = {root: 0}
        order = [root]
        head = 0
        while head < len(order):
            a = order[head]
            head += 1
            if best is not None and 2 * depth[a] + 1 >= len(best):
                break
            for b in iter_bits(g.rows[a]):
                if b not in depth:
                    depth[b] = depth[a] + 1
                    parent[b] = a
                    order.append(b)
                elif b != parent[a] and depth[b] >= depth[a]:
                    cycle = _close_walk(_path_to_root(parent, a), _path_to_root(parent, b))
                    if cycle is not None and (best is None or len(cycle) < len(best)):
                        best = cycle
    return best


def _path_to_root(parent: dict, v: int) -> list:
    path = [v]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path


def _close_walk(walk_a: list, walk_b: list) -> Optional[list]:
    # walk_a = a..root, walk_b = b..root; the cycle is root..a, b..(before root)
    cycle = list(reversed(walk_a)) + walk_b[:-1]
    if len(set(cycle)) != len(cycle) or len(cycle) < 3:
        return None
    return cycle


def girth(g: Graph) -> Optional[int]:
    cycle = shortest_cycle(g)
    return len(cycle) if cycle is not None else None


def degree_sequence(g: Graph) -> list:
    return sorted(g.degree(u) for u in range(g.n))


def isomorphisms_small(g: Graph, h: Graph) -> Iterator[tuple]:
    """Yield every ``perm`` with ``perm[i]`` the vertex of ``g`` matched to vertex ``i`` of ``h``.

    Permutations are produced in lexicographic order.
    """
    if g.n > MAX_ISO_VERTICES or h.n > MAX_ISO_VERTICES:
        raise TooLarge(f"isomorphism test limited to {MAX_ISO_VERTICES} vertices")
    if g.n != h.n or g.edge_count() != h.edge_count():
        return
    if degree_sequence(g) != degree_sequence(h):
        return
    for perm in permutations(range(g.n)):
        if all(
            g.has_edge(perm[i], perm[j]) == h.has_edge(i, j)
            for i in range(h.n)
            for j in range(i + 1, h.n)
        ):
            yield perm


def isomorphic_small(g: Graph, h: Graph) -> bool:
    return next(isomorphisms_small(g, h), None) is not None


# small named graphs used throughout the tests and pattern models


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph.from_edges(offset, edges)
