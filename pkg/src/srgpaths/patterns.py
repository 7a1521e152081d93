"""Exhaustive induced-subgraph search for small patterns, and cograph recognition.

``find_induced`` is the ground truth every constructive witness is checked
against, so it shares no logic with the constructions: it walks vertex
subsets in lexicographic order and prunes any prefix whose induced subgraph
cannot be extended to a copy of the pattern.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import permutations
from typing import Optional

from .errors import SearchTimeout
from .graph import (
    Graph,
    complement,
    induced_subgraph,
    isomorphic_small,
    iter_bits,
    path_graph,
    popcount,
)


class Pattern(str, Enum):
    P3 = "P3"
    P4 = "P4"
    P5 = "P5"
    COP5 = "COP5"
    C5 = "C5"
    GEM = "GEM"
    COGEM = "COGEM"

    @property
    def model(self) -> Graph:
        return _models()[self]

    @property
    def complement_pattern(self) -> Optional["Pattern"]:
        return _COMPLEMENTS.get(self)

    @classmethod
    def parse(cls, name: str) -> "Pattern":
        key = name.upper().replace("-", "").replace("_", "")
        if key in ("COP5", "HOUSE", "P5BAR"):
            return cls.COP5
        return cls(key)


_COMPLEMENTS = {
    Pattern.P4: Pattern.P4,
    Pattern.P5: Pattern.COP5,
    Pattern.COP5: Pattern.P5,
    Pattern.C5: Pattern.C5,
    Pattern.GEM: Pattern.COGEM,
    Pattern.COGEM: Pattern.GEM,
}


@lru_cache(maxsize=None)
def _models() -> dict:
    p4 = path_graph(4)
    p5 = path_graph(5)
    # gem: the path 0-1-2-3 plus vertex 4 joined to all of it
    gem = Graph.from_edges(5, p4.edges() + [(i, 4) for i in range(4)])
    return {
        Pattern.P3: path_graph(3),
        Pattern.P4: p4,
        Pattern.P5: p5,
        Pattern.COP5: complement(p5),
        Pattern.C5: Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)]),
        Pattern.GEM: gem,
        Pattern.COGEM: complement(gem),
    }


@dataclass(frozen=True)
class SearchOutcome:
    found: bool
    witness: Optional[tuple] = None

    def __post_init__(self):
        if self.found != (self.witness is not None):
            raise ValueError("found must agree with witness presence")


@dataclass(frozen=True)
class _Plan:
    size: int
    # prefix signature tuple -> frozenset of admissible next signatures
    extensions: dict
    min_degree: int
    min_codegree: int


@lru_cache(maxsize=None)
def _plan(p: Pattern) -> _Plan:
    """Precompute which ordered adjacency signatures can grow into the pattern.

    A signature at depth j is a bitmask over the j previously chosen vertices
    recording which of them the new vertex is adjacent to.  A prefix is viable
    iff some injective map into the pattern realizes every signature so far.
    """
    model = p.model
    s = model.n
    extensions: dict = {}
    for perm in permutations(range(s)):
        prefix: tuple = ()
        for j in range(s):
            sig = 0
            for i in range(j):
                if model.has_edge(perm[i], perm[j]):
                    sig |= 1 << i
            extensions.setdefault(prefix, set()).add(sig)
            prefix = prefix + (sig,)
    frozen = {key: frozenset(val) for key, val in extensions.items()}
    degrees = [model.degree(u) for u in range(s)]
    return _Plan(s, frozen, min(degrees), min(s - 1 - d for d in degrees))


def _canonical_order(g: Graph, subset: tuple, model: Graph) -> tuple:
    """Least assignment of ``subset`` to pattern positions (lexicographic on the tuple)."""
    for perm in permutations(subset):
        if all(
            g.has_edge(perm[i], perm[j]) == model.has_edge(i, j)
            for i in range(model.n)
            for j in range(i + 1, model.n)
        ):
            return perm
    raise AssertionError(f"{subset} does not induce the pattern")


def find_induced(
    g: Graph,
    p: Pattern,
    deadline: Optional[float] = None,
    mask: Optional[int] = None,
) -> SearchOutcome:
    """Search ``g`` for an induced copy of ``p``.

    The witness is the lexicographically least vertex subset (compared as a
    sorted tuple) that induces ``p``, listed in pattern-vertex order using the
    least admissible assignment.  ``deadline`` is a ``time.monotonic`` value
    after which ``SearchTimeout`` is raised.  ``mask`` restricts the search to
    a vertex subset.
    """
    plan = _plan(p)
    s = plan.size
    n = g.n
    rows = g.rows
    usable = g.full_mask if mask is None else mask
    for v in iter_bits(usable):
        deg = popcount(rows[v])
        if deg < plan.min_degree or n - 1 - deg < plan.min_codegree:
            usable &= ~(1 << v)
    if popcount(usable) < s:
        return SearchOutcome(False)

    chosen = [0] * s
    extensions = plan.extensions
    ticks = 0

    def extend(depth: int, prefix: tuple, allowed: int):
        nonlocal ticks
        if depth == s:
            return tuple(chosen)
        ticks += 1
        if deadline is not None and ticks & 0x3FF == 0 and time.monotonic() > deadline:
            raise SearchTimeout("oracle search exceeded its time budget")
        # vertices > last chosen; need at least s - depth of them
        candidates = []
        for sig in extensions[prefix]:
            cand = allowed
            for i in range(depth):
                if (sig >> i) & 1:
                    cand &= rows[chosen[i]]
                else:
                    cand &= ~rows[chosen[i]]
            if cand:
                candidates.append((cand, sig))
        if not candidates:
            return None
        union = 0
        for cand, _ in candidates:
            union |= cand
        need = s - depth - 1
        for v in iter_bits(union):
            above = allowed >> (v + 1) << (v + 1)
            if need and popcount(above) < need:
                break
            sig = next(sig for cand, sig in candidates if (cand >> v) & 1)
            chosen[depth] = v
            found = extend(depth + 1, prefix + (sig,), above)
            if found is not None:
                return found
        return None

    subset = extend(0, (), usable)
    if subset is None:
        return SearchOutcome(False)
    return SearchOutcome(True, _canonical_order(g, subset, p.model))


def validate_witness(g: Graph, vertices, p: Pattern) -> bool:
    """True iff ``vertices`` (in pattern order) induce exactly the pattern model."""
    vertices = tuple(vertices)
    if len(vertices) != p.model.n:
        return False
    sub = induced_subgraph(g, vertices)
    return sub.rows == p.model.rows


def induces_pattern(g: Graph, vertices, p: Pattern) -> bool:
    """True iff ``vertices`` induce a graph isomorphic to the pattern, in any order."""
    return isomorphic_small(induced_subgraph(g, tuple(vertices)), p.model)


def is_cograph(g: Graph) -> bool:
    """Recognize cographs by recursive complement reduction.

    A component with at least two vertices must have a disconnected complement,
    and each component of that complement must again reduce.
    """
    full = g.full_mask
    rows = g.rows
    comp_rows = tuple(full & ~row & ~(1 << u) for u, row in enumerate(rows))

    def components(mask: int, adj: tuple) -> list:
        comps = []
        remaining = mask
        while remaining:
            seed = remaining & -remaining
            comp = frontier = seed
            while frontier:
                reach = 0
                for v in iter_bits(frontier):
                    reach |= adj[v]
                frontier = reach & remaining & ~comp
                comp |= frontier
            comps.append(comp)
            remaining &= ~comp
        return comps

    def reduces(mask: int, adj: tuple, other: tuple) -> bool:
        for comp in components(mask, adj):
            if comp & (comp - 1) == 0:
                continue
            co_comps = components(comp, other)
            if len(co_comps) == 1:
                return False
            if not all(reduces(part, adj, other) for part in co_comps):
                return False
        return True

    return reduces(full, rows, comp_rows)
