"""Constructive extraction of induced P4, P5 and co-P5 subgraphs.

Each function follows a counting argument that guarantees the candidate set
at every step is non-empty; free choices are always resolved by taking the
least index.  Every result is re-validated against the pattern model before
it is returned, and an empty candidate set raises ``ProofViolation``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Optional, Sequence

from .errors import BadOrder, BelowThreshold, ImprimitiveInput, NotSrg, ProofViolation
from .families import (
    FamilyKind,
    LatinSquare,
    MolsPair,
    SteinerTripleSystem,
    cell_index,
    hamming2,
    johnson2,
    latin_square_graph,
    mols_graph,
    sts_block_graph,
)
from .graph import Graph, distance_layers, lowest_bit, shortest_cycle
from .patterns import Pattern, find_induced, validate_witness
from .srg import is_primitive, srg_params


@dataclass(frozen=True)
class Witness:
    pattern: Pattern
    vertices: tuple
    branch: str
    labels: tuple

    def __str__(self) -> str:
        return f"{self.pattern.value}[{self.branch}]: " + ", ".join(self.labels)


def _least(mask: int, what: str) -> int:
    if not mask:
        raise ProofViolation(f"no candidate for {what}")
    return lowest_bit(mask)


def _finish(g: Graph, vertices: Sequence[int], pattern: Pattern, branch: str) -> Witness:
    """Validate ``vertices`` and return them in pattern-vertex order.

    The construction order is kept when it already matches the model;
    otherwise the first matching permutation of it is used.
    """
    vertices = tuple(vertices)
    if not validate_witness(g, vertices, pattern):
        for perm in permutations(vertices):
            if validate_witness(g, perm, pattern):
                vertices = perm
                break
        else:
            raise ProofViolation(f"constructed vertices {vertices} do not induce {pattern.value}")
    return Witness(pattern, vertices, branch, tuple(g.label(v) for v in vertices))


# ---------------------------------------------------------------------------
# induced P4 in a primitive strongly regular graph


def p4_branch(lam: int, mu: int) -> str:
    """Which case of the argument applies to parameters (lambda, mu)."""
    if lam == 0:
        return "a" if mu == 1 else "b"
    return "c" if mu <= lam + 1 else "d"


def p4_witness(g: Graph) -> Witness:
    """Induced P4 in a primitive SRG, by the (lambda, mu) case split.

    a: lambda = 0, mu = 1 -- girth 5, four consecutive vertices of a 5-cycle.
    b: lambda = 0, mu > 1 -- x u v w with v ~ u, w at distance 2 from u.
    c: lambda > 0, mu <= lambda + 1 -- u v w x, x a neighbour of w at distance
       2 from u missing v (pigeonhole on k - mu > k - lambda - 2).
    d: lambda > 0, mu > lambda + 1 -- w u x v with v far from the edge uw and x
       a common neighbour of u, v outside N(w) (mu > lambda).
    """
    params = srg_params(g)
    if params is None:
        raise NotSrg("p4_witness needs a strongly regular graph")
    if not is_primitive(g):
        raise ImprimitiveInput("imprimitive strongly regular graphs are P4-free")
    if not 0 < params.mu < params.k:
        # only K1 reaches here: connected with a connected complement, yet P4-free
        raise ImprimitiveInput(f"degenerate parameters {params}")
    branch = p4_branch(params.lam, params.mu)
    rows = g.rows

    if branch == "a":
        cycle = shortest_cycle(g)
        if cycle is None or len(cycle) != 5:
            raise ProofViolation(f"Moore graph without a 5-cycle: {cycle}")
        return _finish(g, cycle[:4], Pattern.P4, branch)

    if branch in ("b", "c"):
        u = 0
        layers = distance_layers(g, u)
        v = _least(layers.layer(1), "v in G1(u)")
        w = _least(layers.layer(2) & rows[v], "w in G2(u) & G1(v)")
        if branch == "b":
            x = _least(rows[u] & ~rows[w], "x in G1(u) minus G1(w)")
            return _finish(g, (x, u, v, w), Pattern.P4, branch)
        x = _least(layers.layer(2) & rows[w] & ~rows[v], "x in G2(u) & G1(w) minus G1(v)")
        return _finish(g, (u, v, w, x), Pattern.P4, branch)

    u = 0
    w = _least(rows[u], "w adjacent to u")
    far = g.full_mask & ~rows[u] & ~rows[w] & ~(1 << u) & ~(1 << w)
    v = _least(far, "v adjacent to neither u nor w")
    x = _least(rows[u] & rows[v] & ~rows[w], "x in G1(u) & G1(v) minus G1(w)")
    return _finish(g, (w, u, x, v), Pattern.P4, branch)


# ---------------------------------------------------------------------------
# figure witnesses in Johnson and Hamming graphs

_FIGURES = {
    (FamilyKind.JOHNSON2, Pattern.P5): ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6)),
    # a P5 in the Kneser graph, hence a co-P5 in J(m,2) in this order
    (FamilyKind.JOHNSON2, Pattern.COP5): ((1, 2), (3, 4), (1, 5), (2, 3), (1, 4)),
    (FamilyKind.HAMMING2, Pattern.P5): ((0, 0), (0, 1), (1, 1), (1, 2), (2, 2)),
    (FamilyKind.HAMMING2, Pattern.COP5): ((0, 0), (0, 1), (0, 2), (1, 0), (1, 1)),
}

_THRESHOLDS = {
    (FamilyKind.JOHNSON2, Pattern.P5): 6,
    (FamilyKind.JOHNSON2, Pattern.COP5): 5,
    (FamilyKind.HAMMING2, Pattern.P5): 3,
    (FamilyKind.HAMMING2, Pattern.COP5): 3,
}


def explicit_witness(kind, pattern, m: int) -> Witness:
    kind = FamilyKind(kind)
    pattern = Pattern.parse(pattern) if isinstance(pattern, str) else pattern
    key = (kind, pattern)
    if key not in _FIGURES:
        raise ValueError(f"no figure witness for {kind.value}/{pattern.value}")
    if m < _THRESHOLDS[key]:
        raise BelowThreshold(
            f"{kind.value}({m}) has no induced {pattern.value}; needs m >= {_THRESHOLDS[key]}"
        )
    if kind is FamilyKind.JOHNSON2:
        g = johnson2(m)
        label = (lambda a, b: f"{a},{b}") if m > 9 else (lambda a, b: f"{a}{b}")
    else:
        g = hamming2(m)
        label = (lambda a, b: f"{a},{b}") if m > 10 else (lambda a, b: f"{a}{b}")
    vertices = [g.index_of(label(a, b)) for a, b in _FIGURES[key]]
    return _finish(g, vertices, pattern, "figure")


# ---------------------------------------------------------------------------
# Latin square graphs


def latin_p5(sq: LatinSquare) -> Witness:
    """Induced P5 in a Latin square graph of order m >= 5.

    With symbols relabelled so row 0 reads 0..m-1: cells (0,0), (0,1); the
    cell of column 1 holding symbol 2 (row r); the least cell of row r outside
    columns 0, 1 with a symbol other than 0, 1 (symbol s); the least cell with
    symbol s outside rows 0, r and columns 0, 1.
    """
    m = sq.m
    if m < 5:
        raise BadOrder(f"latin_p5 needs m >= 5, got {m}")
    L = sq.normalized()
    r = next(row for row in range(m) if L[row, 1] == 2)
    cols = [c for c in range(2, m) if L[r, c] not in (0, 1)]
    if not cols:
        raise ProofViolation(f"row {r} has no admissible fourth cell")
    c4 = cols[0]
    s = L[r, c4]
    fifth = [
        (row, col)
        for row in range(1, m)
        for col in range(2, m)
        if row != r and L[row, col] == s
    ]
    if not fifth:
        raise ProofViolation(f"no admissible cell with symbol {s}")
    cells = [(0, 0), (0, 1), (r, 1), (r, c4), fifth[0]]
    g = latin_square_graph(sq)
    return _finish(g, [cell_index(m, *rc) for rc in cells], Pattern.P5, "greedy")


def latin_cop5(sq: LatinSquare) -> Witness:
    """Induced co-P5 in a Latin square graph of order m >= 6.

    The triangle is (0,0), (0,1), (0,2); the square closes through the first
    row whose column-0 symbol avoids {1, 2} and column-1 symbol avoids {0, 2}.
    """
    m = sq.m
    if m < 6:
        raise BadOrder(f"latin_cop5 needs m >= 6, got {m}")
    L = sq.normalized()
    rows = [r for r in range(1, m) if L[r, 0] not in (1, 2) and L[r, 1] not in (0, 2)]
    if not rows:
        raise ProofViolation("every row is blocked")
    r = rows[0]
    # pattern order: shared edge (0,0)-(0,1) at the ends, apex (0,2) in the middle
    cells = [(0, 0), (r, 1), (0, 2), (r, 0), (0, 1)]
    g = latin_square_graph(sq)
    return _finish(g, [cell_index(m, *rc) for rc in cells], Pattern.COP5, "greedy")


def _normalized_pair(p: MolsPair):
    first, second = p.first.normalized(), p.second.normalized()
    return first, second


def mols_p5(p: MolsPair) -> Witness:
    """Induced P5 in the graph of an orthogonal pair of order m >= 8.

    Both squares are relabelled so row 0 reads 0..m-1, making row 0 the cells
    00, 11, 22, ...  The path is (0,0), (0,1), then down column 1 to a row r
    whose cell has no 0 in either coordinate, along row r to a cell avoiding
    columns 0, 1 and symbols 0, 1, then to a cell sharing its first symbol
    that is adjacent to none of the first three.
    """
    m = p.m
    if m < 8:
        raise BadOrder(f"mols_p5 needs m >= 8, got {m}")
    L, M = _normalized_pair(p)
    rows3 = [r for r in range(1, m) if L[r, 1] != 0 and M[r, 1] != 0]
    if not rows3:
        raise ProofViolation("no third vertex in column 1")
    r = rows3[0]
    cols4 = [c for c in range(2, m) if L[r, c] not in (0, 1) and M[r, c] not in (0, 1)]
    if not cols4:
        raise ProofViolation(f"row {r} has no admissible fourth cell")
    c4 = cols4[0]
    a = L[r, c4]
    third = (L[r, 1], M[r, 1])
    fifth = [
        (row, col)
        for row in range(1, m)
        for col in range(2, m)
        if row != r
        and L[row, col] == a
        and L[row, col] not in (0, 1, third[0])
        and M[row, col] not in (0, 1, third[1])
    ]
    if not fifth:
        raise ProofViolation(f"no admissible fifth cell with first symbol {a}")
    cells = [(0, 0), (0, 1), (r, 1), (r, c4), fifth[0]]
    g = mols_graph(p)
    return _finish(g, [cell_index(m, *rc) for rc in cells], Pattern.P5, "greedy")


def mols_cop5(p: MolsPair) -> Witness:
    """Induced co-P5 in the graph of an orthogonal pair of order m >= 10.

    Triangle 00, 11, 22 in row 0; the first row whose column-0 cell avoids
    symbols {1, 2} and column-1 cell avoids {0, 2} in both squares.
    """
    m = p.m
    if m < 10:
        raise BadOrder(f"mols_cop5 needs m >= 10, got {m}")
    L, M = _normalized_pair(p)
    rows = [
        r
        for r in range(1, m)
        if L[r, 0] not in (1, 2)
        and M[r, 0] not in (1, 2)
        and L[r, 1] not in (0, 2)
        and M[r, 1] not in (0, 2)
    ]
    if not rows:
        raise ProofViolation("every row is blocked")
    r = rows[0]
    cells = [(0, 0), (r, 1), (0, 2), (r, 0), (0, 1)]
    g = mols_graph(p)
    return _finish(g, [cell_index(m, *rc) for rc in cells], Pattern.COP5, "greedy")


# ---------------------------------------------------------------------------
# Steiner triple systems


def _sts_start(s: SteinerTripleSystem):
    """Blocks A, B, C with A ~ B ~ C and A, C disjoint (indices into s.blocks)."""
    sets = [frozenset(b) for b in s.blocks]
    a = 0
    b = next((j for j in range(1, len(sets)) if sets[j] & sets[a]), None)
    if b is None:
        return sets, None
    b_only = sets[b] - sets[a]
    c = next(
        (j for j, blk in enumerate(sets) if j != b and blk & b_only and not blk & sets[a]),
        None,
    )
    return sets, (a, b, c) if c is not None else None


def _sts_p5_greedy(s: SteinerTripleSystem) -> Optional[tuple]:
    sets, start = _sts_start(s)
    if start is None:
        return None
    a, b, c = start
    c_only = sets[c] - sets[b]
    d = next(
        (j for j, blk in enumerate(sets)
         if j != c and blk & c_only and not blk & (sets[a] | sets[b])),
        None,
    )
    if d is None:
        return None
    d_only = sets[d] - sets[c]
    e = next(
        (j for j, blk in enumerate(sets)
         if j != d and blk & d_only and not blk & (sets[a] | sets[b] | sets[c])),
        None,
    )
    if e is None:
        return None
    return (a, b, c, d, e)


def sts_p5(s: SteinerTripleSystem) -> Witness:
    """Induced P5 A-B-C-D-E in the block-intersection graph, m >= 13.

    A is the first block, B the first block meeting it, C the first block
    meeting B outside A and missing A, D the first block meeting C outside B
    and missing A and B, E the first block meeting D outside C and missing
    A, B, C.  For m >= 19 each step is guaranteed to succeed.  For m = 13, 15
    the same greedy choice is tried first and the exhaustive search is the
    fallback.
    """
    if s.m < 13:
        raise BelowThreshold(f"STS({s.m}) block graphs are P5-free; needs m >= 13")
    g = sts_block_graph(s)
    blocks = _sts_p5_greedy(s)
    if blocks is not None:
        return _finish(g, blocks, Pattern.P5, "greedy")
    if s.m >= 19:
        raise ProofViolation(f"greedy P5 construction failed for m={s.m}")
    outcome = find_induced(g, Pattern.P5)
    if not outcome.found:
        raise ProofViolation(f"no induced P5 in the STS({s.m}) block graph")
    return _finish(g, outcome.witness, Pattern.P5, "oracle")


def sts_cop5(s: SteinerTripleSystem) -> Witness:
    """Induced co-P5 in the block-intersection graph, m >= 13.

    From A, B, C as for the P5: D is the first completion of a pair
    (a in A minus B, c in C minus B) that misses B, and E the first block
    through the point of A and B that misses C and D.  A, B, E form the
    triangle and A-D-C-B the square.
    """
    if s.m < 13:
        raise BelowThreshold(f"STS({s.m}) block graphs are co-P5-free; needs m >= 13")
    sets, start = _sts_start(s)
    if start is None:
        raise ProofViolation("no blocks A, B, C")
    a, b, c = start
    completions = sorted(
        {s.completion(x, y) for x in sets[a] - sets[b] for y in sets[c] - sets[b]}
    )
    d = next((j for j in completions if not sets[j] & sets[b]), None)
    if d is None:
        raise ProofViolation("every cross completion meets B")
    (p,) = sets[a] & sets[b]
    e = next(
        (j for j, blk in enumerate(sets)
         if j not in (a, b) and p in blk and not blk & (sets[c] | sets[d])),
        None,
    )
    if e is None:
        raise ProofViolation(f"no block through {p} avoiding C and D")
    g = sts_block_graph(s)
    return _finish(g, (a, c, e, d, b), Pattern.COP5, "greedy")
