"""Generators for the graph families and designs, with their parameter formulas."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from importlib import resources
from itertools import combinations
from typing import Sequence

from .errors import BadIndex, BadOrder, NotLatin, NotSts
from .graph import Graph, complement
from .srg import SrgParams


class FamilyKind(str, Enum):
    JOHNSON2 = "johnson2"
    KNESER2 = "kneser2"
    HAMMING2 = "hamming2"
    PETERSEN = "petersen"
    COMPLETE_MULTIPARTITE = "complete_multipartite"
    LATIN_SQUARE = "latin_square"
    MOLS = "mols"
    PSEUDO_LATIN = "pseudo_latin"
    STS_BLOCK = "sts_block"


# ---------------------------------------------------------------------------
# designs


@dataclass(frozen=True)
class LatinSquare:
    m: int
    cells: tuple  # tuple of row tuples

    def __post_init__(self):
        m = self.m
        if len(self.cells) != m or any(len(row) != m for row in self.cells):
            raise NotLatin(f"expected a {m}x{m} array")
        for r, row in enumerate(self.cells):
            if sorted(row) != list(range(m)):
                raise NotLatin(f"row {r} is not a permutation of 0..{m - 1}")
        for c in range(m):
            col = [self.cells[r][c] for r in range(m)]
            if sorted(col) != list(range(m)):
                raise NotLatin(f"column {c} is not a permutation of 0..{m - 1}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "LatinSquare":
        return cls(len(rows), tuple(tuple(int(x) for x in row) for row in rows))

    def __getitem__(self, rc):
        r, c = rc
        return self.cells[r][c]

    def normalized(self) -> "LatinSquare":
        """Relabel symbols so that row 0 reads 0, 1, ..., m-1."""
        relabel = {s: j for j, s in enumerate(self.cells[0])}
        return LatinSquare(self.m, tuple(tuple(relabel[s] for s in row) for row in self.cells))


@dataclass(frozen=True)
class MolsPair:
    first: LatinSquare
    second: LatinSquare

    def __post_init__(self):
        m = self.first.m
        if self.second.m != m:
            raise NotLatin("squares have different orders")
        pairs = {(self.first[r, c], self.second[r, c]) for r in range(m) for c in range(m)}
        if len(pairs) != m * m:
            raise NotLatin("squares are not orthogonal")

    @property
    def m(self) -> int:
        return self.first.m


@dataclass(frozen=True)
class SteinerTripleSystem:
    m: int
    blocks: tuple  # sorted 3-tuples of points in 1..m, in a fixed order

    def __post_init__(self):
        m = self.m
        if m % 6 not in (1, 3):
            raise NotSts(f"no STS of order {m}: need m = 1 or 3 mod 6")
        if len(self.blocks) != m * (m - 1) // 6:
            raise NotSts(f"expected {m * (m - 1) // 6} blocks, got {len(self.blocks)}")
        seen = {}
        for block in self.blocks:
            if len(set(block)) != 3 or not all(1 <= p <= m for p in block):
                raise NotSts(f"bad block {block}")
            for pair in combinations(sorted(block), 2):
                if pair in seen:
                    raise NotSts(f"pair {pair} is covered twice (blocks {seen[pair]} and {block})")
                seen[pair] = block
        for pair in combinations(range(1, m + 1), 2):
            if pair not in seen:
                raise NotSts(f"pair {pair} is not covered")

    @classmethod
    def from_blocks(cls, m: int, blocks) -> "SteinerTripleSystem":
        return cls(m, tuple(tuple(sorted(int(p) for p in b)) for b in blocks))

    def completion(self, x: int, y: int) -> int:
        """Index of the unique block containing both points."""
        for i, block in enumerate(self.blocks):
            if x in block and y in block:
                return i
        raise NotSts(f"pair ({x},{y}) not covered")


# ---------------------------------------------------------------------------
# named graph families


def _pair_label(a: int, b: int, wide: bool) -> str:
    return f"{a},{b}" if wide else f"{a}{b}"


def johnson2(m: int) -> Graph:
    if m < 2:
        raise BadOrder(f"J(m,2) needs m >= 2, got {m}")
    pairs = list(combinations(range(1, m + 1), 2))
    labels = [_pair_label(a, b, m > 9) for a, b in pairs]
    return Graph.from_predicate(pairs, lambda x, y: len(set(x) & set(y)) == 1, labels)


def kneser2(m: int) -> Graph:
    if m < 2:
        raise BadOrder(f"K(m,2) needs m >= 2, got {m}")
    return complement(johnson2(m))


def hamming2(m: int) -> Graph:
    if m < 1:
        raise BadOrder(f"H(2,m) needs m >= 1, got {m}")
    cells = [(a, b) for a in range(m) for b in range(m)]
    labels = [_pair_label(a, b, m > 10) for a, b in cells]
    return Graph.from_predicate(cells, lambda x, y: (x[0] == y[0]) != (x[1] == y[1]), labels)


def petersen() -> Graph:
    return kneser2(5)


def named_family(kind, m: int = 0) -> Graph:
    kind = FamilyKind(kind)
    if kind is FamilyKind.PETERSEN:
        return petersen()
    builders = {FamilyKind.JOHNSON2: johnson2, FamilyKind.KNESER2: kneser2, FamilyKind.HAMMING2: hamming2}
    if kind not in builders:
        raise ValueError(f"{kind.value} is not a named family")
    return builders[kind](m)


def complete_multipartite(r: int, m: int) -> Graph:
    if r < 1 or m < 1:
        raise BadOrder(f"K_(r x m) needs r, m >= 1, got ({r},{m})")
    vertices = [(i, j) for i in range(r) for j in range(m)]
    labels = [f"{i}.{j}" for i, j in vertices]
    return Graph.from_predicate(vertices, lambda x, y: x[0] != y[0], labels)


def expected_params(kind, *args: int, canonical: bool = True) -> SrgParams:
    """Closed-form parameters for each family.

    Argument conventions: johnson2/kneser2/hamming2/latin_square/mols/sts_block
    take the order ``m``; complete_multipartite takes ``(r, m)``; pseudo_latin
    takes ``(t, m)``; petersen takes none.

    With ``canonical`` (the default) a component that counts over an empty set
    of vertex pairs is reported as 0, matching ``srg_params``: lambda when
    k = 0, mu when k = n - 1.  So the STS(7) block graph K7 gets mu = 0 even
    though the formula evaluates to 9.
    """
    raw = _formula(FamilyKind(kind), args)
    return raw.canonical() if canonical else raw


def _formula(kind: FamilyKind, args) -> SrgParams:
    if kind is FamilyKind.PETERSEN:
        return SrgParams(10, 3, 0, 1)
    if kind is FamilyKind.COMPLETE_MULTIPARTITE:
        r, m = args
        if r < 1 or m < 1:
            raise BadOrder(f"bad multipartite shape ({r},{m})")
        return SrgParams(r * m, (r - 1) * m, (r - 2) * m, (r - 1) * m)
    if kind is FamilyKind.PSEUDO_LATIN:
        t, m = args
        if t < 0 or m < 1:
            raise BadOrder(f"bad pseudo-Latin arguments t={t}, m={m}")
        return SrgParams(m * m, (t + 2) * (m - 1), m - 2 + t * (t + 1), (t + 1) * (t + 2))
    (m,) = args
    if kind is FamilyKind.JOHNSON2:
        _need(m >= 2, kind, m)
        return SrgParams(m * (m - 1) // 2, 2 * (m - 2), m - 2, 4)
    if kind is FamilyKind.KNESER2:
        _need(m >= 2, kind, m)
        n = m * (m - 1) // 2
        # complement of the Johnson quadruple, written out
        return SrgParams(n, n - 2 * (m - 2) - 1, n - 4 * (m - 2) + 2, n - 4 * (m - 2) + m - 2)
    if kind is FamilyKind.HAMMING2:
        _need(m >= 1, kind, m)
        return SrgParams(m * m, 2 * (m - 1), m - 2, 2)
    if kind is FamilyKind.LATIN_SQUARE:
        _need(m >= 1, kind, m)
        return SrgParams(m * m, 3 * (m - 1), m, 6)
    if kind is FamilyKind.MOLS:
        _need(m >= 1, kind, m)
        return SrgParams(m * m, 4 * (m - 1), m + 4, 12)
    if kind is FamilyKind.STS_BLOCK:
        _need(m >= 3 and m % 6 in (1, 3), kind, m)
        return SrgParams(m * (m - 1) // 6, 3 * (m - 3) // 2, (m + 3) // 2, 9)
    raise ValueError(kind)


def _need(ok: bool, kind: FamilyKind, m: int) -> None:
    if not ok:
        raise BadOrder(f"{kind.value}: order {m} out of range")


# ---------------------------------------------------------------------------
# Latin squares


def cyclic_latin(m: int) -> LatinSquare:
    if m < 1:
        raise BadOrder(f"order must be positive, got {m}")
    return LatinSquare(m, tuple(tuple((i + j) % m for j in range(m)) for i in range(m)))


def orthogonal_pair(m: int) -> MolsPair:
    """The cyclic pair ``(i + j, 2i + j) mod m``; needs 2 invertible mod m."""
    if m < 3 or m % 2 == 0:
        raise BadOrder(f"cyclic orthogonal pair needs odd m >= 3, got {m}")
    second = LatinSquare(m, tuple(tuple((2 * i + j) % m for j in range(m)) for i in range(m)))
    return MolsPair(cyclic_latin(m), second)


def latin_square_graph(sq: LatinSquare) -> Graph:
    m = sq.m
    cells = [(r, c, sq[r, c]) for r in range(m) for c in range(m)]
    labels = [f"({r},{c}):{s}" for r, c, s in cells]
    return Graph.from_predicate(
        cells, lambda x, y: x[0] == y[0] or x[1] == y[1] or x[2] == y[2], labels
    )


def mols_graph(p: MolsPair) -> Graph:
    m = p.m
    cells = [(r, c, p.first[r, c], p.second[r, c]) for r in range(m) for c in range(m)]
    labels = [f"({r},{c}):{a},{b}" for r, c, a, b in cells]
    return Graph.from_predicate(
        cells, lambda x, y: any(x[i] == y[i] for i in range(4)), labels
    )


def cell_index(m: int, r: int, c: int) -> int:
    """Vertex index of cell (r, c) in a Latin square or MOLS graph."""
    return r * m + c


# ---------------------------------------------------------------------------
# Steiner triple systems


def bose_sts(m: int) -> SteinerTripleSystem:
    """Bose construction for m = 3 mod 6 over Z_n x Z_3, n = m/3."""
    if m < 3 or m % 6 != 3:
        raise BadOrder(f"Bose construction needs m = 3 mod 6, got {m}")
    n = m // 3
    half = (n + 1) // 2  # inverse of 2 mod n

    def point(x, i):
        return x + n * i + 1

    blocks = [(point(x, 0), point(x, 1), point(x, 2)) for x in range(n)]
    for i in range(3):
        for x, y in combinations(range(n), 2):
            blocks.append((point(x, i), point(y, i), point((x + y) * half % n, (i + 1) % 3)))
    return SteinerTripleSystem.from_blocks(m, sorted(tuple(sorted(b)) for b in blocks))


def skolem_sts(m: int) -> SteinerTripleSystem:
    """Skolem construction for m = 1 mod 6 from a half-idempotent quasigroup of order 2t."""
    if m < 7 or m % 6 != 1:
        raise BadOrder(f"Skolem construction needs m = 1 mod 6 and m >= 7, got {m}")
    t = (m - 1) // 6
    q = 2 * t

    def op(x, y):
        s = (x + y) % q
        return s // 2 if s % 2 == 0 else (s + q) // 2

    def point(x, i):
        return x + q * i + 1

    infinity = 3 * q + 1
    blocks = [(point(x, 0), point(x, 1), point(x, 2)) for x in range(t)]
    for x in range(t):
        for i in range(3):
            blocks.append((infinity, point(x + t, i), point(x, (i + 1) % 3)))
    for i in range(3):
        for x, y in combinations(range(q), 2):
            blocks.append((point(x, i), point(y, i), point(op(x, y), (i + 1) % 3)))
    return SteinerTripleSystem.from_blocks(m, sorted(tuple(sorted(b)) for b in blocks))


_STS13 = {
    1: (
        "1 2 3", "1 4 5", "1 6 11", "1 7 8", "1 9 10", "1 12 13", "2 4 8",
        "2 5 7", "2 6 10", "2 9 12", "2 11 13", "3 4 11", "3 5 10", "3 6 12",
        "3 7 9", "3 8 13", "4 6 7", "4 9 13", "4 10 12", "5 6 13", "5 8 12",
        "5 9 11", "6 8 9", "7 10 13", "7 11 12", "8 10 11",
    ),
    2: (
        "1 2 3", "1 4 5", "1 6 11", "1 7 8", "1 9 10", "1 12 13", "2 4 8",
        "2 5 9", "2 6 10", "2 7 13", "2 11 12", "3 4 11", "3 5 10", "3 6 12",
        "3 7 9", "3 8 13", "4 6 7", "4 9 12", "4 10 13", "5 6 13", "5 7 11",
        "5 8 12", "6 8 9", "7 10 12", "8 10 11", "9 11 13",
    ),
}


def paper_sts13(index: int) -> SteinerTripleSystem:
    """One of the two STS(13)s, blocks in the published order."""
    if index not in (1, 2):
        raise BadIndex(f"STS(13) index must be 1 or 2, got {index}")
    return SteinerTripleSystem.from_blocks(13, [b.split() for b in _STS13[index]])


def fixture_text(name: str) -> str:
    """Contents of a bundled data file (``sts13-1.txt``, ``ls6.txt``, ...)."""
    return resources.files("srgpaths.data").joinpath(name).read_text()


def sts_block_graph(s: SteinerTripleSystem) -> Graph:
    sets = [frozenset(b) for b in s.blocks]
    labels = [" ".join(str(p) for p in b) for b in s.blocks]
    return Graph.from_predicate(sets, lambda x, y: bool(x & y), labels)


def sts_by_order(m: int) -> SteinerTripleSystem:
    """Bose or Skolem system of order m, whichever applies."""
    if m % 6 == 3:
        return bose_sts(m)
    if m % 6 == 1 and m >= 7:
        return skolem_sts(m)
    raise BadOrder(f"no STS construction for m={m}")
