"""Classical SRGs built independently of the package, for survey tests.

These stand in for external catalog files: each graph is written to graph6
and fed through the survey like a downloaded catalog would be.
"""

from itertools import combinations, product

import networkx as nx

# generator polynomial of the binary Golay code of length 23
_GOLAY_POLY = 0b110001110101


def clebsch():
    # folded 5-cube: 16 vertices, (16,5,0,2)
    g = nx.Graph()
    words = list(range(16))
    for a in words:
        for i in range(4):
            g.add_edge(a, a ^ (1 << i))
        g.add_edge(a, a ^ 0b1111)
    return g


def hoffman_singleton():
    # Robertson's pentagons and pentagrams: (50,7,0,1)
    g = nx.Graph()
    for h in range(5):
        for j in range(5):
            g.add_edge(("P", h, j), ("P", h, (j + 1) % 5))
            g.add_edge(("Q", h, j), ("Q", h, (j + 2) % 5))
    for h, i, j in product(range(5), repeat=3):
        g.add_edge(("P", h, j), ("Q", i, (h * i + j) % 5))
    return g


def _octads():
    gens = []
    for shift in range(12):
        word = _GOLAY_POLY << shift
        parity = bin(word).count("1") & 1
        gens.append(word | (parity << 23))
    code = {0}
    for gen in gens:
        code |= {c ^ gen for c in code}
    return [c for c in code if bin(c).count("1") == 8]


def _hexads():
    # blocks of S(3,6,22): octads through two fixed points, with them removed
    fixed = (1 << 22) | (1 << 23)
    return [o & ~fixed for o in _octads() if o & fixed == fixed]


def m22_graph():
    # hexads adjacent when disjoint: (77,16,0,4)
    hexads = _hexads()
    g = nx.Graph()
    g.add_nodes_from(range(len(hexads)))
    for i, j in combinations(range(len(hexads)), 2):
        if hexads[i] & hexads[j] == 0:
            g.add_edge(i, j)
    return g


def gewirtz():
    # hexads avoiding point 0, adjacent when disjoint: (56,10,0,2)
    h = m22_graph()
    hexads = _hexads()
    return h.subgraph([i for i, x in enumerate(hexads) if not x & 1]).copy()


def higman_sims():
    # infinity, 22 points, 77 hexads: (100,22,0,6)
    hexads = _hexads()
    g = nx.Graph()
    for p in range(22):
        g.add_edge("inf", ("pt", p))
        for i, x in enumerate(hexads):
            if x >> p & 1:
                g.add_edge(("pt", p), ("hx", i))
    for i, j in combinations(range(len(hexads)), 2):
        if hexads[i] & hexads[j] == 0:
            g.add_edge(("hx", i), ("hx", j))
    return g


KNOWN = {
    "clebsch": (clebsch, (16, 5, 0, 2)),
    "hoffman_singleton": (hoffman_singleton, (50, 7, 0, 1)),
    "gewirtz": (gewirtz, (56, 10, 0, 2)),
    "m22": (m22_graph, (77, 16, 0, 4)),
    "higman_sims": (higman_sims, (100, 22, 0, 6)),
}


def graph6_line(g):
    g = nx.convert_node_labels_to_integers(g, ordering="sorted" if _sortable(g) else "default")
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def _sortable(g):
    try:
        sorted(g.nodes)
        return True
    except TypeError:
        return False
