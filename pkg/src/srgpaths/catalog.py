"""Named instances of every family, addressed by short spec strings.

A spec is ``kind[:arg[:arg]]``, e.g. ``johnson2:6``, ``multipartite:3:2``,
``latin:6``, ``mols:9``, ``sts-bose:15``, ``sts-paper:1``, ``petersen``, ``c5``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional

from . import families as fam
from .errors import BadOrder
from .graph import Graph, cycle_graph
from .srg import SrgParams


@dataclass(frozen=True)
class Instance:
    name: str
    graph: Graph
    expected: Optional[SrgParams]
    design: Any = None  # LatinSquare, MolsPair or SteinerTripleSystem when applicable
    kind: str = ""


def _ints(args, count):
    if len(args) != count:
        raise BadOrder(f"expected {count} integer argument(s), got {len(args)}")
    try:
        return [int(a) for a in args]
    except ValueError as exc:
        raise BadOrder(f"non-integer argument in {args}") from exc


def build(spec: str) -> Instance:
    kind, *args = spec.split(":")
    kind = kind.lower().replace("_", "-")
    if kind in ("johnson2", "kneser2", "hamming2"):
        (m,) = _ints(args, 1)
        g = fam.named_family(kind, m)
        return Instance(spec, g, fam.expected_params(kind, m), kind=kind)
    if kind == "petersen":
        return Instance(spec, fam.petersen(), fam.expected_params("petersen"), kind=kind)
    if kind == "c5":
        return Instance(spec, cycle_graph(5), SrgParams(5, 2, 0, 1), kind=kind)
    if kind == "multipartite":
        r, m = _ints(args, 2)
        g = fam.complete_multipartite(r, m)
        return Instance(spec, g, fam.expected_params("complete_multipartite", r, m), kind=kind)
    if kind == "latin":
        (m,) = _ints(args, 1)
        sq = fam.cyclic_latin(m)
        return Instance(spec, fam.latin_square_graph(sq), fam.expected_params("latin_square", m), sq, kind)
    if kind == "mols":
        (m,) = _ints(args, 1)
        pair = fam.orthogonal_pair(m)
        return Instance(spec, fam.mols_graph(pair), fam.expected_params("mols", m), pair, kind)
    if kind in ("sts-bose", "sts-skolem", "sts-paper", "sts"):
        (m,) = _ints(args, 1)
        if kind == "sts-paper":
            s = fam.paper_sts13(m)
        elif kind == "sts-bose":
            s = fam.bose_sts(m)
        elif kind == "sts-skolem":
            s = fam.skolem_sts(m)
        else:
            s = fam.sts_by_order(m)
        return Instance(spec, fam.sts_block_graph(s), fam.expected_params("sts_block", s.m), s, "sts")
    raise BadOrder(f"unknown family spec {spec!r}")


def parameter_catalog() -> list:
    """Every instance whose parameters are checked against the closed forms."""
    specs = (
        [f"johnson2:{m}" for m in range(4, 9)]
        + [f"kneser2:{m}" for m in range(5, 9)]
        + [f"hamming2:{m}" for m in range(2, 7)]
        + [f"latin:{m}" for m in range(3, 8)]
        + [f"mols:{m}" for m in (5, 7, 9, 11)]
        + ["sts-skolem:7", "sts-bose:9", "sts-paper:1", "sts-paper:2", "sts-bose:15"]
        + [f"multipartite:{r}:{m}" for r in range(1, 5) for m in range(1, 5)]
        + ["petersen", "c5"]
    )
    return [build(s) for s in specs]


def builtin_survey_specs(max_n: int = 36) -> list:
    """Specs of the primitive SRGs the generators produce with at most ``max_n`` vertices."""
    from .srg import is_primitive

    candidates = (
        ["c5", "petersen"]
        + [f"johnson2:{m}" for m in range(5, 10)]
        + [f"kneser2:{m}" for m in range(6, 10)]
        + [f"hamming2:{m}" for m in range(3, 7)]
        + [f"latin:{m}" for m in range(4, 7)]
        + ["mols:5", "sts-paper:1", "sts-paper:2", "sts-bose:15"]
    )
    out = []
    for spec in candidates:
        inst = build(spec)
        if inst.graph.n <= max_n and is_primitive(inst.graph):
            out.append(spec)
    return out
