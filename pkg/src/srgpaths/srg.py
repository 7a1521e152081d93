"""Strongly regular graph recognition and parameter arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import InfeasibleResult, NotSrg
from .graph import Graph, complement, iter_bits, popcount


class SrgParams(NamedTuple):
    n: int
    k: int
    lam: int
    mu: int

    def validate(self) -> "SrgParams":
        n, k, lam, mu = self
        if not (0 <= k < n or (n == 0 and k == 0)):
            raise InfeasibleResult(f"degree {k} out of range for n={n}")
        if not (0 <= lam <= k and 0 <= mu <= k):
            raise InfeasibleResult(f"lambda/mu out of range in {tuple(self)}")
        if k < n - 1 and k * (k - lam - 1) != (n - k - 1) * mu:
            raise InfeasibleResult(f"counting identity fails for {tuple(self)}")
        return self

    def canonical(self) -> "SrgParams":
        """Zero out lambda/mu when no vertex pair of that kind exists."""
        n, k, lam, mu = self
        return SrgParams(n, k, lam if k > 0 else 0, mu if k < n - 1 else 0)

    def __str__(self) -> str:
        return "({},{},{},{})".format(*self)


@dataclass(frozen=True)
class MultipartiteShape:
    r: int
    m: int


def srg_params(g: Graph) -> Optional[SrgParams]:
    """Return ``(n, k, lambda, mu)`` if ``g`` is strongly regular, else None.

    Complete graphs report ``mu = 0``, as does any graph with no non-adjacent pair.
    The empty graph on zero vertices is not considered strongly regular.
    """
    n = g.n
    if n == 0:
        return None
    k = g.degree(0)
    if any(g.degree(u) != k for u in range(n)):
        return None
    lam = mu = None
    rows = g.rows
    for u in range(n):
        ru = rows[u]
        for v in range(u + 1, n):
            common = popcount(ru & rows[v])
            if (ru >> v) & 1:
                if lam is None:
                    lam = common
                elif common != lam:
                    return None
            else:
                if mu is None:
                    mu = common
                elif common != mu:
                    return None
    params = SrgParams(n, k, lam or 0, mu or 0)
    # a regular graph with constant lambda and mu always satisfies the identity
    assert k == n - 1 or k * (k - params.lam - 1) == (n - k - 1) * params.mu, params
    return params


def complement_params(p: SrgParams) -> SrgParams:
    n, k, lam, mu = p
    out = SrgParams(n, n - k - 1, n - 2 * k + mu - 2, n - 2 * k + lam)
    if min(out) < 0:
        raise InfeasibleResult(f"complement of {p} has a negative component {out}")
    return out


def is_primitive(g: Graph) -> bool:
    if srg_params(g) is None:
        raise NotSrg("graph is not strongly regular")
    return g.is_connected() and complement(g).is_connected()


def multipartite_decomposition(g: Graph) -> Optional[MultipartiteShape]:
    """Recognize ``g`` as ``K_{r x m}`` with ``r >= 2`` equal parts.

    The parts are the components of the complement; each must be an
    independent set in ``g`` (a clique in the complement) of common size.
    """
    if g.n == 0:
        return None
    parts = complement(g).components()
    if len(parts) < 2:
        return None
    size = popcount(parts[0])
    for part in parts:
        if popcount(part) != size:
            return None
        for v in iter_bits(part):
            # independent inside the part, joined to everything outside it
            if g.rows[v] & part or g.rows[v] != g.full_mask & ~part:
                return None
    return MultipartiteShape(len(parts), size)

