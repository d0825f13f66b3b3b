"""Exact matching solvers: hypergraph matchings and bipartite saturation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping

from ..certificates import Matching
from ..hypergraph import Hypergraph
from ._search import Deadline


def _greedy(h: Hypergraph) -> list[int]:
    used, chosen = 0, []
    for i, m in enumerate(h.edge_masks):
        if not m & used:
            used |= m
            chosen.append(i)
    return chosen


def max_matching(h: Hypergraph, *, deadline_ms: float | None = None) -> Matching:
    """Maximum matching by branch and bound.

    Branches on the lowest undecided vertex: either one of its usable edges
    covers it, or it stays uncovered.  Bound: chosen + undecided // r.
    """
    masks, inc, r = h.edge_masks, h.incident, h.r
    clock = Deadline(deadline_ms)
    best = _greedy(h)
    chosen: list[int] = []

    def dfs(avail: int) -> None:
        nonlocal best
        clock.tick()
        while avail:
            v = (avail & -avail).bit_length() - 1
            usable = [i for i in inc[v] if masks[i] & avail == masks[i]]
            if usable:
                break
            avail &= ~(1 << v)
        else:
            if len(chosen) > len(best):
                best = list(chosen)
            return
        if len(chosen) + bin(avail).count("1") // r <= len(best):
            return
        for i in usable:
            chosen.append(i)
            dfs(avail & ~masks[i])
            chosen.pop()
        dfs(avail & ~(1 << v))

    if len(best) * r < h.n:
        dfs((1 << h.n) - 1)
    return Matching(tuple(h.edges[i] for i in best))


def has_perfect_matching(h: Hypergraph, *, deadline_ms: float | None = None) -> Matching | None:
    """Perfect matching by exact-cover search, or ``None`` if none exists.

    Always branches on the uncovered vertex with the fewest usable edges.
    """
    n, r = h.n, h.r
    if n % r:
        return None
    masks, inc = h.edge_masks, h.incident
    clock = Deadline(deadline_ms)
    full = (1 << n) - 1
    chosen: list[int] = []

    def dfs(covered: int) -> bool:
        clock.tick()
        if covered == full:
            return True
        best_v, best_opts = -1, None
        free = full & ~covered
        while free:
            low = free & -free
            v = low.bit_length() - 1
            free ^= low
            opts = [i for i in inc[v] if not masks[i] & covered]
            if best_opts is None or len(opts) < len(best_opts):
                best_v, best_opts = v, opts
                if len(opts) <= 1:
                    break
        if not best_opts:
            return False
        for i in best_opts:
            chosen.append(i)
            if dfs(covered | masks[i]):
                return True
            chosen.pop()
        return False

    if dfs(0):
        return Matching(tuple(h.edges[i] for i in chosen))
    return None


@dataclass(frozen=True)
class Saturation:
    """Outcome of an X-saturating matching search.

    Exactly one of ``matching`` (X -> Y) and ``witness`` (a subset W of X with
    ``|N(W)| < |W|``) is set.
    """

    matching: dict | None
    witness: frozenset | None

    @property
    def saturated(self) -> bool:
        return self.matching is not None


def x_saturating_matching(adjacency: Mapping[Hashable, Iterable[Hashable]]) -> Saturation:
    """Augmenting-path search for a matching covering every key of ``adjacency``.

    When some ``x`` cannot be matched, the X-vertices reachable from it by
    alternating paths form a Hall violator: their neighbourhood is exactly the
    visited Y-vertices, all matched back into the set, one fewer than its size.
    """
    adj = {x: list(dict.fromkeys(ys)) for x, ys in adjacency.items()}
    owner: dict = {}

    def augment(x, seen_y: set, seen_x: set) -> bool:
        seen_x.add(x)
        for y in adj[x]:
            if y in seen_y:
                continue
            seen_y.add(y)
            if y not in owner or augment(owner[y], seen_y, seen_x):
                owner[y] = x
                return True
        return False

    for x in adj:
        seen_x: set = set()
        if not augment(x, set(), seen_x):
            return Saturation(None, frozenset(seen_x))
    return Saturation({x: y for y, x in owner.items()}, None)
