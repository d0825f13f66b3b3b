"""Local improvement of C(4,3)-tilings by switching moves.

A switching configuration pairs structure in the uncovered set S with
vertices of one tile C:

* pair type: a positive pair ``ab`` in S and two vertices ``c1, c2`` of C
  with ``abc1, abc2`` edges;
* cherry type: ``s, a, b`` in S with ``sa, sb`` positive and one vertex
  ``c`` of C with ``sac, sbc`` edges.

Two vertex-disjoint configurations on the same tile replace it by two
copies.  When no gain is available, an equal-size exchange that moves a
high S-degree pair into a new tile is applied only if it unlocks a gain.
"""

from __future__ import annotations

from itertools import combinations

from ..hypergraph import Hypergraph
from ..solvers.tiling import C43Copy, Tiling, make_tiling


def _copy(h: Hypergraph, quad) -> C43Copy | None:
    inside = [e for e in combinations(sorted(quad), 3) if h.has_edge(e)]
    if len(inside) < 2:
        return None
    return C43Copy(tuple(quad), (inside[0], inside[1]))


def configurations(h: Hypergraph, s: frozenset[int], tile: C43Copy) -> list[C43Copy]:
    """Every switching configuration between ``s`` and ``tile``, as the copy it would create."""
    cod = h.codegree_map
    tv = set(tile.vertices)
    out = []
    pairs = [p for p in combinations(sorted(s), 2) if p in cod]
    for a, b in pairs:
        hits = sorted(tv & cod[(a, b)])
        for c1, c2 in combinations(hits, 2):
            out.append(C43Copy((a, b, c1, c2), ((a, b, c1), (a, b, c2))))
    nbr: dict[int, list[int]] = {}
    for a, b in pairs:
        nbr.setdefault(a, []).append(b)
        nbr.setdefault(b, []).append(a)
    for centre in sorted(nbr):
        for a, b in combinations(sorted(nbr[centre]), 2):
            ka = cod[tuple(sorted((centre, a)))]
            kb = cod[tuple(sorted((centre, b)))]
            for c in sorted(tv & ka & kb):
                out.append(C43Copy((centre, a, b, c), ((centre, a, c), (centre, b, c))))
    return out


def _inside_gain(h: Hypergraph, s: frozenset[int]) -> C43Copy | None:
    cod = h.codegree_map
    for p in combinations(sorted(s), 2):
        if p not in cod:
            continue
        hits = sorted(cod[p] & s)
        if len(hits) >= 2:
            return _copy(h, p + tuple(hits[:2]))
    return None


def _tile_gain(h: Hypergraph, s: frozenset[int], members: list[C43Copy]):
    for idx, tile in enumerate(members):
        confs = configurations(h, s, tile)
        for c1, c2 in combinations(confs, 2):
            if set(c1.vertices).isdisjoint(c2.vertices):
                return idx, (c1, c2)
    return None


def _gain(h: Hypergraph, n: int, members: list[C43Copy]) -> list[C43Copy] | None:
    s = frozenset(range(n)) - {v for m in members for v in m.vertices}
    extra = _inside_gain(h, s)
    if extra is not None:
        return members + [extra]
    found = _tile_gain(h, s, members)
    if found is not None:
        idx, new = found
        return members[:idx] + members[idx + 1:] + list(new)
    return None


def _exchanges(h: Hypergraph, n: int, members: list[C43Copy]):
    """Equal-size tilings obtained by relocating high S-degree pairs."""
    cod = h.codegree_map
    s = frozenset(range(n)) - {v for m in members for v in m.vertices}

    def s_nbrs(x: int, y: int) -> list[int]:
        return sorted(cod.get(tuple(sorted((x, y))), frozenset()) & s)

    for i, tile in enumerate(members):
        for x, y in combinations(tile.vertices, 2):
            hits = s_nbrs(x, y)
            if len(hits) >= 2:
                new = _copy(h, (x, y, hits[0], hits[1]))
                if new is not None:
                    yield members[:i] + members[i + 1:] + [new]
    for i, j in combinations(range(len(members)), 2):
        ci, cj = members[i].vertices, members[j].vertices
        high = [(x, y) for x in ci for y in cj if len(s_nbrs(x, y)) >= 2]
        for (x1, y1), (x2, y2) in combinations(high, 2):
            if x1 == x2 or y1 == y2:
                continue
            for u1, v1 in combinations(s_nbrs(x1, y1), 2):
                rest = [w for w in s_nbrs(x2, y2) if w not in (u1, v1)]
                if len(rest) < 2:
                    continue
                a = _copy(h, (x1, y1, u1, v1))
                b = _copy(h, (x2, y2, rest[0], rest[1]))
                if a and b:
                    keep = [m for k, m in enumerate(members) if k not in (i, j)]
                    yield keep + [a, b]
                break


def c43_switch_augment(h: Hypergraph, tiling: Tiling, *, max_rounds: int = 10_000) -> Tiling:
    """Apply gain moves (with one-step exchange lookahead) until none is available.

    The size never decreases; it grows by one with every committed move.
    """
    if h.r != 3:
        raise ValueError("C(4,3) switching needs a 3-graph")
    if tiling.family_kind != "c43":
        raise ValueError("expected a C(4,3) tiling")
    members = list(tiling.members)
    start = len(members)
    for _ in range(max_rounds):
        nxt = _gain(h, h.n, members)
        if nxt is None:
            for swapped in _exchanges(h, h.n, members):
                nxt = _gain(h, h.n, swapped)
                if nxt is not None:
                    break
        if nxt is None:
            break
        members = nxt
    members.sort(key=lambda c: c.vertices)
    optimal = tiling.optimal and len(members) == start
    return make_tiling(h, "c43", members, optimal=optimal)
