"""Vertex-disjoint tilings by C(4,3)-copies and by loose paths."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Literal

from ..certificates import LooseWalk, ValidationReport, validate_loose_walk
from ..hypergraph import Edge, Hypergraph
from ._search import PATH_TILING_LIMIT, TILING_LIMIT, Deadline


@dataclass(frozen=True)
class C43Copy:
    """Four vertices carrying two host edges (the two edges share a pair)."""

    vertices: tuple[int, ...]
    edges: tuple[Edge, Edge]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))
        object.__setattr__(self, "edges", tuple(sorted(tuple(sorted(e)) for e in self.edges)))

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class Tiling:
    family_kind: Literal["c43", "loose-path"]
    members: tuple
    uncovered: frozenset[int]
    optimal: bool = True

    def __len__(self) -> int:
        return len(self.members)

    def is_deficient(self, alpha: float, n: int) -> bool:
        return len(self.uncovered) <= alpha * n

    def to_dict(self) -> dict:
        return {
            "family_kind": self.family_kind,
            "members": [m.to_dict() for m in self.members],
            "uncovered": sorted(self.uncovered),
            "optimal": self.optimal,
        }


def _member_vertices(m) -> tuple[int, ...]:
    return m.vertices


def make_tiling(h: Hypergraph, kind: str, members, optimal: bool = True) -> Tiling:
    covered = {v for m in members for v in _member_vertices(m)}
    return Tiling(kind, tuple(members), frozenset(range(h.n)) - covered, optimal)


def validate_c43(h: Hypergraph, c: C43Copy) -> list[str]:
    out = []
    vs = set(c.vertices)
    if len(vs) != 4 or len(c.vertices) != 4:
        out.append(f"copy {list(c.vertices)} does not have 4 distinct vertices")
    if len(set(c.edges)) != 2:
        out.append(f"copy {list(c.vertices)} needs two distinct edges")
    for e in c.edges:
        if not h.has_edge(e):
            out.append(f"non-edge {list(e)}")
        if not vs.issuperset(e):
            out.append(f"edge {list(e)} leaves copy {list(c.vertices)}")
    return out


def validate_tiling(h: Hypergraph, t: Tiling) -> ValidationReport:
    out: list[str] = []
    seen: set[int] = set()
    for m in t.members:
        if t.family_kind == "c43":
            out.extend(validate_c43(h, m))
        else:
            rep = validate_loose_walk(h, m)
            out.extend(rep.violations)
            if m.kind != "path":
                out.append("tiling member is not a path")
        vs = set(m.vertices)
        if vs & seen:
            out.append(f"members overlap on {sorted(vs & seen)}")
        seen |= vs
    if set(t.uncovered) != set(range(h.n)) - seen:
        out.append("uncovered set does not match the members")
    return ValidationReport(tuple(out))


# C(4,3) tilings ----------------------------------------------------------------


def c43_candidates(h: Hypergraph) -> list[C43Copy]:
    """Every 4-set spanning at least two edges, with its lexicographically first pair of edges."""
    if h.r != 3:
        raise ValueError("C(4,3) tilings need a 3-graph")
    seen: dict[tuple[int, ...], C43Copy] = {}
    for pair, nb in h.codegree_map.items():
        for c1, c2 in combinations(sorted(nb), 2):
            quad = tuple(sorted(pair + (c1, c2)))
            if quad in seen:
                continue
            inside = [e for e in combinations(quad, 3) if h.has_edge(e)]
            seen[quad] = C43Copy(quad, (inside[0], inside[1]))
    return [seen[q] for q in sorted(seen)]


def _greedy_c43(cands: list[C43Copy]) -> list[C43Copy]:
    used: set[int] = set()
    out = []
    for c in cands:
        if used.isdisjoint(c.vertices):
            out.append(c)
            used.update(c.vertices)
    return out


def max_c43_tiling(
    h: Hypergraph, *, deadline_ms: float | None = None, force: bool = False
) -> Tiling:
    """Largest family of vertex-disjoint C(4,3)-copies.

    Exact branch and bound for ``n <= 15`` (or with ``force``): branch on the
    lowest free vertex, either tiled by a candidate through it or left over.
    Larger inputs get greedy selection improved by switching moves, and the
    result is marked non-optimal.
    """
    cands = c43_candidates(h)
    if h.n > TILING_LIMIT and not force:
        from ..procedures.switching import c43_switch_augment

        start = make_tiling(h, "c43", _greedy_c43(cands), optimal=False)
        return c43_switch_augment(h, start)
    masks = [sum(1 << v for v in c.vertices) for c in cands]
    by_low: dict[int, list[int]] = {}
    for i, c in enumerate(cands):
        by_low.setdefault(c.vertices[0], []).append(i)
    coverable = 0
    for m in masks:
        coverable |= m
    clock = Deadline(deadline_ms)
    best = [cands.index(c) for c in _greedy_c43(cands)]
    chosen: list[int] = []

    def dfs(free: int) -> None:
        nonlocal best
        clock.tick()
        free &= coverable
        if len(chosen) + bin(free).count("1") // 4 <= len(best):
            return
        if not free:
            return
        v = (free & -free).bit_length() - 1
        for i in by_low.get(v, ()):
            if masks[i] & free == masks[i]:
                chosen.append(i)
                if len(chosen) > len(best):
                    best = list(chosen)
                dfs(free & ~masks[i])
                chosen.pop()
        dfs(free & ~(1 << v))

    dfs((1 << h.n) - 1)
    return make_tiling(h, "c43", [cands[i] for i in sorted(best)])


# loose path tilings ------------------------------------------------------------


def _ideal_cover(h: Hypergraph, max_paths: int) -> int:
    live = h.n - len(h.isolated())
    if max_paths == 1 and live % 2 == 0:
        live -= 1
    return live


def best_path_tiling(
    h: Hypergraph,
    max_paths: int = 1,
    *,
    deadline_ms: float | None = None,
    force: bool = False,
    seed: int = 0,
    restarts: int = 64,
) -> Tiling:
    """Cover as many vertices as possible with at most ``max_paths`` disjoint loose paths.

    Exhaustive for ``n <= 12`` (or with ``force``); otherwise seeded greedy
    restarts whose result is marked non-optimal.
    """
    if h.r != 3:
        raise ValueError("path tilings are implemented for 3-graphs")
    if max_paths < 1:
        raise ValueError("max_paths must be at least 1")
    if h.n > PATH_TILING_LIMIT and not force:
        return _greedy_paths(h, max_paths, seed, restarts)
    return _exact_paths(h, max_paths, Deadline(deadline_ms))


def _exact_paths(h: Hypergraph, max_paths: int, clock: Deadline) -> Tiling:
    edges, masks = h.edges, h.edge_masks
    inc = h.incident
    target = _ideal_cover(h, max_paths)
    best_cover = 0
    best_paths: list[list[int]] = []
    paths: list[list[int]] = []
    dead: set[tuple[int, int, int]] = set()

    class Found(Exception):
        pass

    def record(used: int) -> None:
        nonlocal best_cover, best_paths
        c = bin(used).count("1")
        if c > best_cover:
            best_cover = c
            best_paths = [list(p) for p in paths]
            if c >= target:
                raise Found

    def grow(used: int, end: int) -> None:
        # extend the open path through ``end``; closing it is handled by the caller
        state = (used, end, len(paths))
        if state in dead:
            return
        clock.tick()
        record(used)
        for i in inc[end]:
            m = masks[i] & ~(1 << end)
            if m & used:
                continue
            a, b = (v for v in edges[i] if v != end)
            for mid, t in ((a, b), (b, a)):
                paths[-1].extend((mid, t))
                grow(used | m, t)
                del paths[-1][-2:]
        if len(paths) < max_paths:
            start_new(used)
        dead.add(state)

    def start_new(used: int) -> None:
        state = (used, -1, len(paths))
        if state in dead:
            return
        for i, m in enumerate(masks):
            if m & used:
                continue
            e = edges[i]
            for j, mid in enumerate(e):
                s, t = e[:j] + e[j + 1:]
                for s, t in ((s, t), (t, s)):
                    paths.append([s, mid, t])
                    grow(used | m, t)
                    paths.pop()
        dead.add(state)

    try:
        if max_paths and len(h):
            start_new(0)
    except Found:
        pass
    members = [LooseWalk(tuple(p), "path", 3) for p in best_paths]
    return make_tiling(h, "loose-path", members)


def _greedy_paths(h: Hypergraph, max_paths: int, seed: int, restarts: int) -> Tiling:
    rng = random.Random(seed)
    edges = list(h.edges)
    target = _ideal_cover(h, max_paths)
    best: list[list[int]] = []
    best_cover = -1
    inc = h.incident
    for _ in range(max(1, restarts)):
        used: set[int] = set()
        paths: list[list[int]] = []
        order = edges[:]
        rng.shuffle(order)
        for e in order:
            if len(paths) >= max_paths:
                break
            if used.intersection(e):
                continue
            s, mid, t = rng.sample(e, 3)
            path = [s, mid, t]
            used.update(e)
            for end_idx in (-1, 0):
                while True:
                    end = path[end_idx]
                    opts = [h.edges[i] for i in inc[end] if not used.intersection(v for v in h.edges[i] if v != end)]
                    if not opts:
                        break
                    nxt = rng.choice(opts)
                    a, b = (v for v in nxt if v != end)
                    if rng.random() < 0.5:
                        a, b = b, a
                    used.update((a, b))
                    if end_idx == -1:
                        path.extend((a, b))
                    else:
                        path[:0] = [b, a]
            paths.append(path)
        cover = sum(len(p) for p in paths)
        if cover > best_cover:
            best_cover, best = cover, paths
            if cover >= target:
                break
    members = [LooseWalk(tuple(p), "path", 3) for p in best]
    return make_tiling(h, "loose-path", members, optimal=best_cover >= target)
