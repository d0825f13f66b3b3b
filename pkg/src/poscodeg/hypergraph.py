"""Uniform hypergraphs and their degree parameters.

Vertices are the integers ``0..n-1``.  Edges are stored as ascending tuples in
lexicographic order, so iteration is deterministic and every search built on
top of this module produces reproducible certificates.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

Edge = tuple[int, ...]


class Hypergraph:
    """An immutable r-uniform hypergraph on vertices ``0..n-1``.

    ``r`` may be 1 so that link and shadow graphs of 2-graphs are
    representable; every constructor below otherwise expects ``r >= 2``.
    """

    def __init__(self, r: int, n: int, edges: Iterable[Iterable[int]] = ()) -> None:
        if r < 1:
            raise ValueError(f"uniformity must be positive, got {r}")
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        canon = set()
        for raw in edges:
            e = tuple(sorted(raw))
            if len(e) != r or len(set(e)) != r:
                raise ValueError(f"edge {tuple(raw)} does not have {r} distinct vertices")
            if e[0] < 0 or e[-1] >= n:
                raise ValueError(f"edge {e} has a vertex outside [0, {n})")
            canon.add(e)
        self._r = r
        self._n = n
        self._edges: tuple[Edge, ...] = tuple(sorted(canon))
        self._edge_set = frozenset(self._edges)

    @property
    def r(self) -> int:
        return self._r

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    def __len__(self) -> int:
        return len(self._edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self._edges)

    def __contains__(self, edge: Iterable[int]) -> bool:
        return tuple(sorted(edge)) in self._edge_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self._r, self._n, self._edges) == (other._r, other._n, other._edges)

    def __hash__(self) -> int:
        return hash((self._r, self._n, self._edges))

    def __repr__(self) -> str:
        return f"Hypergraph(r={self._r}, n={self._n}, edges={len(self._edges)})"

    def is_empty(self) -> bool:
        return not self._edges

    def has_edge(self, edge: Iterable[int]) -> bool:
        return tuple(sorted(edge)) in self._edge_set

    def issubgraph(self, other: Hypergraph) -> bool:
        return self._r == other._r and self._n == other._n and self._edge_set <= other._edge_set

    def with_edges(self, edges: Iterable[Iterable[int]]) -> Hypergraph:
        return Hypergraph(self._r, self._n, edges)

    def induced(self, keep: Iterable[int]) -> Hypergraph:
        """Edges inside ``keep``; the label space is unchanged."""
        keep = set(keep)
        return Hypergraph(self._r, self._n, (e for e in self._edges if keep.issuperset(e)))

    def relabel(self, perm: list[int] | tuple[int, ...]) -> Hypergraph:
        """Image of the hypergraph under ``v -> perm[v]``."""
        return Hypergraph(self._r, self._n, (tuple(perm[v] for v in e) for e in self._edges))

    # cached adjacency structures -------------------------------------------------

    @cached_property
    def codegree_map(self) -> dict[Edge, frozenset[int]]:
        """Map every (r-1)-set of positive co-degree to its co-degree neighbourhood.

        Built in one pass over the edges.
        """
        acc: dict[Edge, set[int]] = defaultdict(set)
        for e in self._edges:
            for i, v in enumerate(e):
                acc[e[:i] + e[i + 1:]].add(v)
        return {s: frozenset(nb) for s, nb in sorted(acc.items())}

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self._n
        for e in self._edges:
            for v in e:
                deg[v] += 1
        return tuple(deg)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        """``N(v)``: vertices sharing at least one edge with ``v``."""
        nb: list[set[int]] = [set() for _ in range(self._n)]
        for e in self._edges:
            for v in e:
                nb[v].update(e)
        for v in range(self._n):
            nb[v].discard(v)
        return tuple(frozenset(s) for s in nb)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << v for v in e) for e in self._edges)

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Indices (into ``edges``) of the edges through each vertex."""
        inc: list[list[int]] = [[] for _ in range(self._n)]
        for i, e in enumerate(self._edges):
            for v in e:
                inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def _covered_sets(self) -> frozenset[Edge]:
        out = set()
        for e in self._edges:
            for k in range(1, self._r + 1):
                out.update(combinations(e, k))
        return frozenset(out)

    def in_some_edge(self, vertices: Iterable[int]) -> bool:
        """True iff the given vertex set lies inside at least one edge."""
        s = tuple(sorted(set(vertices)))
        return not s or s in self._covered_sets

    def codegree(self, s: Iterable[int]) -> int:
        return len(self.codegree_map.get(tuple(sorted(s)), ()))

    def pair_codegree(self, u: int, v: int) -> int:
        """Number of edges containing both ``u`` and ``v`` (3-graphs: ``d_2``)."""
        return sum(1 for i in self.incident[u] if v in self._edges[i])

    def isolated(self) -> frozenset[int]:
        return frozenset(v for v, d in enumerate(self.degrees) if d == 0)


@dataclass(frozen=True)
class DegreeProfile:
    delta1: int
    delta_codeg: int
    delta_pos_codeg: int
    isolated: frozenset[int]
    is_empty: bool

    def to_dict(self) -> dict:
        return {
            "delta1": self.delta1,
            "delta_codeg": self.delta_codeg,
            "delta_pos_codeg": self.delta_pos_codeg,
            "isolated": sorted(self.isolated),
            "is_empty": self.is_empty,
        }


def degree_profile(h: Hypergraph) -> DegreeProfile:
    counts = [len(nb) for nb in h.codegree_map.values()]
    delta_pos = min(counts) if counts else 0
    total = math.comb(h.n, h.r - 1)
    delta_codeg = delta_pos if counts and len(counts) == total else 0
    delta1 = min(h.degrees) if h.n else 0
    return DegreeProfile(delta1, delta_codeg, delta_pos, h.isolated(), h.is_empty())


def min_positive_codegree(h: Hypergraph) -> int:
    return degree_profile(h).delta_pos_codeg


def codegree_neighborhood(h: Hypergraph, s: Iterable[int]) -> frozenset[int]:
    key = tuple(sorted(set(s)))
    if len(key) != h.r - 1:
        raise ValueError(f"expected a set of size {h.r - 1}, got {key}")
    for v in key:
        if not 0 <= v < h.n:
            raise ValueError(f"vertex {v} outside [0, {h.n})")
    return h.codegree_map.get(key, frozenset())


def link_graph(h: Hypergraph, v: int) -> Hypergraph:
    if not 0 <= v < h.n:
        raise ValueError(f"vertex {v} outside [0, {h.n})")
    return Hypergraph(h.r - 1, h.n, (tuple(u for u in e if u != v) for e in h.edges if v in e))


def shadow_graph(h: Hypergraph) -> Hypergraph:
    if h.r < 2:
        raise ValueError("the shadow of a 1-graph is not defined")
    return Hypergraph(h.r - 1, h.n, h.codegree_map.keys())


def pair_graph(h: Hypergraph) -> Hypergraph:
    """2-graph of vertex pairs lying in a common edge (the iterated shadow)."""
    return Hypergraph(2, h.n, ((u, w) for u in range(h.n) for w in h.neighbors[u] if u < w))


def is_independent(h: Hypergraph, s: Iterable[int]) -> bool:
    s = set(s)
    return not any(s.issuperset(e) for e in h.edges)


def is_strongly_independent(h: Hypergraph, s: Iterable[int]) -> bool:
    s = set(s)
    return all(len(s.intersection(e)) <= 1 for e in h.edges)


def codegree_prune(h: Hypergraph, t: int) -> Hypergraph:
    """Largest subhypergraph whose minimum positive co-degree is at least ``t``.

    Each round removes every edge through an (r-1)-set with co-degree in
    ``(0, t)``; the round structure makes the result independent of order.
    """
    if t < 0:
        raise ValueError("floor must be non-negative")
    edges = set(h.edges)
    while True:
        acc: dict[Edge, int] = defaultdict(int)
        for e in edges:
            for i in range(len(e)):
                acc[e[:i] + e[i + 1:]] += 1
        bad = {s for s, c in acc.items() if c < t}
        if not bad:
            break
        edges = {e for e in edges if not any(e[:i] + e[i + 1:] in bad for i in range(len(e)))}
    return Hypergraph(h.r, h.n, edges)
