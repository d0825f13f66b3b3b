"""Perfect matchings by local augmentation.

The 3-uniform routine follows an exchange argument with a fixed case
order: swap through two disjoint positive pairs, then M-extender search
(two matching edges traded for three new edges), then a local one-for-two
swap inside a matching edge plus three unmatched vertices.  The r-uniform
routine grows candidate sets inside the unmatched vertices and extends them
through matching edges using X-saturating matchings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations

from ..certificates import Matching
from ..hypergraph import Edge, Hypergraph, degree_profile
from ..solvers.matching import x_saturating_matching


@dataclass(frozen=True)
class AugmentationState:
    matching: Matching
    unmatched: frozenset[int]
    candidate_sets: tuple[tuple[int, ...], ...] = ()
    f_table: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "matching": self.matching.to_dict(),
            "unmatched": sorted(self.unmatched),
            "candidate_sets": [list(s) for s in self.candidate_sets],
            "f_table": [[i, list(e), c] for (i, e), c in sorted(self.f_table.items())],
        }


def extension_count(h: Hypergraph, s, e: Edge) -> int:
    """Number of vertices ``v`` of ``e`` with ``s + {v}`` inside some host edge."""
    s = tuple(s)
    return sum(1 for v in e if v not in s and h.in_some_edge(s + (v,)))


def augmentation_state(h: Hypergraph, m: Matching, candidate_sets=()) -> AugmentationState:
    unmatched = frozenset(range(h.n)) - m.covered
    sets = tuple(tuple(sorted(s)) for s in candidate_sets)
    for s in sets:
        if not unmatched.issuperset(s):
            raise ValueError(f"candidate set {list(s)} leaves the unmatched vertices")
    flat = [v for s in sets for v in s]
    if len(flat) != len(set(flat)):
        raise ValueError("candidate sets must be pairwise disjoint")
    table = {(i, e): extension_count(h, s, e) for i, s in enumerate(sets) for e in m.edges}
    return AugmentationState(m, unmatched, sets, table)


def greedy_matching(h: Hypergraph) -> Matching:
    used: set[int] = set()
    chosen = []
    for e in h.edges:
        if used.isdisjoint(e):
            chosen.append(e)
            used.update(e)
    return Matching(tuple(chosen))


def _free_edge(h: Hypergraph, unmatched: frozenset[int]) -> Edge | None:
    return next((e for e in h.edges if unmatched.issuperset(e)), None)


# 3-uniform -------------------------------------------------------------------


def pm3_hypotheses_met(h: Hypergraph) -> bool:
    if h.r != 3 or h.n % 3 or h.n == 0:
        return False
    prof = degree_profile(h)
    return not prof.isolated and 3 * prof.delta_pos_codeg >= 2 * h.n - 3


def _positive_pairs(h: Hypergraph, verts) -> list[tuple[int, int]]:
    return [p for p in combinations(sorted(verts), 2) if p in h.codegree_map]


def _pair_swap(h: Hypergraph, m: Matching, unmatched) -> Matching | None:
    pairs = _positive_pairs(h, unmatched)
    for (x, y), (v, w) in combinations(pairs, 2):
        if {x, y} & {v, w}:
            continue
        nxy, nvw = h.codegree_map[(x, y)], h.codegree_map[(v, w)]
        for e in m.edges:
            for a in e:
                if a not in nxy:
                    continue
                for b in e:
                    if b != a and b in nvw:
                        rest = [f for f in m.edges if f != e]
                        return Matching(tuple(rest) + ((a, x, y), (b, v, w)))
    return None


def _colour_support(h: Hypergraph, x: int, covered: frozenset[int]) -> frozenset[int]:
    """Matched vertices ``u`` with some matched ``w`` such that ``uwx`` is an edge."""
    out = set()
    for i in h.incident[x]:
        e = h.edges[i]
        u, w = (v for v in e if v != x)
        if u in covered and w in covered:
            out.update((u, w))
    return frozenset(out)


def _find_extender(h: Hypergraph, m: Matching, triple) -> Matching | None:
    x, y, z = triple
    covered = m.covered
    support = [_colour_support(h, v, covered) for v in triple]

    def score(e: Edge) -> int:
        return sum(len(set(e) & s) for s in support)

    order = sorted(m.edges, key=lambda e: (-score(e), e))
    for e1 in order:
        for x1, y1, z1 in permutations(e1):
            if not (x1 in support[0] and y1 in support[1] and z1 in support[2]):
                continue
            for e2 in order:
                if e2 == e1:
                    continue
                for x2, y2, z2 in permutations(e2):
                    if h.has_edge((x, x1, x2)) and h.has_edge((y, y1, y2)) and h.has_edge((z, z1, z2)):
                        rest = [f for f in m.edges if f not in (e1, e2)]
                        return Matching(tuple(rest) + ((x, x1, x2), (y, y1, y2), (z, z1, z2)))
    return None


def _local_swap(h: Hypergraph, m: Matching, triple) -> Matching | None:
    for e in m.edges:
        pool = sorted(set(e) | set(triple))
        for a in combinations(pool, 3):
            if not h.has_edge(a):
                continue
            b = tuple(v for v in pool if v not in a)
            if h.has_edge(b):
                rest = [f for f in m.edges if f != e]
                return Matching(tuple(rest) + (a, b))
    return None


def _u_neighbours(h: Hypergraph, v: int, unmatched) -> set[int]:
    return set(h.neighbors[v]) & set(unmatched)


def augment_step_3(h: Hypergraph, state: AugmentationState) -> Matching | None:
    """One augmentation of a 3-uniform matching, or ``None`` if no move applies."""
    if h.r != 3:
        raise ValueError("augment_step_3 needs a 3-graph")
    m, unmatched = state.matching, state.unmatched
    free = _free_edge(h, unmatched)
    if free is not None:
        return Matching(m.edges + (free,))
    swapped = _pair_swap(h, m, unmatched)
    if swapped is not None:
        return swapped
    u_sorted = sorted(unmatched)
    low = [v for v in u_sorted if len(_u_neighbours(h, v, unmatched)) <= 1]
    tried = set()
    for triple in combinations(low, 3):
        tried.add(triple)
        for labelled in permutations(triple):
            found = _find_extender(h, m, labelled)
            if found is not None:
                return found
    # cherry case: a centre with two unmatched neighbours, then any remaining triple
    cherries = []
    for c in u_sorted:
        for a, b in combinations(sorted(_u_neighbours(h, c, unmatched)), 2):
            cherries.append(tuple(sorted((c, a, b))))
    rest = [t for t in combinations(u_sorted, 3) if t not in tried]
    for triple in list(dict.fromkeys(cherries)) + rest:
        if triple in tried:
            continue
        tried.add(triple)
        for labelled in permutations(triple):
            found = _find_extender(h, m, labelled)
            if found is not None:
                return found
        found = _local_swap(h, m, triple)
        if found is not None:
            return found
    return None


def perfect_matching_via_extenders(h: Hypergraph, *, log: list[str] | None = None) -> Matching | None:
    """Greedy maximal matching followed by repeated :func:`augment_step_3`."""
    if h.r != 3:
        raise ValueError("perfect_matching_via_extenders needs a 3-graph")
    log = [] if log is None else log
    if h.n % 3:
        log.append("3 does not divide n")
        return None
    m = greedy_matching(h)
    log.append(f"greedy matching of size {len(m)}")
    while not m.is_perfect(h.n):
        nxt = augment_step_3(h, augmentation_state(h, m))
        if nxt is None:
            log.append(f"stuck at size {len(m)}")
            return None
        m = nxt
        log.append(f"augmented to size {len(m)}")
    return m


# r-uniform -------------------------------------------------------------------


def pmr_hypotheses_met(h: Hypergraph) -> bool:
    r, n = h.r, h.n
    if r < 2 or n % r or n < r**3 + r**2 - r:
        return False
    prof = degree_profile(h)
    return not prof.isolated and r * prof.delta_pos_codeg >= (r - 1) * n + r**3


def _grow(h: Hypergraph, sets: list[list[int]], pool: set[int]) -> None:
    r = h.r
    for s in sets:
        for v in sorted(pool):
            if len(s) >= r:
                break
            if v in pool and h.in_some_edge(s + [v]):
                s.append(v)
                pool.discard(v)


def augment_step_r(h: Hypergraph, state: AugmentationState, *, log: list[str] | None = None) -> Matching | None:
    """Trade at most r-1 matching edges for r new disjoint edges.

    Returns ``None`` when the unmatched vertices lack r usable seeds, when a
    minimum-size candidate set fails the extension-sum test, or when no
    matching edge admits a saturating assignment.
    """
    log = [] if log is None else log
    r, n = h.r, h.n
    m, unmatched = state.matching, state.unmatched
    free = _free_edge(h, unmatched)
    if free is not None:
        return Matching(m.edges + (free,))
    seeds = [v for v in sorted(unmatched) if h.degrees[v] > 0][:r]
    if len(seeds) < r:
        log.append("fewer than r non-isolated unmatched vertices")
        return None
    sets = [[v] for v in seeds]
    pool = set(unmatched) - set(seeds)
    _grow(h, sets, pool)
    current = list(m.edges)
    need = Fraction((r - 1) * n, r)
    rounds = 0
    while any(len(s) < r for s in sets):
        rounds += 1
        low = min(len(s) for s in sets)
        idx = [i for i, s in enumerate(sets) if len(s) == low]
        for i in idx:
            total = sum(extension_count(h, sets[i], e) for e in current)
            if total < need:
                log.append(f"round {rounds}: extension sum {total} < {need} for set {sets[i]}")
                return None

        def contribution(e: Edge) -> int:
            return sum(extension_count(h, sets[i], e) for i in idx)

        chosen = None
        for e in sorted(current, key=lambda e: (-contribution(e), e)):
            adj = {i: [v for v in e if h.in_some_edge(sets[i] + [v])] for i in idx}
            sat = x_saturating_matching(adj)
            if sat.saturated:
                chosen = (e, sat.matching)
                break
        if chosen is None:
            log.append(f"round {rounds}: no matching edge extends the candidate sets")
            return None
        e, assign = chosen
        current.remove(e)
        for i, v in assign.items():
            sets[i].append(v)
        pool |= set(e) - set(assign.values())
        _grow(h, sets, pool)
        log.append(f"round {rounds}: released {list(e)}")
    new = Matching(tuple(current) + tuple(tuple(s) for s in sets))
    if len(new) <= len(m):
        return None
    return new


def perfect_matching_via_augmentation(h: Hypergraph, *, log: list[str] | None = None) -> Matching | None:
    """Greedy maximal matching followed by repeated :func:`augment_step_r`."""
    log = [] if log is None else log
    if h.n % h.r:
        log.append("r does not divide n")
        return None
    m = greedy_matching(h)
    log.append(f"greedy matching of size {len(m)}")
    while not m.is_perfect(h.n):
        nxt = augment_step_r(h, augmentation_state(h, m), log=log)
        if nxt is None:
            log.append(f"stuck at size {len(m)}")
            return None
        m = nxt
        log.append(f"augmented to size {len(m)}")
    return m
