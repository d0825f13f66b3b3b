"""Naive reference implementations used to cross-check the package.

Nothing here imports the solvers or procedures; each oracle works straight
from edge tuples by plain enumeration, so it is slow and only meant for
tiny instances.
"""

from __future__ import annotations

import math
from itertools import combinations, permutations, product


def edge_set(edges):
    return {tuple(sorted(e)) for e in edges}


def min_pos_codegree(r: int, n: int, edges) -> int:
    es = edge_set(edges)
    best = None
    for s in combinations(range(n), r - 1):
        c = sum(1 for v in range(n) if v not in s and tuple(sorted(s + (v,))) in es)
        if c and (best is None or c < best):
            best = c
    return best or 0


def isolated(n: int, edges) -> set[int]:
    return set(range(n)) - {v for e in edges for v in e}


def has_pm(r: int, n: int, edges) -> bool:
    if n % r:
        return False
    es = sorted(edge_set(edges))
    for chosen in combinations(es, n // r):
        if len({v for e in chosen for v in e}) == n:
            return True
    return False


def max_matching_size(n: int, edges) -> int:
    es = sorted(edge_set(edges))
    for k in range(len(es), 0, -1):
        for chosen in combinations(es, k):
            if len({v for e in chosen for v in e}) == sum(len(e) for e in chosen):
                return k
    return 0


def _distinct_reps(options: list[list[tuple]]) -> bool:
    def go(i: int, used: set) -> bool:
        if i == len(options):
            return True
        for e in options[i]:
            if e not in used:
                used.add(e)
                if go(i + 1, used):
                    return True
                used.discard(e)
        return False

    return go(0, set())


def has_berge_hc(r: int, n: int, edges) -> bool:
    es = sorted(edge_set(edges))
    if n < 3 and r == 2:
        return False
    for rest in permutations(range(1, n)):
        order = (0,) + rest
        if n > 2 and order[1] > order[-1]:
            continue
        opts = [[e for e in es if order[i] in e and order[(i + 1) % n] in e] for i in range(n)]
        if all(opts) and _distinct_reps(opts):
            return True
    return False


def has_loose_hc(r: int, n: int, edges) -> bool:
    es = edge_set(edges)
    step = r - 1
    if n % step or n // step < 2 or (r == 2 and n < 3):
        return False
    k = n // step
    for order in permutations(range(n)):
        blocks = [tuple(sorted(order[(i * step + j) % n] for j in range(r))) for i in range(k)]
        if len(set(blocks)) == k and all(b in es for b in blocks):
            return True
    return False


def max_c43_count(n: int, edges) -> int:
    es = edge_set(edges)
    quads = [q for q in combinations(range(n), 4) if sum(1 for t in combinations(q, 3) if t in es) >= 2]
    best = 0

    def go(start: int, used: frozenset, size: int) -> None:
        nonlocal best
        best = max(best, size)
        if size + (n - len(used)) // 4 <= best:
            return
        for i in range(start, len(quads)):
            if used.isdisjoint(quads[i]):
                go(i + 1, used | set(quads[i]), size + 1)

    go(0, frozenset(), 0)
    return best


def max_subgraph_with_floor(r: int, n: int, edges, t: int) -> set[tuple]:
    """Union of all edge subsets whose minimum positive co-degree is at least t."""
    es = sorted(edge_set(edges))
    union: set[tuple] = set()
    for mask in range(1, 1 << len(es)):
        sub = [e for i, e in enumerate(es) if mask >> i & 1]
        counts: dict[tuple, int] = {}
        for e in sub:
            for s in combinations(e, r - 1):
                counts[s] = counts.get(s, 0) + 1
        if min(counts.values()) >= t:
            union.update(sub)
    return union


def absorber_count(n: int, edges, x: int, y: int) -> int:
    es = edge_set(edges)
    others = [v for v in range(n) if v not in (x, y)]
    count = 0
    for p in permutations(others, 7):
        v1, v2, v3, v4, v5, v6, v7 = p
        need = [(v1, v2, v3), (v3, v4, v5), (v5, v6, v7), (v2, x, v4), (v4, y, v6)]
        if all(tuple(sorted(e)) in es for e in need):
            count += 1
    return count


def can_connect(n: int, edges, pairs, allowed) -> bool:
    es = edge_set(edges)
    allowed = sorted(allowed)

    def go(i: int, used: set) -> bool:
        if i == len(pairs):
            return True
        a, b = pairs[i]
        for x, y, z in permutations(allowed, 3):
            if used & {x, y, z}:
                continue
            if tuple(sorted((a, x, y))) in es and tuple(sorted((y, z, b))) in es:
                if go(i + 1, used | {x, y, z}):
                    return True
        return False

    return go(0, set())


def has_saturating_matching(adjacency: dict) -> bool:
    xs = list(adjacency)
    ys = sorted({y for v in adjacency.values() for y in v})
    if len(xs) > len(ys):
        return False
    for image in permutations(ys, len(xs)):
        if all(image[i] in adjacency[x] for i, x in enumerate(xs)):
            return True
    return not xs


def is_hall_violator(adjacency: dict, w) -> bool:
    w = set(w)
    nbhd = {y for x in w for y in adjacency[x]}
    return bool(w) and w <= set(adjacency) and len(nbhd) < len(w)


def burnside_count(r: int, n: int) -> int:
    """Number of r-graphs on n vertices up to isomorphism (isolated vertices allowed)."""
    sets = list(combinations(range(n), r))
    index = {s: i for i, s in enumerate(sets)}
    total = 0
    for perm in permutations(range(n)):
        seen = [False] * len(sets)
        orbits = 0
        for i, s in enumerate(sets):
            if seen[i]:
                continue
            orbits += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = index[tuple(sorted(perm[v] for v in sets[j]))]
        total += 2**orbits
    return total // math.factorial(n)


def no_isolated_count(r: int, n: int) -> int:
    """Classes without isolated vertices: drop the classes with at least one isolated vertex."""
    return burnside_count(r, n) - burnside_count(r, n - 1)


def is_isomorphic(r: int, n: int, e1, e2) -> bool:
    a, b = edge_set(e1), edge_set(e2)
    if len(a) != len(b):
        return False
    return any({tuple(sorted(p[v] for v in e)) for e in a} == b for p in permutations(range(n)))


def random_edges(rng, r: int, n: int, p: float) -> list[tuple]:
    return [e for e in combinations(range(n), r) if rng.random() < p]


def all_bipartite(xs: int, ys: int, rng, p: float) -> dict:
    return {x: {y for y in range(ys) if rng.random() < p} for x in range(xs)}


__all__ = [name for name in dir() if not name.startswith("_") and name not in ("math", "combinations", "permutations", "product")]
