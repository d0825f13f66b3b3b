"""Exhaustive Berge and loose Hamiltonian cycle search."""

from __future__ import annotations

from ..certificates import BergeCycle, LooseWalk
from ..hypergraph import Hypergraph
from ._search import CYCLE_LIMIT, Deadline, bits, guard


def _connected(nb: list[int], region: int) -> bool:
    if not region:
        return True
    seen = region & -region
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= nb[v]
        nxt &= region & ~seen
        seen |= nxt
        frontier = nxt
    return seen == region


def find_berge_hamiltonian_cycle(
    h: Hypergraph, *, deadline_ms: float | None = None, force: bool = False
) -> BergeCycle | None:
    """Backtracking over cyclic vertex orders of the pair graph.

    Consecutive pairs need pairwise distinct host edges; this is a system of
    distinct representatives, maintained incrementally with one augmenting
    path per added pair.  Vertices are expanded in ascending pair-graph
    degree, ties by label.
    """
    n = h.n
    if n < 2:
        raise ValueError("a Berge Hamiltonian cycle needs n >= 2")
    guard(n, CYCLE_LIMIT, force, "berge-hc")
    if (h.r == 2 and n < 3) or len(h) < n:
        return None
    nbrs = h.neighbors
    if n >= 3 and any(len(nb) < 2 for nb in nbrs):
        return None
    nb_mask = [sum(1 << u for u in nbrs[v]) for v in range(n)]
    if not _connected(nb_mask, (1 << n) - 1):
        return None
    deg = [len(nb) for nb in nbrs]
    order = {v: sorted(nbrs[v], key=lambda u: (deg[u], u)) for v in range(n)}
    pair_edges: dict[tuple[int, int], list[int]] = {}
    for i, e in enumerate(h.edges):
        for a in e:
            for b in e:
                if a < b:
                    pair_edges.setdefault((a, b), []).append(i)

    clock = Deadline(deadline_ms)
    start = min(range(n), key=lambda v: (deg[v], v))
    path = [start]
    owner: dict[int, int] = {}  # edge index -> pair slot
    slot_edge: list[int] = []   # pair slot -> edge index
    slot_pair: list[tuple[int, int]] = []

    def try_assign(slot: int, seen: set[int]) -> bool:
        for e in pair_edges[slot_pair[slot]]:
            if e in seen:
                continue
            seen.add(e)
            if e not in owner or try_assign(owner[e], seen):
                owner[e] = slot
                slot_edge[slot] = e
                return True
        return False

    def push_pair(a: int, b: int) -> bool:
        slot_pair.append((min(a, b), max(a, b)))
        slot_edge.append(-1)
        if try_assign(len(slot_pair) - 1, set()):
            return True
        slot_pair.pop()
        slot_edge.pop()
        return False

    def pop_pair() -> None:
        del owner[slot_edge.pop()]
        slot_pair.pop()

    full = (1 << n) - 1
    start_bit = 1 << start

    def feasible(visited: int, cur: int) -> bool:
        rest = full & ~visited
        if not rest:
            return True
        if not nb_mask[start] & rest:
            return False
        ends = (1 << cur) | start_bit
        pool = rest | ends
        for u in bits(rest):
            if bin(nb_mask[u] & pool).count("1") < 2:
                return False
        return _connected(nb_mask, pool)

    def extend(visited: int) -> bool:
        clock.tick()
        cur = path[-1]
        if len(path) == n:
            if start in nbrs[cur] and push_pair(cur, start):
                return True
            return False
        for w in order[cur]:
            if visited >> w & 1:
                continue
            nv = visited | (1 << w)
            if not feasible(nv, w):
                continue
            if not push_pair(cur, w):
                continue
            path.append(w)
            if extend(nv):
                return True
            path.pop()
            pop_pair()
        return False

    if not extend(start_bit):
        return None
    return BergeCycle(tuple(path), tuple(h.edges[e] for e in slot_edge))


def find_loose_hamiltonian_cycle(
    h: Hypergraph, *, deadline_ms: float | None = None, force: bool = False
) -> LooseWalk | None:
    """Backtracking over edge sequences of a spanning loose cycle.

    The first edge is taken through the minimum-degree vertex (which every
    spanning cycle must cover) with its two junctions in ascending order, so
    each cycle is met once per edge through that vertex.  A branch is cut as
    soon as some unused vertex lies in no edge inside the unused vertices
    plus the two open junctions.
    """
    r, n = h.r, h.n
    step = r - 1
    guard(n, CYCLE_LIMIT, force, "loose-hc")
    if n == 0 or n % step or n < 2 * step:
        return None
    k = n // step
    if len(h) < k or (r == 2 and k < 3):
        return None
    deg = h.degrees
    if min(deg) == 0:
        return None
    masks, inc, edges = h.edge_masks, h.incident, h.edges
    clock = Deadline(deadline_ms)
    full = (1 << n) - 1
    anchor = min(range(n), key=lambda v: (deg[v], v))
    seq: list[int] = []

    def coverable(unused: int, open_bits: int) -> bool:
        pool = unused | open_bits
        for u in bits(unused):
            if not any(masks[i] & pool == masks[i] for i in inc[u]):
                return False
        return True

    def dfs(cur: int, first: int, unused: int, placed: int) -> bool:
        clock.tick()
        if placed == k - 1:
            closing = unused | (1 << cur) | (1 << first)
            if bin(unused).count("1") != r - 2:
                return False
            closing_edge = tuple(sorted(bits(closing)))
            if not h.has_edge(closing_edge):
                return False
            seq.append(cur)
            seq.extend(sorted(bits(unused)))
            return True
        for i in inc[cur]:
            m = masks[i] & ~(1 << cur)
            if m & unused != m:
                continue
            for t in edges[i]:
                if t == cur:
                    continue
                nu = unused & ~m
                if not coverable(nu, (1 << t) | (1 << first)):
                    continue
                seq.append(cur)
                seq.extend(v for v in edges[i] if v not in (cur, t))
                if dfs(t, first, nu, placed + 1):
                    return True
                del seq[len(seq) - (r - 1):]
        return False

    for i in inc[anchor]:
        e = edges[i]
        for a in e:
            for b in e:
                if a >= b:
                    continue
                unused = full & ~masks[i]
                if not coverable(unused, (1 << a) | (1 << b)):
                    continue
                seq.clear()
                seq.append(a)
                seq.extend(v for v in e if v not in (a, b))
                if dfs(b, a, unused, 1):
                    return LooseWalk(tuple(seq), "cycle", r)
    return None
