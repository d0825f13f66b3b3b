"""Hamiltonian cycles in graphs and their lift to Berge cycles in r-graphs."""

from __future__ import annotations

from collections import deque

from ..certificates import BergeCycle, has_strengthened_property
from ..errors import ProcedureFailure
from ..hypergraph import Hypergraph, degree_profile, shadow_graph


def _close(path: list[int], nb) -> list[int] | None:
    """Turn a path into a cycle on the same vertices, if an endpoint edge or crossing pair allows."""
    if len(path) < 3:
        return None
    first, last = path[0], path[-1]
    if last in nb[first]:
        return list(path)
    for i in range(1, len(path) - 2):
        if path[i + 1] in nb[first] and path[i] in nb[last]:
            return path[: i + 1] + path[:i:-1]
    return None


def _stretch(path: list[int], nb) -> list[int]:
    """Extend both ends greedily (lowest label first) until the path is maximal."""
    on = set(path)
    for _ in range(2):
        while True:
            end = path[-1]
            nxt = min((u for u in nb[end] if u not in on), default=None)
            if nxt is None:
                break
            path.append(nxt)
            on.add(nxt)
        path.reverse()
    return path


def _rotations(path: list[int], nb, budget: int):
    """Paths on the same vertex set reachable by rotating the far end (first vertex fixed)."""
    seen = {tuple(path)}
    queue = deque([path])
    while queue and budget > 0:
        p = queue.popleft()
        end = p[-1]
        for i in range(len(p) - 2):
            if p[i] not in nb[end]:
                continue
            q = p[: i + 1] + p[:i:-1]
            key = tuple(q)
            if key in seen:
                continue
            seen.add(key)
            budget -= 1
            yield q
            queue.append(q)


def dirac_cycle(g: Hypergraph, *, rotation_budget: int = 256) -> BergeCycle | None:
    """Hamiltonian cycle by path growth, crossing-pair closure and absorption of outside vertices.

    With minimum degree at least n/2 this always succeeds.  Below that it is
    best effort: when a maximal path cannot be closed, a bounded number of
    rotations is tried before giving up with ``None``.
    """
    if g.r != 2:
        raise ValueError("dirac_cycle expects a 2-graph")
    n = g.n
    if n < 3:
        raise ValueError("a Hamiltonian cycle needs n >= 3")
    nb = g.neighbors
    if any(len(s) < 2 for s in nb):
        return None
    path = [0]
    while True:
        path = _stretch(path, nb)
        cycle = _close(path, nb)
        if cycle is None:
            grown = False
            for flip in (path, path[::-1]):
                on = set(flip)
                for q in _rotations(flip, nb, rotation_budget):
                    if any(u not in on for u in nb[q[-1]]):
                        path, grown = q, True
                        break
                    cycle = _close(q, nb)
                    if cycle is not None:
                        break
                if grown or cycle is not None:
                    break
            if grown:
                continue
            if cycle is None:
                return None
        if len(cycle) == n:
            return BergeCycle(tuple(cycle), tuple((cycle[i], cycle[(i + 1) % n]) for i in range(n)))
        on = set(cycle)
        hook = next(((j, u) for j, c in enumerate(cycle) for u in sorted(nb[c]) if u not in on), None)
        if hook is None:
            return None
        j, u = hook
        path = [u] + cycle[j:] + cycle[:j]


def berge_hypotheses_met(h: Hypergraph) -> bool:
    r, n = h.r, h.n
    if r < 2 or n < max(3, 6 * r - 10):
        return False
    prof = degree_profile(h)
    return not prof.isolated and 2 * prof.delta_pos_codeg >= n - 2 * r + 4


def berge_lift(h: Hypergraph, *, log: list[str] | None = None) -> BergeCycle:
    """Berge Hamiltonian cycle with the strengthened property, by induction on uniformity.

    The cycle of the shadow graph is lifted edge by edge: each (r-1)-edge
    gains the lowest-label co-degree neighbour that keeps every other
    consecutive pair outside it.  Raises :class:`ProcedureFailure` naming
    the base case or the extension step that got stuck.
    """
    log = [] if log is None else log
    if h.r < 2:
        raise ValueError("berge_lift needs r >= 2")
    if h.r == 2:
        if h.n < 3:
            raise ProcedureFailure("base case", "fewer than 3 vertices", log)
        cycle = dirac_cycle(h)
        if cycle is None:
            log.append("base case: no Hamiltonian cycle found in the graph")
            raise ProcedureFailure("base case", "dirac_cycle failed", log)
        log.append("base case: Hamiltonian cycle found")
        return cycle
    base = berge_lift(shadow_graph(h), log=log)
    vs, k = base.vertices, len(base.vertices)
    lifted = []
    for i, small in enumerate(base.cycle_edges):
        pick = None
        for w in sorted(h.codegree_map.get(small, ())):
            e = set(small) | {w}
            if all(not (vs[j] in e and vs[(j + 1) % k] in e) for j in range(k) if j != i):
                pick = tuple(sorted(e))
                break
        if pick is None:
            log.append(f"r={h.r}: extend step {i + 1} has no admissible vertex")
            raise ProcedureFailure(f"extend step {i + 1}", f"edge {list(small)} cannot be lifted", log)
        lifted.append(pick)
    log.append(f"r={h.r}: lifted {k} edges")
    cycle = BergeCycle(vs, tuple(lifted))
    assert has_strengthened_property(cycle)
    return cycle
