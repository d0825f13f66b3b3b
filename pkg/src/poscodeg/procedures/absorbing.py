"""Absorbing paths, connecting triples, reservoirs and loose Hamiltonian cycle assembly (3-graphs)."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from ..certificates import LooseWalk, validate_loose_walk
from ..errors import ProcedureFailure
from ..hypergraph import Hypergraph, degree_profile
from ..solvers.tiling import best_path_tiling


@dataclass(frozen=True)
class Absorber:
    """A loose path together with the 7-vertex blocks it was assembled from."""

    path: LooseWalk
    blocks: tuple[tuple[int, ...], ...]

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.path.endpoints

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.path.vertices)

    def to_dict(self) -> dict:
        return {"path": self.path.to_dict(), "blocks": [list(b) for b in self.blocks]}


def absorbs(h: Hypergraph, block: Sequence[int], x: int, y: int) -> bool:
    """``block = v1..v7`` absorbs ``{x, y}`` via the edges ``v2 x v4`` and ``v4 y v6``."""
    if x in block or y in block:
        return False
    return h.has_edge((block[1], x, block[3])) and h.has_edge((block[3], y, block[5]))


def reroute(block: Sequence[int], x: int, y: int) -> tuple[int, ...]:
    v1, v2, v3, v4, v5, v6, v7 = block
    return (v1, v3, v2, x, v4, y, v6, v5, v7)


def _require_3(h: Hypergraph) -> None:
    if h.r != 3:
        raise ValueError("absorbing machinery is implemented for 3-graphs")


def iter_absorbers(h: Hypergraph, x: int, y: int, avoid=frozenset()) -> Iterator[tuple[int, ...]]:
    """7-vertex loose paths absorbing ``{x, y}``, vertex by vertex: v4, edge v3v4v5, v2, v6, v1, v7."""
    _require_3(h)
    if x == y:
        raise ValueError("x and y must differ")
    nb, cod = h.neighbors, h.codegree_map
    banned = {x, y} | set(avoid)

    def co(a: int, b: int) -> frozenset[int]:
        return cod.get((a, b) if a < b else (b, a), frozenset())

    for v4 in sorted(nb[x] & nb[y]):
        if v4 in banned:
            continue
        for i in h.incident[v4]:
            a, b = (v for v in h.edges[i] if v != v4)
            if a in banned or b in banned:
                continue
            for v3, v5 in ((a, b), (b, a)):
                used = {v3, v4, v5}
                for v2 in sorted(co(x, v4) & nb[v3]):
                    if v2 in banned or v2 in used:
                        continue
                    for v6 in sorted(co(y, v4) & nb[v5]):
                        if v6 in banned or v6 in used or v6 == v2:
                            continue
                        taken = used | {v2, v6}
                        for v1 in sorted(co(v2, v3)):
                            if v1 in banned or v1 in taken:
                                continue
                            for v7 in sorted(co(v5, v6)):
                                if v7 in banned or v7 in taken or v7 == v1:
                                    continue
                                yield (v1, v2, v3, v4, v5, v6, v7)


def enumerate_absorbers(h: Hypergraph, x: int, y: int, limit: int | None = None) -> list[Absorber]:
    out = []
    for block in iter_absorbers(h, x, y):
        if limit is not None and len(out) >= limit:
            break
        out.append(Absorber(LooseWalk(block, "path", 3), (block,)))
    return out


# connecting triples -------------------------------------------------------------


def connect_hypotheses_met(h: Hypergraph, gamma: float, m: int) -> bool:
    """Minimum vertex degree at least (1/4 + gamma) C(n, 2) and 1 <= m <= gamma n / 12."""
    if h.r != 3 or m < 1 or h.n < 2:
        return False
    return min(h.degrees) >= (0.25 + gamma) * math.comb(h.n, 2) and m <= gamma * h.n / 12


def connect_pairs(
    h: Hypergraph, pairs: Sequence[tuple[int, int]], allowed, *, node_budget: int | None = None
) -> list[tuple[int, int, int]] | None:
    """Disjoint triples ``(x, y, z)`` in ``allowed`` with ``a x y`` and ``y z b`` edges for each pair.

    Exhaustive backtracking, so ``None`` proves that no connecting system
    exists (unless ``node_budget`` cut the search, which raises instead).
    """
    _require_3(h)
    allowed = set(allowed)
    flat = [v for p in pairs for v in p]
    if len(flat) != len(set(flat)):
        raise ValueError("pairs must be mutually disjoint")
    if allowed & set(flat):
        raise ValueError("allowed vertices must avoid the pairs")
    cod = h.codegree_map
    # first edges a x y for each pair, ordered
    starts = []
    for a, _b in pairs:
        opts = []
        for i in h.incident[a]:
            u, w = (v for v in h.edges[i] if v != a)
            if u in allowed and w in allowed:
                opts.extend(((u, w), (w, u)))
        starts.append(sorted(opts))
    chosen: list[tuple[int, int, int]] = []
    used: set[int] = set()
    nodes = 0

    def dfs(k: int) -> bool:
        nonlocal nodes
        if k == len(pairs):
            return True
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise ProcedureFailure("connect", "node budget exhausted")
        b = pairs[k][1]
        for x, y in starts[k]:
            if x in used or y in used:
                continue
            key = (y, b) if y < b else (b, y)
            for z in sorted(cod.get(key, ())):
                if z in used or z in (x, y) or z not in allowed:
                    continue
                chosen.append((x, y, z))
                used.update((x, y, z))
                if dfs(k + 1):
                    return True
                used.difference_update((x, y, z))
                chosen.pop()
        return False

    return list(chosen) if dfs(0) else None


# absorbing path -------------------------------------------------------------------


def build_absorbing_path(
    h: Hypergraph, n_blocks: int, seed: int = 0, reserved=frozenset(), *, per_pair: int = 64
) -> Absorber:
    """Chain ``n_blocks`` disjoint 7-vertex absorbers with connecting triples.

    Blocks are picked greedily: vertex pairs are visited in a seeded order and
    each contributes its first absorber avoiding everything chosen so far.
    Consecutive blocks are joined by connecting triples drawn from vertices
    outside all blocks and outside ``reserved``.
    """
    _require_3(h)
    if n_blocks < 1:
        raise ValueError("need at least one block")
    rng = random.Random(seed)
    pairs = list(combinations(range(h.n), 2))
    rng.shuffle(pairs)
    blocks: list[tuple[int, ...]] = []
    used = set(reserved)
    for x, y in pairs:
        if len(blocks) == n_blocks:
            break
        for count, block in enumerate(iter_absorbers(h, x, y, avoid=used)):
            if count >= per_pair:
                break
            blocks.append(block)
            used.update(block)
            break
    if len(blocks) < n_blocks:
        raise ProcedureFailure("absorber", f"found {len(blocks)} of {n_blocks} disjoint absorbers")
    allowed = set(range(h.n)) - used
    links = [(blocks[i][6], blocks[i + 1][0]) for i in range(n_blocks - 1)]
    triples = connect_pairs(h, links, allowed) if links else []
    if triples is None:
        raise ProcedureFailure("absorber", "blocks cannot be chained")
    seq: list[int] = list(blocks[0])
    for t, block in zip(triples, blocks[1:]):
        seq.extend(t)
        seq.extend(block)
    return Absorber(LooseWalk(tuple(seq), "path", 3), tuple(blocks))


def absorb(h: Hypergraph, a: Absorber, u, *, node_budget: int = 200_000) -> LooseWalk:
    """Reroute the absorbing path through every vertex of ``u``.

    ``u`` is split into pairs; each pair is swallowed by a 7-vertex window of
    the current path that starts at a junction and absorbs it (the assembled
    blocks are such windows, and so are windows of already rerouted parts).
    The endpoints never move.  Raises :class:`ProcedureFailure` when no
    pairing can be absorbed.
    """
    _require_3(h)
    u = sorted(set(u))
    if len(u) % 2:
        raise ValueError("the absorbed set must have even size")
    if set(u) & a.vertices:
        raise ValueError("the absorbed set must avoid the absorbing path")
    nodes = 0

    def windows(vs: tuple[int, ...]) -> list[int]:
        return list(range(0, len(vs) - 6, 2))

    def dfs(vs: tuple[int, ...], rest: list[int]) -> tuple[int, ...] | None:
        nonlocal nodes
        if not rest:
            return vs
        nodes += 1
        if nodes > node_budget:
            raise ProcedureFailure("absorb", "search budget exhausted")
        first = rest[0]
        for partner in rest[1:]:
            left = [v for v in rest[1:] if v != partner]
            for pos in windows(vs):
                block = vs[pos:pos + 7]
                for x, y in ((first, partner), (partner, first)):
                    if absorbs(h, block, x, y):
                        out = dfs(vs[:pos] + reroute(block, x, y) + vs[pos + 7:], left)
                        if out is not None:
                            return out
        return None

    result = dfs(a.path.vertices, u)
    if result is None:
        raise ProcedureFailure("absorb", f"no absorbable pairing of {len(u)} vertices")
    return LooseWalk(result, "path", 3)


# reservoir --------------------------------------------------------------------------


@dataclass(frozen=True)
class Reservoir:
    vertices: frozenset[int]
    gamma: float
    capacity: int
    budget: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "vertices": sorted(self.vertices),
            "gamma": self.gamma,
            "capacity": self.capacity,
            "budget": dict(self.budget),
        }


def reservoir_capacity(n: int, gamma: float) -> int:
    return math.floor(gamma**3 * n / 12)


def build_reservoir(
    h: Hypergraph,
    gamma: float,
    seed: int = 0,
    *,
    size: int | None = None,
    exclude=frozenset(),
    candidates: int = 32,
    systems: int = 16,
) -> Reservoir:
    """Sample reservoirs until one connects every sampled system of disjoint pairs.

    Each candidate set has ``size`` vertices (default ``floor(gamma n)``) drawn
    from the vertices outside ``exclude``; the pair systems are drawn from the
    vertices outside the candidate and have ``max(1, capacity)`` pairs.
    """
    _require_3(h)
    if not 0 < gamma < 0.25:
        raise ValueError("gamma must lie in (0, 1/4)")
    rng = random.Random(seed)
    capacity = reservoir_capacity(h.n, gamma)
    k = max(1, capacity)
    size = math.floor(gamma * h.n) if size is None else size
    pool = sorted(set(range(h.n)) - set(exclude))
    budget = {"candidates": candidates, "systems": systems, "pairs_per_system": k, "size": size}
    if size < 3 or size > len(pool) or len(pool) - size < 2 * k:
        raise ProcedureFailure("reservoir", f"cannot place a reservoir of size {size}")
    for attempt in range(candidates):
        r_set = set(rng.sample(pool, size))
        outside = [v for v in range(h.n) if v not in r_set]
        ok = True
        for _ in range(systems):
            chosen = rng.sample(outside, 2 * k)
            pairs = [(chosen[2 * i], chosen[2 * i + 1]) for i in range(k)]
            if connect_pairs(h, pairs, r_set) is None:
                ok = False
                break
        if ok:
            budget["accepted_attempt"] = attempt
            return Reservoir(frozenset(r_set), gamma, capacity, budget)
    raise ProcedureFailure("reservoir", f"no candidate out of {candidates} passed verification")


# assembly -------------------------------------------------------------------------


def loose_hypotheses_met(h: Hypergraph, epsilon: float) -> bool:
    """Degree and parity conditions of the loose cycle theorem (its n0 cannot be checked)."""
    if h.r != 3 or h.n % 2 or not 0 < epsilon < 0.5:
        return False
    prof = degree_profile(h)
    return not prof.isolated and prof.delta_pos_codeg >= (0.5 + epsilon) * h.n


def _compact(h: Hypergraph, keep) -> tuple[Hypergraph, list[int]]:
    labels = sorted(keep)
    index = {v: i for i, v in enumerate(labels)}
    keep = set(labels)
    edges = [tuple(index[v] for v in e) for e in h.edges if keep.issuperset(e)]
    return Hypergraph(h.r, len(labels), edges), labels


def default_capacity_fraction(epsilon: float) -> float:
    return 2.0**-10 * epsilon**6


def assemble_loose_hc(
    h: Hypergraph,
    epsilon: float,
    seed: int = 0,
    *,
    block_counts: Sequence[int] = (1, 2, 3),
    path_counts: Sequence[int] = (1, 2, 3),
    absorb_capacity_fraction: float | None = None,
    log: list[str] | None = None,
) -> LooseWalk:
    """Absorbing path, reservoir, path tiling, connection and absorption.

    Every combination of absorber size and tiling size is tried in order;
    the first validated loose Hamiltonian cycle is returned.  Otherwise the
    failure of the last attempt is raised, with the full stage log.
    """
    _require_3(h)
    if h.n % 2:
        raise ValueError("a loose Hamiltonian cycle in a 3-graph needs even n")
    log = [] if log is None else log
    beta = default_capacity_fraction(epsilon) if absorb_capacity_fraction is None else absorb_capacity_fraction
    gamma = min(beta / 2, 0.249)
    if gamma <= 0:
        raise ValueError("the absorbing capacity fraction must be positive")
    last: ProcedureFailure | None = None
    for b in block_counts:
        for p in path_counts:
            tag = f"[blocks={b}, paths={p}]"
            try:
                cycle = _assemble_once(h, b, p, gamma, seed, log, tag)
            except ProcedureFailure as exc:
                log.append(f"{tag} failed at {exc.stage}: {exc}")
                last = exc
                continue
            log.append(f"{tag} success")
            return cycle
    stage = last.stage if last else "absorber"
    raise ProcedureFailure(stage, "no attempt produced a loose Hamiltonian cycle", log)


def _assemble_once(h, b, p, gamma, seed, log, tag) -> LooseWalk:
    n = h.n
    absorber = build_absorbing_path(h, b, seed)
    log.append(f"{tag} absorber with {len(absorber.path)} vertices")
    reserve_size = max(math.floor(gamma * n), 3 * (p + 1))
    reservoir = build_reservoir(h, gamma, seed, size=reserve_size, exclude=absorber.vertices)
    log.append(f"{tag} reservoir of size {len(reservoir.vertices)}")
    rest = set(range(n)) - absorber.vertices - reservoir.vertices
    sub, labels = _compact(h, rest)
    tiling = best_path_tiling(sub, p, seed=seed) if sub.n else None
    paths = [tuple(labels[v] for v in m.vertices) for m in tiling.members] if tiling else []
    log.append(f"{tag} path tiling with {len(paths)} paths, {len(tiling.uncovered) if tiling else 0} uncovered")
    chain = [absorber.path.vertices] + paths
    links = [(chain[i][-1], chain[(i + 1) % len(chain)][0]) for i in range(len(chain))]
    if len(chain) == 1:
        links = [(chain[0][-1], chain[0][0])]
    triples = connect_pairs(h, links, reservoir.vertices)
    if triples is None:
        spare = set(reservoir.vertices) | (rest - {v for q in paths for v in q})
        triples = connect_pairs(h, links, spare)
        if triples is None:
            raise ProcedureFailure("connect", "path ends cannot be linked")
        log.append(f"{tag} connected using reservoir plus leftover vertices")
    else:
        log.append(f"{tag} connected inside the reservoir")
    covered = set(absorber.vertices) | {v for q in paths for v in q} | {v for t in triples for v in t}
    leftover = sorted(set(range(n)) - covered)
    absorbed = absorb(h, absorber, leftover)
    log.append(f"{tag} absorbed {len(leftover)} leftover vertices")
    seq: list[int] = []
    for piece, t in zip([absorbed.vertices] + paths, triples):
        seq.extend(piece)
        seq.extend(t)
    cycle = LooseWalk(tuple(seq), "cycle", 3)
    report = validate_loose_walk(h, cycle, hamiltonian=True)
    if not report.valid:
        raise ProcedureFailure("validate", "; ".join(report.violations))
    return cycle
