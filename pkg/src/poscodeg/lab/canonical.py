"""Canonical labelling and isomorph-free enumeration of small uniform hypergraphs.

Canonical form: colour refinement followed by individualization of one
vertex of the first non-trivial cell, recursively; the form is the least
sorted edge list over all discrete leaves.  Vertices that can be swapped by
a transposition automorphism are branched on only once.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterator

from ..constructions import sample_with_floor
from ..hypergraph import Hypergraph, degree_profile

EXHAUSTIVE_LIMITS = {2: 8, 3: 6}

Form = tuple[tuple[int, ...], ...]


def _refine(n: int, inc: list[list[tuple[int, ...]]], colour: list[int]) -> list[int]:
    while True:
        sigs = []
        for v in range(n):
            around = sorted(tuple(sorted(colour[u] for u in e if u != v)) for e in inc[v])
            sigs.append((colour[v], tuple(around)))
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colour)):
            return new
        colour = new


def _swap_is_automorphism(edge_set: frozenset, edges, u: int, v: int) -> bool:
    def image(w: int) -> int:
        return v if w == u else u if w == v else w

    return all(tuple(sorted(image(w) for w in e)) in edge_set for e in edges if u in e or v in e)


def canonical_form(h: Hypergraph) -> Form:
    n, edges = h.n, h.edges
    inc: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for e in edges:
        for v in e:
            inc[v].append(e)
    edge_set = frozenset(edges)
    best: Form | None = None

    def search(colour: list[int]) -> None:
        nonlocal best
        colour = _refine(n, inc, colour)
        k = len(set(colour))
        if k == n:
            form = tuple(sorted(tuple(sorted(colour[v] for v in e)) for e in edges))
            if best is None or form < best:
                best = form
            return
        sizes: dict[int, list[int]] = {}
        for v in range(n):
            sizes.setdefault(colour[v], []).append(v)
        cell_colour = min(c for c, vs in sizes.items() if len(vs) > 1)
        reps: list[int] = []
        for v in sizes[cell_colour]:
            if not any(_swap_is_automorphism(edge_set, edges, r, v) for r in reps):
                reps.append(v)
        for v in reps:
            # individualize v: it keeps the cell's colour, everyone else at or above moves up
            nxt = [2 * c + (1 if c >= cell_colour and w != v else 0) for w, c in enumerate(colour)]
            search(nxt)

    search([0] * n)
    return best if best is not None else ()


def canonical_hypergraph(h: Hypergraph) -> Hypergraph:
    return Hypergraph(h.r, h.n, canonical_form(h))


@dataclass(frozen=True)
class EnumerationSummary:
    r: int
    n: int
    floor: int
    method: str
    examined: int
    yielded: int

    def to_dict(self) -> dict:
        return dict(self.__dict__)


@lru_cache(maxsize=None)
def all_classes(r: int, n: int) -> tuple[Form, ...]:
    """Every isomorphism class of r-graphs on n vertices, by edge augmentation level by level."""
    universe = list(combinations(range(n), r))
    level: set[Form] = {()}
    out: list[Form] = [()]
    while level:
        nxt: set[Form] = set()
        for form in sorted(level):
            present = set(form)
            for e in universe:
                if e in present:
                    continue
                nxt.add(canonical_form(Hypergraph(r, n, form + (e,))))
        out.extend(sorted(nxt))
        level = nxt
    return tuple(out)


def _check_exhaustive(r: int, n: int) -> None:
    if r not in EXHAUSTIVE_LIMITS or n > EXHAUSTIVE_LIMITS[r]:
        raise ValueError(f"exhaustive enumeration supports r=3 with n<=6 and r=2 with n<=8; use sampling for r={r}, n={n}")


def _accept(h: Hypergraph, t: int) -> bool:
    prof = degree_profile(h)
    return not prof.isolated and prof.delta_pos_codeg >= t


def iter_hypergraphs(
    r: int, n: int, t: int = 0, *, sample: bool = False, count: int = 200, seed: int = 0,
    max_attempts: int | None = None,
) -> Iterator[Hypergraph]:
    """Canonical representatives without isolated vertices and with minimum positive co-degree >= t.

    Exhaustive mode lists every class exactly once; sampling mode yields up to
    ``count`` distinct classes drawn from a seeded mixture of edge densities.
    """
    if not sample:
        _check_exhaustive(r, n)
        for form in all_classes(r, n):
            h = Hypergraph(r, n, form)
            if _accept(h, t):
                yield h
        return
    rng = random.Random(seed)
    seen: set[Form] = set()
    attempts = 0
    cap = max_attempts if max_attempts is not None else 50 * count
    while len(seen) < count and attempts < cap:
        attempts += 1
        p = rng.choice((0.3, 0.5, 0.7, 0.9))
        h = sample_with_floor(r, n, t, p, rng.randrange(2**32))
        if not _accept(h, t):
            continue
        form = canonical_form(h)
        if form in seen:
            continue
        seen.add(form)
        yield Hypergraph(r, n, form)


def enumerate_hypergraphs(
    r: int, n: int, t: int = 0, callback: Callable[[Hypergraph], None] | None = None, *,
    sample: bool = False, count: int = 200, seed: int = 0,
) -> EnumerationSummary:
    yielded = 0
    for h in iter_hypergraphs(r, n, t, sample=sample, count=count, seed=seed):
        yielded += 1
        if callback is not None:
            callback(h)
    examined = len(all_classes(r, n)) if not sample else yielded
    return EnumerationSummary(r, n, t, "sampled" if sample else "exhaustive", examined, yielded)
