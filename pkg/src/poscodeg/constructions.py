"""Generators for the extremal constructions and baseline instances."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .hypergraph import Hypergraph, codegree_prune, degree_profile


@dataclass(frozen=True)
class ConstructionSheet:
    name: str
    parameters: dict
    claimed_delta_pos: int
    claimed_absences: tuple[dict, ...] = ()
    verified: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "parameters": dict(self.parameters),
            "claimed_delta_pos": self.claimed_delta_pos,
            "claimed_absences": [dict(a) for a in self.claimed_absences],
            "verified": dict(self.verified),
        }


def complete(r: int, n: int) -> Hypergraph:
    if n < r:
        raise ValueError(f"complete({r}, {n}) needs n >= r")
    return Hypergraph(r, n, combinations(range(n), r))


def make_huv(r: int, n: int, v_size: int, *, verify: bool = False) -> tuple[Hypergraph, ConstructionSheet]:
    """Every (r-1)-subset of ``U`` is universal and ``V`` is strongly independent.

    ``U`` takes the labels ``0..n-v_size-1``.  With ``verify=True`` every
    absence claim is re-checked by the exact solvers (exponential).
    """
    if r < 2:
        raise ValueError("uniformity must be at least 2")
    if not 0 <= v_size <= n:
        raise ValueError(f"v_size={v_size} outside [0, {n}]")
    u_size = n - v_size
    if u_size < r - 1:
        raise ValueError(f"|U|={u_size} cannot host a universal {r - 1}-set")
    edges = set()
    for s in combinations(range(u_size), r - 1):
        for x in range(n):
            if x not in s:
                edges.add(tuple(sorted(s + (x,))))
    h = Hypergraph(r, n, edges)
    # with V empty the construction is complete and the formula is off by one
    claimed = u_size - (r - 2) if v_size else n - r + 1
    absences = []
    if v_size * r > n:
        absences.append({"structure": "pm", "regime": "|V| > n/r"})
    if 2 * v_size > n:
        absences.append({"structure": "berge-hc", "regime": "|V| > n/2"})
    if v_size * (r - 1) > n:
        absences.append({"structure": "loose-hc", "regime": "|V| > n/(r-1)"})
    sheet = ConstructionSheet(
        name=f"huv_{r}_{n}_{v_size}",
        parameters={"r": r, "n": n, "u_size": u_size, "v_size": v_size},
        claimed_delta_pos=claimed,
        claimed_absences=tuple(absences),
    )
    _check_sheet(h, sheet)
    if verify:
        sheet = verify_absences(h, sheet)
    return h, sheet


def _check_sheet(h: Hypergraph, sheet: ConstructionSheet) -> None:
    actual = degree_profile(h).delta_pos_codeg
    if actual != sheet.claimed_delta_pos:
        raise AssertionError(f"{sheet.name}: claimed delta+ {sheet.claimed_delta_pos}, computed {actual}")


def verify_absences(h: Hypergraph, sheet: ConstructionSheet, *, force: bool = False) -> ConstructionSheet:
    """Run the exact solver on every absence claim; raise if one is contradicted."""
    from .solvers import solve

    verified = {}
    for claim in sheet.claimed_absences:
        res = solve(h, claim["structure"], force=force)
        if res.answer == "yes":
            raise AssertionError(f"{sheet.name}: claimed no {claim['structure']} but solver found one")
        verified[claim["structure"]] = res.answer
    return ConstructionSheet(sheet.name, sheet.parameters, sheet.claimed_delta_pos, sheet.claimed_absences, verified)


def two_cliques(n: int) -> Hypergraph:
    """Disjoint union of two complete 3-graphs on ``n/2`` vertices each."""
    if n % 2:
        raise ValueError(f"two_cliques needs even n, got {n}")
    half = n // 2
    if half < 3:
        raise ValueError("each clique needs at least 3 vertices")
    edges = list(combinations(range(half), 3))
    edges += [tuple(v + half for v in e) for e in edges]
    return Hypergraph(3, n, edges)


def loose_cycle_graph(r: int, k: int) -> Hypergraph:
    """The loose cycle with ``k`` edges on ``k(r-1)`` vertices, in label order."""
    if k < 2 or (r == 2 and k < 3):
        raise ValueError(f"no simple loose cycle with r={r}, k={k}")
    m = k * (r - 1)
    return Hypergraph(r, m, (tuple((i * (r - 1) + j) % m for j in range(r)) for i in range(k)))


def sample_with_floor(r: int, n: int, t: int, edge_probability: float, seed: int) -> Hypergraph:
    """Binomial random r-graph pruned to minimum positive co-degree ``t``."""
    if not 0.0 <= edge_probability <= 1.0:
        raise ValueError("edge_probability must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [e for e in combinations(range(n), r) if rng.random() < edge_probability]
    return codegree_prune(Hypergraph(r, n, edges), t)
