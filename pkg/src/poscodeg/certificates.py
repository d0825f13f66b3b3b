"""Certificate structures for spanning-structure claims and their validators.

A validator never raises on an invalid certificate: it returns a
:class:`ValidationReport` listing every violated condition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal

from .hypergraph import Edge, Hypergraph


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...] = ()
    flags: dict = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid

    def to_dict(self) -> dict:
        out = {"valid": self.valid, "violations": list(self.violations)}
        if self.flags:
            out["flags"] = dict(self.flags)
        return out


@dataclass(frozen=True)
class Matching:
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple(sorted(tuple(sorted(e)) for e in self.edges)))

    @property
    def covered(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    def __len__(self) -> int:
        return len(self.edges)

    def is_perfect(self, n: int) -> bool:
        return len(self.covered) == n and sum(len(e) for e in self.edges) == n

    def to_dict(self) -> dict:
        return {"edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class BergeCycle:
    """Cyclic sequence ``v_1 e_1 v_2 e_2 ... v_k e_k v_1``."""

    vertices: tuple[int, ...]
    cycle_edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "cycle_edges", tuple(tuple(sorted(e)) for e in self.cycle_edges))

    def __len__(self) -> int:
        return len(self.vertices)

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.cycle_edges]}


@dataclass(frozen=True)
class LooseWalk:
    """A loose path or loose cycle given by its vertex order.

    Path with ``k`` edges: ``(r-1)k + 1`` vertices, edge ``i`` is the block
    starting at position ``i(r-1)``.  Cycle with ``k`` edges: ``k(r-1)``
    vertices with the same blocks read cyclically.
    """

    vertices: tuple[int, ...]
    kind: Literal["path", "cycle"]
    r: int = 3

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if self.kind not in ("path", "cycle"):
            raise ValueError(f"unknown walk kind {self.kind!r}")

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def length(self) -> int:
        step = self.r - 1
        if self.kind == "path":
            return (len(self.vertices) - 1) // step if self.vertices else 0
        return len(self.vertices) // step

    @property
    def endpoints(self) -> tuple[int, int]:
        if self.kind != "path":
            raise ValueError("a cycle has no endpoints")
        return self.vertices[0], self.vertices[-1]

    def blocks(self) -> list[tuple[int, ...]]:
        """The edge blocks in walk order (vertex order preserved)."""
        step, m, vs = self.r - 1, len(self.vertices), self.vertices
        if self.kind == "path":
            return [vs[i * step:i * step + self.r] for i in range(self.length)]
        return [tuple(vs[(i * step + j) % m] for j in range(self.r)) for i in range(self.length)]

    def edges(self) -> list[Edge]:
        return [tuple(sorted(b)) for b in self.blocks()]

    def reversed(self) -> LooseWalk:
        if self.kind == "path":
            return LooseWalk(self.vertices[::-1], "path", self.r)
        return LooseWalk(self.vertices[:1] + self.vertices[:0:-1], "cycle", self.r)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "r": self.r, "vertices": list(self.vertices)}


def _check_labels(h: Hypergraph, vertices: Iterable[int], out: list[str]) -> None:
    for v in vertices:
        if not 0 <= v < h.n:
            out.append(f"vertex {v} outside [0, {h.n})")


def validate_matching(h: Hypergraph, m: Matching, *, perfect: bool = False) -> ValidationReport:
    out: list[str] = []
    seen: dict[int, Edge] = {}
    for e in m.edges:
        _check_labels(h, e, out)
        if not h.has_edge(e):
            out.append(f"non-edge {list(e)}")
        for v in e:
            if v in seen:
                out.append(f"vertex {v} covered by {list(seen[v])} and {list(e)}")
            seen[v] = e
    if len(set(m.edges)) != len(m.edges):
        out.append("duplicate edge")
    if perfect and len(seen) != h.n:
        out.append(f"not perfect: covers {len(seen)} of {h.n} vertices")
    return ValidationReport(tuple(out))


def has_strengthened_property(c: BergeCycle) -> bool:
    """For all ``i != j`` the edge ``e_i`` contains at most one of ``v_j, v_{j+1}``.

    Indices are read cyclically, so the closing pair ``v_k, v_1`` is included.
    """
    k = len(c.vertices)
    for i, e in enumerate(c.cycle_edges):
        es = set(e)
        for j in range(k):
            if j != i and c.vertices[j] in es and c.vertices[(j + 1) % k] in es:
                return False
    return True


def validate_berge_cycle(
    h: Hypergraph, c: BergeCycle, *, hamiltonian: bool = True, strengthened: bool = False
) -> ValidationReport:
    out: list[str] = []
    k = len(c.vertices)
    if len(c.cycle_edges) != k:
        out.append(f"{k} vertices but {len(c.cycle_edges)} edges")
    if k < 2:
        out.append("a Berge cycle needs at least two vertices")
    _check_labels(h, c.vertices, out)
    if len(set(c.vertices)) != k:
        out.append("repeated vertex")
    if len(set(c.cycle_edges)) != len(c.cycle_edges):
        out.append("duplicate edge")
    for i, e in enumerate(c.cycle_edges):
        if not h.has_edge(e):
            out.append(f"non-edge {list(e)}")
        if k and i < k:
            a, b = c.vertices[i], c.vertices[(i + 1) % k]
            if a not in e or b not in e:
                out.append(f"pair ({a}, {b}) not inside assigned edge {list(e)}")
    if hamiltonian and k != h.n:
        out.append(f"not Hamiltonian: {k} of {h.n} vertices")
    flags = {}
    if strengthened:
        ok = has_strengthened_property(c)
        flags["strengthened"] = ok
        if not ok:
            out.append("strengthened property fails")
    return ValidationReport(tuple(out), flags)


def validate_loose_walk(h: Hypergraph, w: LooseWalk, *, hamiltonian: bool = False) -> ValidationReport:
    out: list[str] = []
    vs, step = w.vertices, w.r - 1
    if w.r != h.r:
        out.append(f"walk uniformity {w.r} differs from host uniformity {h.r}")
    _check_labels(h, vs, out)
    if len(set(vs)) != len(vs):
        out.append("repeated vertex")
    if w.kind == "path":
        shape_ok = len(vs) >= w.r and (len(vs) - 1) % step == 0
    else:
        shape_ok = len(vs) % step == 0 and len(vs) // step >= 2
    if not shape_ok:
        out.append(f"a loose {w.kind} cannot have {len(vs)} vertices")
    else:
        edges = w.edges()
        for e in edges:
            if not h.has_edge(e):
                out.append(f"non-edge {list(e)}")
        if len(set(edges)) != len(edges):
            out.append("duplicate edge")
    if hamiltonian:
        if w.kind != "cycle":
            out.append("a Hamiltonian loose cycle must be a cycle")
        if len(set(vs)) != h.n or len(vs) != h.n:
            out.append(f"not Hamiltonian: {len(set(vs))} of {h.n} vertices")
    return ValidationReport(tuple(out))
