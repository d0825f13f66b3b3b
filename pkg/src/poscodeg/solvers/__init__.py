"""Exact solvers and the single ``solve`` dispatcher.

Every solver either certifies a structure, proves its absence by exhaustion,
or (under a deadline) gives up with ``"unknown"``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import SearchTimeout
from ..hypergraph import Hypergraph
from ._search import CYCLE_LIMIT, PATH_TILING_LIMIT, TILING_LIMIT, Deadline
from .cycles import find_berge_hamiltonian_cycle, find_loose_hamiltonian_cycle
from .matching import Saturation, has_perfect_matching, max_matching, x_saturating_matching
from .tiling import (
    C43Copy,
    Tiling,
    best_path_tiling,
    c43_candidates,
    make_tiling,
    max_c43_tiling,
    validate_tiling,
)

STRUCTURES = ("pm", "berge-hc", "loose-hc", "c43-tiling", "path-tiling")
ALIASES = {"perfect-matching": "pm", "hamiltonian-cycle": "berge-hc"}


@dataclass(frozen=True)
class SolveResult:
    answer: str  # "yes" | "no" | "unknown"
    certificate: object | None
    stats: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        cert = self.certificate.to_dict() if self.certificate is not None else None
        return {"answer": self.answer, "certificate": cert, "stats": dict(self.stats)}


def canonical_structure(name: str) -> str:
    key = ALIASES.get(name, name)
    if key not in STRUCTURES:
        raise ValueError(f"unknown structure {name!r}; choose from {', '.join(STRUCTURES)}")
    return key


def solve(
    h: Hypergraph,
    structure: str,
    *,
    deadline_ms: float | None = None,
    force: bool = False,
    max_paths: int = 1,
) -> SolveResult:
    kind = canonical_structure(structure)
    stats: dict = {"structure": kind, "n": h.n, "r": h.r, "edges": len(h)}
    try:
        if kind == "pm":
            cert = has_perfect_matching(h, deadline_ms=deadline_ms)
        elif kind == "berge-hc":
            cert = find_berge_hamiltonian_cycle(h, deadline_ms=deadline_ms, force=force)
        elif kind == "loose-hc":
            cert = find_loose_hamiltonian_cycle(h, deadline_ms=deadline_ms, force=force)
        elif kind == "c43-tiling":
            cert = max_c43_tiling(h, deadline_ms=deadline_ms, force=force)
        else:
            cert = best_path_tiling(h, max_paths, deadline_ms=deadline_ms, force=force)
    except SearchTimeout as exc:
        stats["timeout"] = str(exc)
        return SolveResult("unknown", None, stats)
    if isinstance(cert, Tiling):
        stats["members"] = len(cert)
        stats["uncovered"] = len(cert.uncovered)
        stats["optimal"] = cert.optimal
        if not cert.uncovered:
            answer = "yes"
        else:
            answer = "no" if cert.optimal else "unknown"
        return SolveResult(answer, cert, stats)
    return SolveResult("no" if cert is None else "yes", cert, stats)


__all__ = [
    "ALIASES",
    "CYCLE_LIMIT",
    "C43Copy",
    "Deadline",
    "PATH_TILING_LIMIT",
    "STRUCTURES",
    "Saturation",
    "SolveResult",
    "TILING_LIMIT",
    "Tiling",
    "best_path_tiling",
    "c43_candidates",
    "canonical_structure",
    "find_berge_hamiltonian_cycle",
    "find_loose_hamiltonian_cycle",
    "has_perfect_matching",
    "make_tiling",
    "max_c43_tiling",
    "max_matching",
    "solve",
    "validate_tiling",
    "x_saturating_matching",
]
