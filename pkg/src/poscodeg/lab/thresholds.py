"""Exact thresholds at small n, tightness reports and seeded instance sampling."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from ..constructions import make_huv, sample_with_floor
from ..hypergraph import Hypergraph, codegree_prune, degree_profile
from ..solvers import canonical_structure, solve
from .canonical import all_classes, iter_hypergraphs

THEOREMS = ("pm3", "pm-r", "berge-hc", "loose-hc")


@dataclass
class ThresholdReport:
    r: int
    n: int
    structure: str
    method: str
    threshold_lower: int
    threshold_upper: int
    exact_threshold: int | None
    witness: Hypergraph | None
    instance_counts: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "n": self.n,
            "structure": self.structure,
            "method": self.method,
            "threshold_lower": self.threshold_lower,
            "threshold_upper": self.threshold_upper,
            "exact_threshold": self.exact_threshold,
            "witness": None if self.witness is None else {
                "delta_pos": degree_profile(self.witness).delta_pos_codeg,
                "edges": [list(e) for e in self.witness.edges],
            },
            "instance_counts": dict(self.instance_counts),
        }


def check_divisibility(r: int, n: int, structure: str) -> None:
    kind = canonical_structure(structure)
    if kind == "pm" and n % r:
        raise ValueError(f"perfect matchings need r | n; got r={r}, n={n}")
    if kind == "loose-hc" and n % (r - 1):
        raise ValueError(f"loose Hamiltonian cycles need (r-1) | n; got r={r}, n={n}")
    if kind == "berge-hc" and n < (3 if r == 2 else 2):
        raise ValueError("Berge Hamiltonian cycles need n >= 3 for graphs")
    if kind in ("c43-tiling", "path-tiling"):
        raise ValueError("thresholds are defined for pm, berge-hc and loose-hc")


def _lacks(h: Hypergraph, kind: str) -> bool:
    res = solve(h, kind, force=True)
    if res.answer == "unknown":
        raise RuntimeError("exact solver returned unknown without a deadline")
    return res.answer == "no"


def exact_threshold(
    r: int, n: int, structure: str, *, sample: bool = False, count: int = 200, seed: int = 0
) -> ThresholdReport:
    """Least t such that every examined hypergraph with minimum positive co-degree >= t has the structure.

    Computed directly as one more than the largest minimum positive
    co-degree among examined hypergraphs lacking the structure; the lacking
    hypergraph attaining it (least canonical form) is the witness.  In
    sampling mode the value is only a lower bound; it also uses every
    ``make_huv`` instance the solver confirms as lacking.
    """
    kind = canonical_structure(structure)
    check_divisibility(r, n, kind)
    best_delta, witness = -1, None
    examined = lacking = 0
    candidates = iter_hypergraphs(r, n, 0, sample=sample, count=count, seed=seed)
    for h in candidates:
        examined += 1
        d = degree_profile(h).delta_pos_codeg
        if d <= best_delta:
            # cannot raise the bound; still count it for the report
            if _lacks(h, kind):
                lacking += 1
            continue
        if _lacks(h, kind):
            lacking += 1
            best_delta, witness = d, h
    method = "sampled" if sample else "exhaustive"
    upper_cap = n - r + 2
    if sample:
        for v in range(0, n - r + 2):
            h, _ = make_huv(r, n, v)
            d = degree_profile(h).delta_pos_codeg
            if d > best_delta and not degree_profile(h).isolated and _lacks(h, kind):
                best_delta, witness = d, h
    lower = best_delta + 1 if witness is not None else 0
    exact = lower if not sample else None
    upper = lower if not sample else upper_cap
    counts = {"examined": examined, "lacking": lacking}
    if not sample:
        counts["classes_total"] = len(all_classes(r, n))
    return ThresholdReport(r, n, kind, method, lower, upper, exact, witness, counts)


def revalidate_witness(report: ThresholdReport) -> bool:
    """The witness has minimum positive co-degree one below the threshold and lacks the structure."""
    w = report.witness
    if w is None:
        return report.threshold_lower == 0
    prof = degree_profile(w)
    return (
        prof.delta_pos_codeg == report.threshold_lower - 1
        and not prof.isolated
        and _lacks(w, report.structure)
    )


# instance sampling -------------------------------------------------------------------------


def sample_instances(
    r: int,
    n: int,
    floor: int,
    count: int,
    seed: int,
    *,
    accept: Callable[[Hypergraph], bool] | None = None,
    max_attempts: int | None = None,
) -> list[Hypergraph]:
    """Seeded instances with no isolated vertices and minimum positive co-degree >= ``floor``.

    Two sources alternate: binomial random hypergraphs pruned to the floor
    (edge probability 0.5, 0.7 or 0.9) and randomly relabelled ``make_huv``
    instances with a random fraction of edges removed before pruning.
    """
    rng = random.Random(seed)
    out: list[Hypergraph] = []
    cap = max_attempts if max_attempts is not None else 400 * count
    attempts = 0
    while len(out) < count and attempts < cap:
        attempts += 1
        if attempts % 2:
            h = sample_with_floor(r, n, floor, rng.choice((0.5, 0.7, 0.9)), rng.randrange(2**32))
        else:
            v = rng.randrange(0, n - r + 2)
            base, _ = make_huv(r, n, v)
            keep = rng.choice((1.0, 0.95, 0.85))
            edges = [e for e in base.edges if rng.random() < keep]
            h = codegree_prune(Hypergraph(r, n, edges), floor)
        perm = list(range(n))
        rng.shuffle(perm)
        h = h.relabel(perm)
        prof = degree_profile(h)
        if prof.isolated or prof.is_empty or prof.delta_pos_codeg < floor:
            continue
        if accept is not None and not accept(h):
            continue
        out.append(h)
    return out


# tightness reports --------------------------------------------------------------------------


def _theorem_setup(theorem: str, r: int, n: int, epsilon: float):
    """(structure, threshold as a Fraction, construction v_size, feasible?)"""
    if theorem == "pm3":
        return "pm", Fraction(2 * n, 3) - 1, n // 3 + 1, n % 3 == 0
    if theorem == "pm-r":
        return "pm", Fraction((r - 1) * n, r) + r * r, n // r + 1, n % r == 0 and n >= r**3 + r * r - r
    if theorem == "berge-hc":
        return "berge-hc", Fraction(n, 2) - r + 2, -(-(n + 1) // 2), n >= max(3, 6 * r - 10)
    if theorem == "loose-hc":
        return "loose-hc", (Fraction(1, 2) + Fraction(epsilon).limit_denominator(1000)) * n, -(-(n + 1) // 2), n % 2 == 0
    raise ValueError(f"unknown theorem id {theorem!r}; choose from {', '.join(THEOREMS)}")


def tightness_report(
    theorem: str,
    n_values,
    *,
    r: int = 3,
    samples: int = 10,
    seed: int = 0,
    epsilon: float = 0.1,
) -> dict:
    """For each n: construction value and verdict, threshold value, and verdicts on samples above it.

    Discrepancies (a construction that has the structure, a sample above the
    threshold that lacks it, or a solver that cannot decide) are listed,
    never dropped.
    """
    if theorem in ("pm3", "loose-hc"):
        r = 3
    rows = []
    empty_everywhere = True
    for n in n_values:
        kind, thr, v_size, feasible = _theorem_setup(theorem, r, n, epsilon)
        row: dict = {"n": n, "threshold": str(thr), "feasible_n": feasible, "discrepancies": []}
        max_delta = n - r + 1
        regime_empty = thr > max_delta
        row["regime_empty"] = bool(regime_empty)
        if not feasible:
            rows.append(row)
            continue
        if not regime_empty:
            empty_everywhere = False
        if n - v_size >= r - 1 and v_size <= n:
            h, sheet = make_huv(r, n, v_size)
            verdict = solve(h, kind, force=True).answer
            row["construction"] = {
                "name": sheet.name,
                "delta_pos": sheet.claimed_delta_pos,
                "below_threshold": sheet.claimed_delta_pos < thr,
                "structure": verdict,
            }
            if verdict != "no":
                row["discrepancies"].append(f"construction {sheet.name} has answer {verdict}")
        floor = math.ceil(thr)
        counts = {"yes": 0, "no": 0, "unknown": 0}
        if not regime_empty:
            extra = None
            if kind == "berge-hc":
                extra = lambda g: g.n >= 6 * g.r - 10  # noqa: E731
            for h in sample_instances(r, n, floor, samples, seed + n, accept=extra):
                ans = solve(h, kind, force=True).answer
                counts[ans] += 1
                if ans != "yes":
                    row["discrepancies"].append(f"sample with delta+={degree_profile(h).delta_pos_codeg} answered {ans}")
        row["samples"] = counts
        rows.append(row)
    return {"theorem": theorem, "r": r, "epsilon": epsilon if theorem == "loose-hc" else None,
            "regime_empty": empty_everywhere, "rows": rows}
