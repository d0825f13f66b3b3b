"""Reading and writing the plain-text ``.hg`` hypergraph format.

Line one holds ``r n``; every further non-comment line lists one edge as
``r`` ascending 0-based vertex labels.  Lines starting with ``#`` are
comments.  Duplicate edges are rejected.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import HgParseError
from .hypergraph import Hypergraph


def parse_hg(text: str) -> Hypergraph:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            nums = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise HgParseError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if len(nums) != 2:
                raise HgParseError("header must be 'r n'", lineno)
            header = nums[0], nums[1]
            if header[0] < 1 or header[1] < 0:
                raise HgParseError(f"invalid header {line!r}", lineno)
            continue
        r, n = header
        if len(nums) != r:
            raise HgParseError(f"expected {r} vertices, got {len(nums)}", lineno)
        if any(b <= a for a, b in zip(nums, nums[1:])):
            raise HgParseError("edge vertices must be strictly ascending", lineno)
        if nums[0] < 0 or nums[-1] >= n:
            raise HgParseError(f"vertex outside [0, {n})", lineno)
        if nums in seen:
            raise HgParseError(f"duplicate edge {line!r}", lineno)
        seen.add(nums)
        edges.append(nums)
    if header is None:
        raise HgParseError("missing header")
    return Hypergraph(header[0], header[1], edges)


def format_hg(h: Hypergraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{h.r} {h.n}")
    lines.extend(" ".join(map(str, e)) for e in h.edges)
    return "\n".join(lines) + "\n"


def read_hg(path: str | Path) -> Hypergraph:
    return parse_hg(Path(path).read_text())


def write_hg(h: Hypergraph, path: str | Path, comment: str | None = None) -> Path:
    path = Path(path)
    path.write_text(format_hg(h, comment))
    return path


def dump_json(obj: Any) -> str:
    """Stable JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
