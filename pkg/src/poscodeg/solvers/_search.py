from __future__ import annotations

import time

from ..errors import SearchTimeout, SizeLimitError

CYCLE_LIMIT = 24
TILING_LIMIT = 15
PATH_TILING_LIMIT = 12


class Deadline:
    """Node counter that raises :class:`SearchTimeout` once wall time runs out."""

    __slots__ = ("end", "nodes")

    def __init__(self, deadline_ms: float | None = None) -> None:
        self.end = None if deadline_ms is None else time.monotonic() + deadline_ms / 1000.0
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.end is not None and not self.nodes & 511 and time.monotonic() > self.end:
            raise SearchTimeout(f"deadline reached after {self.nodes} nodes")


def guard(n: int, limit: int, force: bool, what: str) -> None:
    if n > limit and not force:
        raise SizeLimitError(f"{what}: n={n} exceeds the exhaustive limit {limit}; pass force=True")


def bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
