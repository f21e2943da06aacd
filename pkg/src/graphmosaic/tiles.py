"""The sixteen graph mosaic tiles and their connection-point patterns.

A connection point sits at the midpoint of a tile edge. Only the pattern of
connection points matters for counting; tiles sharing a pattern (the five
four-point tiles) differ only in the drawing inside the square.
"""
from __future__ import annotations

from typing import NamedTuple

NUM_TILES = 16
SIDES = ("l", "r", "t", "b")


class CpPattern(NamedTuple):
    l: bool
    r: bool
    t: bool
    b: bool

    @property
    def count(self) -> int:
        return int(self.l) + int(self.r) + int(self.t) + int(self.b)

    def side(self, name: str) -> bool:
        return getattr(self, name)


def _pat(sides: str) -> CpPattern:
    return CpPattern(*(s in sides for s in SIDES))


# Index = tile id. T_7..T_10 and T_15 all carry the full pattern.
TILE_PATTERNS: tuple[CpPattern, ...] = (
    _pat(""),      # T_0  blank
    _pat("lb"),    # T_1
    _pat("rb"),    # T_2
    _pat("lt"),    # T_3
    _pat("rt"),    # T_4
    _pat("lr"),    # T_5  horizontal line
    _pat("tb"),    # T_6  vertical line
    _pat("lrtb"),  # T_7  double arc
    _pat("lrtb"),  # T_8  double arc
    _pat("lrtb"),  # T_9  crossing
    _pat("lrtb"),  # T_10 crossing
    _pat("lrt"),   # T_11 3-valent vertex
    _pat("ltb"),   # T_12
    _pat("lrb"),   # T_13
    _pat("rtb"),   # T_14
    _pat("lrtb"),  # T_15 4-valent vertex
)


class Tile(int):
    """A tile identity ``T_id`` with ``id`` in ``0..15``."""

    def __new__(cls, tile_id: int) -> "Tile":
        if isinstance(tile_id, bool) or not isinstance(tile_id, int):
            raise TypeError(f"tile id must be an int, got {type(tile_id).__name__}")
        if not 0 <= tile_id < NUM_TILES:
            raise ValueError(f"tile id {tile_id} outside 0..{NUM_TILES - 1}")
        return super().__new__(cls, tile_id)

    @property
    def pattern(self) -> CpPattern:
        return TILE_PATTERNS[self]

    def __repr__(self) -> str:
        return f"T_{int(self)}"


def cp_pattern(tile: int) -> CpPattern:
    """Connection-point pattern of tile ``tile``; raises ValueError on bad ids."""
    return Tile(tile).pattern


def tile_census() -> dict[int, int]:
    """Number of tiles per connection-point count."""
    census: dict[int, int] = {}
    for pat in TILE_PATTERNS:
        census[pat.count] = census.get(pat.count, 0) + 1
    return dict(sorted(census.items()))
