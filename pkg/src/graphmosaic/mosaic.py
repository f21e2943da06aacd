"""Mosaic grids: validity predicates, boundary states, state indexing, file I/O."""
from __future__ import annotations

from dataclasses import dataclass

from .tiles import TILE_PATTERNS, Tile, cp_pattern

__all__ = [
    "Mosaic",
    "MosaicParseError",
    "boundary_state",
    "cp_pattern",
    "is_graph_mosaic",
    "is_suitably_connected",
    "parse_mosaic",
    "render_ascii",
    "serialize_mosaic",
    "state_index",
    "state_word",
]


class MosaicParseError(ValueError):
    """Malformed ``.mosaic`` text; carries 1-based line and column."""

    def __init__(self, message: str, line: int, column: int | None = None):
        self.line = line
        self.column = column
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")


@dataclass(frozen=True)
class Mosaic:
    """An immutable ``rows x cols`` grid of tile ids, row 0 at the top."""

    rows: int
    cols: int
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"mosaic must be at least 1x1, got {self.rows}x{self.cols}")
        cells = tuple(tuple(Tile(c) for c in row) for row in self.cells)
        if len(cells) != self.rows or any(len(row) != self.cols for row in cells):
            raise ValueError(f"cells do not form a {self.rows}x{self.cols} grid")
        object.__setattr__(self, "cells", tuple(tuple(int(c) for c in row) for row in cells))

    @classmethod
    def from_rows(cls, rows) -> "Mosaic":
        rows = [list(r) for r in rows]
        return cls(len(rows), len(rows[0]) if rows else 0, tuple(tuple(r) for r in rows))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.cells[i][j]


def is_suitably_connected(m: Mosaic) -> bool:
    """True iff every shared edge has a connection point on both sides or neither."""
    pats = [[TILE_PATTERNS[c] for c in row] for row in m.cells]
    for i in range(m.rows):
        for j in range(m.cols):
            if j + 1 < m.cols and pats[i][j].r != pats[i][j + 1].l:
                return False
            if i + 1 < m.rows and pats[i][j].b != pats[i + 1][j].t:
                return False
    return True


def is_graph_mosaic(m: Mosaic) -> bool:
    if not is_suitably_connected(m):
        return False
    return all(letter == "x" for side in "lrtb" for letter in boundary_state(m, side))


def boundary_state(m: Mosaic, side: str) -> str:
    """The x/o word along one side; ``l``/``r`` read top to bottom, ``t``/``b`` left to right."""
    if side == "l":
        cells = [m.cells[i][0] for i in range(m.rows)]
    elif side == "r":
        cells = [m.cells[i][m.cols - 1] for i in range(m.rows)]
    elif side == "t":
        cells = list(m.cells[0])
    elif side == "b":
        cells = list(m.cells[m.rows - 1])
    else:
        raise ValueError(f"side must be one of l, r, t, b; got {side!r}")
    return "".join("o" if TILE_PATTERNS[c].side(side) else "x" for c in cells)


def state_index(word: str) -> int:
    """1-based index of an x/o word: letter ``p`` is ``o`` iff bit ``p`` of ``index - 1`` is set."""
    index = 0
    for p, letter in enumerate(word):
        if letter == "o":
            index |= 1 << p
        elif letter != "x":
            raise ValueError(f"state words use only 'x' and 'o', got {letter!r}")
    return index + 1


def state_word(index: int, length: int) -> str:
    if length < 0:
        raise ValueError("length must be nonnegative")
    if not 1 <= index <= 1 << length:
        raise ValueError(f"state index {index} outside 1..{1 << length}")
    bits = index - 1
    return "".join("o" if bits >> p & 1 else "x" for p in range(length))


_HEX = "0123456789ABCDEF"


def parse_mosaic(text: str) -> Mosaic:
    """Parse the ``.mosaic`` format: a ``rows cols`` header then one hex digit per tile."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    lines = [ln[:-1] if ln.endswith("\r") else ln for ln in lines]
    if not lines:
        raise MosaicParseError("missing header", 1)
    header = lines[0].split(" ")
    if len(header) != 2 or not all(h.isdigit() for h in header):
        raise MosaicParseError(f"header must be '<rows> <cols>', got {lines[0]!r}", 1)
    rows, cols = int(header[0]), int(header[1])
    if rows < 1 or cols < 1:
        raise MosaicParseError("rows and cols must be positive", 1)
    body = lines[1:]
    if len(body) != rows:
        raise MosaicParseError(f"expected {rows} rows, found {len(body)}", min(len(lines), rows + 1) + 1)
    cells = []
    for i, line in enumerate(body, start=2):
        if len(line) != cols:
            raise MosaicParseError(f"expected {cols} cells, found {len(line)}", i)
        row = []
        for j, ch in enumerate(line, start=1):
            k = _HEX.find(ch.upper())
            if k < 0:
                raise MosaicParseError(f"non-hex cell {ch!r}", i, j)
            row.append(k)
        cells.append(tuple(row))
    return Mosaic(rows, cols, tuple(cells))


def serialize_mosaic(m: Mosaic) -> str:
    out = [f"{m.rows} {m.cols}"]
    out.extend("".join(_HEX[c] for c in row) for row in m.cells)
    return "\n".join(out) + "\n"


# Centre characters; edge marks come from the pattern. Injective on all 16 tiles.
_CENTRES = (" ", "+", "+", "+", "+", "-", "|", "/", "\\", "|", "-", "o", "o", "o", "o", "*")


def _glyph(tile: int) -> list[str]:
    p = TILE_PATTERNS[tile]
    top = " " + ("|" if p.t else " ") + " "
    mid = ("-" if p.l else " ") + _CENTRES[tile] + ("-" if p.r else " ")
    bot = " " + ("|" if p.b else " ") + " "
    return [top, mid, bot]


def render_ascii(m: Mosaic) -> str:
    """3x3 characters per tile. Debugging aid; the glyphs are not a stable format."""
    lines = []
    for row in m.cells:
        glyphs = [_glyph(c) for c in row]
        for k in range(3):
            lines.append("".join(g[k] for g in glyphs))
    return "\n".join(lines) + "\n"

