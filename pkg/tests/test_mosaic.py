import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphmosaic.mosaic import (Mosaic, MosaicParseError, boundary_state, is_graph_mosaic,
                                is_suitably_connected, parse_mosaic, render_ascii, serialize_mosaic,
                                state_index, state_word)
from graphmosaic.tiles import TILE_PATTERNS, CpPattern, Tile, cp_pattern, tile_census

CIRCLE = Mosaic.from_rows([[2, 1], [4, 3]])


def test_tile_census():
    assert tile_census() == {0: 1, 2: 6, 3: 4, 4: 5}
    assert sum(tile_census().values()) == 16


def test_cp_counts_by_tile_group():
    assert cp_pattern(0).count == 0
    assert all(cp_pattern(k).count == 2 for k in range(1, 7))
    assert all(cp_pattern(k).count == 3 for k in range(11, 15))
    assert all(cp_pattern(k).count == 4 for k in (7, 8, 9, 10, 15))


def test_patterns_distinct_within_groups():
    assert len({cp_pattern(k) for k in range(1, 7)}) == 6
    assert len({cp_pattern(k) for k in range(11, 15)}) == 4


@pytest.mark.parametrize("tile, pattern", [
    (0, CpPattern(False, False, False, False)),
    (6, CpPattern(False, False, True, True)),
    (15, CpPattern(True, True, True, True)),
    (12, CpPattern(True, False, True, True)),
    (13, CpPattern(True, True, False, True)),
    (14, CpPattern(False, True, True, True)),
])
def test_cp_pattern_pinned_tiles(tile, pattern):
    assert cp_pattern(tile) == pattern


def test_quadrant_tiles_have_bottom_point():
    assert cp_pattern(1).l and cp_pattern(1).b
    assert cp_pattern(2).r and cp_pattern(2).b


@pytest.mark.parametrize("bad", [-1, 16, 99])
def test_cp_pattern_rejects_bad_id(bad):
    with pytest.raises(ValueError):
        cp_pattern(bad)


def test_tile_repr_and_type():
    assert repr(Tile(7)) == "T_7"
    with pytest.raises(TypeError):
        Tile(1.5)


def test_lt_branching_counts():
    counts = {}
    for p in TILE_PATTERNS:
        counts[(p.l, p.t)] = counts.get((p.l, p.t), 0) + 1
    assert counts == {(False, False): 2, (True, False): 3, (False, True): 3, (True, True): 8}


def test_suitably_connected_examples():
    assert is_suitably_connected(Mosaic.from_rows([[0, 0], [0, 0]]))
    assert all(is_suitably_connected(Mosaic.from_rows([[k]])) for k in range(16))
    assert not is_suitably_connected(Mosaic.from_rows([[1], [0]]))
    assert not is_suitably_connected(Mosaic.from_rows([[2, 0]]))


def test_graph_mosaic_examples():
    assert is_graph_mosaic(Mosaic.from_rows([[0]]))
    assert not is_graph_mosaic(Mosaic.from_rows([[5]]))
    assert is_graph_mosaic(CIRCLE)
    assert [k for k in range(16) if is_graph_mosaic(Mosaic.from_rows([[k]]))] == [0]


def test_boundary_state():
    assert boundary_state(Mosaic.from_rows([[5]]), "l") == "o"
    assert boundary_state(Mosaic.from_rows([[0, 0], [0, 0]]), "t") == "xx"
    assert all(boundary_state(CIRCLE, s) == "xx" for s in "lrtb")
    m = Mosaic.from_rows([[1, 0], [6, 14]])
    assert boundary_state(m, "l") == "ox"
    assert boundary_state(m, "r") == "xo"
    assert boundary_state(m, "t") == "xx"
    assert boundary_state(m, "b") == "oo"
    with pytest.raises(ValueError):
        boundary_state(m, "q")


@pytest.mark.parametrize("word, index", [("xxx", 1), ("oxx", 2), ("xox", 3), ("oox", 4),
                                         ("xxo", 5), ("oxo", 6), ("xoo", 7), ("ooo", 8)])
def test_state_order_m3(word, index):
    assert state_index(word) == index
    assert state_word(index, 3) == word


def test_state_word_examples():
    assert state_word(2, 3) == "oxx"
    assert state_word(1, 5) == "xxxxx"
    assert state_word(4, 2) == "oo"
    for bad in [(0, 3), (9, 3)]:
        with pytest.raises(ValueError):
            state_word(*bad)
    with pytest.raises(ValueError):
        state_index("xqx")


@given(st.text(alphabet="xo", min_size=1, max_size=12))
def test_state_index_round_trip(word):
    assert state_word(state_index(word), len(word)) == word


mosaics = st.integers(1, 5).flatmap(lambda r: st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(0, 15), min_size=c, max_size=c), min_size=r, max_size=r)))


@given(mosaics)
def test_parse_serialize_round_trip(rows):
    m = Mosaic.from_rows(rows)
    text = serialize_mosaic(m)
    assert parse_mosaic(text) == m
    assert serialize_mosaic(parse_mosaic(text.lower())) == text
    assert parse_mosaic(text.rstrip("\n")) == m


def test_parse_examples():
    assert parse_mosaic("1 1\n0\n") == Mosaic.from_rows([[0]])
    assert parse_mosaic("2 2\n21\n43\n") == CIRCLE
    assert serialize_mosaic(Mosaic.from_rows([[15, 10]])) == "1 2\nFA\n"


@pytest.mark.parametrize("text, line, column", [
    ("1 2\n0G\n", 2, 2),
    ("", 1, None),
    ("2x2\n00\n00\n", 1, None),
    ("2 2\n00\n", 3, None),
    ("2 2\n00\n000\n", 3, None),
    ("0 1\n", 1, None),
])
def test_parse_errors(text, line, column):
    with pytest.raises(MosaicParseError) as err:
        parse_mosaic(text)
    assert err.value.line == line
    assert err.value.column == column


def test_render_injective_and_shaped():
    glyphs = {render_ascii(Mosaic.from_rows([[k]])) for k in range(16)}
    assert len(glyphs) == 16
    assert render_ascii(Mosaic.from_rows([[0]])) == "   \n   \n   \n"
    six = render_ascii(Mosaic.from_rows([[6]])).splitlines()
    assert six[0][1] == "|" and six[2][1] == "|" and six[1][0] == " " and six[1][2] == " "
    lines = render_ascii(CIRCLE).splitlines()
    assert len(lines) == 6 and all(len(ln) == 6 for ln in lines)
    assert render_ascii(CIRCLE) == render_ascii(CIRCLE)


def test_mosaic_validation():
    with pytest.raises(ValueError):
        Mosaic(0, 1, ())
    with pytest.raises(ValueError):
        Mosaic.from_rows([[0, 1], [2]])
    with pytest.raises(ValueError):
        Mosaic.from_rows([[16]])
