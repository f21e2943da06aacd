import numpy as np
import pytest

from graphmosaic.oracle import (BoundaryRequirement, brute_bridge_count, brute_count_graph_mosaics,
                                brute_count_suitably_connected, brute_magnified, brute_state_matrix)
from graphmosaic.statematrix import ResourceLimitError


@pytest.mark.parametrize("rows, cols, want", [(1, 1, 1), (2, 2, 2), (3, 3, 71)])
def test_graph_counts(rows, cols, want):
    assert brute_count_graph_mosaics(rows, cols) == want


@pytest.mark.parametrize("cols", range(1, 7))
def test_single_row_only_blank(cols):
    assert brute_count_graph_mosaics(1, cols) == 1
    assert brute_count_graph_mosaics(cols, 1) == 1


def test_suitably_connected_examples():
    assert brute_count_suitably_connected(1, 1) == 16
    assert brute_count_suitably_connected(1, 1, BoundaryRequirement("o", "o", "o", "o")) == 5
    assert brute_count_suitably_connected(2, 2, BoundaryRequirement.empty_boundary(2, 2)) == 2


def test_one_cell_counts_by_left_top():
    # candidates per fixed (l, t): the tile census branching numbers
    counts = {(l, t): brute_count_suitably_connected(1, 1, BoundaryRequirement(l=l, t=t))
              for l in "xo" for t in "xo"}
    assert counts == {("x", "x"): 2, ("o", "x"): 3, ("x", "o"): 3, ("o", "o"): 8}


@pytest.mark.parametrize("rows, cols", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_graph_count_is_empty_boundary_query(rows, cols):
    req = BoundaryRequirement.empty_boundary(rows, cols)
    assert brute_count_graph_mosaics(rows, cols) == brute_count_suitably_connected(rows, cols, req)


def test_requirement_validation():
    with pytest.raises(ValueError):
        brute_count_suitably_connected(2, 2, BoundaryRequirement(l="x"))
    with pytest.raises(ValueError):
        brute_count_suitably_connected(1, 1, BoundaryRequirement(t="q"))


def test_state_matrix_literals():
    assert brute_state_matrix(1, "O+").tolist() == [[1, 1], [1, 5]]
    assert brute_state_matrix(1, "X-").tolist() == [[0, 1], [1, 1]]
    assert [brute_state_matrix(0, k).tolist() for k in ("X+", "X-", "O+", "O-")] == [[[1]], [[0]], [[1]], [[0]]]


def test_magnified_examples():
    assert (brute_magnified(1, 0) == np.identity(2, dtype=np.int64)).all()
    assert brute_magnified(1, 1).sum() == 16


@pytest.mark.parametrize("t, want", [(1, 1), (2, 3), (3, 4), (4, 7)])
def test_bridge_counts(t, want):
    assert brute_bridge_count(t) == want


def test_bridge_count_against_plain_enumeration():
    from itertools import product
    for t in range(1, 10):
        plain = sum(all(f[p] or f[(p + 1) % t] for p in range(t)) for f in product((0, 1), repeat=t))
        assert brute_bridge_count(t) == plain


def test_guards():
    with pytest.raises(ResourceLimitError):
        brute_count_graph_mosaics(5, 5)
    with pytest.raises(ResourceLimitError):
        brute_count_suitably_connected(4, 4)
    with pytest.raises(ResourceLimitError):
        brute_state_matrix(4, "X+")
    with pytest.raises(ResourceLimitError):
        brute_magnified(3, 2)
    with pytest.raises(ResourceLimitError):
        brute_bridge_count(25)
    with pytest.raises(ValueError):
        brute_bridge_count(0)
