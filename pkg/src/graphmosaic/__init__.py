"""Exact enumeration of graph mosaics.

Graph mosaics are grids of the sixteen graph mosaic tiles whose connection
points match across every shared edge and vanish on the outer boundary.
They are counted with state matrices, magnified state matrices and a
Lucas-weighted boundary sum, and cross-checked by brute force.
"""
from .census import CensusResult, count_graph_mosaics, hamming_pair, lucas, theorem_sum
from .kernels import DEFAULT_IMPLEMENTATION, CountOverflowError
from .magnified import MagnifiedStateMatrix, block_diag_multiply, build_magnified
from .mosaic import (Mosaic, MosaicParseError, boundary_state, is_graph_mosaic, is_suitably_connected,
                     parse_mosaic, render_ascii, serialize_mosaic, state_index, state_word)
from .statematrix import (ResourceLimitError, StateMatrix, build_state_matrices,
                          state_matrix_entry_count)
from .tiles import CpPattern, Tile, cp_pattern

__version__ = "0.1.0"
