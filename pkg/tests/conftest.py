from collections import defaultdict

import pytest

from graphmosaic import kernels
from graphmosaic.tiles import TILE_PATTERNS

IMPLS = sorted(kernels.IMPLEMENTATIONS)

# one line per acceptance criterion check, printed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(params=IMPLS)
def impl(request):
    return request.param


def profile_dp_count(rows, cols):
    """Graph mosaics counted cell by cell over the frontier of open edges.

    A separate exact method (broken-profile dynamic programming with Python
    ints) used to pin values beyond the brute-force oracle's reach.
    """
    states = {(0, False): 1}
    for i in range(rows):
        for j in range(cols):
            nxt = defaultdict(int)
            for (profile, left), ways in states.items():
                up = bool(profile >> j & 1)
                for p in TILE_PATTERNS:
                    if p.t != up or p.l != left:
                        continue
                    if (i == 0 and p.t) or (i == rows - 1 and p.b) or (j == 0 and p.l) or (j == cols - 1 and p.r):
                        continue
                    key = ((profile & ~(1 << j)) | (int(p.b) << j), p.r and j < cols - 1)
                    nxt[key] += ways
            states = nxt
    return sum(states.values())


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
