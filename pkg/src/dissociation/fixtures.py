"""Small named graphs used in examples, tests and the README."""

from __future__ import annotations

from .extremal import SpikedCycleSpec, build_spiked_cycle
from .graph import Graph

# 15-cycle with spikes at positions 2, 4, 9, 11, 13: very good, n = 20.
SPIKED_15 = SpikedCycleSpec(15, (2, 4, 9, 11, 13))
# The same cycle with the spike at position 4 removed; not good.
SPIKED_15_MINUS = SpikedCycleSpec(15, (2, 9, 11, 13))


def spiked_15() -> Graph:
    return build_spiked_cycle(SPIKED_15)


def spiked_15_minus() -> Graph:
    return build_spiked_cycle(SPIKED_15_MINUS)


def bowtie_with_pendants() -> Graph:
    """Two triangles sharing vertex 0, each with one pendant edge.

    Not cycle-disjoint, yet diss = 4 = n - (m + k + c1)/3. Deleting 0 leaves
    d(0) - 2 = 2 components.
    """
    return Graph(7, [(0, 1), (0, 2), (1, 2), (2, 3), (0, 4), (0, 5), (4, 5), (5, 6)])


def diamond() -> Graph:
    """K4 minus an edge: two triangles sharing the edge 0-1. diss = 2 = bound."""
    return Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
