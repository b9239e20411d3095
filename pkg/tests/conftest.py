"""Shared fixtures: reference graphs and random-instance helpers."""

from __future__ import annotations

import numpy as np
import pytest

from digraph_spectra import Digraph, build_digraph

# Six-node reference graph: one sender node feeding an undirected
# triangle block and a two-node block, with a self-loop and a negative
# cross edge.  Eigenvalues to two decimals: 3, 10.47, 3.65, -4.12,
# 5.80, 1.30.
SIX_NODE_EDGES = [
    (1, 1, 2.0),
    (2, 1, 1.0),
    (3, 2, 4.0), (2, 3, 4.0),
    (4, 2, 1.5), (2, 4, 1.5),
    (4, 3, 3.0), (3, 4, 3.0),
    (5, 4, -7.0),
    (5, 5, 3.6),
    (6, 5, 1.4), (5, 6, 2.1),
]
SIX_NODE_EIGS_2DP = [3.0, 10.47, 3.65, -4.12, 5.80, 1.30]

# Frozen 4-node consensus demo pair, found by exhaustive search over all
# 4096 unweighted loopless digraphs (see test_consensus for the search):
# the first has spectrum {0, 0.53, 2.23 +- 0.79i} and deleting the edge
# 2 -> 3 yields the second with spectrum {0, 1, 1, 2}.
CONSENSUS_COMPLEX_EDGES = [(1, 3), (1, 4), (2, 3), (3, 4), (4, 2)]
CONSENSUS_REAL_EDGES = [(1, 3), (1, 4), (3, 4), (4, 2)]
FIXED_X0 = (0.9, -0.7, 0.4, -0.2)

# Weight pool kept dyadic-friendly so Laplacian row sums are exact.
WEIGHT_POOL = (-2.0, -1.0, -0.5, 0.5, 1.0, 1.5, 2.0, 3.0)


def random_digraph(rng: np.random.Generator, n: int, density: float,
                   self_loops: bool = True,
                   weight_pool: tuple[float, ...] = WEIGHT_POOL) -> Digraph:
    edges = []
    for t in range(1, n + 1):
        for h in range(1, n + 1):
            if t == h and not self_loops:
                continue
            if rng.random() < density:
                edges.append((t, h, float(rng.choice(weight_pool))))
    return build_digraph(n, edges)


def random_undirected_digraph(rng: np.random.Generator, n: int,
                              density: float) -> Digraph:
    """Random symmetric-weight digraph (undirected in the pair sense)."""
    edges = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if rng.random() < density:
                w = float(rng.choice(WEIGHT_POOL))
                edges.append((i, j, w))
                edges.append((j, i, w))
    return build_digraph(n, edges)


@pytest.fixture
def six_node_graph() -> Digraph:
    return build_digraph(6, SIX_NODE_EDGES)


@pytest.fixture
def cycle3() -> Digraph:
    return build_digraph(3, [(1, 2, 1.0), (2, 3, 1.0), (3, 1, 1.0)])


@pytest.fixture
def weighted_cycle3() -> Digraph:
    """Directed 3-cycle with weights 1, 1, 4; spectrum {0, 3, 3}."""
    return build_digraph(3, [(1, 2, 1.0), (2, 3, 1.0), (3, 1, 4.0)])


def unit_edges(pairs) -> list[tuple[int, int, float]]:
    return [(t, h, 1.0) for t, h in pairs]


@pytest.fixture
def consensus_complex_graph() -> Digraph:
    return build_digraph(4, unit_edges(CONSENSUS_COMPLEX_EDGES))


@pytest.fixture
def consensus_real_graph() -> Digraph:
    return build_digraph(4, unit_edges(CONSENSUS_REAL_EDGES))
