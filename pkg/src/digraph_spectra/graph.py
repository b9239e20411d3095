"""Weighted digraph model, Laplacian construction, and digon classification.

Orientation convention (the one used throughout this package): a nonzero
weight ``a_ij`` stored under key ``(i, j)`` encodes a directed edge *from
node j to node i*, meaning node i receives from node j.  Edge-list inputs
use ``(tail, head, weight)`` triples, so a triple ``(j, i, w)`` stores
``a_ij = w``.  Node labels are 1-based.

The Laplacian is ``L[i, j] = -a_ij`` off the diagonal and
``L[i, i] = sum_j a_ij`` (the sum includes a self-loop weight ``a_ii``),
so every row of ``L`` sums to the node's self-loop weight.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

import numpy as np

Edge = tuple[int, int, float]


class InteractionKind(Enum):
    """How a pair of distinct nodes interact, classified from a_ij and a_ji."""

    NONE = "none"
    UNIDIRECTIONAL = "unidirectional"
    DIGON_SYMMETRIC = "digon_symmetric"
    DIGON_ASYMMETRIC = "digon_asymmetric"
    DIGON_SIGN_ASYMMETRIC = "digon_sign_asymmetric"


@dataclass(frozen=True)
class Digraph:
    """Immutable weighted digraph on nodes 1..n.

    ``weights`` maps ``(i, j)`` to the nonzero weight a_ij (edge from j
    to i); absent pairs mean a_ij = 0.  ``provenance`` optionally records
    how the graph was constructed (e.g. by a multilayer builder) and is
    carried through serialization.
    """

    n: int
    weights: dict[tuple[int, int], float] = field(default_factory=dict)
    provenance: dict | None = None

    def weight(self, i: int, j: int) -> float:
        """Weight a_ij of the edge from node j to node i (0.0 if absent)."""
        return self.weights.get((i, j), 0.0)

    @property
    def edge_count(self) -> int:
        return len(self.weights)

    def edges(self) -> list[Edge]:
        """Edges as (tail, head, weight) triples, sorted for determinism."""
        return sorted((j, i, w) for (i, j), w in self.weights.items())


def build_digraph(n: int, edges: Iterable[Edge], provenance: dict | None = None) -> Digraph:
    """Build a digraph from (tail, head, weight) triples.

    A triple (tail, head, w) adds the edge tail -> head, stored as
    a_{head,tail} = w; tail == head adds a self-loop.  Rejects
    out-of-range node indices, zero or non-finite weights, and duplicate
    (tail, head) pairs, naming the offending triple.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"node count must be a positive integer, got {n!r}")
    weights: dict[tuple[int, int], float] = {}
    for tail, head, w in edges:
        if not (1 <= tail <= n and 1 <= head <= n):
            raise ValueError(f"edge ({tail}, {head}, {w}): node index out of range 1..{n}")
        w = float(w)
        if not math.isfinite(w) or w == 0.0:
            raise ValueError(f"edge ({tail}, {head}, {w}): weight must be finite and nonzero")
        key = (head, tail)
        if key in weights:
            raise ValueError(f"edge ({tail}, {head}, {w}): duplicate (tail, head) pair")
        weights[key] = w
    return Digraph(n=n, weights=weights, provenance=provenance)


def adjacency(g: Digraph) -> np.ndarray:
    """Dense adjacency matrix A with A[i-1, j-1] = a_ij."""
    a = np.zeros((g.n, g.n))
    for (i, j), w in g.weights.items():
        a[i - 1, j - 1] = w
    return a


def laplacian(g: Digraph) -> np.ndarray:
    """Dense Laplacian: off-diagonal -a_ij, diagonal row sums of A.

    The diagonal rule takes precedence at i == j, so a self-loop weight
    shows up only through the row sum.
    """
    a = adjacency(g)
    lap = -a
    np.fill_diagonal(lap, a.sum(axis=1))
    return lap


def interaction_kind(g: Digraph, i: int, j: int) -> InteractionKind:
    """Classify the pairwise interaction between distinct nodes i and j."""
    if i == j:
        raise ValueError("self-loops are not pairwise interactions")
    w_ij = g.weight(i, j)
    w_ji = g.weight(j, i)
    if w_ij == 0.0 and w_ji == 0.0:
        return InteractionKind.NONE
    if w_ij == 0.0 or w_ji == 0.0:
        return InteractionKind.UNIDIRECTIONAL
    if w_ij * w_ji < 0.0:
        return InteractionKind.DIGON_SIGN_ASYMMETRIC
    if w_ij == w_ji:
        return InteractionKind.DIGON_SYMMETRIC
    return InteractionKind.DIGON_ASYMMETRIC


def is_digon_asymmetric_broad(kind: InteractionKind) -> bool:
    """True for digons with unequal weights, including opposite signs."""
    return kind in (InteractionKind.DIGON_ASYMMETRIC, InteractionKind.DIGON_SIGN_ASYMMETRIC)


def has_digon_sign_asymmetric(g: Digraph) -> bool:
    """True iff some pair carries opposite-signed weights in both directions."""
    for (i, j), w in g.weights.items():
        if i < j:
            w_rev = g.weights.get((j, i))
            if w_rev is not None and w * w_rev < 0.0:
                return True
    return False


def find_digon_sign_asymmetric(g: Digraph) -> tuple[int, int] | None:
    """Smallest pair (i, j), i < j, with a_ij * a_ji < 0, or None."""
    worst = None
    for (i, j), w in g.weights.items():
        if i < j:
            w_rev = g.weights.get((j, i))
            if w_rev is not None and w * w_rev < 0.0:
                if worst is None or (i, j) < worst:
                    worst = (i, j)
    return worst


def is_undirected(g: Digraph) -> bool:
    """True iff a_ij == a_ji for every pair i != j (self-loops ignored)."""
    for (i, j), w in g.weights.items():
        if i != j and g.weights.get((j, i)) != w:
            return False
    return True


def induced_subgraph(g: Digraph, nodes: Iterable[int]) -> tuple[Digraph, tuple[int, ...]]:
    """Subgraph induced by ``nodes``, relabeled to 1..|nodes|.

    Keeps exactly the weights with both endpoints in the set, including
    self-loops of members.  Returns (subgraph, labels) where labels[k-1]
    is the original label of new node k (ascending original order).
    """
    labels = tuple(sorted(set(nodes)))
    if not labels:
        raise ValueError("node set must be non-empty")
    if labels[0] < 1 or labels[-1] > g.n:
        raise ValueError(f"node set {labels} not within 1..{g.n}")
    new_of = {old: k + 1 for k, old in enumerate(labels)}
    weights = {
        (new_of[i], new_of[j]): w
        for (i, j), w in g.weights.items()
        if i in new_of and j in new_of
    }
    return Digraph(n=len(labels), weights=weights), labels


def block_submatrix(lap: np.ndarray, rows: Iterable[int], cols: Iterable[int]) -> np.ndarray:
    """Submatrix of a Laplacian indexed by 1-based node labels, ascending."""
    r = sorted(set(rows))
    c = sorted(set(cols))
    if not r or not c:
        raise ValueError("row and column sets must be non-empty")
    return lap[np.ix_([i - 1 for i in r], [j - 1 for j in c])]
