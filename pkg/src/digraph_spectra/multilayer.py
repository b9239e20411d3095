"""Multilayer digraph constructions.

``compose`` joins two digraphs with directed cross-edge sets e12 (first
to second) and e21 (second to first).  When e12 is empty the composed
Laplacian is block upper triangular, so its spectrum is the union of the
second graph's spectrum and the spectrum of the first block *after the
incoming cross edges are folded into self-loops* (``corollary2_applies``
and ``corollary3_applies`` decide realness/complexness transfer on that
basis).  ``build_udcec`` and ``build_dcid`` construct the two
guaranteed-complex families with known closed-form spectra.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .classifier import check_theorem1
from .graph import Digraph, Edge, build_digraph, laplacian
from .spectra import (
    DEFAULT_REALNESS_TOL,
    eigenvalues,
    is_real_spectrum,
    refine_spectrum,
)


@dataclass(frozen=True)
class Composition:
    """Two digraphs joined by cross edges; second-graph labels shifted by |V1|."""

    g1: Digraph
    g2: Digraph
    e12: tuple[Edge, ...]
    e21: tuple[Edge, ...]
    result: Digraph


def compose(g1: Digraph, g2: Digraph,
            e12: Sequence[Edge] = (), e21: Sequence[Edge] = ()) -> Composition:
    """Join g1 and g2 on |V1| + |V2| nodes, g1 labels first.

    e12 triples are (tail in g1, head in g2, weight); e21 triples are
    (tail in g2, head in g1, weight), both in local labels.
    """
    n1, n2 = g1.n, g2.n
    edges: list[Edge] = list(g1.edges())
    edges.extend((t + n1, h + n1, w) for t, h, w in g2.edges())
    for t, h, w in e12:
        if not (1 <= t <= n1 and 1 <= h <= n2):
            raise ValueError(f"e12 edge ({t}, {h}, {w}): index out of range")
        edges.append((t, h + n1, w))
    for t, h, w in e21:
        if not (1 <= t <= n2 and 1 <= h <= n1):
            raise ValueError(f"e21 edge ({t}, {h}, {w}): index out of range")
        edges.append((t + n1, h, w))
    result = build_digraph(n1 + n2, edges,
                           provenance={"kind": "compose", "split": n1})
    return Composition(g1=g1, g2=g2, e12=tuple(e12), e21=tuple(e21), result=result)


def augmented_first_block(c: Composition) -> Digraph:
    """g1 with each incoming cross edge folded into a self-loop at its head.

    This is the digraph whose Laplacian equals the (V1, V1) block of the
    composed Laplacian.
    """
    weights = dict(c.g1.weights)
    extra: dict[int, float] = {}
    for _, head, w in c.e21:
        extra[head] = extra.get(head, 0.0) + w
    for v, w in extra.items():
        total = weights.get((v, v), 0.0) + w
        if total == 0.0:
            weights.pop((v, v), None)
        else:
            weights[(v, v)] = total
    return Digraph(n=c.g1.n, weights=weights)


def corollary2_applies(c: Composition, tol: float = DEFAULT_REALNESS_TOL) -> bool:
    """Realness-transfer test: guarantees an all-real composed spectrum.

    Requires e12 empty, the self-loop-augmented first block to pass the
    guaranteed-real structural check, and the second graph's spectrum to
    be numerically real.
    """
    if c.e12:
        return False
    if not check_theorem1(augmented_first_block(c)).holds:
        return False
    return is_real_spectrum(refine_spectrum(eigenvalues(laplacian(c.g2))), tol)


def corollary3_applies(c: Composition, tol: float = DEFAULT_REALNESS_TOL) -> bool:
    """Complexness-inheritance test: the composed spectrum must be complex.

    Requires e12 empty and a numerically complex second-graph spectrum,
    which the block-triangular structure passes through unchanged.
    """
    if c.e12:
        return False
    return not is_real_spectrum(refine_spectrum(eigenvalues(laplacian(c.g2))), tol)


def build_udcec(n: int, m: int) -> Digraph:
    """Complete unweighted graph on n nodes with an embedded directed m-cycle.

    Pairs {1,2}, ..., {m-1,m}, {m,1} are made one-way: pair {k, k+1}
    keeps only the edge from k+1 to k, and pair {m, 1} keeps only the
    edge from 1 to m, so the one-way pairs form a single directed cycle.
    Requires 3 <= m <= n.
    """
    if not (3 <= m <= n):
        raise ValueError(f"require 3 <= m <= n, got n={n}, m={m}")
    removed = {(k, k + 1) for k in range(1, m)}  # no edge k -> k+1
    removed.add((m, 1))                          # no edge m -> 1
    edges = [(t, h, 1.0)
             for t in range(1, n + 1) for h in range(1, n + 1)
             if t != h and (t, h) not in removed]
    return build_digraph(n, edges)


@dataclass(frozen=True)
class DcidGraph:
    """A directed ring of m copies of a base digraph, with provenance."""

    base: Digraph
    m: int
    result: Digraph


def build_dcid(g: Digraph, m: int) -> DcidGraph:
    """Interconnect m copies of g in a directed ring, one edge per node.

    Layer l occupies labels (l-1)*n+1 .. l*n.  Node i of layer l
    receives a unit-weight edge from node i of layer l%m + 1, so each
    diagonal Laplacian block is L_g plus the identity and each ring
    block is minus the identity.  Requires m >= 3.
    """
    if m < 3:
        raise ValueError(f"directed ring interconnection requires m >= 3, got {m}")
    n = g.n
    edges: list[Edge] = []
    for layer in range(m):
        off = layer * n
        edges.extend((t + off, h + off, w) for t, h, w in g.edges())
        src_off = (layer + 1) % m * n
        edges.extend((src_off + i, off + i, 1.0) for i in range(1, n + 1))
    result = build_digraph(m * n, edges, provenance={"kind": "dcid", "m": m})
    return DcidGraph(base=g, m=m, result=result)
