"""Strong-connectivity analysis and block-triangular decomposition.

Under the receiving convention (a_ij != 0 is an edge from j to i), the
Laplacian becomes block *upper* triangular when strongly connected
components are numbered receivers-first: every off-diagonal block below
the diagonal is then zero.  ``strongly_connected_components`` emits
components in such an order; ``block_decomposition`` additionally tags
each component by the structure that makes its diagonal block's spectrum
tractable (undirected, single node, or two nodes).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import Enum

from .graph import Digraph, induced_subgraph, is_undirected

SccPartition = list[tuple[int, ...]]


class BlockTag(Enum):
    UNDIRECTED = "Undirected"
    SINGLE_NODE = "SingleNode"
    TWO_NODE = "TwoNode"


@dataclass(frozen=True)
class Block:
    nodes: tuple[int, ...]
    tag: BlockTag


@dataclass(frozen=True)
class BlockDecomposition:
    """Ordered terminal blocks; concatenation permutes 1..n."""

    blocks: tuple[Block, ...]

    def node_order(self) -> list[int]:
        return [v for b in self.blocks for v in b.nodes]

    def to_dict(self) -> list[dict]:
        return [{"nodes": list(b.nodes), "tag": b.tag.value} for b in self.blocks]


@dataclass(frozen=True)
class DecompositionFailure:
    """A strongly connected set of >= 3 nodes inducing a directed subgraph."""

    nodes: tuple[int, ...]


def _successors(g: Digraph) -> list[list[int]]:
    """succ[j] = nodes receiving from j, for 1-based j (index 0 unused)."""
    succ: list[list[int]] = [[] for _ in range(g.n + 1)]
    for (i, j) in g.weights:
        if i != j:
            succ[j].append(i)
    return succ


def strongly_connected_components(g: Digraph) -> SccPartition:
    """Maximal SCCs, ordered so the permuted Laplacian is block upper triangular.

    Incomparable components are tie-broken by their smallest node label.
    """
    succ = _successors(g)
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    comps: list[tuple[int, ...]] = []
    counter = 0

    for root in range(1, g.n + 1):
        if root in index:
            continue
        # Iterative Tarjan: (node, iterator over its unvisited successors).
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(succ[root]))]
        while work:
            v, it = work[-1]
            descended = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ[w])))
                    descended = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if descended:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(tuple(sorted(comp)))

    # Deterministic condensation order: a component precedes every
    # component it receives from (receiver-before-sender), ties broken
    # by smallest contained label via the heap.
    comp_of = {v: k for k, comp in enumerate(comps) for v in comp}
    out: list[set[int]] = [set() for _ in comps]  # receiver -> senders
    indeg = [0] * len(comps)
    for (i, j) in g.weights:
        a, b = comp_of[j], comp_of[i]  # j sends to i
        if a != b and a not in out[b]:
            out[b].add(a)
            indeg[a] += 1
    heap = [(comps[k][0], k) for k in range(len(comps)) if indeg[k] == 0]
    heapq.heapify(heap)
    ordered: list[tuple[int, ...]] = []
    while heap:
        _, k = heapq.heappop(heap)
        ordered.append(comps[k])
        for a in out[k]:
            indeg[a] -= 1
            if indeg[a] == 0:
                heapq.heappush(heap, (comps[a][0], a))
    return ordered


def is_strongly_connected(g: Digraph) -> bool:
    return len(strongly_connected_components(g)) == 1


def block_decomposition(g: Digraph) -> BlockDecomposition | DecompositionFailure:
    """Split along the SCC condensation into terminal diagonal blocks.

    Each strongly connected component terminates the recursion as a
    single-node, two-node, or undirected block.  A component of three or
    more nodes whose induced subgraph is directed cannot terminate and is
    returned as the failure witness.
    """
    blocks: list[Block] = []
    for comp in strongly_connected_components(g):
        if len(comp) == 1:
            blocks.append(Block(comp, BlockTag.SINGLE_NODE))
        elif len(comp) == 2:
            blocks.append(Block(comp, BlockTag.TWO_NODE))
        else:
            sub, _ = induced_subgraph(g, comp)
            if is_undirected(sub):
                blocks.append(Block(comp, BlockTag.UNDIRECTED))
            else:
                return DecompositionFailure(comp)
    return BlockDecomposition(tuple(blocks))
