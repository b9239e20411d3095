"""Structural classification of digraph Laplacian spectra.

Two families of sufficient conditions are checked.  Guaranteed-real: no
sign-asymmetric digon and every strongly connected set of three or more
nodes induces an undirected subgraph (``check_theorem1``), or the
tree-type special case (``check_corollary1``).  Guaranteed-complex: the
graph is an unweighted directed cycle (``detect_cycle``), a complete
graph with an embedded directed cycle (``detect_udcec``), or carries a
directed-ring-of-copies construction tag.  Graphs matching neither
family are Undetermined; the conditions are sufficient, not necessary.

``check_theorem1`` runs in polynomial time by checking strongly
connected components instead of all induced subgraphs; the equivalence
rests on two facts: a strongly connected induced subgraph lies inside a
single component, and every induced subgraph of an undirected graph is
undirected.  ``check_theorem1_bruteforce`` enumerates subsets literally
and exists to validate that reduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .connectivity import (
    BlockDecomposition,
    DecompositionFailure,
    block_decomposition,
    strongly_connected_components,
)
from .graph import (
    Digraph,
    InteractionKind,
    find_digon_sign_asymmetric,
    induced_subgraph,
    interaction_kind,
    is_undirected,
    laplacian,
)
from .spectra import DEFAULT_REALNESS_TOL, SpectralReport

BRUTE_FORCE_MAX_NODES = 14


class Verdict(Enum):
    GUARANTEED_REAL = "GuaranteedReal"
    GUARANTEED_COMPLEX = "GuaranteedComplex"
    UNDETERMINED = "Undetermined"


class Basis(Enum):
    THEOREM1 = "Theorem1"
    COROLLARY1 = "Corollary1"
    THEOREM2 = "Theorem2"
    THEOREM3 = "Theorem3"
    COROLLARY4_PATTERN = "Corollary4Pattern"
    NONE = "None"


@dataclass(frozen=True)
class Theorem1Result:
    """Outcome of the guaranteed-real structural check.

    On success ``blocks`` holds the block decomposition certificate; on
    failure exactly one of ``violating_pair`` (a sign-asymmetric digon)
    or ``violating_nodes`` (a directed component of >= 3 nodes) is set.
    """

    holds: bool
    blocks: BlockDecomposition | None = None
    violating_pair: tuple[int, int] | None = None
    violating_nodes: tuple[int, ...] | None = None


@dataclass(frozen=True)
class ClassificationVerdict:
    verdict: Verdict
    basis: Basis
    certificate: BlockDecomposition | dict | None = None
    violation: dict | None = None
    numerical: SpectralReport | None = None

    def to_dict(self) -> dict:
        cert: list | dict | None
        if isinstance(self.certificate, BlockDecomposition):
            cert = self.certificate.to_dict()
        else:
            cert = self.certificate
        return {
            "verdict": self.verdict.value,
            "basis": self.basis.value,
            "certificate": cert,
            "violation": self.violation,
            "spectrum": self.numerical.to_dict() if self.numerical else None,
        }


def check_theorem1(g: Digraph) -> Theorem1Result:
    """Structural sufficient condition for an all-real Laplacian spectrum.

    Holds iff (1) no pair interacts with opposite-signed weights and
    (2) every strongly connected component of three or more nodes
    induces an undirected subgraph.
    """
    pair = find_digon_sign_asymmetric(g)
    if pair is not None:
        return Theorem1Result(holds=False, violating_pair=pair)
    dec = block_decomposition(g)
    if isinstance(dec, DecompositionFailure):
        return Theorem1Result(holds=False, violating_nodes=dec.nodes)
    return Theorem1Result(holds=True, blocks=dec)


def _reach(start: int, allowed: int, nbrs: list[int]) -> int:
    """Bitmask BFS closure from ``start`` staying inside ``allowed``."""
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            f ^= low
            nxt |= nbrs[low.bit_length() - 1]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def check_theorem1_bruteforce(g: Digraph) -> bool:
    """Literal subset-enumeration form of the guaranteed-real condition.

    True iff no sign-asymmetric digon exists and every node subset of
    three or more nodes induces a subgraph that is not strongly
    connected or is undirected.  Guarded to n <= 14.
    """
    n = g.n
    if n > BRUTE_FORCE_MAX_NODES:
        raise ValueError(f"subset enumeration guarded to n <= {BRUTE_FORCE_MAX_NODES}, got {n}")
    if find_digon_sign_asymmetric(g) is not None:
        return False

    succ = [0] * n  # succ[j]: nodes receiving from j
    pred = [0] * n
    asym = [0] * n  # asym[i]: nodes j with a_ij != a_ji
    for (i, j), w in g.weights.items():
        if i == j:
            continue
        succ[j - 1] |= 1 << (i - 1)
        pred[i - 1] |= 1 << (j - 1)
        if g.weights.get((j, i)) != w:
            asym[i - 1] |= 1 << (j - 1)
            asym[j - 1] |= 1 << (i - 1)

    for mask in range(7, 1 << n):  # smallest 3-node subset is 0b111
        if mask.bit_count() < 3:
            continue
        m = mask
        undirected = True
        while m:
            low = m & -m
            m ^= low
            if asym[low.bit_length() - 1] & mask:
                undirected = False
                break
        if undirected:
            continue
        start = mask & -mask
        if _reach(start, mask, succ) == mask and _reach(start, mask, pred) == mask:
            return False
    return True


def check_lemma2(g: Digraph) -> bool:
    """Stricter variant: every SCC of two or more nodes must be undirected."""
    for comp in strongly_connected_components(g):
        if len(comp) >= 2:
            sub, _ = induced_subgraph(g, comp)
            if not is_undirected(sub):
                return False
    return True


def check_corollary1(g: Digraph) -> bool:
    """Tree-type condition: symmetric-or-one-way interactions over a tree.

    True iff no digon has unequal weights and the undirected version
    (pair {i, j} linked when either direction is nonzero) is connected
    and acyclic.
    """
    pairs: set[tuple[int, int]] = set()
    for (i, j), w in g.weights.items():
        if i == j:
            continue
        rev = g.weights.get((j, i))
        if rev is not None and rev != w:
            return False
        pairs.add((min(i, j), max(i, j)))
    if len(pairs) != g.n - 1:
        return False
    # Connectivity of the undirected version; acyclicity follows from
    # the edge count once connected.
    nbrs: dict[int, list[int]] = {v: [] for v in range(1, g.n + 1)}
    for i, j in pairs:
        nbrs[i].append(j)
        nbrs[j].append(i)
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for u in nbrs[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.n


def _unit_cycle_order(edges: dict[int, int], nodes: set[int]) -> tuple[int, ...] | None:
    """Order of a single directed cycle covering ``nodes``, or None.

    ``edges`` maps each node to its unique successor; every node must
    have exactly one outgoing and one incoming edge for a cycle.
    """
    if not nodes or set(edges) != nodes:
        return None
    indeg: dict[int, int] = {v: 0 for v in nodes}
    for v, u in edges.items():
        if u not in indeg:
            return None
        indeg[u] += 1
    if any(d != 1 for d in indeg.values()):
        return None
    start = min(nodes)
    order = [start]
    cur = edges[start]
    while cur != start:
        if len(order) > len(nodes):
            return None
        order.append(cur)
        cur = edges[cur]
    if len(order) != len(nodes):
        return None
    return tuple(order)


def detect_cycle(g: Digraph) -> bool:
    """True iff the graph is exactly an unweighted directed cycle on all nodes."""
    return _detect_cycle_order(g) is not None


def _detect_cycle_order(g: Digraph) -> tuple[int, ...] | None:
    if g.n < 3 or g.edge_count != g.n:
        return None
    succ: dict[int, int] = {}
    for (i, j), w in g.weights.items():
        if i == j or w != 1.0 or j in succ:
            return None
        succ[j] = i
    return _unit_cycle_order(succ, set(range(1, g.n + 1)))


def detect_udcec(g: Digraph) -> tuple[int, int, tuple[int, ...]] | None:
    """Recognize a complete unweighted graph with one embedded directed cycle.

    Requires: unit weights, no self-loops, every pair either symmetric
    or one-way, and the one-way pairs (as directed edges) forming a
    single directed cycle through m >= 3 nodes.  Returns (n, m, cycle
    node order) or None.
    """
    for (i, j), w in g.weights.items():
        if i == j or w != 1.0:
            return None
    flow: dict[int, int] = {}
    cycle_nodes: set[int] = set()
    for i in range(1, g.n + 1):
        for j in range(i + 1, g.n + 1):
            kind = interaction_kind(g, i, j)
            if kind == InteractionKind.DIGON_SYMMETRIC:
                continue
            if kind != InteractionKind.UNIDIRECTIONAL:
                return None  # missing pair or asymmetric digon
            head, tail = (i, j) if g.weight(i, j) != 0.0 else (j, i)
            if tail in flow:
                return None
            flow[tail] = head
            cycle_nodes.update((tail, head))
    if len(cycle_nodes) < 3:
        return None
    order = _unit_cycle_order(flow, cycle_nodes)
    if order is None:
        return None
    return g.n, len(order), order


def classify(g: Digraph, with_numerics: bool = False,
             tol: float = DEFAULT_REALNESS_TOL) -> ClassificationVerdict:
    """Dispatch the structural checks, most specific basis first.

    Guaranteed-complex detections run before the guaranteed-real checks;
    the two families cannot both fire.  When nothing applies the verdict
    is Undetermined, with a numerical spectrum attached if requested.
    """
    numerical = SpectralReport.from_matrix(laplacian(g), tol) if with_numerics else None

    cycle = _detect_cycle_order(g)
    if cycle is not None:
        return ClassificationVerdict(
            Verdict.GUARANTEED_COMPLEX, Basis.THEOREM2,
            certificate={"n": g.n, "cycle": list(cycle)}, numerical=numerical)
    udcec = detect_udcec(g)
    if udcec is not None:
        n, m, order = udcec
        return ClassificationVerdict(
            Verdict.GUARANTEED_COMPLEX, Basis.THEOREM3,
            certificate={"n": n, "m": m, "cycle": list(order)}, numerical=numerical)
    if g.provenance and g.provenance.get("kind") == "dcid":
        m = int(g.provenance["m"])
        return ClassificationVerdict(
            Verdict.GUARANTEED_COMPLEX, Basis.COROLLARY4_PATTERN,
            certificate={"m": m, "base_n": g.n // m}, numerical=numerical)

    t1 = check_theorem1(g)
    if t1.holds:
        return ClassificationVerdict(
            Verdict.GUARANTEED_REAL, Basis.THEOREM1,
            certificate=t1.blocks, numerical=numerical)
    if check_corollary1(g):
        return ClassificationVerdict(
            Verdict.GUARANTEED_REAL, Basis.COROLLARY1, numerical=numerical)

    violation: dict | None = None
    if t1.violating_pair is not None:
        violation = {"pair": list(t1.violating_pair)}
    elif t1.violating_nodes is not None:
        violation = {"nodes": list(t1.violating_nodes)}
    return ClassificationVerdict(
        Verdict.UNDETERMINED, Basis.NONE, violation=violation, numerical=numerical)
