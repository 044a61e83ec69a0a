"""Simple undirected labeled graphs with edge contraction and structural recognizers.

Graphs are immutable values: every operation returns a new graph, so they are
safe to share, hash and use as dict keys. Vertices are dense integers 0..n-1.
Each vertex carries a :class:`VertexLabel` recording its role inside a built
gadget graph (or ``PLAIN`` for ordinary vertices), which lets tests and tools
address gadget vertices by role instead of by position.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional


@dataclass(frozen=True)
class VertexLabel:
    """Role tag for a vertex.

    kind is one of: "plain", "true", "false", "cycle_u" (variable-gadget roles,
    with ``var`` and ``index``), "clause", "variable", "l" (clause-gadget roles,
    with ``clause`` and optionally ``var``), "port", "gadget_u", "gadget_w",
    "gadget_a", "gadget_b", "gadget_c" (replacement-gadget roles, with
    ``source`` vertex and ``index``), "pos_literal", "neg_literal",
    "triangle_u" (triangle-gadget roles, with ``var``).
    """

    kind: str = "plain"
    var: Optional[int] = None
    clause: Optional[int] = None
    index: Optional[int] = None
    source: Optional[int] = None

    def __post_init__(self):
        if self.kind in _INDEXED_KINDS and self.index not in (1, 2, 3):
            raise ValueError(f"label kind {self.kind!r} needs index in 1..3, got {self.index}")

    def to_dict(self) -> dict:
        d = {"kind": self.kind}
        for field in ("var", "clause", "index", "source"):
            value = getattr(self, field)
            if value is not None:
                d[field] = value
        return d

    @staticmethod
    def from_dict(d: dict) -> "VertexLabel":
        return VertexLabel(
            kind=d.get("kind", "plain"),
            var=d.get("var"),
            clause=d.get("clause"),
            index=d.get("index"),
            source=d.get("source"),
        )


_INDEXED_KINDS = frozenset(
    {"true", "false", "cycle_u", "port", "gadget_u", "gadget_w", "gadget_a", "gadget_b", "gadget_c"}
)

PLAIN = VertexLabel()


class GraphError(ValueError):
    """Invalid graph construction or operation request."""


@dataclass(frozen=True)
class LabeledGraph:
    """Simple undirected graph on vertices 0..n-1 with per-vertex labels.

    Invariants: no self-loops, no parallel edges, symmetric adjacency,
    len(labels) == n. Enforced by the constructors below.
    """

    n: int
    adj: tuple[frozenset[int], ...]
    labels: tuple[VertexLabel, ...]

    @staticmethod
    def empty(n: int, labels: Optional[Iterable[VertexLabel]] = None) -> "LabeledGraph":
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        labels = tuple(labels) if labels is not None else (PLAIN,) * n
        if len(labels) != n:
            raise GraphError(f"expected {n} labels, got {len(labels)}")
        return LabeledGraph(n, (frozenset(),) * n, labels)

    @staticmethod
    def from_edges(
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Optional[Iterable[VertexLabel]] = None,
    ) -> "LabeledGraph":
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop ({u},{v}) not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            adj[u].add(v)
            adj[v].add(u)
        labels = tuple(labels) if labels is not None else (PLAIN,) * n
        if len(labels) != n:
            raise GraphError(f"expected {n} labels, got {len(labels)}")
        return LabeledGraph(n, tuple(frozenset(s) for s in adj), labels)

    # -- basic queries ----------------------------------------------------

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.adj[v] | {v}

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted (u, v) pairs with u < v, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        """Closed neighborhoods as bitmasks; the solver's working representation."""
        masks = []
        for v in range(self.n):
            m = 1 << v
            for w in self.adj[v]:
                m |= 1 << w
            masks.append(m)
        return tuple(masks)

    # -- pure operations ---------------------------------------------------

    def add_edge(self, u: int, v: int) -> "LabeledGraph":
        """Return the graph with edge {u,v} added (idempotent if present)."""
        if u == v:
            raise GraphError(f"self-loop ({u},{v}) not allowed")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"edge ({u},{v}) out of range for n={self.n}")
        if v in self.adj[u]:
            return self
        adj = list(self.adj)
        adj[u] = adj[u] | {v}
        adj[v] = adj[v] | {u}
        return LabeledGraph(self.n, tuple(adj), self.labels)

    def contract_edge(self, u: int, v: int) -> "LabeledGraph":
        """Contract edge {u,v}: merge the endpoints into one new vertex.

        The merged vertex is adjacent to N(u) | N(v) minus the endpoints, gets
        the label ``PLAIN``, and takes the identifier of the merged graph's
        last vertex slot after the remaining vertices are renumbered densely
        (original order preserved).
        """
        if v not in self.adj[u]:
            raise GraphError(f"cannot contract non-edge ({u},{v})")
        keep = [w for w in range(self.n) if w not in (u, v)]
        remap = {w: i for i, w in enumerate(keep)}
        merged = len(keep)  # new id of the contracted vertex
        new_adj: list[set[int]] = [set() for _ in range(merged + 1)]
        for w in keep:
            for x in self.adj[w]:
                if x in (u, v):
                    new_adj[remap[w]].add(merged)
                    new_adj[merged].add(remap[w])
                else:
                    new_adj[remap[w]].add(remap[x])
        labels = tuple(self.labels[w] for w in keep) + (PLAIN,)
        return LabeledGraph(merged + 1, tuple(frozenset(s) for s in new_adj), labels)

    def relabel(self, perm: list[int]) -> "LabeledGraph":
        """Apply a vertex permutation: new vertex perm[v] is old vertex v."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("not a permutation")
        adj: list[set[int]] = [set() for _ in range(self.n)]
        labels: list[VertexLabel] = [PLAIN] * self.n
        for v in range(self.n):
            labels[perm[v]] = self.labels[v]
            for w in self.adj[v]:
                adj[perm[v]].add(perm[w])
        return LabeledGraph(self.n, tuple(frozenset(s) for s in adj), tuple(labels))

    # -- predicates --------------------------------------------------------

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in self.adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def max_degree(self) -> int:
        return max((len(s) for s in self.adj), default=0)

    def min_degree(self) -> int:
        return min((len(s) for s in self.adj), default=0)

    def is_subcubic(self) -> bool:
        return self.max_degree() <= 3


# -- small named graphs ----------------------------------------------------


def path_graph(n: int) -> LabeledGraph:
    return LabeledGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> LabeledGraph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return LabeledGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> LabeledGraph:
    return LabeledGraph.from_edges(n, list(itertools.combinations(range(n), 2)))


def star_graph(leaves: int) -> LabeledGraph:
    """K_{1,leaves} with the center at vertex 0."""
    return LabeledGraph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def prism_graph() -> LabeledGraph:
    """The 3-prism: two triangles joined by a perfect matching (3-regular)."""
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    return LabeledGraph.from_edges(6, edges)


# -- claw recognition -------------------------------------------------------


def find_claw(g: LabeledGraph) -> Optional[tuple[int, int, int, int]]:
    """Find an induced K_{1,3}: returns (center, leaf, leaf, leaf) or None.

    Scans each vertex's neighborhood for three pairwise non-adjacent members;
    candidates are visited in ascending order so the result is deterministic.
    """
    for center in range(g.n):
        nbrs = sorted(g.adj[center])
        if len(nbrs) < 3:
            continue
        for a, b, c in itertools.combinations(nbrs, 3):
            if b not in g.adj[a] and c not in g.adj[a] and c not in g.adj[b]:
                return (center, a, b, c)
    return None


def is_claw_free(g: LabeledGraph) -> bool:
    return find_claw(g) is None


# -- induced path recognition ------------------------------------------------


class SearchBudgetExceeded(Exception):
    """A bounded search ran out of its node budget before deciding."""

    def __init__(self, nodes: int):
        super().__init__(f"search budget exceeded after {nodes} nodes")
        self.nodes = nodes


@dataclass(frozen=True)
class InducedPathResult:
    """Outcome of an induced-path search.

    status: "free" (no induced path on k vertices), "found" (witness holds the
    path, in order), or "budget_exceeded" (undecided; never a wrong answer).
    """

    status: str
    witness: Optional[tuple[int, ...]] = None
    nodes: int = 0

    @property
    def is_free(self) -> bool:
        if self.status == "budget_exceeded":
            raise SearchBudgetExceeded(self.nodes)
        return self.status == "free"


def find_induced_path(g: LabeledGraph, k: int, budget: Optional[int] = None) -> InducedPathResult:
    """Search for an induced path on exactly k vertices by DFS extension.

    Grows simple paths one endpoint at a time, pruning any extension adjacent
    to a non-tip path vertex (which would chord the path). Every induced path
    is reached from each of its two endpoints, so trying all start vertices is
    exhaustive. The node budget counts extension attempts; exceeding it yields
    a "budget_exceeded" result, never a wrong answer.
    """
    if k < 1:
        raise GraphError(f"path length must be >= 1, got {k}")
    if budget is not None and budget <= 0:
        raise GraphError("budget must be positive")
    if k == 1:
        if g.n >= 1:
            return InducedPathResult("found", (0,), 1)
        return InducedPathResult("free", None, 0)
    if g.n < k:
        return InducedPathResult("free", None, 0)

    masks = g.closed_masks
    nodes = 0

    def extend(path: list[int], forbidden: int) -> Optional[tuple[int, ...]]:
        nonlocal nodes
        if len(path) == k:
            return tuple(path)
        tip = path[-1]
        for w in sorted(g.adj[tip]):
            if (forbidden >> w) & 1:
                continue
            nodes += 1
            if budget is not None and nodes > budget:
                raise SearchBudgetExceeded(nodes)
            # w may touch only the current tip: anything adjacent to an
            # earlier path vertex would create a chord.
            path.append(w)
            found = extend(path, forbidden | masks[tip])
            if found is not None:
                return found
            path.pop()
        return None

    try:
        for start in range(g.n):
            nodes += 1
            if budget is not None and nodes > budget:
                raise SearchBudgetExceeded(nodes)
            found = extend([start], 1 << start)
            if found is not None:
                return InducedPathResult("found", found, nodes)
    except SearchBudgetExceeded as exc:
        return InducedPathResult("budget_exceeded", None, exc.nodes)
    return InducedPathResult("free", None, nodes)


def is_pk_free(g: LabeledGraph, k: int, budget: Optional[int] = None) -> InducedPathResult:
    """Decide whether g has no induced path on k vertices.

    "free" means no such path exists; "found" carries the path as the
    counterexample witness. Use ``.is_free`` when a boolean is wanted and the
    budget is known to suffice.
    """
    return find_induced_path(g, k, budget)


def connected_components(g: LabeledGraph) -> list[list[int]]:
    """Vertex lists of the connected components, each sorted, ordered by minimum."""
    seen: set[int] = set()
    comps = []
    for v in range(g.n):
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for w in g.adj[x]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(sorted(comp))
    return comps


def induced_subgraph(g: LabeledGraph, vertices: Iterable[int]) -> LabeledGraph:
    """Subgraph induced by the given vertices, renumbered densely in sorted order."""
    verts = sorted(set(vertices))
    remap = {v: i for i, v in enumerate(verts)}
    edges = [
        (remap[u], remap[v])
        for u, v in itertools.combinations(verts, 2)
        if v in g.adj[u]
    ]
    return LabeledGraph.from_edges(len(verts), edges, [g.labels[v] for v in verts])
