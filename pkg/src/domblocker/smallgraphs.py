"""Small-graph corpora for exhaustive verification sweeps.

Enumeration up to isomorphism uses orbit marking over edge-set bitmasks: scan
all labeled graphs in mask order; each unseen connected mask starts a new
class, and its whole isomorphism orbit (all vertex permutations applied to the
edge slots) is marked seen. Feasible through n = 7 (2^21 masks); results are
cached per process. Random generators are deterministic per seed.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from .graphs import GraphError, LabeledGraph

MAX_EXHAUSTIVE_N = 7

_PAIRS = {n: list(itertools.combinations(range(n), 2)) for n in range(MAX_EXHAUSTIVE_N + 1)}


def _edge_permutations(n: int) -> list[list[int]]:
    pairs = _PAIRS[n]
    index = {p: k for k, p in enumerate(pairs)}
    perms = []
    for perm in itertools.permutations(range(n)):
        perms.append([index[tuple(sorted((perm[i], perm[j])))] for i, j in pairs])
    return perms


def _mask_connected(n: int, mask: int) -> bool:
    adj = [0] * n
    for k, (i, j) in enumerate(_PAIRS[n]):
        if mask >> k & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        m = frontier
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            reach |= adj[v]
        frontier = reach & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def _mask_to_graph(n: int, mask: int) -> LabeledGraph:
    edges = [p for k, p in enumerate(_PAIRS[n]) if mask >> k & 1]
    return LabeledGraph.from_edges(n, edges)


@lru_cache(maxsize=None)
def _canonical_masks(n: int, connected_only: bool) -> tuple[int, ...]:
    if not 1 <= n <= MAX_EXHAUSTIVE_N:
        raise GraphError(f"exhaustive enumeration supports 1..{MAX_EXHAUSTIVE_N} vertices")
    slots = len(_PAIRS[n])
    perms = _edge_permutations(n)
    seen = bytearray(1 << slots)
    representatives = []
    for mask in range(1 << slots):
        if seen[mask]:
            continue
        if connected_only and not _mask_connected(n, mask):
            continue
        representatives.append(mask)
        for perm in perms:
            image = 0
            m = mask
            while m:
                k = (m & -m).bit_length() - 1
                m &= m - 1
                image |= 1 << perm[k]
            seen[image] = 1
    return tuple(representatives)


def connected_graphs(n: int) -> list[LabeledGraph]:
    """All connected graphs on n vertices, one per isomorphism class."""
    return [_mask_to_graph(n, m) for m in _canonical_masks(n, True)]


def all_graphs(n: int) -> list[LabeledGraph]:
    """All graphs on n vertices (connected or not), one per isomorphism class."""
    return [_mask_to_graph(n, m) for m in _canonical_masks(n, False)]


def connected_graphs_upto(max_n: int) -> list[LabeledGraph]:
    out = []
    for n in range(1, max_n + 1):
        out.extend(connected_graphs(n))
    return out


def random_connected_graph(n: int, rng: random.Random, extra_edge_prob: float = 0.25) -> LabeledGraph:
    """Random connected graph: a random spanning tree plus random extra edges."""
    if n < 1:
        raise GraphError("need at least one vertex")
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        attach = order[rng.randrange(i)]
        edges.add(tuple(sorted((order[i], attach))))
    for pair in itertools.combinations(range(n), 2):
        if pair not in edges and rng.random() < extra_edge_prob:
            edges.add(pair)
    return LabeledGraph.from_edges(n, sorted(edges))


def random_degree23_graph(n: int, rng: random.Random, max_chords: int = 3) -> LabeledGraph:
    """Random connected graph with every degree in {2,3}: a cycle plus up to
    max_chords disjoint chords between non-adjacent vertices."""
    if n < 4:
        raise GraphError("need at least 4 vertices for a chorded cycle")
    edges = {(i, (i + 1) % n) for i in range(n)}
    edges = {tuple(sorted(e)) for e in edges}
    degree = {v: 2 for v in range(n)}
    wanted = rng.randrange(0, max_chords + 1)
    attempts = 0
    added = 0
    while added < wanted and attempts < 200:
        attempts += 1
        a, b = rng.sample(range(n), 2)
        e = tuple(sorted((a, b)))
        if degree[a] == 3 or degree[b] == 3 or e in edges:
            continue
        edges.add(e)
        degree[a] += 1
        degree[b] += 1
        added += 1
    return LabeledGraph.from_edges(n, sorted(edges))
