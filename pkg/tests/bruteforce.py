"""Independent brute-force oracles for the test suite.

Deliberately written against the plain set-based definitions (no bitmasks, no
pruning) so they share no code path with the package implementations they
check.
"""

import itertools

from domblocker import LabeledGraph


def closed_neighborhood(g: LabeledGraph, v):
    return set(g.adj[v]) | {v}


def dominates(g: LabeledGraph, s) -> bool:
    covered = set()
    for v in s:
        covered |= closed_neighborhood(g, v)
    return len(covered) == g.n


def brute_gamma(g: LabeledGraph) -> int:
    for k in range(0, g.n + 1):
        for subset in itertools.combinations(range(g.n), k):
            if dominates(g, subset):
                return k
    raise AssertionError("vertex set itself always dominates")


def brute_all_mds(g: LabeledGraph) -> set[frozenset]:
    gamma = brute_gamma(g)
    return {
        frozenset(s)
        for s in itertools.combinations(range(g.n), gamma)
        if dominates(g, s)
    }


def brute_has_claw(g: LabeledGraph) -> bool:
    """Any 4-subset inducing a star with three leaves."""
    for quad in itertools.combinations(range(g.n), 4):
        for center in quad:
            leaves = [v for v in quad if v != center]
            if all(g.has_edge(center, leaf) for leaf in leaves) and all(
                not g.has_edge(a, b) for a, b in itertools.combinations(leaves, 2)
            ):
                return True
    return False


def induced_is_path(g: LabeledGraph, vertices) -> bool:
    vertices = list(vertices)
    edges = [
        (a, b) for a, b in itertools.combinations(vertices, 2) if g.has_edge(a, b)
    ]
    if len(edges) != len(vertices) - 1:
        return False
    degree = {v: 0 for v in vertices}
    for a, b in edges:
        degree[a] += 1
        degree[b] += 1
    if any(d > 2 for d in degree.values()):
        return False
    seen = {vertices[0]}
    stack = [vertices[0]]
    adjacency = {v: [] for v in vertices}
    for a, b in edges:
        adjacency[a].append(b)
        adjacency[b].append(a)
    while stack:
        x = stack.pop()
        for y in adjacency[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(vertices)


def brute_has_induced_path(g: LabeledGraph, k: int) -> bool:
    if k == 1:
        return g.n >= 1
    return any(
        induced_is_path(g, subset) for subset in itertools.combinations(range(g.n), k)
    )


def brute_efficient(g: LabeledGraph, s) -> bool:
    return all(len(closed_neighborhood(g, v) & set(s)) == 1 for v in range(g.n))
