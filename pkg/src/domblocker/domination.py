"""Exact domination number, minimum-dominating-set enumeration, and the
contraction-blocker deciders built on top of them.

The solver is a branch-and-bound over "which vertex dominates the most
constrained undominated vertex": it branches over the closed neighborhood of
an undominated vertex with the fewest live dominators, excluding already-tried
candidates from the subtrees so the leaves partition the solution space. The
lower bound combines a greedy packing of pairwise-disjoint live-dominator sets
with a fractional dual (each undominated vertex contributes 1/c where c is the
best coverage any single candidate could give it). Optimize mode additionally
applies the standard exact reductions (forced unique dominators, candidate
dominance, element dominance) and solves decoupled residual components
independently; enumeration mode keeps only the reductions that preserve the
full solution set, so it visits every minimum dominating set exactly once.

Everything is deterministic: ties break toward the lowest vertex id.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .graphs import GraphError, LabeledGraph


class BudgetExceeded(Exception):
    """The solver ran out of its search-node budget before finishing."""

    def __init__(self, nodes: int):
        super().__init__(f"solver budget exceeded after {nodes} nodes")
        self.nodes = nodes


@dataclass(frozen=True)
class GammaResult:
    gamma: int
    witness: frozenset[int]


@dataclass(frozen=True)
class Decision:
    """Yes/no verdict with an optional counterexample or witness payload."""

    holds: bool
    witness: Optional[object] = None


CT_IMPOSSIBLE = "impossible"


# -- set predicates -----------------------------------------------------------


def is_dominating(g: LabeledGraph, s: frozenset[int] | set[int]) -> bool:
    """True iff the union of closed neighborhoods over s covers every vertex."""
    masks = g.closed_masks
    covered = 0
    for v in s:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
        covered |= masks[v]
    return covered == (1 << g.n) - 1


def is_independent(g: LabeledGraph, s: frozenset[int] | set[int]) -> bool:
    members = sorted(s)
    for i, u in enumerate(members):
        for v in members[i + 1 :]:
            if g.has_edge(u, v):
                return False
    return True


def is_efficient(g: LabeledGraph, s: frozenset[int] | set[int]) -> bool:
    """True iff every vertex has exactly one dominator in its closed neighborhood."""
    for v in range(g.n):
        count = (1 if v in s else 0) + sum(1 for w in g.adj[v] if w in s)
        if count != 1:
            return False
    return True


def set_edges(g: LabeledGraph, s: frozenset[int] | set[int]) -> list[tuple[int, int]]:
    """Edges internal to s, sorted."""
    members = sorted(s)
    return [
        (u, v)
        for i, u in enumerate(members)
        for v in members[i + 1 :]
        if g.has_edge(u, v)
    ]


# -- the solver core -----------------------------------------------------------


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _Search:
    """Shared machinery for the optimizer and the enumerator."""

    def __init__(self, g: LabeledGraph, budget: Optional[int]):
        self.g = g
        self.nb = g.closed_masks
        self.n = g.n
        self.full = (1 << g.n) - 1
        self.budget = budget
        self.nodes = 0
        two = []
        for v in range(g.n):
            reach = 0
            for w in _bits(self.nb[v]):
                reach |= self.nb[w]
            two.append(reach)
        self.two = two

    def tick(self):
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceeded(self.nodes)

    def greedy_cover(self) -> list[int]:
        """Greedy max-coverage dominating set; the initial upper bound."""
        und = self.full
        chosen = []
        while und:
            best_v, best_gain = -1, 0
            for v in range(self.n):
                gain = (self.nb[v] & und).bit_count()
                if gain > best_gain:
                    best_gain, best_v = gain, v
            chosen.append(best_v)
            und &= ~self.nb[best_v]
        return chosen

    def lower_bound(self, und: int, avail: int) -> int:
        nb = self.nb
        order = []
        for v in _bits(und):
            live = nb[v] & avail
            if not live:
                return self.n + 1  # this vertex can never be dominated
            order.append((live.bit_count(), v, live))
        order.sort()
        blocked = 0
        packed = 0
        for _, _, live in order:
            if not live & blocked:
                packed += 1
                blocked |= live
        # fractional dual: weight 1/c_v where c_v is the best single-candidate
        # coverage available to v; feasible because each candidate's weights
        # then sum to at most 1.
        maxcov = {}
        for x in _bits(avail):
            cov = nb[x] & und
            c = cov.bit_count()
            if not c:
                continue
            for v in _bits(cov):
                if maxcov.get(v, 0) < c:
                    maxcov[v] = c
        total = 0.0
        for v in _bits(und):
            total += 1.0 / maxcov[v]
        return max(packed, math.ceil(total - 1e-9))

    def split_components(self, und: int) -> list[int]:
        """Partition und into masks no candidate can cover across.

        Uses the static two-hop reachability, which can only over-merge
        (sound: summing exact optima over the parts stays exact).
        """
        comps = []
        rest = und
        while rest:
            comp = rest & -rest
            frontier = comp
            while frontier:
                reach = 0
                for v in _bits(frontier):
                    reach |= self.two[v]
                frontier = reach & und & ~comp
                comp |= frontier
            comps.append(comp)
            rest ^= comp
        return comps


class _Optimizer(_Search):
    def reduce(self, und: int, avail: int) -> Optional[tuple[int, int, int]]:
        """Apply value-preserving reductions; returns (forced, und, avail) or None."""
        nb = self.nb
        changed = True
        forced = 0
        while changed:
            changed = False
            for v in _bits(und):
                if not und & (1 << v):
                    continue  # removed by an earlier forced take in this pass
                live = nb[v] & avail
                if not live:
                    return None
                if not live & (live - 1):
                    d = live.bit_length() - 1
                    forced |= live
                    und &= ~nb[d]
                    avail &= ~live
                    changed = True
            if not und:
                break
            # candidate dominance: y is useless if some kept x covers a superset
            for y in _bits(avail):
                if not avail & (1 << y):
                    continue
                cy = nb[y] & und
                if not cy:
                    avail &= ~(1 << y)
                    changed = True
                    continue
                for x in _bits(self.two[y] & avail):
                    if x == y:
                        continue
                    cx = nb[x] & und
                    if cy & ~cx:
                        continue
                    if cy != cx or x < y:
                        avail &= ~(1 << y)
                        changed = True
                        break
            # element dominance: v is automatically dominated once u is
            for v in _bits(und):
                if not und & (1 << v):
                    continue
                lv = nb[v] & avail
                for u in _bits(self.two[v] & und):
                    if u == v:
                        continue
                    lu = nb[u] & avail
                    if lu & ~lv:
                        continue
                    if lu != lv or u < v:
                        und &= ~(1 << v)
                        changed = True
                        break
        return forced, und, avail

    def min_dominating(self, und: int, avail: int, limit: int) -> Optional[tuple[int, int]]:
        """Exact minimum (size, mask) dominating und from avail, or None if > limit."""
        if not und:
            return (0, 0)
        if limit <= 0:
            return None
        red = self.reduce(und, avail)
        if red is None:
            return None
        forced, und, avail = red
        k = forced.bit_count()
        if k > limit:
            return None
        if not und:
            return (k, forced)
        comps = self.split_components(und)
        if len(comps) == 1:
            sub = self.solve_component(und, avail, limit - k)
            if sub is None:
                return None
            return (sub[0] + k, sub[1] | forced)
        bounds = [self.lower_bound(c, avail) for c in comps]
        remaining = sum(bounds)
        if remaining > limit - k:
            return None
        total, mask = 0, 0
        for comp, bound in zip(comps, bounds):
            remaining -= bound
            sub = self.solve_component(comp, avail, limit - k - total - remaining)
            if sub is None:
                return None
            total += sub[0]
            mask |= sub[1]
        return (total + k, mask | forced)

    def solve_component(self, und: int, avail: int, limit: int) -> Optional[tuple[int, int]]:
        self.tick()
        if not und:
            return (0, 0)
        if limit <= 0:
            return None
        if self.lower_bound(und, avail) > limit:
            return None
        # branch over the live dominators of the most constrained vertex
        best_count, branch_live = self.n + 2, 0
        for v in _bits(und):
            live = self.nb[v] & avail
            c = live.bit_count()
            if c < best_count:
                best_count, branch_live = c, live
                if c == 1:
                    break
        best: Optional[tuple[int, int]] = None
        sub_avail = avail
        for v in _bits(branch_live):
            sub_avail &= ~(1 << v)
            cap = (limit if best is None else best[0] - 1) - 1
            sub = self.min_dominating(und & ~self.nb[v], sub_avail, cap)
            if sub is not None:
                candidate = (sub[0] + 1, sub[1] | (1 << v))
                if best is None or candidate[0] < best[0]:
                    best = candidate
        return best

    def run(self, hint: Optional[frozenset[int]] = None) -> tuple[int, frozenset[int]]:
        greedy = self.greedy_cover()
        best_size = len(greedy)
        best_mask = 0
        for v in greedy:
            best_mask |= 1 << v
        if hint is not None and len(hint) < best_size:
            covered = 0
            for v in hint:
                covered |= self.nb[v]
            if covered == self.full:
                best_size = len(hint)
                best_mask = 0
                for v in hint:
                    best_mask |= 1 << v
        improved = self.min_dominating(self.full, self.full, best_size - 1)
        if improved is not None:
            best_size, best_mask = improved
        return best_size, frozenset(_bits(best_mask))


class _Enumerator(_Search):
    """Visits every dominating set of size exactly gamma, each exactly once.

    Only solution-preserving reductions are used: forced unique dominators
    (every remaining solution must contain them) and element dominance
    (dropping an automatically-dominated vertex loses no solutions). Candidate
    dominance and component decomposition would merge or reorder solutions,
    so they stay out.
    """

    def __init__(self, g: LabeledGraph, gamma: int, budget: Optional[int]):
        super().__init__(g, budget)
        self.gamma = gamma

    def reduce(self, und: int, avail: int) -> Optional[tuple[int, int, int]]:
        nb = self.nb
        changed = True
        forced = 0
        while changed:
            changed = False
            for v in _bits(und):
                if not und & (1 << v):
                    continue
                live = nb[v] & avail
                if not live:
                    return None
                if not live & (live - 1):
                    d = live.bit_length() - 1
                    forced |= live
                    und &= ~nb[d]
                    avail &= ~live
                    changed = True
            if not und:
                break
            for v in _bits(und):
                if not und & (1 << v):
                    continue
                lv = nb[v] & avail
                for u in _bits(self.two[v] & und):
                    if u == v:
                        continue
                    lu = nb[u] & avail
                    if lu & ~lv:
                        continue
                    if lu != lv or u < v:
                        und &= ~(1 << v)
                        changed = True
                        break
        return forced, und, avail

    def visit_all(self, emit: Callable[[frozenset[int]], bool]) -> bool:
        """Runs the search; emit returns False to stop early. Returns completion."""
        return self._rec(0, self.full, self.full, emit)

    def _rec(self, chosen: int, und: int, avail: int, emit) -> bool:
        self.tick()
        red = self.reduce(und, avail)
        if red is None:
            return True
        forced, und, avail = red
        chosen |= forced
        size = chosen.bit_count()
        if size > self.gamma:
            return True
        if not und:
            if size == self.gamma:
                return emit(frozenset(_bits(chosen)))
            # a dominating set smaller than gamma cannot exist; padding a
            # smaller one with unused vertices would not dominate "exactly
            # once" semantics, and minimality forbids it anyway
            return True
        if size + self.lower_bound(und, avail) > self.gamma:
            return True
        best_count, branch_live = self.n + 2, 0
        for v in _bits(und):
            live = self.nb[v] & avail
            c = live.bit_count()
            if c < best_count:
                best_count, branch_live = c, live
                if c == 1:
                    break
        sub_avail = avail
        for v in _bits(branch_live):
            sub_avail &= ~(1 << v)
            if not self._rec(chosen | (1 << v), und & ~self.nb[v], sub_avail, emit):
                return False
        return True


# -- public operations ---------------------------------------------------------


def domination_number(
    g: LabeledGraph,
    budget: Optional[int] = None,
    hint: Optional[frozenset[int]] = None,
) -> GammaResult:
    """Exact domination number with a witness minimum dominating set.

    ``hint`` may carry a known dominating set used as the initial upper bound;
    optimality is proved by the search either way. Connectivity not required.
    """
    if g.n == 0:
        raise GraphError("domination number of the empty graph is undefined")
    size, witness = _Optimizer(g, budget).run(hint)
    return GammaResult(size, witness)


def visit_minimum_dominating_sets(
    g: LabeledGraph,
    visitor: Callable[[frozenset[int]], bool],
    budget: Optional[int] = None,
    gamma: Optional[int] = None,
) -> int:
    """Stream every minimum dominating set to the visitor, which returns False
    to stop early. Order is the deterministic search-tree order (not sorted);
    each set is visited exactly once. Returns gamma."""
    if gamma is None:
        gamma = domination_number(g, budget).gamma
    _Enumerator(g, gamma, budget).visit_all(visitor)
    return gamma


def enumerate_minimum_dominating_sets(
    g: LabeledGraph, budget: Optional[int] = None
) -> Iterator[frozenset[int]]:
    """Yield every minimum dominating set, in lexicographic order of sorted members."""
    found: list[frozenset[int]] = []

    def grab(s: frozenset[int]) -> bool:
        found.append(s)
        return True

    visit_minimum_dominating_sets(g, grab, budget)
    yield from sorted(found, key=sorted)


def all_efficient_md(g: LabeledGraph, budget: Optional[int] = None) -> Decision:
    """Is every minimum dominating set efficient? Witness: a non-efficient MDS."""
    if not g.is_connected():
        raise GraphError("decider requires a connected graph")
    bad: list[frozenset[int]] = []

    def check(s: frozenset[int]) -> bool:
        if not is_efficient(g, s):
            bad.append(s)
            return False
        return True

    visit_minimum_dominating_sets(g, check, budget)
    return Decision(not bad, bad[0] if bad else None)


def all_independent_md(g: LabeledGraph, budget: Optional[int] = None) -> Decision:
    """Is every minimum dominating set independent? Witness: a non-independent MDS."""
    if not g.is_connected():
        raise GraphError("decider requires a connected graph")
    bad: list[frozenset[int]] = []

    def check(s: frozenset[int]) -> bool:
        if not is_independent(g, s):
            bad.append(s)
            return False
        return True

    visit_minimum_dominating_sets(g, check, budget)
    return Decision(not bad, bad[0] if bad else None)


def one_contraction_decision(g: LabeledGraph, budget: Optional[int] = None) -> Decision:
    """Can a single edge contraction decrease the domination number?

    Decided through the classical characterization: one contraction suffices
    exactly when some minimum dominating set contains an edge. The witness is
    an internal edge of such a set (contracting it merges two dominators).
    """
    if not g.is_connected():
        raise GraphError("contraction decision requires a connected graph")
    gamma = domination_number(g, budget).gamma
    if gamma == 1:
        return Decision(False)
    verdict = all_independent_md(g, budget)
    if verdict.holds:
        return Decision(False)
    witness_set = verdict.witness
    edge = set_edges(g, witness_set)[0]
    return Decision(True, edge)


def one_contraction_definitional(g: LabeledGraph, budget: Optional[int] = None) -> Decision:
    """Ground-truth oracle: contract each edge in turn and compare gammas."""
    if not g.is_connected():
        raise GraphError("contraction decision requires a connected graph")
    gamma = domination_number(g, budget).gamma
    for u, v in g.edges():
        contracted = g.contract_edge(u, v)
        if domination_number(contracted, budget).gamma < gamma:
            return Decision(True, (u, v))
    return Decision(False)


def can_k_contract(g: LabeledGraph, k: int, budget: Optional[int] = None) -> bool:
    """Decision view: can at most k contractions decrease the domination number?"""
    return ct_gamma(g, max_k=k, budget=budget) != CT_IMPOSSIBLE


def ct_gamma(g: LabeledGraph, max_k: int = 3, budget: Optional[int] = None) -> int | str:
    """Minimum number of contractions decreasing gamma, searching depth <= max_k.

    Returns CT_IMPOSSIBLE when gamma(g) = 1 (no contraction sequence can ever
    help) or when no sequence within max_k succeeds; for connected graphs with
    gamma >= 2 and max_k = 3 the classical bound guarantees a numeric answer.
    """
    if not 1 <= max_k <= 3:
        raise GraphError(f"max_k must be in 1..3, got {max_k}")
    if not g.is_connected():
        raise GraphError("contraction search requires a connected graph")
    gamma = domination_number(g, budget).gamma
    if gamma == 1:
        return CT_IMPOSSIBLE
    level = {_adjacency_key(g): g}
    for k in range(1, max_k + 1):
        next_level: dict = {}
        for h in level.values():
            for u, v in h.edges():
                contracted = h.contract_edge(u, v)
                if domination_number(contracted, budget).gamma <= gamma - 1:
                    return k
                if k < max_k:
                    next_level.setdefault(_adjacency_key(contracted), contracted)
        level = next_level
    return CT_IMPOSSIBLE


def _adjacency_key(g: LabeledGraph) -> tuple:
    return (g.n, tuple(g.edges()))


# -- blocker report --------------------------------------------------------------


@dataclass(frozen=True)
class BlockerReport:
    gamma: int
    gamma_witness: frozenset[int]
    one_contraction: Decision
    all_efficient: Decision
    all_independent: Decision
    ct: int | str  # 1 | 2 | 3 | CT_IMPOSSIBLE | "unknown" (budget ran out)

    def to_json_dict(self) -> dict:
        witnesses: dict = {"gamma_witness": sorted(self.gamma_witness)}
        if self.one_contraction.holds:
            witnesses["one_contraction_edge"] = list(self.one_contraction.witness)
        if not self.all_efficient.holds:
            witnesses["non_efficient_mds"] = sorted(self.all_efficient.witness)
        if not self.all_independent.holds:
            witnesses["non_independent_mds"] = sorted(self.all_independent.witness)
        return {
            "gamma": self.gamma,
            "one_contraction": "yes" if self.one_contraction.holds else "no",
            "all_efficient": "yes" if self.all_efficient.holds else "no",
            "all_independent": "yes" if self.all_independent.holds else "no",
            "ct_gamma": self.ct,
            "witnesses": witnesses,
        }


def blocker_report(g: LabeledGraph, budget: Optional[int] = None) -> BlockerReport:
    """Full contraction-blocker classification of a connected graph."""
    if not g.is_connected():
        raise GraphError("blocker report requires a connected graph")
    result = domination_number(g, budget)
    efficient = all_efficient_md(g, budget)
    independent = all_independent_md(g, budget)
    if result.gamma == 1:
        one = Decision(False)
        ct: int | str = CT_IMPOSSIBLE
    else:
        if independent.holds:
            one = Decision(False)
        else:
            one = Decision(True, set_edges(g, independent.witness)[0])
        try:
            ct = ct_gamma(g, max_k=3, budget=budget)
        except BudgetExceeded:
            ct = "unknown"
    return BlockerReport(result.gamma, result.witness, one, efficient, independent, ct)
