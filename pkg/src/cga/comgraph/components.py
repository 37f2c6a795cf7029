"""Connected components of class-restricted commuting graphs and their delta/Delta."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import gcd
from typing import Optional

from ..groups import (
    DEFAULT_CAP,
    ClassLabel,
    GroupSpec,
    centralizer_elements,
    class_label_of,
    in_class,
    maximal_abelian_overgroups,
)
from ..perm import Permutation, conjugate, conjugator, cycle_decomposition, power
from .graph import CommutingGraph, VertexSet
from .solvers import BudgetExhausted, clique_cover_number, exact_partition, independence_number, popcount

log = logging.getLogger(__name__)

DEFAULT_COMPONENT_BUDGET = 200_000


class ComponentTooLarge(RuntimeError):
    pass


def neighbors_in_class(v: Permutation, label: ClassLabel, spec: GroupSpec,
                       cap: int = DEFAULT_CAP) -> list:
    """Elements of the class commuting with ``v``, other than ``v`` itself."""
    return [x for x in centralizer_elements(v, spec, cap)
            if x != v and in_class(x, label, spec)]


def component_of(seed: Permutation, spec: GroupSpec, label: Optional[ClassLabel] = None,
                 cap: int = DEFAULT_CAP, budget: int = DEFAULT_COMPONENT_BUDGET,
                 with_neighbors: bool = False):
    """Breadth-first closure of ``seed`` under ``neighbors_in_class``."""
    if label is None:
        label = class_label_of(seed, spec)
    elif not in_class(seed, label, spec):
        raise ValueError(f"seed {seed} is not in class {label}")
    neighbors = {}
    seen = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for v in frontier:
            nb = neighbors_in_class(v, label, spec, cap)
            neighbors[v] = nb
            for w in nb:
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
                    if len(seen) > budget:
                        raise ComponentTooLarge(f"component exceeds {budget} elements")
        frontier = nxt
    vs = VertexSet.build(seen, seed.degree, label)
    if with_neighbors:
        return vs, neighbors
    return vs


@dataclass
class HarvestedCliques:
    cliques: list  # bitsets over the vertex set
    groups: list  # SubgroupGens, maximal abelian, aligned with cliques


def harvest_cliques(vs: VertexSet, spec: GroupSpec, cap: int = DEFAULT_CAP) -> HarvestedCliques:
    """(maximal abelian subgroup) & vertex set, for every maximal abelian subgroup
    containing some vertex. Every maximal clique of the commuting graph arises."""
    pos = vs.index()
    found: dict = {}
    done_cyclic = set()
    for v in vs.elements:
        # generators of the same cyclic group share a centralizer
        order = 1
        for c in cycle_decomposition(v):
            order = order * len(c) // gcd(order, len(c))
        key = frozenset(power(v, k).images for k in range(1, order) if gcd(k, order) == 1)
        if key in done_cyclic:
            continue
        done_cyclic.add(key)
        for grp in maximal_abelian_overgroups(v, spec, cap):
            b = 0
            for e in grp.cached:
                i = pos.get(e)
                if i is not None:
                    b |= 1 << i
            if b and b not in found:
                found[b] = grp
    cliques = sorted(found, key=lambda b: (-popcount(b), b))
    return HarvestedCliques(cliques, [found[b] for b in cliques])


@dataclass
class ComponentAnalysis:
    component: VertexSet
    delta: int
    Delta: int
    independent_certificate: list  # Permutations
    cover_certificate: list  # SubgroupGens
    delta_exact: bool
    Delta_exact: bool
    edges: int = 0
    notes: list = field(default_factory=list)

    @property
    def certified(self) -> bool:
        return self.delta_exact and self.Delta_exact

    @property
    def status(self) -> str:
        return "certified" if self.certified else "bounds"

    @property
    def bounds(self) -> tuple:
        return (self.delta, self.Delta)

    def __post_init__(self):
        if self.delta > self.Delta:
            raise AssertionError(f"delta {self.delta} > Delta {self.Delta}")


def analyze_vertex_set(vs: VertexSet, spec: GroupSpec, graph: CommutingGraph = None,
                       cap: int = DEFAULT_CAP, budget: int = 5_000_000) -> ComponentAnalysis:
    """delta and Delta of a vertex set with certificates (sandwich strategy)."""
    if graph is None:
        graph = CommutingGraph.build(vs)
    adj = graph.adj
    harvested = harvest_cliques(vs, spec, cap)
    universe = (1 << len(vs)) - 1
    cover = clique_cover_number(adj, harvested.cliques, budget=budget)
    mis = independence_number(adj, budget=budget, upper=cover.value)
    if cover.value > mis.value and mis.exact:
        cover = clique_cover_number(adj, harvested.cliques, lower=mis.value, budget=budget)
    delta_exact = mis.exact or mis.value == cover.value
    Delta_exact = cover.exact or mis.value == cover.value
    cover_groups = [harvested.groups[i] for i in cover.certificate]
    covered = 0
    for i in cover.certificate:
        covered |= harvested.cliques[i]
    if covered != universe:
        raise AssertionError("cover certificate does not cover the vertex set")
    return ComponentAnalysis(
        component=vs,
        delta=mis.value,
        Delta=cover.value,
        independent_certificate=[vs.elements[i] for i in sorted(mis.certificate)],
        cover_certificate=cover_groups,
        delta_exact=delta_exact,
        Delta_exact=Delta_exact,
        edges=graph.edge_count(),
    )


def analyze_component(seed: Permutation, spec: GroupSpec, label: Optional[ClassLabel] = None,
                      cap: int = DEFAULT_CAP, budget: int = 5_000_000) -> ComponentAnalysis:
    vs, nbrs = component_of(seed, spec, label, cap, with_neighbors=True)
    graph = CommutingGraph.from_neighbors(vs, nbrs)
    return analyze_vertex_set(vs, spec, graph, cap, budget)


# ------------------------------------------------ 2k-2k-l structure

@dataclass
class StructureReport:
    label: str
    degree: int
    k: int
    ell: Optional[int]
    hypotheses_ok: bool
    hypothesis_notes: list
    component_size: int = 0
    pairs_checked: int = 0
    ell_power_ok: bool = True
    equal_support_ok: bool = True
    partition_ok: bool = True
    partition: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.hypotheses_ok and self.ell_power_ok and self.equal_support_ok and self.partition_ok


def _shape_2k2kl(label: ClassLabel, n: int):
    parts = list(label.cycle_type.parts)
    notes = []
    for p in set(parts):
        if p % 2 == 0 and parts.count(p) == 2:
            k = p // 2
            rest = list(parts)
            rest.remove(p)
            rest.remove(p)
            if not rest:
                if n != 4 * k:
                    notes.append(f"2k-2k shape needs n = 4k = {4 * k}, got n = {n}")
                return k, None, notes
            if len(rest) == 1:
                ell = rest[0]
                if not n - (4 * k + ell) < min(ell, 2 * k):
                    notes.append(f"n-(4k+l) = {n - 4 * k - ell} is not < min(l,2k) = {min(ell, 2 * k)}")
                if ell in (2 * k, 4 * k):
                    notes.append(f"l = {ell} equals 2k or 4k")
                return k, ell, notes
    return None, None, [f"{label} is not of shape 2k-2k-l"]


def _partition_of(g: Permutation, k: int) -> list:
    """The four k-sets on which g's two 2k-cycles act as a double transposition."""
    blocks = []
    for c in cycle_decomposition(g):
        if len(c) == 2 * k:
            blocks.append(frozenset(c[0::2]))
            blocks.append(frozenset(c[1::2]))
    return blocks


def _acts_as_double_transposition(x: Permutation, blocks: list) -> bool:
    images = []
    for b in blocks:
        img = frozenset(x.images[p] for p in b)
        if img not in blocks:
            return False
        images.append(blocks.index(img))
    moved = [i for i, j in enumerate(images) if i != j]
    return len(moved) == 4 and all(images[images[i]] == i for i in range(4))


def verify_2k2kl_structure(label: ClassLabel, spec: GroupSpec, seed: Permutation = None,
                           cap: int = DEFAULT_CAP) -> StructureReport:
    n = spec.degree
    k, ell, notes = _shape_2k2kl(label, n)
    rep = StructureReport(str(label), n, k or 0, ell, not notes, notes)
    if notes:
        return rep
    if seed is None:
        from ..groups import class_representative
        seed = class_representative(label)
    vs, nbrs = component_of(seed, spec, label, cap, with_neighbors=True)
    rep.component_size = len(vs)
    blocks = _partition_of(seed, k)
    rep.partition = [sorted(x + 1 for x in b) for b in blocks]
    for x in vs.elements:
        if not _acts_as_double_transposition(x, blocks):
            rep.partition_ok = False
            rep.failures.append(f"{x} does not act as a double transposition on the partition")
    for v, nb in nbrs.items():
        for w in nb:
            if not v < w:
                continue
            rep.pairs_checked += 1
            if v.support() != w.support():
                rep.equal_support_ok = False
                rep.failures.append(f"supports differ: {v} vs {w}")
            if ell is not None:
                lv = [c for c in cycle_decomposition(v) if len(c) == ell]
                lw = [c for c in cycle_decomposition(w) if len(c) == ell]
                cv = Permutation.from_cycles(lv, n)
                cw = Permutation.from_cycles(lw, n)
                if not any(power(cv, j) == cw for j in range(1, ell)):
                    rep.ell_power_ok = False
                    rep.failures.append(f"l-cycle of {w} is not a power of that of {v}")
    del rep.failures[20:]
    return rep


# ------------------------------------------------ large components (bounds)

@dataclass
class LargeComponentBounds:
    """Bounds for a component too big for the exact bitset solvers.

    ``delta_lower`` comes with an explicit non-commuting set; ``Delta_upper``
    with an explicit cover; ``Delta_lower`` is |component| / largest clique,
    where cliques are (maximal abelian subgroup) & component, which includes
    every maximal clique. ``delta <= Delta`` holds throughout.
    """
    component: VertexSet
    delta_lower: int
    Delta_lower: int
    Delta_upper: int
    max_clique: int
    independent_certificate: list
    cover_certificate: list  # element lists, one per clique
    edges: int = 0

    @property
    def certified(self) -> bool:
        return self.delta_lower == self.Delta_upper

    @property
    def status(self) -> str:
        return "certified" if self.certified else "bounds"


def _sparse_greedy_independent(nbrs: list) -> list:
    """Minimum-degree greedy independent set on adjacency sets (indices)."""
    import heapq
    alive = [True] * len(nbrs)
    degree = [len(a) for a in nbrs]
    heap = [(d, i) for i, d in enumerate(degree)]
    heapq.heapify(heap)
    chosen = []
    while heap:
        d, v = heapq.heappop(heap)
        if not alive[v] or d != degree[v]:
            continue
        chosen.append(v)
        alive[v] = False
        removed = [u for u in nbrs[v] if alive[u]]
        for u in removed:
            alive[u] = False
        for u in removed:
            for w in nbrs[u]:
                if alive[w]:
                    degree[w] -= 1
                    heapq.heappush(heap, (degree[w], w))
    return sorted(chosen)


def _greedy_cover(m: int, cliques) -> list:
    """Largest-gain-first greedy cover (lazy re-scoring), canonical tie-break."""
    import heapq
    covered = [False] * m
    heap = [(-len(c), sorted(c)) for c in cliques]
    heapq.heapify(heap)
    cover, left = [], m
    while left:
        neg, c = heapq.heappop(heap)
        gain = sum(1 for i in c if not covered[i])
        if gain < -neg:
            if gain:
                heapq.heappush(heap, (-gain, c))
            continue
        cover.append(c)
        for i in c:
            if not covered[i]:
                covered[i] = True
                left -= 1
    return cover


def _sparse_two_improvements(nbrs: list, chosen: list, max_rounds: int = 50) -> list:
    """(1,2)-swaps: drop one chosen vertex, add two non-adjacent vertices whose
    only chosen neighbour it was. Repeats until no swap applies."""
    inside = [False] * len(nbrs)
    for v in chosen:
        inside[v] = True
    tight = [0] * len(nbrs)  # number of chosen neighbours
    for v in chosen:
        for u in nbrs[v]:
            tight[u] += 1
    for _ in range(max_rounds):
        improved = False
        for x in range(len(nbrs)):
            if not inside[x]:
                continue
            free = sorted(u for u in nbrs[x] if not inside[u] and tight[u] == 1)
            pair = None
            for i, a in enumerate(free):
                for b in free[i + 1:]:
                    if b not in nbrs[a]:
                        pair = (a, b)
                        break
                if pair:
                    break
            if pair is None:
                continue
            inside[x] = False
            for u in nbrs[x]:
                tight[u] -= 1
            for a in pair:
                inside[a] = True
                for u in nbrs[a]:
                    tight[u] += 1
            # neighbours of x left with no chosen neighbour join as well
            for u in sorted(nbrs[x]):
                if not inside[u] and tight[u] == 0:
                    inside[u] = True
                    for w in nbrs[u]:
                        tight[w] += 1
            improved = True
        if not improved:
            break
    return [v for v in range(len(nbrs)) if inside[v]]


def analyze_large_component(seed: Permutation, spec: GroupSpec, label: Optional[ClassLabel] = None,
                            cap: int = DEFAULT_CAP, budget: int = 10**6,
                            partition_budget: int = 2_000_000) -> LargeComponentBounds:
    """Bounds on delta/Delta for a big component of an unsplit class.

    Conjugation by ``s`` with ``s seed s^-1 = v`` carries the maximal abelian
    subgroups through ``seed`` onto those through ``v``, so one overgroup
    computation serves every vertex.
    """
    if label is None:
        label = class_label_of(seed, spec)
    if label.split_tag is not None:
        raise ValueError("large-component bounds need a class that does not split")
    vs, nb = component_of(seed, spec, label, cap, budget=budget, with_neighbors=True)
    pos = vs.index()
    nbrs = [set() for _ in vs.elements]
    for v, ws in nb.items():
        i = pos[v]
        for w in ws:
            nbrs[i].add(pos[w])
    edges = sum(len(a) for a in nbrs) // 2
    base = []
    for grp in maximal_abelian_overgroups(seed, spec, cap):
        members = [x for x in grp.cached if in_class(x, label, spec)]
        base.append(members)
    cliques = set()
    for v in vs.elements:
        s = conjugator(seed, v)
        for members in base:
            c = frozenset(pos[conjugate(x, s)] for x in members)
            cliques.add(c)
    omega = max(len(c) for c in cliques)
    delta_lower_set = _sparse_two_improvements(nbrs, _sparse_greedy_independent(nbrs))
    m = len(vs)
    cover = None
    if m % omega == 0:
        # a cover meeting the |V|/omega bound is a partition into maximum cliques
        biggest = sorted(sorted(c) for c in cliques if len(c) == omega)
        try:
            hit = exact_partition(m, biggest, budget=partition_budget)
        except BudgetExhausted:
            hit = None
        if hit is not None:
            cover = [biggest[i] for i in hit]
    if cover is None:
        cover = _greedy_cover(m, cliques)
    res = LargeComponentBounds(
        component=vs,
        delta_lower=len(delta_lower_set),
        Delta_lower=-(-m // omega),
        Delta_upper=len(cover),
        max_clique=omega,
        independent_certificate=[vs.elements[i] for i in delta_lower_set],
        cover_certificate=[[vs.elements[i] for i in c] for c in cover],
        edges=edges,
    )
    if res.delta_lower > res.Delta_upper:
        raise AssertionError("independent set larger than a cover")
    return res
