"""Class slices with fixed long cycles, their structural abelian covers, and the
search for pairwise non-commuting representatives of a family of subgroups.

Even kind (n = 12 or even n >= 16): elements of type 2-3-(n-8) whose
(n-8)-cycle is gamma = (9,...,n). Odd kind (odd n >= 21): type 2-3-8-(n-16)
with 8-cycle gamma = (9,...,16) and (n-16)-cycle theta = (17,...,n). The short
cycles always live on the free points 1..8.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import gcd
from typing import Optional

from ..groups import SubgroupGens, is_abelian
from ..perm import Permutation, compose, parse_cycles, power, render_cycles
from .graph import CommutingGraph, VertexSet, commute_raw
from .solvers import max_clique

FREE_POINTS = tuple(range(8))


class InvalidSliceDegree(ValueError):
    pass


def check_kind(kind: str, n: int) -> None:
    if kind == "even":
        if not (n == 12 or (n % 2 == 0 and n >= 16)):
            raise InvalidSliceDegree(f"even kind needs n = 12 or even n >= 16, got {n}")
    elif kind == "odd":
        if not (n % 2 == 1 and n >= 21):
            raise InvalidSliceDegree(f"odd kind needs odd n >= 21, got {n}")
    else:
        raise ValueError(f"unknown kind {kind!r}")


def long_cycles(kind: str, n: int) -> list:
    check_kind(kind, n)
    if kind == "even":
        return [Permutation.from_cycles([range(8, n)], n)]
    return [Permutation.from_cycles([range(8, 16)], n), Permutation.from_cycles([range(16, n)], n)]


def _product(perms, n: int) -> Permutation:
    out = Permutation.identity(n)
    for p in perms:
        out = compose(out, p)
    return out


def _long_powers(kind: str, n: int, power_closed: bool) -> list:
    longs = long_cycles(kind, n)
    if not power_closed:
        return [_product(longs, n)]
    choices = [[]]
    for c in longs:
        m = len(c.support())
        choices = [prev + [power(c, j)] for prev in choices for j in range(1, m) if gcd(j, m) == 1]
    return [_product(ch, n) for ch in choices]


def short_parts(n: int):
    """All (2-cycle, 3-cycle) pairs on the free points, as permutations of degree n."""
    for pair in combinations(FREE_POINTS, 2):
        rest = [p for p in FREE_POINTS if p not in pair]
        for tri in combinations(rest, 3):
            for cyc in (tri, (tri[0], tri[2], tri[1])):
                yield Permutation.from_cycles([pair, cyc], n)


def slice_vertices(kind: str, n: int, power_closed: bool = False) -> VertexSet:
    """The strict slice (long cycles exactly gamma[, theta]) or its power-closed
    candidate set (gamma^j[, theta^i] with exponents coprime to the lengths)."""
    tails = _long_powers(kind, n, power_closed)
    elems = [compose(s, t) for t in tails for s in short_parts(n)]
    desc = ("power-closed " if power_closed else "") + ("Cl_gamma" if kind == "even" else "Cl_gamma,theta")
    return VertexSet.build(elems, n, slice=desc)


def slice_count(kind: str, n: int) -> int:
    """Size of the strict slice from the class-size formula on the 8 free points."""
    check_kind(kind, n)
    from ..groups import ClassLabel, GroupSpec, class_size
    from ..perm import CycleType
    return class_size(ClassLabel(CycleType([3, 2], 8)), GroupSpec.sym(8))


def max_commuting_subset_in_slice(vs: VertexSet, budget: int = 5_000_000) -> tuple:
    """Exact maximum clique of the slice's commuting graph: (size, members)."""
    graph = CommutingGraph.build(vs)
    res = max_clique(graph.adj, budget=budget)
    if not res.exact:
        raise RuntimeError("maximum clique search ran out of budget")
    return res.value, [vs.elements[i] for i in res.certificate]


@dataclass
class CoverFamily:
    description: str
    members: list  # SubgroupGens


def structural_cover_family(kind: str, n: int) -> CoverFamily:
    """All groups <a, b, c, long cycles> with a a 2-cycle and b, c 3-cycles,
    pairwise disjoint on the free points."""
    longs = long_cycles(kind, n)
    members = []
    for pair in combinations(FREE_POINTS, 2):
        rest = [p for p in FREE_POINTS if p not in pair]
        for tri in combinations(rest, 3):
            other = tuple(p for p in rest if p not in tri)
            if tri > other:
                continue
            gens = [Permutation.from_cycles([pair], n), Permutation.from_cycles([tri], n),
                    Permutation.from_cycles([other], n)] + longs
            members.append(SubgroupGens(n, gens))
    names = "a,b,c,gamma" if kind == "even" else "a,b,c,gamma,theta"
    return CoverFamily(f"<{names}> over all disjoint 2-cycle a and 3-cycles b, c on points 1..8", members)


def members_meeting(family: CoverFamily, vs: VertexSet) -> list:
    """For each member, the slice elements it contains."""
    pool = set(vs.elements)
    out = []
    for m in family.members:
        out.append(sorted(e for e in m.elements() if e in pool))
    return out


# ------------------------------------------------ representative search

def obstruction_groups(kind: str, n: int) -> list:
    """The nine subgroups A_1..A_9 used in the contradiction, in order."""
    rows = [
        ("(1,2,3)", "(4,5,6)", "(7,8)"),
        ("(1,2,3)", "(5,7,8)", "(4,6)"),
        ("(5,7,8)", "(2,4,6)", "(1,3)"),
        ("(2,4,6)", "(1,3,5)", "(7,8)"),
        ("(1,3,5)", "(6,7,8)", "(2,4)"),
        ("(1,2,3)", "(4,7,8)", "(5,6)"),
        ("(4,7,8)", "(1,5,6)", "(2,3)"),
        ("(2,3,4)", "(1,5,6)", "(7,8)"),
        ("(2,3,4)", "(6,7,8)", "(1,5)"),
    ]
    longs = long_cycles(kind, n)
    return [SubgroupGens(n, [parse_cycles(c, n) for c in row] + longs) for row in rows]


def forced_first(kind: str, n: int) -> Permutation:
    """a_1 = (1,2,3)(7,8) times the long cycles."""
    return compose(parse_cycles("(1,2,3)(7,8)", n), _product(long_cycles(kind, n), n))


def symmetrized_groups(kind: str, n: int, count: int = 9) -> list:
    """The first ``count`` of the nine groups plus their images under (1,4)(2,5)(3,6).

    That relabelling fixes A_1 and swaps its two kinds of slice element, so a
    search over this family needs no assumption about which one is chosen.
    """
    from ..perm import conjugate
    base = obstruction_groups(kind, n)[:count]
    tau = parse_cycles("(1,4)(2,5)(3,6)", n)
    family, keys = [], set()
    for g in base + [SubgroupGens(n, [conjugate(x, tau) for x in g.generators]) for g in base]:
        k = g.key()
        if k not in keys:
            keys.add(k)
            family.append(g)
    return family


@dataclass
class RepsSearchResult:
    feasible: bool
    assignment: Optional[list]  # one element per group when feasible
    dead_ends: int = 0
    nodes: int = 0
    cache_hits: int = 0
    trace: list = field(default_factory=list)  # (partial assignment, stuck group number)
    stuck_histogram: dict = field(default_factory=dict)
    candidates_per_group: list = field(default_factory=list)
    trace_truncated: bool = False


def _cyclic_key(p: Permutation) -> frozenset:
    from ..perm import cycle_decomposition
    order = 1
    for c in cycle_decomposition(p):
        order = order * len(c) // gcd(order, len(c))
    return frozenset(power(p, k).images for k in range(1, order) if gcd(k, order) == 1)


def noncommuting_reps_search(groups: list, slice_vs: VertexSet, forced: dict = None,
                             symmetry_reduction: bool = True, trace_limit: int = 10_000) -> RepsSearchResult:
    """Pick one slice element from each group, pairwise non-commuting.

    Exhaustive backtracking in group order with forward checking; each dead
    end records the first later group left without a compatible candidate.
    Failed states are cached by the remaining groups' candidate sets, which
    is exact (the rest of the search depends on nothing else). With
    ``symmetry_reduction`` candidates generating the same cyclic subgroup are
    merged up front, since they commute with exactly the same elements.
    Group numbers in traces are 1-based.
    """
    forced = dict(forced or {})
    pool = set(slice_vs.elements)
    cands = []
    for gi, g in enumerate(groups):
        if gi in forced:
            f = forced[gi]
            if f not in g.element_set():
                raise ValueError(f"forced element {f} is not in group {gi + 1}")
            cands.append([f])
            continue
        elems = sorted(e for e in g.elements() if e in pool)
        if not elems:
            raise ValueError(f"group {gi + 1} does not meet the slice")
        if symmetry_reduction:
            reps, seen = [], set()
            for e in elems:
                key = _cyclic_key(e)
                if key not in seen:
                    seen.add(key)
                    reps.append(e)
            elems = reps
        cands.append(elems)
    res = RepsSearchResult(False, None, candidates_per_group=[len(c) for c in cands])
    flat = [c for group in cands for c in group]
    offsets, start = [], 0
    for group in cands:
        offsets.append(start)
        start += len(group)
    # compat[i]: candidates that do not commute with candidate i
    compat = [0] * len(flat)
    for i, a in enumerate(flat):
        for j in range(i + 1, len(flat)):
            if not commute_raw(a.images, flat[j].images):
                compat[i] |= 1 << j
                compat[j] |= 1 << i
    domains = [((1 << len(group)) - 1) << off for group, off in zip(cands, offsets)]
    chosen: list = []
    failed = set()

    def dead_end(stuck: int) -> None:
        res.dead_ends += 1
        res.stuck_histogram[stuck + 1] = res.stuck_histogram.get(stuck + 1, 0) + 1
        if len(res.trace) < trace_limit:
            res.trace.append(([render_cycles(flat[x]) for x in chosen], stuck + 1))
        else:
            res.trace_truncated = True

    def search(i: int, doms: tuple) -> bool:
        res.nodes += 1
        if i == len(groups):
            return True
        state = doms[i:]
        if state in failed:
            res.cache_hits += 1
            return False
        d = doms[i]
        while d:
            low = d & -d
            c = low.bit_length() - 1
            d ^= low
            chosen.append(c)
            mask = compat[c]
            nd = list(doms)
            stuck = None
            for j in range(i + 1, len(groups)):
                nd[j] &= mask
                if not nd[j]:
                    stuck = j
                    break
            if stuck is None:
                if search(i + 1, tuple(nd)):
                    return True
            else:
                dead_end(stuck)
            chosen.pop()
        failed.add(state)
        return False

    if search(0, tuple(domains)):
        res.feasible = True
        res.assignment = [flat[c] for c in chosen]
    return res


def validate_family_abelian(family: CoverFamily) -> bool:
    return all(is_abelian(m) for m in family.members)
