"""Independent re-checking of analysis certificates.

Deliberately shares nothing with the searchers beyond the permutation
primitives: subgroups are re-closed here with a plain breadth-first loop and
commutation is re-tested pairwise.
"""
from __future__ import annotations

from .perm import Permutation, commutes, compose, cycle_type


def _closure(generators: list, degree: int, limit: int) -> set:
    ident = Permutation.identity(degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = compose(g, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > limit:
                        raise OverflowError(f"closure exceeds {limit} elements")
        frontier = nxt
    return seen


def _commuting_pairs_vectorized(elements: list, limit: int = 5) -> list:
    """Pairs (i < j) of commuting elements, found blockwise with numpy."""
    import numpy as np
    arr = np.array([p.images for p in elements], dtype=np.int16)
    m = len(arr)
    hits = []
    block = max(1, 2_000_000 // max(1, m * arr.shape[1]))
    for start in range(0, m, block):
        a = arr[start:start + block]  # (b, n)
        # (a o x)[p] = a[x[p]] and (x o a)[p] = x[a[p]] for every x in arr
        ax = a[np.arange(len(a))[:, None, None], arr[None, :, :]]
        xa = arr[np.arange(m)[None, :, None], a[:, None, :]]
        same = (ax == xa).all(axis=2)
        for bi, j in zip(*np.nonzero(same)):
            i = start + int(bi)
            if i < j:
                hits.append((i, int(j)))
                if len(hits) >= limit:
                    return hits
    return hits


def check_independent_set(elements: list) -> list:
    """Problems with a claimed non-commuting set (empty list means valid)."""
    problems = []
    if len(set(elements)) != len(elements):
        problems.append("independent set has repeated elements")
    if len(elements) > 300:
        return problems + [f"{elements[i]} and {elements[j]} commute"
                           for i, j in _commuting_pairs_vectorized(elements)]
    for i, a in enumerate(elements):
        for b in elements[i + 1:]:
            if commutes(a, b):
                problems.append(f"{a} and {b} commute")
    return problems


def check_cover(vertices: list, generator_lists: list, degree: int, limit: int = 10**6) -> list:
    """Problems with a claimed abelian cover given as generator lists."""
    problems = []
    covered = set()
    for k, gens in enumerate(generator_lists):
        for i, a in enumerate(gens):
            for b in gens[i + 1:]:
                if not commutes(a, b):
                    problems.append(f"cover group {k} is not abelian: {a}, {b}")
        covered |= _closure(list(gens), degree, limit)
    missing = [v for v in vertices if v not in covered]
    if missing:
        problems.append(f"{len(missing)} vertices uncovered, e.g. {missing[0]}")
    return problems


def check_clique_cover(vertices: list, cliques: list) -> list:
    """Problems with a cover given as explicit pairwise-commuting element lists."""
    problems = []
    covered = set()
    for k, c in enumerate(cliques):
        for i, a in enumerate(c):
            for b in c[i + 1:]:
                if not commutes(a, b):
                    problems.append(f"cover clique {k} has non-commuting {a}, {b}")
        covered.update(c)
    missing = [v for v in vertices if v not in covered]
    if missing:
        problems.append(f"{len(missing)} vertices uncovered, e.g. {missing[0]}")
    return problems


def check_analysis(analysis) -> list:
    """Re-validate a ComponentAnalysis from its certificates alone."""
    vs = analysis.component
    problems = []
    ind = list(analysis.independent_certificate)
    if len(ind) != analysis.delta:
        problems.append(f"independent certificate has {len(ind)} elements, delta is {analysis.delta}")
    pool = set(vs.elements)
    if any(x not in pool for x in ind):
        problems.append("independent certificate leaves the vertex set")
    types = {cycle_type(x) for x in vs.elements}
    if len(types) > 1:
        problems.append("vertex set mixes cycle types")
    problems += check_independent_set(ind)
    gens = [list(g.generators) for g in analysis.cover_certificate]
    if len(gens) != analysis.Delta:
        problems.append(f"cover certificate has {len(gens)} groups, Delta is {analysis.Delta}")
    problems += check_cover(list(vs.elements), gens, vs.degree)
    if analysis.delta > analysis.Delta:
        problems.append(f"delta {analysis.delta} exceeds Delta {analysis.Delta}")
    return problems
