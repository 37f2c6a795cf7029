"""Exact clique / independent-set / clique-cover search on int-bitset graphs.

Graphs are lists of ints: bit ``j`` of ``adj[i]`` is set iff ``i ~ j``.
Self-loops are never set.
"""
from __future__ import annotations

from dataclasses import dataclass


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def complement(adj: list) -> list:
    full = (1 << len(adj)) - 1
    return [full & ~a & ~(1 << i) for i, a in enumerate(adj)]


class BudgetExhausted(Exception):
    pass


@dataclass
class SearchResult:
    value: int
    certificate: list  # vertex indices
    exact: bool
    nodes: int = 0
    upper: int = 0


def _relabel_by_degree(adj: list):
    """Order vertices by descending degree, index as tie-break."""
    order = sorted(range(len(adj)), key=lambda v: (-popcount(adj[v]), v))
    pos = {v: i for i, v in enumerate(order)}
    new = [0] * len(adj)
    for v in order:
        b = 0
        for u in bits(adj[v]):
            b |= 1 << pos[u]
        new[pos[v]] = b
    return new, order


def greedy_clique(adj: list, candidates: int) -> int:
    clique = 0
    p = candidates
    while p:
        best, best_deg = -1, -1
        for v in bits(p):
            d = popcount(adj[v] & p)
            if d > best_deg:
                best, best_deg = v, d
        clique |= 1 << best
        p &= adj[best]
    return clique


def max_clique(adj: list, budget: int = 5_000_000, upper: int = None) -> SearchResult:
    """Maximum clique by branch and bound with greedy-colouring bounds.

    Stops early once a clique of size ``upper`` is found. Returns exact=False
    when the node budget runs out before the search closes.
    """
    n = len(adj)
    if n == 0:
        return SearchResult(0, [], True)
    radj, order = _relabel_by_degree(adj)
    full = (1 << n) - 1
    best = greedy_clique(radj, full)
    best_size = popcount(best)
    if upper is not None and best_size >= upper:
        return SearchResult(best_size, sorted(order[v] for v in bits(best)), True, 0, upper)
    state = {"best": best, "size": max(best_size, 0), "nodes": 0}
    stop_at = upper

    def colour_order(p: int):
        verts, cols = [], []
        colour = 0
        uncoloured = p
        while uncoloured:
            colour += 1
            q = uncoloured
            while q:
                low = q & -q
                v = low.bit_length() - 1
                q &= ~radj[v]
                q ^= low
                uncoloured ^= low
                verts.append(v)
                cols.append(colour)
        return verts, cols

    def expand(r: int, rsize: int, p: int):
        state["nodes"] += 1
        if state["nodes"] > budget:
            raise BudgetExhausted
        verts, cols = colour_order(p)
        for i in range(len(verts) - 1, -1, -1):
            if rsize + cols[i] <= state["size"]:
                return
            v = verts[i]
            nr = r | (1 << v)
            np_ = p & radj[v]
            if np_:
                expand(nr, rsize + 1, np_)
            elif rsize + 1 > state["size"]:
                state["size"], state["best"] = rsize + 1, nr
                if stop_at is not None and state["size"] >= stop_at:
                    raise _Found
            p &= ~(1 << v)

    exact = True
    try:
        expand(0, 0, full)
    except _Found:
        pass
    except BudgetExhausted:
        exact = False
    cert = sorted(order[v] for v in bits(state["best"]))
    return SearchResult(len(cert), cert, exact, state["nodes"])


class _Found(Exception):
    pass


def greedy_independent_set(adj: list, candidates: int = None) -> int:
    """Minimum-degree greedy independent set (bitset)."""
    n = len(adj)
    p = (1 << n) - 1 if candidates is None else candidates
    chosen = 0
    while p:
        best, best_deg = -1, None
        for v in bits(p):
            d = popcount(adj[v] & p)
            if best_deg is None or d < best_deg:
                best, best_deg = v, d
                if d == 0:
                    break
        chosen |= 1 << best
        p &= ~adj[best] & ~(1 << best)
    return chosen


def _improve_independent_set(adj: list, current: int, rounds: int = 200) -> int:
    """(1,2)-swap local search: drop one vertex, add two."""
    n = len(adj)
    full = (1 << n) - 1
    for _ in range(rounds):
        improved = False
        for v in bits(current):
            rest = current & ~(1 << v)
            blocked = 0
            for u in bits(rest):
                blocked |= adj[u] | (1 << u)
            free = full & ~blocked & ~(1 << v)
            if popcount(free) < 2:
                continue
            for a in bits(free):
                more = free & ~adj[a] & ~(1 << a)
                if more:
                    b = (more & -more).bit_length() - 1
                    current = rest | (1 << a) | (1 << b)
                    extra = full & ~(blocked | adj[a] | adj[b] | (1 << a) | (1 << b))
                    if extra:
                        current |= greedy_independent_set(adj, extra)
                    improved = True
                    break
            if improved:
                break
        if not improved:
            return current
    return current


def greedy_clique_partition(adj: list) -> list:
    """Partition vertices into cliques greedily; returns list of clique bitsets."""
    n = len(adj)
    remaining = (1 << n) - 1
    cliques = []
    order = sorted(range(n), key=lambda v: (popcount(adj[v]), v))
    for v in order:
        if not remaining >> v & 1:
            continue
        clique = 1 << v
        p = adj[v] & remaining
        while p:
            best, best_deg = -1, -1
            for u in bits(p):
                d = popcount(adj[u] & p)
                if d > best_deg:
                    best, best_deg = u, d
            clique |= 1 << best
            p &= adj[best]
        cliques.append(clique)
        remaining &= ~clique
    return cliques


def independence_number(adj: list, budget: int = 5_000_000, upper: int = None) -> SearchResult:
    """Maximum independent set; ``upper`` is an externally known upper bound."""
    n = len(adj)
    if n == 0:
        return SearchResult(0, [], True)
    lo = greedy_independent_set(adj)
    lo = _improve_independent_set(adj, lo)
    ub = len(greedy_clique_partition(adj))
    if upper is not None:
        ub = min(ub, upper)
    if popcount(lo) >= ub:
        return SearchResult(popcount(lo), list(bits(lo)), True, 0, ub)
    res = max_clique(complement(adj), budget=budget, upper=ub)
    if popcount(lo) > res.value:
        res = SearchResult(popcount(lo), list(bits(lo)), res.exact, res.nodes)
    res.upper = res.value if res.exact else ub
    return res


@dataclass
class CoverResult:
    value: int
    certificate: list  # indices into the candidate clique list
    exact: bool
    nodes: int = 0
    lower: int = 0


def _dominant(cliques: list) -> list:
    """Drop duplicate and strictly contained candidates; keep first occurrence order."""
    uniq = []
    seen = set()
    for c in cliques:
        if c and c not in seen:
            seen.add(c)
            uniq.append(c)
    out = []
    by_size = sorted(range(len(uniq)), key=lambda i: -popcount(uniq[i]))
    kept: list = []
    for i in by_size:
        c = uniq[i]
        if any(c & k == c for k in kept):
            continue
        kept.append(c)
        out.append(c)
    return out


def min_set_cover(universe: int, sets: list, adj: list = None, lower: int = 0,
                  budget: int = 2_000_000) -> CoverResult:
    """Minimum number of ``sets`` (bitsets) covering ``universe``.

    ``adj`` (commuting graph) strengthens the bound: pairwise non-adjacent
    uncovered vertices need distinct cliques.
    """
    if universe == 0:
        return CoverResult(0, [], True)
    idx = {c: i for i, c in reversed(list(enumerate(sets)))}
    cands = _dominant(sets)
    covered_by: dict = {}
    for ci, c in enumerate(cands):
        for v in bits(c & universe):
            covered_by.setdefault(v, []).append(ci)
    missing = universe & ~_union(cands)
    if missing:
        raise ValueError(f"candidate sets miss {popcount(missing)} vertices")
    # greedy upper bound
    rem, greedy = universe, []
    while rem:
        best = max(range(len(cands)), key=lambda i: (popcount(cands[i] & rem), -i))
        greedy.append(best)
        rem &= ~cands[best]
    best_sol = list(greedy)
    max_size = max(popcount(c & universe) for c in cands)

    def bound(rem: int) -> int:
        b = -(-popcount(rem) // max_size)
        if adj is not None and rem:
            b = max(b, popcount(greedy_independent_set(adj, rem)))
        return b

    lower = max(lower, bound(universe))
    nodes = 0
    exact = True
    if len(best_sol) > lower:

        def search(rem: int, chosen: list):
            nonlocal best_sol, nodes
            nodes += 1
            if nodes > budget:
                raise BudgetExhausted
            if not rem:
                if len(chosen) < len(best_sol):
                    best_sol = list(chosen)
                    if len(best_sol) <= lower:
                        raise _Found
                return
            if len(chosen) + bound(rem) >= len(best_sol):
                return
            # branch on the uncovered vertex with fewest options
            opts = None
            for v in bits(rem):
                o = covered_by[v]
                if opts is None or len(o) < len(opts):
                    opts = o
                    if len(o) == 1:
                        break
            for ci in sorted(opts, key=lambda i: (-popcount(cands[i] & rem), i)):
                chosen.append(ci)
                search(rem & ~cands[ci], chosen)
                chosen.pop()

        try:
            search(universe, [])
        except _Found:
            pass
        except BudgetExhausted:
            exact = False
    cert = [idx[cands[i]] for i in best_sol]
    return CoverResult(len(cert), sorted(cert), exact, nodes, lower if not exact else len(cert))


def _union(sets) -> int:
    u = 0
    for s in sets:
        u |= s
    return u


def clique_cover_number(adj: list, cliques: list = None, lower: int = 0,
                        budget: int = 2_000_000) -> CoverResult:
    """Minimum clique cover. ``cliques`` are candidate clique bitsets; when omitted
    all maximal cliques are enumerated (fine for small graphs)."""
    from ..groups import _maximal_cliques

    n = len(adj)
    if n == 0:
        return CoverResult(0, [], True)
    if cliques is None:
        cliques = list(_maximal_cliques(adj, (1 << n) - 1))
    return min_set_cover((1 << n) - 1, cliques, adj=adj, lower=lower, budget=budget)


def exact_partition(universe: int, sets: list, budget: int = 1_000_000):
    """Pick pairwise disjoint members of ``sets`` (index collections over
    ``range(universe)``) whose union is everything, or None.

    Knuth's Algorithm X on dicts of sets, always branching on the element
    with fewest remaining options; iterative so deep solutions are fine.
    Raises BudgetExhausted after ``budget`` branch attempts.
    """
    rows = [tuple(s) for s in sets]
    cols = {j: set() for j in range(universe)}
    for r, s in enumerate(rows):
        for j in s:
            cols[j].add(r)

    def select(r):
        removed = []
        for j in rows[r]:
            for i in cols[j]:
                for k in rows[i]:
                    if k != j:
                        cols[k].discard(i)
            removed.append(cols.pop(j))
        return removed

    def deselect(r, removed):
        for j in reversed(rows[r]):
            cols[j] = removed.pop()
            for i in cols[j]:
                for k in rows[i]:
                    if k != j:
                        cols[k].add(i)

    solution, stack = [], []
    attempts = 0

    def options():
        j = min(cols, key=lambda c: (len(cols[c]), c))
        return sorted(cols[j])

    if not cols:
        return []
    stack.append(options())
    while stack:
        opts = stack[-1]
        if solution and len(solution) == len(stack):
            r, removed = solution.pop()
            deselect(r, removed)
        if not opts:
            stack.pop()
            continue
        attempts += 1
        if attempts > budget:
            raise BudgetExhausted
        r = opts.pop(0)
        solution.append((r, select(r)))
        if not cols:
            return [x for x, _ in solution]
        stack.append(options())
    return None
