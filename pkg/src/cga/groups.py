"""Symmetric and alternating groups: classes, centralizers, abelian tests.

Centralizers are built from the cycle structure (cycles, block swaps of
equal-length cycles, the full symmetric group on fixed points); the
alternating case takes the even part via Schreier generators.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Optional

from .perm import (
    CycleType,
    Permutation,
    compose,
    conjugate,
    conjugator,
    cycle_decomposition,
    cycle_parts,
    cycle_type,
    inverse,
    is_even,
)

DEFAULT_CAP = 10**6
MAX_CLASSIFY_DEGREE = 15


class CapExceeded(RuntimeError):
    """A closure grew past its element cap."""

    def __init__(self, cap: int, what: str = "closure"):
        super().__init__(f"{what} exceeds cap of {cap} elements")
        self.cap = cap


@dataclass(frozen=True)
class GroupSpec:
    family: str  # "sym" | "alt"
    degree: int

    def __post_init__(self):
        if self.family not in ("sym", "alt"):
            raise ValueError(f"unknown group family {self.family!r}")
        if self.degree < 1:
            raise ValueError("degree must be >= 1")

    @classmethod
    def sym(cls, n: int) -> "GroupSpec":
        return cls("sym", n)

    @classmethod
    def alt(cls, n: int) -> "GroupSpec":
        return cls("alt", n)

    @property
    def is_alt(self) -> bool:
        return self.family == "alt"

    def order(self) -> int:
        o = factorial(self.degree)
        return o // 2 if self.is_alt and self.degree > 1 else o

    def contains(self, p: Permutation) -> bool:
        return p.degree == self.degree and (not self.is_alt or is_even(p))

    def __str__(self):
        return f"{'A' if self.is_alt else 'S'}_{self.degree}"


@dataclass(frozen=True)
class ClassLabel:
    cycle_type: CycleType
    split_tag: Optional[str] = None  # None | "plus" | "minus"

    def __str__(self):
        s = str(self.cycle_type)
        return s + ({"plus": "+", "minus": "-"}[self.split_tag] if self.split_tag else "")


class SubgroupGens:
    """A subgroup of ``S_degree`` given by generators, closed lazily."""

    def __init__(self, degree: int, generators, elements=None):
        gens = sorted({g for g in generators if not g.is_identity()})
        for g in gens:
            if g.degree != degree:
                raise ValueError("generator degree mismatch")
        self.degree = degree
        self.generators = tuple(gens)
        self._elements = elements

    @property
    def cached(self) -> Optional[list]:
        return self._elements

    def elements(self, cap: int = DEFAULT_CAP) -> list:
        if self._elements is None:
            self._elements = close(self, cap)
        return self._elements

    def element_set(self, cap: int = DEFAULT_CAP) -> frozenset:
        return frozenset(self.elements(cap))

    def order(self, cap: int = DEFAULT_CAP) -> int:
        return len(self.elements(cap))

    def key(self, cap: int = DEFAULT_CAP):
        """Identity for comparing subgroups: closed element set, else generator list."""
        try:
            return ("elements", self.element_set(cap))
        except CapExceeded:
            return ("generators", self.generators)

    def __repr__(self):
        return f"SubgroupGens(n={self.degree}, gens=[{', '.join(map(str, self.generators))}])"


def close(s: SubgroupGens, cap: int = DEFAULT_CAP) -> list:
    """All elements of ``<s.generators>`` in canonical (lexicographic) order."""
    if cap <= 0:
        raise ValueError("cap must be positive")
    n = s.degree
    ident = tuple(range(n))
    gens = [g.images for g in s.generators]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            get = x.__getitem__
            for g in gens:
                y = tuple(map(get, g))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        if len(seen) > cap:
            raise CapExceeded(cap)
        frontier = nxt
    return [Permutation(t, check=False) for t in sorted(seen)]


def is_abelian(s: SubgroupGens) -> bool:
    gens = [g.images for g in s.generators]
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            for x in range(len(a)):
                if a[b[x]] != b[a[x]]:
                    return False
    return True


def intersect_with_alt(s: SubgroupGens) -> SubgroupGens:
    """Generators for the even part of ``s`` (Schreier generators, transversal {1, s0})."""
    odd = [g for g in s.generators if not is_even(g)]
    if not odd:
        return s
    s0 = odd[0]
    s0_inv = inverse(s0)
    gens = []
    for t in s.generators:
        if is_even(t):
            gens.append(t)
            gens.append(compose(compose(s0, t), s0_inv))
        else:
            gens.append(compose(t, s0_inv))
            gens.append(compose(s0, t))
    return SubgroupGens(s.degree, gens)


def symmetric_centralizer_gens(g: Permutation) -> list:
    n = g.degree
    cycles = cycle_decomposition(g)
    gens = []
    by_len: dict = {}
    for c in cycles:
        by_len.setdefault(len(c), []).append(c)
    for length, cs in sorted(by_len.items()):
        gens.extend(Permutation.from_cycles([c], n) for c in cs)
        if len(cs) >= 2:
            # swap the first two cycles position-by-position, and rotate all of them
            swap = [(a, b) for a, b in zip(cs[0], cs[1])]
            gens.append(Permutation.from_cycles(swap, n))
            if len(cs) >= 3:
                rot = [tuple(c[i] for c in cs) for i in range(length)]
                gens.append(Permutation.from_cycles(rot, n))
    moved = {x for c in cycles for x in c}
    fixed = [x for x in range(n) if x not in moved]
    if len(fixed) >= 2:
        gens.append(Permutation.from_cycles([fixed[:2]], n))
    if len(fixed) >= 3:
        gens.append(Permutation.from_cycles([fixed], n))
    return gens


def centralizer_gens(g: Permutation, spec: GroupSpec) -> SubgroupGens:
    s = SubgroupGens(g.degree, symmetric_centralizer_gens(g))
    return intersect_with_alt(s) if spec.is_alt else s


def centralizer_order(g_or_type, spec: GroupSpec) -> int:
    ct = g_or_type if isinstance(g_or_type, CycleType) else cycle_type(g_or_type)
    order = ct.centralizer_order()
    if spec.is_alt:
        # C_{S_n}(g) lies inside A_n exactly when all cycle lengths, fixed
        # points included, are odd and distinct; otherwise half of it is even
        lengths = list(ct.parts) + [1] * ct.fixed
        if not (len(set(lengths)) == len(lengths) and all(x % 2 for x in lengths)):
            order //= 2
    return order


def centralizer_elements(g: Permutation, spec: GroupSpec, cap: int = DEFAULT_CAP) -> list:
    if centralizer_order(g, spec) > cap:
        raise CapExceeded(cap, f"centralizer of {g}")
    return close(centralizer_gens(g, spec), cap)


# ---------------------------------------------------------------- classes

def partitions(n: int, max_part: Optional[int] = None):
    """Partitions of n into parts >= 1, non-increasing."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for p in range(min(n, max_part), 0, -1):
        for rest in partitions(n - p, p):
            yield (p,) + rest


def cycle_types(n: int) -> list:
    out = [CycleType([p for p in part if p > 1], n) for part in partitions(n)]
    return sorted(out, key=lambda t: t.parts)


def splits_in_alt(t: CycleType) -> bool:
    """Whether an even ``S_n`` class splits into two ``A_n`` classes."""
    if not t.is_even():
        raise ValueError(f"{t} is odd; it is not a class of A_{t.degree}")
    lengths = list(t.parts) + [1] * t.fixed
    return len(set(lengths)) == len(lengths) and all(x % 2 == 1 for x in lengths)


def least_element(t: CycleType) -> Permutation:
    """Lexicographically least permutation of type ``t``: fixed points first, then
    cycles on consecutive intervals by increasing length."""
    images, start = list(range(t.degree)), t.fixed
    for p in sorted(t.parts):
        for i in range(start, start + p - 1):
            images[i] = i + 1
        images[start + p - 1] = start
        start += p
    return Permutation(images, check=False)


def class_labels(spec: GroupSpec) -> list:
    """All class labels of ``spec``, identity included, in canonical order."""
    labels = []
    for t in cycle_types(spec.degree):
        if spec.is_alt:
            if not t.is_even():
                continue
            if spec.degree > 1 and splits_in_alt(t) and t.parts:
                labels.append(ClassLabel(t, "plus"))
                labels.append(ClassLabel(t, "minus"))
                continue
        labels.append(ClassLabel(t))
    return labels


def class_representative(label: ClassLabel) -> Permutation:
    rep = least_element(label.cycle_type)
    if label.split_tag == "minus":
        n = rep.degree
        swap = Permutation.from_cycles([(n - 2, n - 1)], n)
        rep = conjugate(rep, swap)
    return rep


def class_label_of(p: Permutation, spec: GroupSpec) -> ClassLabel:
    t = cycle_type(p)
    if spec.is_alt:
        if not t.is_even():
            raise ValueError(f"{p} is not in {spec}")
        if t.parts and splits_in_alt(t):
            s = conjugator(least_element(t), p)
            return ClassLabel(t, "plus" if is_even(s) else "minus")
    return ClassLabel(t)


def in_class(p: Permutation, label: ClassLabel, spec: GroupSpec) -> bool:
    if cycle_parts(p.images) != label.cycle_type.parts:
        return False
    if label.split_tag is None:
        return True
    return class_label_of(p, spec) == label


def class_size(label: ClassLabel, spec: GroupSpec) -> int:
    t = label.cycle_type
    if t.degree != spec.degree:
        raise ValueError("label degree does not match group")
    size = factorial(t.degree) // t.centralizer_order()
    if spec.is_alt:
        if not t.is_even():
            raise ValueError(f"odd cycle type {t} is not a class of {spec}")
        if label.split_tag is not None:
            size //= 2
    return size


# ------------------------------------------------- abelian centralizers

@lru_cache(maxsize=None)
def _abelian_by_type(parts: tuple, degree: int, family: str) -> bool:
    rep = CycleType(parts, degree).representative()
    return is_abelian(centralizer_gens(rep, GroupSpec(family, degree)))


def has_abelian_centralizer(h: Permutation, spec: GroupSpec) -> bool:
    # conjugating by any element of S_n preserves abelianness of C_spec(h)
    return _abelian_by_type(cycle_parts(h.images), h.degree, spec.family)


@dataclass
class Membership:
    in_ya: Optional[bool]  # None means undecided
    witness: Optional[Permutation] = None
    method: str = ""
    note: str = ""


@lru_cache(maxsize=None)
def _abelian_cover_index(spec: GroupSpec, cap: int) -> dict:
    """cycle-parts -> (h, x): x has those parts and lies in the abelian C_spec(h)."""
    index: dict = {}
    for t in cycle_types(spec.degree):
        if not t.parts or (spec.is_alt and not t.is_even()):
            continue
        h = least_element(t)
        if not has_abelian_centralizer(h, spec):
            continue
        for x in centralizer_elements(h, spec, cap):
            key = cycle_parts(x.images)
            if key and key not in index:
                index[key] = (h, x)
    return index


def _fixed_point_candidates(g: Permutation, spec: GroupSpec):
    moved = g.support()
    fixed = [x for x in range(g.degree) if x not in moved]
    for part in partitions(len(fixed)):
        cycles, i = [], 0
        for p in part:
            if p > 1:
                cycles.append(fixed[i:i + p])
            i += p
        h = compose(g, Permutation.from_cycles(cycles, g.degree))
        if spec.contains(h):
            yield h


def lies_in_abelian_centralizer(g: Permutation, spec: GroupSpec, cap: int = DEFAULT_CAP) -> Membership:
    """Decide whether ``g`` lies in some abelian centralizer ``C_spec(h)``.

    Search order: ``h = g * (cycles on g's fixed points)``; then every abelian
    centralizer up to conjugacy (each closed in full, so a miss is a proof);
    finally a scan of ``C_spec(g)``, which must contain any witness.
    """
    if g.is_identity():
        raise ValueError("identity is excluded")
    if not spec.contains(g):
        raise ValueError(f"{g} is not in {spec}")
    for h in _fixed_point_candidates(g, spec):
        if has_abelian_centralizer(h, spec):
            return Membership(True, h, "fixed-point-extension")
    index = None
    try:
        index = _abelian_cover_index(spec, cap)
    except CapExceeded:
        pass
    if index is not None:
        hit = index.get(cycle_parts(g.images))
        if hit is not None:
            h, x = hit
            s = conjugator(x, g)
            return Membership(True, conjugate(h, s), "abelian-centralizer-scan")
    if centralizer_order(g, spec) <= cap:
        for h in centralizer_elements(g, spec, cap):
            if not h.is_identity() and has_abelian_centralizer(h, spec):
                return Membership(True, h, "centralizer-scan")
        return Membership(False, None, "centralizer-scan")
    if index is not None:
        return Membership(False, None, "abelian-centralizer-scan",
                          note="centralizer above cap; every abelian centralizer scanned")
    return Membership(None, None, "", note=f"centralizer order above cap {cap}")


@dataclass
class ClassRecord:
    label: ClassLabel
    size: int
    in_ya: Optional[bool]
    witness: Optional[Permutation]
    representative: Permutation
    method: str = ""
    centralizer_order: int = 0
    abelian_centralizer: bool = False


@dataclass
class ClassClassification:
    spec: GroupSpec
    records: list = field(default_factory=list)

    @property
    def yb(self) -> list:
        return [r for r in self.records if r.in_ya is False]

    @property
    def undecided(self) -> list:
        return [r for r in self.records if r.in_ya is None]

    def yb_types(self) -> list:
        return sorted({str(r.label.cycle_type) for r in self.yb})


def classify_classes(spec: GroupSpec, cap: int = DEFAULT_CAP,
                     max_degree: int = MAX_CLASSIFY_DEGREE) -> ClassClassification:
    if spec.degree > max_degree:
        raise ValueError(f"full classification limited to degree <= {max_degree}")
    table = ClassClassification(spec)
    for label in class_labels(spec):
        if not label.cycle_type.parts:
            continue
        rep = class_representative(label)
        m = lies_in_abelian_centralizer(rep, spec, cap)
        table.records.append(ClassRecord(
            label=label,
            size=class_size(label, spec),
            in_ya=m.in_ya,
            witness=m.witness,
            representative=rep,
            method=m.method,
            centralizer_order=centralizer_order(rep, spec),
            abelian_centralizer=has_abelian_centralizer(rep, spec),
        ))
    return table


@dataclass
class CentralizerShare:
    """Abelian centralizers defined by elements of one cycle type."""
    cycle_type: CycleType
    centralizer_order: int
    definers: int  # elements x of C(h) with C(x) == C(h)
    share: Fraction  # class size / definers; shares sum to the number of centralizers


def abelian_centralizer_census(spec: GroupSpec, cap: int = DEFAULT_CAP) -> tuple:
    """Count the distinct abelian centralizers of ``spec``.

    Each ``h`` with abelian centralizer ``X`` shares ``X`` with exactly the
    elements ``x`` of ``X`` having ``C(x) == X``, so the count is the sum over
    classes of (class size / number of such ``x``). Returns (total, shares).
    """
    shares = []
    for t in cycle_types(spec.degree):
        if not t.parts or (spec.is_alt and not t.is_even()):
            continue
        h = least_element(t)
        if not has_abelian_centralizer(h, spec):
            continue
        elems = centralizer_elements(h, spec, cap)
        order = len(elems)
        definers = sum(1 for x in elems if centralizer_order(x, spec) == order)
        size = factorial(spec.degree) // t.centralizer_order()
        shares.append(CentralizerShare(t, order, definers, Fraction(size, definers)))
    total = sum((s.share for s in shares), Fraction(0))
    if total.denominator != 1:
        raise AssertionError(f"non-integral centralizer count {total}")
    return int(total), shares


# ------------------------------------------------ maximal abelian subgroups

def minimal_generators(elements: list, degree: int) -> SubgroupGens:
    """Greedy generating set drawn in canonical order from an element list of a group."""
    gens: list = []
    span = {tuple(range(degree))}
    target = len(elements)
    for x in sorted(elements):
        if len(span) == target:
            break
        if x.images in span:
            continue
        gens.append(x)
        span = {e.images for e in close(SubgroupGens(degree, gens), cap=target)}
    return SubgroupGens(degree, gens, elements=sorted(elements))


def _maximal_cliques(adj: list, universe: int):
    """Bron-Kerbosch with pivoting on int bitsets; yields clique bitsets."""
    stack = [(0, universe, 0)]
    while stack:
        r, p, x = stack.pop()
        if not p and not x:
            yield r
            continue
        px = p | x
        pivot, best = -1, -1
        m = px
        while m:
            low = m & -m
            u = low.bit_length() - 1
            c = bin(p & adj[u]).count("1")
            if c > best:
                best, pivot = c, u
            m ^= low
        cand = p & ~adj[pivot]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            stack.append((r | low, p & adj[v], x & adj[v]))
            p &= ~low
            x |= low
            cand ^= low


def maximal_abelian_overgroups(g: Permutation, spec: GroupSpec, cap: int = DEFAULT_CAP) -> list:
    """Every maximal abelian subgroup of ``spec`` containing ``g``.

    All of them sit inside ``C_spec(g)``, and inside a group the maximal sets of
    pairwise commuting elements are exactly the maximal abelian subgroups, so
    this enumerates maximal cliques of the commuting graph of ``C_spec(g)``.
    """
    elems = centralizer_elements(g, spec, cap)
    imgs = [e.images for e in elems]
    m = len(imgs)
    n = g.degree
    adj = [0] * m
    for i in range(m):
        a = imgs[i]
        for j in range(i + 1, m):
            b = imgs[j]
            if all(a[b[x]] == b[a[x]] for x in range(n)):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    full = (1 << m) - 1
    central = 0
    for i in range(m):
        if (adj[i] | (1 << i)) == full:
            central |= 1 << i
    rest = full & ~central
    adj_rest = [a & rest for a in adj]
    groups = []
    for clique in _maximal_cliques(adj_rest, rest):
        members = clique | central
        sel = [elems[i] for i in range(m) if members >> i & 1]
        groups.append(minimal_generators(sel, n))
    groups.sort(key=lambda s: (len(s.cached), [e.images for e in s.cached]))
    return groups
