"""Permutations on ``n`` points.

Points are 0-based internally and 1-based in every piece of text that leaves
this module. Composition is right-to-left: ``compose(a, b)(x) == a(b(x))``.
"""
from __future__ import annotations

import re
from math import factorial
from typing import Iterable, Sequence


class DegreeMismatch(ValueError):
    pass


class CycleParseError(ValueError):
    pass


class Permutation:
    """Immutable bijection of ``{0, ..., degree-1}`` stored as an image tuple."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int], check: bool = True):
        images = tuple(images)
        if check and sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree), check=False)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """Build from 0-based cycles."""
        images = list(range(degree))
        seen = set()
        for cyc in cycles:
            for x in cyc:
                if not 0 <= x < degree:
                    raise CycleParseError(f"point {x + 1} out of range 1..{degree}")
                if x in seen:
                    raise CycleParseError(f"repeated point {x + 1}")
                seen.add(x)
            for i, x in enumerate(cyc):
                images[x] = cyc[(i + 1) % len(cyc)]
        return cls(images, check=False)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, k: int) -> "Permutation":
        return power(self, k)

    def __repr__(self):
        return f"Permutation({render_cycles(self)!r}, n={self.degree})"

    def __str__(self):
        return render_cycles(self)

    def inverse(self) -> "Permutation":
        return inverse(self)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def support(self) -> frozenset:
        return frozenset(i for i, x in enumerate(self.images) if i != x)


class CycleType:
    """Non-increasing cycle lengths (all >= 2) of a permutation of ``degree`` points."""

    __slots__ = ("parts", "degree")

    def __init__(self, parts: Iterable[int], degree: int):
        parts = tuple(sorted(parts, reverse=True))
        if any(p < 2 for p in parts):
            raise ValueError(f"cycle type parts must be >= 2: {parts}")
        if sum(parts) > degree:
            raise ValueError(f"cycle type {parts} does not fit on {degree} points")
        self.parts = parts
        self.degree = degree

    @classmethod
    def parse(cls, text: str, degree: int) -> "CycleType":
        text = text.strip()
        if text in ("", "1", "()"):
            return cls((), degree)
        try:
            parts = [int(t) for t in re.split(r"[-,\s]+", text) if t]
        except ValueError:
            raise ValueError(f"malformed cycle type {text!r}") from None
        return cls([p for p in parts if p != 1], degree)

    @property
    def fixed(self) -> int:
        return self.degree - sum(self.parts)

    def is_even(self) -> bool:
        return sum(p - 1 for p in self.parts) % 2 == 0

    def multiplicities(self) -> dict:
        m: dict = {}
        for p in self.parts:
            m[p] = m.get(p, 0) + 1
        return m

    def centralizer_order(self) -> int:
        """Order of the centralizer in the full symmetric group."""
        order = factorial(self.fixed)
        for length, mult in self.multiplicities().items():
            order *= length ** mult * factorial(mult)
        return order

    def representative(self) -> Permutation:
        cycles, start = [], 0
        for p in self.parts:
            cycles.append(range(start, start + p))
            start += p
        return Permutation.from_cycles(cycles, self.degree)

    def __eq__(self, other):
        return isinstance(other, CycleType) and (self.parts, self.degree) == (other.parts, other.degree)

    def __lt__(self, other: "CycleType") -> bool:
        return (self.degree, self.parts) < (other.degree, other.parts)

    def __hash__(self):
        return hash((self.parts, self.degree))

    def __str__(self):
        return "-".join(map(str, self.parts)) if self.parts else "1"

    def __repr__(self):
        return f"CycleType({str(self)!r}, n={self.degree})"


def _check_degrees(a: Permutation, b: Permutation) -> None:
    if len(a.images) != len(b.images):
        raise DegreeMismatch(f"degree {a.degree} vs {b.degree}")


def compose(a: Permutation, b: Permutation) -> Permutation:
    _check_degrees(a, b)
    ai = a.images
    return Permutation([ai[x] for x in b.images], check=False)


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p.images)
    for i, x in enumerate(p.images):
        inv[x] = i
    return Permutation(inv, check=False)


def power(p: Permutation, k: int) -> Permutation:
    images = list(range(p.degree))
    for cyc in cycle_decomposition(p):
        m = len(cyc)
        for i, x in enumerate(cyc):
            images[x] = cyc[(i + k) % m]
    return Permutation(images, check=False)


def conjugate(p: Permutation, q: Permutation) -> Permutation:
    """Return ``q p q^-1``."""
    _check_degrees(p, q)
    images = [0] * p.degree
    qi = q.images
    for i, x in enumerate(p.images):
        images[qi[i]] = qi[x]
    return Permutation(images, check=False)


def cycle_decomposition(p: Permutation) -> list:
    """Nontrivial cycles as tuples, each starting at and ordered by its smallest point."""
    images = p.images
    seen = [False] * len(images)
    cycles = []
    for start in range(len(images)):
        if seen[start] or images[start] == start:
            continue
        cyc = [start]
        seen[start] = True
        x = images[start]
        while x != start:
            seen[x] = True
            cyc.append(x)
            x = images[x]
        cycles.append(tuple(cyc))
    return cycles


def cycle_type(p: Permutation) -> CycleType:
    return CycleType((len(c) for c in cycle_decomposition(p)), p.degree)


def cycle_parts(images: tuple) -> tuple:
    """Sorted cycle lengths of a raw image tuple; hot path for class filtering."""
    n = len(images)
    seen = bytearray(n)
    parts = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = 1
            x = images[x]
            length += 1
        if length > 1:
            parts.append(length)
    parts.sort(reverse=True)
    return tuple(parts)


def parity(p: Permutation) -> int:
    """0 for even, 1 for odd."""
    return sum(len(c) - 1 for c in cycle_decomposition(p)) % 2


def is_even(p: Permutation) -> bool:
    return parity(p) == 0


def commutes(a: Permutation, b: Permutation) -> bool:
    _check_degrees(a, b)
    ai, bi = a.images, b.images
    for x in range(len(ai)):
        if ai[bi[x]] != bi[ai[x]]:
            return False
    return True


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse 1-based disjoint cycle notation such as ``"(1,2)(3,4,5)"``."""
    stripped = text.strip()
    if stripped in ("", "()"):
        return Permutation.identity(degree)
    if re.sub(_CYCLE_RE, "", stripped).strip():
        raise CycleParseError(f"malformed cycle text {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        body = body.strip()
        if not body:
            continue
        try:
            pts = [int(tok) - 1 for tok in re.split(r"[,\s]+", body) if tok]
        except ValueError:
            raise CycleParseError(f"malformed cycle ({body})") from None
        if len(set(pts)) != len(pts):
            raise CycleParseError(f"repeated point in cycle ({body})")
        if len(pts) > 1:
            cycles.append(pts)
    return Permutation.from_cycles(cycles, degree)


def render_cycles(p: Permutation) -> str:
    cycles = cycle_decomposition(p)
    if not cycles:
        return "()"
    return "".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in cycles)


def conjugator(p: Permutation, q: Permutation) -> Permutation:
    """Some ``s`` with ``s p s^-1 == q``; both must have the same cycle type."""
    _check_degrees(p, q)
    cp = sorted(cycle_decomposition(p), key=len)
    cq = sorted(cycle_decomposition(q), key=len)
    if [len(c) for c in cp] != [len(c) for c in cq]:
        raise ValueError("permutations are not conjugate")
    n = p.degree
    images = [None] * n
    for a, b in zip(cp, cq):
        for x, y in zip(a, b):
            images[x] = y
    free_src = [x for x in range(n) if images[x] is None]
    used = set(y for y in images if y is not None)
    free_dst = [y for y in range(n) if y not in used]
    for x, y in zip(free_src, free_dst):
        images[x] = y
    return Permutation(images, check=False)
