"""Vertex sets of one class (or class slice) and their commuting graphs."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..groups import ClassLabel
from ..perm import cycle_parts, parse_cycles, render_cycles


@dataclass(frozen=True)
class VertexSet:
    degree: int
    elements: tuple  # canonical (lexicographic) order
    label: Optional[ClassLabel] = None
    slice: Optional[str] = None  # human description of a slice restriction

    @classmethod
    def build(cls, elements, degree: int, label=None, slice=None) -> "VertexSet":
        elems = tuple(sorted(set(elements)))
        if elems:
            parts = cycle_parts(elems[0].images)
            for e in elems:
                if e.degree != degree:
                    raise ValueError("element degree mismatch")
                if cycle_parts(e.images) != parts:
                    raise ValueError("vertex set mixes cycle types")
        return cls(degree, elems, label, slice)

    def __len__(self):
        return len(self.elements)

    def index(self) -> dict:
        return {e: i for i, e in enumerate(self.elements)}

    def to_lines(self) -> list:
        return [render_cycles(e) for e in self.elements]

    @classmethod
    def from_lines(cls, lines, degree: int, label=None, slice=None) -> "VertexSet":
        return cls.build((parse_cycles(s, degree) for s in lines if s.strip()), degree, label, slice)


def commute_raw(a: tuple, b: tuple) -> bool:
    for x in range(len(a)):
        if a[b[x]] != b[a[x]]:
            return False
    return True


class CommutingGraph:
    """Commuting graph on a vertex set; ``adj[i]`` is an int bitset, no self-loops."""

    def __init__(self, vertices: VertexSet, adj: list):
        self.vertices = vertices
        self.adj = adj

    @classmethod
    def build(cls, vertices: VertexSet) -> "CommutingGraph":
        imgs = [e.images for e in vertices.elements]
        m = len(imgs)
        adj = [0] * m
        for i in range(m):
            a = imgs[i]
            for j in range(i + 1, m):
                if commute_raw(a, imgs[j]):
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        return cls(vertices, adj)

    @classmethod
    def from_neighbors(cls, vertices: VertexSet, neighbors: dict) -> "CommutingGraph":
        pos = vertices.index()
        adj = [0] * len(vertices)
        for v, nbrs in neighbors.items():
            i = pos[v]
            for w in nbrs:
                j = pos.get(w)
                if j is not None and j != i:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        return cls(vertices, adj)

    def __len__(self):
        return len(self.adj)

    def edge_count(self) -> int:
        return sum(bin(a).count("1") for a in self.adj) // 2

    def components(self) -> list:
        """Connected components as sorted index lists, ordered by least index."""
        seen = 0
        out = []
        for s in range(len(self.adj)):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    low = f & -f
                    nxt |= self.adj[low.bit_length() - 1]
                    f ^= low
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            out.append([i for i in range(len(self.adj)) if comp >> i & 1])
        return out

    def induced(self, indices: list) -> "CommutingGraph":
        pos = {v: i for i, v in enumerate(indices)}
        adj = []
        for v in indices:
            b = 0
            a = self.adj[v]
            for u in indices:
                if a >> u & 1:
                    b |= 1 << pos[u]
            adj.append(b)
        elems = tuple(self.vertices.elements[i] for i in indices)
        vs = VertexSet(self.vertices.degree, elems, self.vertices.label, self.vertices.slice)
        return CommutingGraph(vs, adj)
