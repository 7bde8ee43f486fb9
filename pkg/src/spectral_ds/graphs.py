"""Labeled simple graphs on up to 64 vertices, stored as bitmask rows.

Each vertex's neighborhood is one Python int used as a bitmask, so all
structural work (components, bipartiteness, triangle counts, common
neighborhoods) runs on word operations.  Graphs are immutable after
construction and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

MAX_VERTICES = 64


class GraphError(ValueError):
    """Invalid graph construction or out-of-range parameter."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; vertices are 0..n-1, rows[i] is the neighbor mask."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not (1 <= self.n <= MAX_VERTICES):
            raise GraphError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.rows) != self.n:
            raise GraphError("row count does not match vertex count")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError("adjacency bit outside vertex range")
            if row >> i & 1:
                raise GraphError("self-loop")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if (self.rows[i] >> j & 1) != (self.rows[j] >> i & 1):
                    raise GraphError("adjacency not symmetric")

    # -- construction ----------------------------------------------------

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError("self-loop")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError("edge endpoint out of range")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    # -- basic queries ----------------------------------------------------

    def degree(self, v: int) -> int:
        return bin(self.rows[v]).count("1")

    def degrees(self) -> tuple[int, ...]:
        return tuple(self.degree(v) for v in range(self.n))

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees(), reverse=True))

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if self.has_edge(u, v)]

    def adjacency_matrix(self) -> list[list[int]]:
        return [[self.rows[i] >> j & 1 for j in range(self.n)] for i in range(self.n)]

    def relabel(self, perm: tuple[int, ...]) -> "Graph":
        """Graph with vertex v moved to position perm[v]."""
        rows = [0] * self.n
        for v in range(self.n):
            row = self.rows[v]
            new = 0
            while row:
                low = row & -row
                u = low.bit_length() - 1
                new |= 1 << perm[u]
                row ^= low
            rows[perm[v]] = new
        return Graph(self.n, tuple(rows))

    def components(self) -> list[int]:
        """Vertex masks of the connected components, ordered by least vertex."""
        seen = 0
        out = []
        full = (1 << self.n) - 1
        while seen != full:
            start = (~seen & full) & -(~seen & full)
            comp = start
            frontier = start
            while frontier:
                nxt = 0
                while frontier:
                    low = frontier & -frontier
                    v = low.bit_length() - 1
                    nxt |= self.rows[v] & ~comp
                    frontier ^= low
                comp |= nxt
                frontier = nxt
            out.append(comp)
            seen |= comp
        return out

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def induced(self, mask: int) -> "Graph":
        """Induced subgraph on the vertices in mask, relabeled to 0..k-1."""
        verts = []
        m = mask
        while m:
            low = m & -m
            verts.append(low.bit_length() - 1)
            m ^= low
        index = {v: i for i, v in enumerate(verts)}
        rows = [0] * len(verts)
        for v in verts:
            row = self.rows[v] & mask
            while row:
                low = row & -row
                u = low.bit_length() - 1
                rows[index[v]] |= 1 << index[u]
                row ^= low
        return Graph(len(verts), tuple(rows))


# -- named constructors -----------------------------------------------------


def empty_graph(n: int) -> Graph:
    if not (1 <= n <= MAX_VERTICES):
        raise GraphError(f"order {n} outside 1..{MAX_VERTICES}")
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    if not (1 <= n <= MAX_VERTICES):
        raise GraphError(f"order {n} outside 1..{MAX_VERTICES}")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << i) for i in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    if not (1 <= n <= MAX_VERTICES):
        raise GraphError(f"order {n} outside 1..{MAX_VERTICES}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1 or a + b > MAX_VERTICES:
        raise GraphError("invalid bipartition sizes")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def petersen_graph() -> Graph:
    """Kneser graph K(5,2): vertices are 2-subsets of {0..4} in lexicographic
    order, adjacent exactly when disjoint.  Fixes the labeling for good."""
    subsets = list(combinations(range(5), 2))
    edges = []
    for i, s in enumerate(subsets):
        for j in range(i + 1, len(subsets)):
            if not set(s) & set(subsets[j]):
                edges.append((i, j))
    return Graph.from_edges(10, edges)


def build_named(name: str) -> Graph:
    """Build a standard graph from its conventional short name.

    Accepted: "petersen", "K<n>", "C<n>", "P<n>", "K<a>,<b>", "<n>K1".
    """
    s = name.strip()
    if s.lower() == "petersen":
        return petersen_graph()
    try:
        if s.endswith("K1") and s[:-2].isdigit():
            return empty_graph(int(s[:-2]))
        if s.startswith("K") and "," in s:
            a, b = s[1:].split(",", 1)
            return complete_bipartite(int(a), int(b))
        if s.startswith("K") and s[1:].isdigit():
            return complete_graph(int(s[1:]))
        if s.startswith("C") and s[1:].isdigit():
            return cycle_graph(int(s[1:]))
        if s.startswith("P") and s[1:].isdigit():
            return path_graph(int(s[1:]))
    except ValueError as exc:
        raise GraphError(f"bad parameter in graph name {name!r}: {exc}") from exc
    raise GraphError(f"unknown graph name {name!r}")


# -- operations -------------------------------------------------------------


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint copies of g and h plus every cross edge; g keeps labels 0..n-1."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise GraphError(f"join would have {n} > {MAX_VERTICES} vertices")
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    rows = [g.rows[v] | hmask for v in range(g.n)]
    rows += [(h.rows[v] << g.n) | gmask for v in range(h.n)]
    return Graph(n, tuple(rows))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise GraphError(f"union would have {n} > {MAX_VERTICES} vertices")
    rows = list(g.rows) + [h.rows[v] << g.n for v in range(h.n)]
    return Graph(n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ g.rows[v]) & ~(1 << v) for v in range(g.n)))


def multicone(w: int, g: Graph) -> Graph:
    """Join of a w-clique with g; w = 0 returns g unchanged."""
    if w < 0:
        raise GraphError("clique size must be >= 0")
    if w == 0:
        return g
    if w + g.n > MAX_VERTICES:
        raise GraphError(f"multicone would have {w + g.n} > {MAX_VERTICES} vertices")
    return join(complete_graph(w), g)


# -- structure report --------------------------------------------------------


@dataclass(frozen=True)
class ComponentInfo:
    mask: int
    size: int
    bipartite: bool
    balanced: Optional[bool]  # None when not bipartite


@dataclass(frozen=True)
class StructureReport:
    components: tuple[ComponentInfo, ...]
    triangles: int
    min_degree: int
    max_degree: int
    regular: Optional[int]
    bidegreed: Optional[tuple[int, int]]

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def bipartite_component_count(self) -> int:
        return sum(1 for c in self.components if c.bipartite)

    @property
    def balanced_bipartite_count(self) -> int:
        return sum(1 for c in self.components if c.balanced)

    @property
    def connected(self) -> bool:
        return len(self.components) == 1

    @property
    def bipartite(self) -> bool:
        return all(c.bipartite for c in self.components)


def _two_color(g: Graph, comp_mask: int) -> Optional[tuple[int, int]]:
    """2-color one component; return the two class masks or None if odd cycle."""
    start = comp_mask & -comp_mask
    color0, color1 = start, 0
    frontier = start
    side = 0
    colored = start
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            v = low.bit_length() - 1
            nxt |= g.rows[v] & comp_mask & ~colored
            m ^= low
        side ^= 1
        if side:
            color1 |= nxt
        else:
            color0 |= nxt
        colored |= nxt
        frontier = nxt
    # verify proper coloring
    for v in range(g.n):
        if comp_mask >> v & 1:
            mine = color0 if (color0 >> v & 1) else color1
            if g.rows[v] & mine:
                return None
    return color0, color1


def structure_report(g: Graph) -> StructureReport:
    """Components, bipartite classification, triangle count, degree profile.

    An isolated vertex counts as an unbalanced bipartite component; a
    balanced component has color classes of equal size.
    """
    comps = []
    for mask in g.components():
        size = bin(mask).count("1")
        coloring = _two_color(g, mask)
        if coloring is None:
            comps.append(ComponentInfo(mask, size, False, None))
        else:
            c0, c1 = coloring
            balanced = bin(c0).count("1") == bin(c1).count("1")
            comps.append(ComponentInfo(mask, size, True, balanced))
    degs = g.degrees()
    distinct = sorted(set(degs))
    regular = distinct[0] if len(distinct) == 1 else None
    bidegreed = (distinct[0], distinct[1]) if len(distinct) == 2 else None
    # trace(A^3) = 6t, computed from common neighborhoods of edges
    t = 0
    for u, v in g.edges():
        t += bin(g.rows[u] & g.rows[v]).count("1")
    t //= 3
    return StructureReport(
        components=tuple(comps),
        triangles=t,
        min_degree=min(degs),
        max_degree=max(degs),
        regular=regular,
        bidegreed=bidegreed,
    )
