"""Canonical labeling by exact backtracking over the degree partition.

The canonical form of a graph is the labeling that minimizes its
incremental adjacency encoding among all labelings that list vertices in
nonincreasing degree order.  The encoding of a labeling p_0, p_1, ... is
the integer sequence c_1, c_2, ..., where c_j holds vertex p_j's
adjacencies to p_0..p_{j-1} with the bit for p_0 most significant.

Isomorphism therefore reduces to equality of canonical encodings: two
graphs are isomorphic exactly when their canonical forms have identical
rows.  The search is plain branch-and-bound with two prunes that matter
in practice: candidates are restricted to their degree class, and
interchangeable vertices (twins) are expanded only once per node.  No
partition-refinement machinery; highly regular inputs just take longer.

The same encoding drives the orderly graph generators: a partially built
graph survives only while its identity labeling is the extremal one,
which is what `prefix_is_extremal` decides.
"""

from __future__ import annotations

from .graphs import Graph


def encoding_of(rows: list[int] | tuple[int, ...], k: int) -> list[int]:
    """Identity-labeling encoding of the first k vertices."""
    cols = []
    for j in range(1, k):
        c = 0
        for i in range(j):
            c = (c << 1) | (rows[j] >> i & 1)
        cols.append(c)
    return cols


def degree_classes(degrees: tuple[int, ...]) -> tuple[list[int], list[list[int]]]:
    """Position classes for a degree sequence sorted nonincreasing.

    Returns (pos_class, class_members): pos_class[p] is the class index of
    position p; class_members[c] lists the vertices allowed in class c
    when vertices are identified by their position in the sorted order.
    """
    pos_class: list[int] = []
    boundaries: list[int] = []
    for p, d in enumerate(degrees):
        if p == 0 or d != degrees[p - 1]:
            boundaries.append(p)
        pos_class.append(len(boundaries) - 1)
    members: list[list[int]] = [[] for _ in boundaries]
    for p in range(len(degrees)):
        members[pos_class[p]].append(p)
    return pos_class, members


def _twin_filter(rows, candidates: list[int]) -> list[int]:
    """Drop all but one of any set of mutually interchangeable vertices."""
    kept: list[int] = []
    for v in candidates:
        for u in kept:
            mask = ~((1 << u) | (1 << v))
            if (rows[u] ^ rows[v]) & mask == 0:
                break
        else:
            kept.append(v)
    return kept


def _min_encoding(rows, n: int, vertex_class: list[int], class_of_pos: list[int]):
    """Minimal encoding and an achieving placement, by branch-and-bound.

    vertex_class[v] gives the class of vertex v; class_of_pos[p] the class
    required at position p.  Only assignments matching classes positionwise
    are considered.
    """
    best: list[int] | None = None
    best_placed: list[int] | None = None
    placed: list[int] = []
    used = 0
    cols: list[int] = []

    def dfs(p: int):
        nonlocal best, best_placed, used
        if p == n:
            if best is None or cols < best:
                best = cols.copy()
                best_placed = placed.copy()
            return
        # fresh comparison against the current best prefix avoids stale state
        equal_to_best = best is not None
        if best is not None:
            for i in range(len(cols)):
                if cols[i] != best[i]:
                    if cols[i] > best[i]:
                        return
                    equal_to_best = False
                    break
        scored = []
        for v in range(n):
            if vertex_class[v] != class_of_pos[p] or used >> v & 1:
                continue
            c = 0
            rv = rows[v]
            for u in placed:
                c = (c << 1) | (rv >> u & 1)
            scored.append((c, v))
        cmin = min(c for c, _ in scored)
        # only minimal extensions can reach the subtree minimum
        if equal_to_best and p >= 1 and cmin > best[p - 1]:
            return
        for v in _twin_filter(rows, [v for c, v in scored if c == cmin]):
            placed.append(v)
            used |= 1 << v
            if p >= 1:
                cols.append(cmin)
            dfs(p + 1)
            if p >= 1:
                cols.pop()
            used &= ~(1 << v)
            placed.pop()

    dfs(0)
    return best or [], best_placed or []


def canonical_form(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Canonical relabeling of g.

    Returns (canonical graph, perm) where perm[v] is the canonical
    position of original vertex v.  Two graphs are isomorphic iff their
    canonical graphs have equal rows.
    """
    degs = g.degrees()
    order = sorted(range(g.n), key=lambda v: -degs[v])
    sorted_degs = tuple(degs[v] for v in order)
    pos_class, _ = degree_classes(sorted_degs)
    # vertex_class[v]: class whose degree matches v's degree
    distinct = sorted(set(degs), reverse=True)
    class_index = {d: i for i, d in enumerate(distinct)}
    vertex_class = [class_index[degs[v]] for v in range(g.n)]
    _, placed = _min_encoding(list(g.rows), g.n, vertex_class, pos_class)
    perm = [0] * g.n
    for pos, v in enumerate(placed):
        perm[v] = pos
    return g.relabel(tuple(perm)), tuple(perm)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g)[0].rows == canonical_form(h)[0].rows


def prefix_is_extremal(rows, k: int, vertex_class: list[int], class_of_pos: list[int],
                       ref_cols: list[int], biggest: bool) -> bool:
    """Is the identity labeling of vertices 0..k-1 extremal within its classes?

    ref_cols must be encoding_of(rows, k).  With biggest=False the test is
    minimality, with biggest=True maximality.  Used by the orderly
    generators: returns False as soon as any class-preserving relabeling
    strictly improves on the identity encoding.

    Candidate column values are maintained incrementally: entering a node
    that places vertex u shifts every unplaced vertex's running value left
    and appends its adjacency bit to u, so scoring a node costs O(k).
    """
    members: list[list[int]] = [[] for _ in range(max(class_of_pos[:k]) + 1)]
    for v in range(k):
        members[vertex_class[v]].append(v)
    vals = [0] * k
    used = 0

    def dfs(p: int) -> bool:
        """True if some completion strictly improves on ref."""
        nonlocal used
        if p == k:
            return False
        cands = [v for v in members[class_of_pos[p]] if not used >> v & 1]
        if biggest:
            target = max(vals[v] for v in cands)
        else:
            target = min(vals[v] for v in cands)
        if p >= 1:
            ref = ref_cols[p - 1]
            if target != ref:
                better = (target > ref) if biggest else (target < ref)
                return better
        ties = [v for v in cands if vals[v] == target]
        if len(ties) > 1:
            ties = _twin_filter(rows, ties)
        for v in ties:
            used |= 1 << v
            touched = []
            for w in range(k):
                if not used >> w & 1:
                    vals[w] = (vals[w] << 1) | (rows[w] >> v & 1)
                    touched.append(w)
            found = dfs(p + 1)
            for w in touched:
                vals[w] >>= 1
            used &= ~(1 << v)
            if found:
                return True
        return False

    return not dfs(0)
