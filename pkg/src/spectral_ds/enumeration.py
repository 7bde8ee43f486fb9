"""Isomorph-free exhaustive graph generation (orderly algorithm).

Graphs are built one vertex at a time; vertex k contributes the column
of its adjacencies to vertices 0..k-1.  A partial graph survives only
while its identity labeling is the extremal one among all relabelings
that respect the target degree classes, so exactly one member of every
isomorphism class reaches depth n.  Deleting the last vertex of an
extremal labeling leaves an extremal labeling, which is what makes the
pruning complete.

Two independent generation orders are provided: `smallest` grows the
lexicographically minimal encoding (the same labeling `canonical_form`
produces), `biggest` the maximal one.  Their outputs must agree class
for class; cross-checking the two orders is the standard self-test for
this kind of enumeration.

Degree-constrained generation handles n <= 12 comfortably; the
unconstrained census is intended for n <= 8.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Optional, Sequence

from .canon import canonical_form, degree_classes, encoding_of, prefix_is_extremal
from .errors import ScopeRefusal
from .graphs import Graph

DEGREE_MODE_MAX_N = 12
CENSUS_MAX_N = 8


def erdos_gallai_ok(degrees: Sequence[int]) -> bool:
    """Is the nonincreasing integer sequence realizable as a simple graph?"""
    n = len(degrees)
    if n == 0 or any(d < 0 or d > n - 1 for d in degrees):
        return False
    if any(degrees[i] < degrees[i + 1] for i in range(n - 1)):
        raise ValueError("degree sequence must be nonincreasing")
    if sum(degrees) % 2:
        return False
    prefix = 0
    for k in range(1, n + 1):
        prefix += degrees[k - 1]
        tail = sum(min(d, k) for d in degrees[k:])
        if prefix > k * (k - 1) + tail:
            return False
    return True


def _generate(n: int, target: Optional[Sequence[int]], connected_only: bool,
              max_results: Optional[int], biggest: bool) -> Iterator[Graph]:
    if target is not None:
        if any(target[i] < target[i + 1] for i in range(len(target) - 1)):
            raise ValueError("degree sequence must be nonincreasing")
        pos_class, _ = degree_classes(tuple(target))
        d = list(target)
    else:
        pos_class = [0] * n
        d = None
    rows = [0] * n
    cols: list[int] = []
    emitted = 0
    future_degree_sum = [0] * (n + 1)
    if d is not None:
        for k in range(n - 1, -1, -1):
            future_degree_sum[k] = future_degree_sum[k + 1] + d[k]
    cur = [0] * n

    def candidate_columns(k: int) -> list[tuple[int, tuple[int, ...]]]:
        """(encoding value, members) for every admissible column of vertex k."""
        out = []
        if d is None:
            for mask in range(1 << k):
                c = 0
                for i in range(k):
                    c = (c << 1) | (mask >> i & 1)
                out.append((c, tuple(i for i in range(k) if mask >> i & 1)))
        else:
            eligible = [i for i in range(k) if cur[i] < d[i]]
            future = n - 1 - k
            smin = max(0, d[k] - future)
            smax = min(d[k], len(eligible))
            for s in range(smin, smax + 1):
                for picks in combinations(eligible, s):
                    c = 0
                    for i in picks:
                        c |= 1 << (k - 1 - i)
                    out.append((c, picks))
        out.sort(reverse=biggest)
        return out

    def feasible_after(k: int) -> bool:
        """Necessary conditions for completing positions k+1..n-1."""
        if d is None:
            return True
        future = n - 1 - k
        need_total = 0
        for i in range(k + 1):
            need = d[i] - cur[i]
            if need < 0 or need > future:
                return False
            need_total += need
        if (need_total + future_degree_sum[k + 1]) % 2:
            return False
        cap = sum(min(d[j], k + 1) for j in range(k + 1, n))
        if need_total > cap:
            return False
        return True

    def emit(g: Graph) -> Graph:
        if biggest:
            return canonical_form(g)[0]
        return g

    def swap_reject(k: int, c: int) -> bool:
        """O(1)-per-pair test: would swapping position k with an earlier
        same-class position already improve the encoding at that column?"""
        cls = pos_class[k]
        for j in range(k - 1, 0, -1):
            if pos_class[j] != cls:
                return False
            shifted = c >> (k - j)
            prev = cols[j - 1]
            if (shifted > prev) if biggest else (shifted < prev):
                return True
        return False

    def dfs(k: int) -> Iterator[Graph]:
        nonlocal emitted
        if k == n:
            if d is not None and any(cur[i] != d[i] for i in range(n)):
                return
            g = Graph(n, tuple(rows))
            if connected_only and not g.is_connected():
                return
            yield emit(g)
            emitted += 1
            return
        for c, picks in candidate_columns(k):
            if swap_reject(k, c):
                continue
            rows[k] = 0
            for i in picks:
                rows[i] |= 1 << k
                rows[k] |= 1 << i
                cur[i] += 1
            cur[k] = len(picks)
            cols.append(c)
            ok = feasible_after(k) and prefix_is_extremal(
                rows, k + 1, pos_class, pos_class, cols, biggest
            )
            if ok:
                yield from dfs(k + 1)
            cols.pop()
            for i in picks:
                rows[i] &= ~(1 << k)
                cur[i] -= 1
            rows[k] = 0
            cur[k] = 0
            if max_results is not None and emitted >= max_results:
                return

    if n == 1:
        if max_results is None or max_results > 0:
            yield Graph(1, (0,))
        return
    yield from dfs(1)


def graphs_with_degree_sequence(degrees: Sequence[int], connected_only: bool = False,
                                max_results: Optional[int] = None,
                                biggest: bool = False) -> Iterator[Graph]:
    """All graphs realizing the nonincreasing degree sequence, one per class.

    Emitted graphs are canonically labeled.  An infeasible sequence
    (Erdos-Gallai) yields nothing.
    """
    degrees = tuple(int(x) for x in degrees)
    n = len(degrees)
    if n > DEGREE_MODE_MAX_N:
        raise ScopeRefusal(
            f"degree-constrained enumeration supports n <= {DEGREE_MODE_MAX_N}, got {n}"
        )
    if not erdos_gallai_ok(degrees):
        return
    yield from _generate(n, degrees, connected_only, max_results, biggest)


def all_graphs(n: int, connected_only: bool = False, max_results: Optional[int] = None,
               biggest: bool = False) -> Iterator[Graph]:
    """Census of all graphs on n vertices, one representative per class."""
    if n > CENSUS_MAX_N:
        raise ScopeRefusal(f"census enumeration supports n <= {CENSUS_MAX_N}, got {n}")
    if n < 1:
        raise ValueError("n must be positive")
    for g in _generate(n, None, connected_only, max_results, biggest):
        # census positions carry no degree classes, so re-canonicalize
        yield canonical_form(g)[0]


def sequence_realizable_by_search(degrees: Sequence[int]) -> bool:
    """Realizability decided by attempting generation (no Erdos-Gallai).

    Exists to cross-validate the Erdos-Gallai pre-check; exhaustive, so
    keep n small.
    """
    degrees = tuple(int(x) for x in degrees)
    n = len(degrees)
    if any(d < 0 or d > n - 1 for d in degrees):
        return False
    if sum(degrees) % 2:
        return False
    for _ in _generate(n, degrees, False, 1, False):
        return True
    return False
