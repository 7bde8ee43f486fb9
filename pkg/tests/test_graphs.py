import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spectral_ds.canon import are_isomorphic, canonical_form
from spectral_ds.graphs import (
    Graph,
    GraphError,
    build_named,
    complement,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    join,
    multicone,
    path_graph,
    petersen_graph,
    star_graph,
    structure_report,
)


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    bits = draw(st.integers(0, 2 ** (n * (n - 1) // 2) - 1))
    edges = []
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if bits >> k & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def random_permutation(rng, n):
    perm = list(range(n))
    rng.shuffle(perm)
    return tuple(perm)


class TestConstructors:
    def test_petersen(self):
        p = petersen_graph()
        assert p.n == 10
        assert p.num_edges == 15
        assert p.degree_sequence() == (3,) * 10
        rep = structure_report(p)
        assert rep.connected and rep.regular == 3
        assert not rep.bipartite
        assert rep.triangles == 0

    def test_single_vertex(self):
        g = build_named("K1")
        assert g.n == 1 and g.num_edges == 0
        rep = structure_report(g)
        assert rep.component_count == 1
        assert rep.components[0].bipartite
        assert rep.components[0].balanced is False  # isolated vertex: unbalanced

    def test_c4(self):
        g = cycle_graph(4)
        assert g.degree_sequence() == (2, 2, 2, 2)
        rep = structure_report(g)
        assert rep.bipartite and rep.components[0].balanced

    def test_named_forms(self):
        assert build_named("K5").num_edges == 10
        assert build_named("C7").n == 7
        assert build_named("P4").num_edges == 3
        assert build_named("K1,4").degree_sequence() == (4, 1, 1, 1, 1)
        assert build_named("3K1").num_edges == 0
        assert build_named("petersen").n == 10

    def test_named_errors(self):
        with pytest.raises(GraphError):
            build_named("Q3")
        with pytest.raises(GraphError):
            build_named("K0")
        with pytest.raises(GraphError):
            build_named("K65")


class TestOperations:
    def test_join_k1_k1(self):
        assert join(build_named("K1"), build_named("K1")).rows == complete_graph(2).rows

    def test_join_cone_over_petersen(self):
        g = join(build_named("K1"), petersen_graph())
        assert g.n == 11 and g.num_edges == 25
        assert g.degree_sequence() == (10,) + (4,) * 10

    def test_join_k2_petersen(self):
        g = join(complete_graph(2), petersen_graph())
        assert g.n == 12 and g.num_edges == 36

    def test_join_overflow(self):
        with pytest.raises(GraphError):
            join(complete_graph(33), complete_graph(32))

    def test_complement_involution(self):
        p = petersen_graph()
        assert complement(complement(p)).rows == p.rows

    def test_complement_complete(self):
        assert complement(complete_graph(4)).rows == empty_graph(4).rows

    def test_complement_of_join_isolates_apex(self):
        g = complement(join(build_named("K1"), petersen_graph()))
        direct = disjoint_union(build_named("K1"), complement(petersen_graph()))
        assert g.rows == direct.rows
        assert g.degree(0) == 0

    def test_disjoint_union(self):
        two_triangles = disjoint_union(complete_graph(3), complete_graph(3))
        assert two_triangles.n == 6 and two_triangles.num_edges == 6
        assert structure_report(two_triangles).component_count == 2
        g = disjoint_union(build_named("K1"), cycle_graph(4))
        assert g.n == 5 and g.num_edges == 4

    def test_union_overflow(self):
        with pytest.raises(GraphError):
            disjoint_union(complete_graph(40), complete_graph(25))

    def test_multicone(self):
        p = petersen_graph()
        assert multicone(0, p).rows == p.rows
        m1 = multicone(1, p)
        assert m1.degree_sequence() == (10,) + (4,) * 10
        m3 = multicone(3, p)
        assert m3.n == 13 and m3.num_edges == 3 + 30 + 15

    def test_structure_cone(self):
        rep = structure_report(multicone(1, petersen_graph()))
        assert rep.connected
        assert rep.bidegreed == (4, 10)
        assert rep.triangles == 15


class TestTriangles:
    @given(graphs(max_n=7))
    @settings(max_examples=100, deadline=None)
    def test_triangles_match_trace_cubed(self, g):
        # independent count: trace(A^3) via explicit matrix multiplication
        a = g.adjacency_matrix()
        n = g.n
        a2 = [[sum(a[i][k] * a[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        trace3 = sum(sum(a2[i][k] * a[k][i] for k in range(n)) for i in range(n))
        assert structure_report(g).triangles * 6 == trace3


class TestCanonical:
    def test_invariance_many_relabelings(self):
        rng = random.Random(42)
        p = petersen_graph()
        base = canonical_form(p)[0].rows
        for _ in range(100):
            perm = random_permutation(rng, p.n)
            assert canonical_form(p.relabel(perm))[0].rows == base

    @given(graphs(max_n=7), st.randoms(use_true_random=False))
    @settings(max_examples=120, deadline=None)
    def test_invariance_random(self, g, rng):
        perm = random_permutation(rng, g.n)
        assert canonical_form(g.relabel(perm))[0].rows == canonical_form(g)[0].rows

    def test_distinguishes(self):
        assert canonical_form(cycle_graph(4))[0].rows != canonical_form(star_graph(3))[0].rows
        assert not are_isomorphic(cycle_graph(4), star_graph(3))

    def test_apex_first(self):
        g, perm = canonical_form(multicone(1, petersen_graph()))
        assert g.degree(0) == 10  # unique max degree lands at position 0
        assert perm[0] == 0  # apex was vertex 0 already

    def test_isomorphic_pair(self):
        g = cycle_graph(5)
        h = g.relabel((3, 1, 4, 0, 2))
        assert are_isomorphic(g, h)

    def test_canonical_of_empty_and_complete_fast(self):
        # degenerate symmetric cases must not blow up
        for n in (1, 5, 12):
            canonical_form(empty_graph(n))
            canonical_form(complete_graph(n))


class TestDuality:
    @given(graphs(max_n=4), graphs(max_n=3))
    @settings(max_examples=60, deadline=None)
    def test_complement_of_join(self, g, h):
        if g.n + h.n > 7:
            return
        lhs = complement(join(g, h))
        rhs = disjoint_union(complement(g), complement(h))
        assert lhs.rows == rhs.rows


def test_graph_validation():
    with pytest.raises(GraphError):
        Graph(2, (1, 0))  # asymmetric
    with pytest.raises(GraphError):
        Graph(1, (1,))  # self-loop
    with pytest.raises(GraphError):
        Graph(0, ())
    with pytest.raises(GraphError):
        empty_graph(65)
