from fractions import Fraction

import pytest

from spectral_ds.closed_forms import (
    FormulaHypothesisError,
    audit_recorded_multicone_spectra,
    complement_q_spectrum_regular,
    join_charpoly_adjacency,
    join_charpoly_q_regular,
    laplacian_join_complement,
    multicone_petersen_charpoly,
    multicone_petersen_spectrum,
)
from spectral_ds.graphs import (
    build_named,
    complement,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    join,
    multicone,
    path_graph,
    petersen_graph,
)
from spectral_ds.intpoly import IntPoly, poly_from_roots, power_sums
from spectral_ds.spectra import MatrixKind, charpoly, spectrum, spectrum_from_charpoly

A, L, Q = MatrixKind.A, MatrixKind.L, MatrixKind.Q


def regular_pool():
    """Regular test graphs with their degrees, orders <= 10."""
    pool = []
    for n in range(1, 8):
        pool.append((complete_graph(n), n - 1))
    for n in range(3, 10):
        pool.append((cycle_graph(n), 2))
    for n in range(1, 6):
        pool.append((empty_graph(n), 0))
    for a in range(2, 5):
        pool.append((complete_bipartite(a, a), a))
    pool.append((petersen_graph(), 3))
    return pool


class TestJoinAdjacency:
    def test_cone_over_petersen(self):
        p1 = charpoly(build_named("K1"), A)
        p2 = charpoly(petersen_graph(), A)
        got = join_charpoly_adjacency(p1, 0, 1, p2, 3, 10)
        assert got == poly_from_roots([5] + [1] * 5 + [-2] * 5)

    def test_k2(self):
        one = charpoly(build_named("K1"), A)
        assert join_charpoly_adjacency(one, 0, 1, one, 0, 1) == IntPoly([-1, 0, 1])

    def test_thirty_regular_pairs_match_oracle(self):
        pool = regular_pool()
        pairs = [(pool[i % len(pool)], pool[(i * 7 + 3) % len(pool)]) for i in range(30)]
        for (g, rg), (h, rh) in pairs:
            want = charpoly(join(g, h), A)
            got = join_charpoly_adjacency(charpoly(g, A), rg, g.n, charpoly(h, A), rh, h.n)
            assert got == want

    def test_rejects_nonregular(self):
        p = charpoly(path_graph(4), A)
        with pytest.raises(FormulaHypothesisError):
            join_charpoly_adjacency(p, 1, 4, charpoly(complete_graph(3), A), 2, 3)


class TestJoinSignless:
    def test_cone_over_petersen(self):
        got = join_charpoly_q_regular(charpoly(build_named("K1"), Q), 0, 1,
                                      charpoly(petersen_graph(), Q), 3, 10)
        assert got == poly_from_roots([12] + [5] * 6 + [2] * 4)

    def test_two_clique_cone_surd(self):
        got = join_charpoly_q_regular(charpoly(complete_graph(2), Q), 1, 2,
                                      charpoly(petersen_graph(), Q), 3, 10)
        # f(x) = x^2 - 20x + 76 appears as the surd factor (roots (20 +- sqrt(96))/2)
        q, r = got.divmod_exact(IntPoly([76, -20, 1]))
        assert r.is_zero
        assert got == charpoly(multicone(2, petersen_graph()), Q)

    def test_single_edge(self):
        one = charpoly(build_named("K1"), Q)
        assert join_charpoly_q_regular(one, 0, 1, one, 0, 1) == IntPoly([0, -2, 1])

    def test_thirty_regular_pairs_match_oracle(self):
        pool = regular_pool()
        pairs = [(pool[i % len(pool)], pool[(i * 5 + 2) % len(pool)]) for i in range(30)]
        for (g, rg), (h, rh) in pairs:
            want = charpoly(join(g, h), Q)
            got = join_charpoly_q_regular(charpoly(g, Q), rg, g.n, charpoly(h, Q), rh, h.n)
            assert got == want


class TestComplementQ:
    def test_petersen(self):
        mapped = complement_q_spectrum_regular(spectrum(petersen_graph(), Q), 10, 3)
        assert mapped.to_charpoly() == poly_from_roots([12] + [7] * 4 + [4] * 5)

    def test_complete_to_empty(self):
        mapped = complement_q_spectrum_regular(spectrum(complete_graph(4), Q), 4, 3)
        assert mapped.to_charpoly() == IntPoly([0, 0, 0, 0, 1])  # x^4

    def test_c5_matches_oracle(self):
        mapped = complement_q_spectrum_regular(spectrum(cycle_graph(5), Q), 5, 2)
        assert mapped.to_charpoly() == charpoly(complement(cycle_graph(5)), Q)

    def test_all_small_regular_graphs(self):
        for g, r in regular_pool():
            if g.n > 8:
                continue
            mapped = complement_q_spectrum_regular(spectrum(g, Q), g.n, r)
            assert mapped.to_charpoly() == charpoly(complement(g), Q)

    def test_rejects_wrong_degree(self):
        with pytest.raises(ValueError):
            complement_q_spectrum_regular(spectrum(petersen_graph(), Q), 10, 4)


class TestLaplacianJoinComplement:
    def test_join_cone_formula(self):
        for w in (1, 2, 3):
            kw = spectrum(complete_graph(w), L)
            p = spectrum(petersen_graph(), L)
            got = laplacian_join_complement("join", kw, p)
            want = poly_from_roots([w + 10] * w + [5 + w] * 4 + [2 + w] * 5 + [0])
            assert got.to_charpoly() == want

    def test_complement_of_cone(self):
        cone = multicone(1, petersen_graph())
        got = laplacian_join_complement("complement", spectrum(cone, L))
        assert got.to_charpoly() == charpoly(complement(cone), L)
        # exact value: isolated apex plus the 6-regular Petersen complement
        assert got.to_charpoly() == poly_from_roots([8] * 5 + [5] * 4 + [0] * 2)

    def test_complement_of_complete(self):
        got = laplacian_join_complement("complement", spectrum(complete_graph(5), L))
        assert got.to_charpoly() == IntPoly([0, 0, 0, 0, 0, 1])

    def test_requires_zero(self):
        bogus = spectrum_from_charpoly(poly_from_roots([3, 1]))
        with pytest.raises(ValueError):
            laplacian_join_complement("complement", bogus)

    def test_complement_matches_oracle_on_census(self):
        from spectral_ds.enumeration import all_graphs

        for g in all_graphs(5):
            got = laplacian_join_complement("complement", spectrum(g, L))
            assert got.to_charpoly() == charpoly(complement(g), L)

    def test_join_matches_oracle_on_pairs(self):
        from spectral_ds.enumeration import all_graphs

        small = list(all_graphs(3)) + list(all_graphs(2))
        count = 0
        for g in small:
            for h in small:
                got = laplacian_join_complement("join", spectrum(g, L), spectrum(h, L))
                assert got.to_charpoly() == charpoly(join(g, h), L)
                count += 1
        assert count >= 20


class TestMulticoneFamily:
    @pytest.mark.parametrize("w", range(1, 7))
    @pytest.mark.parametrize("kind", [A, L, Q])
    def test_matches_oracle(self, w, kind):
        g = multicone(w, petersen_graph())
        assert multicone_petersen_charpoly(w, kind) == charpoly(g, kind)

    def test_w1_adjacency(self):
        s = multicone_petersen_spectrum(1, A)
        assert [(v.exact_str(), m) for v, m in s.entries] == [("5", 1), ("1", 5), ("-2", 5)]

    def test_w2_laplacian(self):
        s = multicone_petersen_spectrum(2, L)
        assert s.to_charpoly() == poly_from_roots([12, 12, 7, 7, 7, 7, 4, 4, 4, 4, 4, 0])

    def test_trace_identities(self):
        for w in range(1, 7):
            two_m = w * w + 19 * w + 30
            for kind, want in ((A, 0), (L, two_m), (Q, two_m)):
                p = multicone_petersen_charpoly(w, kind)
                assert power_sums(p, 1)[1] == want

    def test_w0_flagged(self):
        s = multicone_petersen_spectrum(0, Q)
        assert s.note is not None
        assert s.to_charpoly() == charpoly(petersen_graph(), Q)

    def test_general_w_q_surd_factor(self):
        # the two non-integer Q-eigenvalues come from x^2-(3w+14)x+(2w^2+10w+48)
        for w in (3, 4, 5):
            p = multicone_petersen_charpoly(w, Q)
            f = IntPoly([2 * w * w + 10 * w + 48, -(3 * w + 14), 1])
            q, r = p.divmod_exact(f)
            assert r.is_zero


class TestAudit:
    def test_flags_known_discrepancies(self):
        audits = audit_recorded_multicone_spectra()
        assert len(audits) == 3
        assert all(not a.agrees for a in audits)

    def test_trace_evidence(self):
        audits = {a.label: a for a in audit_recorded_multicone_spectra()}
        one = audits["Q-spectrum of the 1-clique cone over the Petersen graph"]
        assert one.trace_computed == 50 == one.trace_expected
        assert one.trace_recorded == 54.0  # recorded multiset cannot be a Q-spectrum
        two = audits["Q-spectrum of the 2-clique cone over the Petersen graph"]
        assert two.trace_computed == 72 == two.trace_expected
        assert two.trace_recorded == 72.0  # trace agrees; the surd is still wrong
        compl = audits["L-spectrum of the complement of the 1-clique cone over the Petersen graph"]
        assert compl.trace_computed == 60 == compl.trace_expected
        assert compl.trace_recorded == 69.0

    def test_computed_sides(self):
        audits = {a.label: a for a in audit_recorded_multicone_spectra()}
        assert audits["Q-spectrum of the 1-clique cone over the Petersen graph"].computed == \
            "{[12]^1, [5]^6, [2]^4}"
