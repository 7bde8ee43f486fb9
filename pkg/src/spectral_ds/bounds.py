"""Eigenvalue/degree bounds and their exact equality characterizations.

Each check returns a BoundReport; a report whose hypothesis holds but
whose bound fails indicates a bug somewhere in the exact machinery, so
`run_all_checks` raises InvariantViolation in that case.  Comparisons
against integers are exact (via enclosure refinement when an eigenvalue
is only known numerically); comparisons against irrational bounds use
exact surd arithmetic when both sides are quadratic and a 1e-9 numeric
tolerance otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import InvariantViolation
from .graphs import Graph, complement, structure_report
from .spectra import MatrixKind, SpectrumSummary, charpoly, spectrum
from .values import EigenValue, Surd

NUMERIC_TOL = 1e-9


@dataclass(frozen=True)
class BoundReport:
    name: str
    applicable: bool
    holds: Optional[bool] = None  # None when not applicable
    equality: Optional[bool] = None
    classification: Optional[str] = None
    lhs: Optional[float] = None
    rhs: Optional[float] = None
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "applicable": self.applicable,
            "holds": self.holds,
            "equality": self.equality,
            "classification": self.classification,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "detail": self.detail,
        }


def eigenvalue_at(s: SpectrumSummary, k: int) -> EigenValue:
    """k-th largest eigenvalue, 1-indexed, counting multiplicity."""
    seen = 0
    for v, m in s.entries:
        seen += m
        if seen >= k:
            return v
    raise IndexError(f"spectrum has only {seen} eigenvalues, asked for {k}")


def count_vs_rational(s: SpectrumSummary, r: Fraction) -> tuple[int, int]:
    """(number of eigenvalues > r, multiplicity of r), exactly."""
    greater = equal = 0
    for v, m in s.entries:
        c = v.compare_rational(r)
        if c > 0:
            greater += m
        elif c == 0:
            equal += m
    return greater, equal


# -- the four signless-Laplacian degree bounds ---------------------------------


def check_q_degree_bounds(g: Graph, qspec: Optional[SpectrumSummary] = None) -> list[BoundReport]:
    """Evaluate the Q-eigenvalue vs degree bounds on a concrete graph.

    Covers: the smallest eigenvalue against the minimum degree (connected
    graphs), the largest against adjacent degree sums, the second largest
    against the second degree with its equality rider, and the n-2 cap
    with its exact complement-structure biconditional.
    """
    if qspec is None:
        qspec = spectrum(g, MatrixKind.Q)
    degs = sorted(g.degrees(), reverse=True)
    n = g.n
    sr = structure_report(g)
    out: list[BoundReport] = []

    # smallest eigenvalue < minimum degree, connected graphs on > 1 vertex
    if sr.connected and n > 1:
        qn = qspec.smallest
        delta = degs[-1]
        holds = qn.compare_rational(Fraction(delta)) < 0
        out.append(BoundReport(
            name="smallest_q_below_min_degree", applicable=True, holds=holds,
            lhs=qn.approx, rhs=float(delta),
            detail=f"q_n={qn.exact_str() or qn.approx} vs min degree {delta}",
        ))
    else:
        out.append(BoundReport(name="smallest_q_below_min_degree", applicable=False,
                               detail="needs a connected graph on more than one vertex"))

    # adjacent degree sums bracket the largest eigenvalue
    if g.num_edges >= 1:
        sums = [g.degree(u) + g.degree(v) for u, v in g.edges()]
        lo, hi = min(sums), max(sums)
        q1 = qspec.largest
        holds = q1.compare_rational(Fraction(lo)) >= 0 and q1.compare_rational(Fraction(hi)) <= 0
        out.append(BoundReport(
            name="largest_q_between_adjacent_degree_sums", applicable=True, holds=holds,
            lhs=float(lo), rhs=float(hi),
            detail=f"{lo} <= q_1={q1.exact_str() or q1.approx} <= {hi}",
        ))
    else:
        out.append(BoundReport(name="largest_q_between_adjacent_degree_sums",
                               applicable=False, detail="needs at least one edge"))

    # second largest eigenvalue >= second degree - 1, with the equality rider
    if n >= 2:
        q2 = eigenvalue_at(qspec, 2)
        d2 = degs[1]
        cmp = q2.compare_rational(Fraction(d2 - 1))
        holds = cmp >= 0
        equality = cmp == 0
        rider_ok = (not equality) or degs[0] == d2
        out.append(BoundReport(
            name="second_q_vs_second_degree", applicable=True,
            holds=holds and rider_ok, equality=equality,
            lhs=q2.approx, rhs=float(d2 - 1),
            detail=f"q_2={q2.exact_str() or q2.approx} vs d_2-1={d2 - 1}"
                   + ("; equality forces d_1=d_2" if equality else ""),
        ))

    # q_2 <= n-2, and the exact biconditional against complement structure
    if n > 2:
        q2 = eigenvalue_at(qspec, 2)
        cap_ok = q2.compare_rational(Fraction(n - 2)) <= 0
        greater, equal = count_vs_rational(qspec, Fraction(n - 2))
        comp_sr = structure_report(complement(g))
        bic_ok = True
        bad_k = None
        for k in range(1, n):
            lhs = greater <= k <= greater + equal - 1
            rhs = comp_sr.balanced_bipartite_count == k or comp_sr.bipartite_component_count == k + 1
            if lhs != rhs:
                bic_ok = False
                bad_k = k
                break
        out.append(BoundReport(
            name="second_q_cap_with_complement_biconditional", applicable=True,
            holds=cap_ok and bic_ok,
            equality=greater <= 1 and greater + equal >= 2,  # q_2 == n-2 exactly
            lhs=q2.approx, rhs=float(n - 2),
            detail=(f"multiplicity of n-2: {equal}; complement has "
                    f"{comp_sr.balanced_bipartite_count} balanced / "
                    f"{comp_sr.bipartite_component_count} bipartite components"
                    + (f"; biconditional fails at k={bad_k}" if bad_k else "")),
        ))
    else:
        out.append(BoundReport(name="second_q_cap_with_complement_biconditional",
                               applicable=False, detail="needs order > 2"))
    return out


# -- spectral radius bound ------------------------------------------------------


def spectral_radius_bound(n: int, m: int, delta: int) -> EigenValue:
    """The bound (delta-1)/2 + sqrt(2m - n*delta + (delta+1)^2/4), exactly.

    Returned as ((delta-1) + sqrt(D))/2 with D = 8m - 4n*delta + (delta+1)^2.
    """
    D = 8 * m - 4 * n * delta + (delta + 1) ** 2
    if D < 0:
        raise ValueError(f"negative radicand: n={n}, m={m}, delta={delta} are inconsistent")
    s = int(D**0.5)
    while s * s > D:
        s -= 1
    while (s + 1) * (s + 1) <= D:
        s += 1
    if s * s == D:
        val = Fraction(delta - 1 + s, 2)
        return EigenValue.from_rational(val, None)
    surd = Surd(p=delta - 1, disc=D, q=2, sign=+1)
    return EigenValue(approx=float(surd), surd=surd)


def values_equal_exact_or_numeric(a: EigenValue, b: EigenValue, tol: float = NUMERIC_TOL) -> bool:
    """Exact equality when both sides are exact; numeric tolerance otherwise."""
    if a.is_exact and b.is_exact:
        if a.rational is not None and b.rational is not None:
            return a.rational == b.rational
        if a.surd is not None and b.surd is not None:
            return a.surd.eq_exact(b.surd)
        return False  # rational vs irrational surd are never equal
    return abs(a.approx - b.approx) < tol


def check_spectral_radius_bound(g: Graph, aspec: Optional[SpectrumSummary] = None) -> BoundReport:
    """Bound check plus the regular-or-bidegreed equality classification."""
    sr = structure_report(g)
    if not sr.connected:
        return BoundReport(name="spectral_radius_vs_min_degree_bound", applicable=False,
                           detail="stated for connected graphs only")
    if aspec is None:
        aspec = spectrum(g, MatrixKind.A)
    rho = aspec.largest
    n, m, delta = g.n, g.num_edges, sr.min_degree
    bound = spectral_radius_bound(n, m, delta)
    equality = values_equal_exact_or_numeric(rho, bound)
    if sr.regular is not None:
        classification = "regular"
    elif sr.bidegreed is not None and set(sr.bidegreed) == {delta, n - 1}:
        classification = "bidegreed-delta-or-n-1"
    else:
        classification = "none"
    # the bound must hold, and equality must characterize the structure both ways
    inequality_ok = equality or rho.approx <= bound.approx + NUMERIC_TOL
    holds = inequality_ok and (equality == (classification != "none"))
    return BoundReport(
        name="spectral_radius_vs_min_degree_bound", applicable=True,
        holds=holds, equality=equality, classification=classification,
        lhs=rho.approx, rhs=bound.approx,
        detail=f"rho={rho.exact_str() or rho.approx} vs bound={bound.exact_str() or bound.approx}",
    )


def infer_min_degree(n: int, m: int, rho: EigenValue) -> set[int]:
    """All minimum degrees at which the spectral radius bound is saturated.

    A graph whose radius meets the bound is regular or bidegreed with
    degrees delta and n-1, so saturation pins down its minimum degree;
    an empty set just means the bound is strict for every candidate.
    """
    out = set()
    for delta in range(1, n):
        D = 8 * m - 4 * n * delta + (delta + 1) ** 2
        if D < 0:
            continue
        bound = spectral_radius_bound(n, m, delta)
        if values_equal_exact_or_numeric(rho, bound):
            out.add(delta)
    return out


# -- Laplacian / structural equivalences ----------------------------------------


def check_zero_multiplicity_counts(g: Graph) -> list[BoundReport]:
    """Multiplicity of 0: components under L, bipartite components under Q."""
    sr = structure_report(g)
    out = []
    for kind, expected, label in (
        (MatrixKind.L, sr.component_count, "components"),
        (MatrixKind.Q, sr.bipartite_component_count, "bipartite components"),
    ):
        p = charpoly(g, kind)
        mult = 0
        while p[mult] == 0:
            mult += 1
        out.append(BoundReport(
            name=f"zero_multiplicity_counts_{label.replace(' ', '_')}", applicable=True,
            holds=mult == expected, lhs=float(mult), rhs=float(expected),
            detail=f"x^{mult} divides the {kind}-polynomial; graph has {expected} {label}",
        ))
    return out


def check_bipartite_q_equals_l(g: Graph) -> BoundReport:
    sr = structure_report(g)
    same = charpoly(g, MatrixKind.Q) == charpoly(g, MatrixKind.L)
    if sr.bipartite:
        return BoundReport(name="bipartite_q_polynomial_equals_l", applicable=True,
                           holds=same, detail="bipartite graph: Q and L polynomials must agree")
    return BoundReport(name="bipartite_q_polynomial_equals_l", applicable=False,
                       detail="graph not bipartite", holds=None, equality=same)


def check_three_l_eigenvalue_structure(g: Graph) -> BoundReport:
    """Connected bipartite graphs with three distinct L-eigenvalues are
    complete regular bipartite or stars, and Laplacian-integral."""
    sr = structure_report(g)
    if not (sr.connected and sr.bipartite):
        return BoundReport(name="three_l_eigenvalues_complete_bipartite_or_star",
                           applicable=False, detail="needs a connected bipartite graph")
    s = spectrum(g, MatrixKind.L)
    if s.distinct_count() != 3:
        return BoundReport(name="three_l_eigenvalues_complete_bipartite_or_star",
                           applicable=False, detail="does not have three distinct L-eigenvalues")
    integral = all(v.rational is not None and v.rational.denominator == 1 for v, _ in s.entries)
    comp = sr.components[0]
    # complete regular bipartite K_{a,a} or star K_{1,b}: check by structure
    degs = sorted(set(g.degrees()))
    is_star = g.num_edges == g.n - 1 and max(g.degrees()) == g.n - 1
    half = g.n // 2
    is_balanced_complete = (
        g.n % 2 == 0
        and degs == [half]
        and g.num_edges == half * half
        and comp.bipartite
    )
    return BoundReport(
        name="three_l_eigenvalues_complete_bipartite_or_star", applicable=True,
        holds=integral and (is_star or is_balanced_complete),
        detail=f"integral={integral}, star={is_star}, balanced complete bipartite={is_balanced_complete}",
    )


def check_order_in_l_spectrum_iff_join(g: Graph) -> BoundReport:
    """n is an L-eigenvalue exactly when the complement is disconnected."""
    p = charpoly(g, MatrixKind.L)
    lhs = p.eval_int(g.n) == 0
    rhs = not complement(g).is_connected()
    return BoundReport(
        name="order_in_l_spectrum_iff_complement_disconnected", applicable=True,
        holds=lhs == rhs, equality=lhs,
        detail=f"L-polynomial at n: {'root' if lhs else 'nonzero'}; complement "
               f"{'disconnected' if rhs else 'connected'}",
    )


def check_regular_iff_radius_is_average(g: Graph, aspec: Optional[SpectrumSummary] = None) -> BoundReport:
    if aspec is None:
        aspec = spectrum(g, MatrixKind.A)
    rho = aspec.largest.approx
    avg = 2 * g.num_edges / g.n
    numeric = abs(rho - avg) < NUMERIC_TOL
    actual = structure_report(g).regular is not None
    return BoundReport(
        name="regular_iff_radius_equals_average_degree", applicable=True,
        holds=numeric == actual, equality=numeric,
        lhs=rho, rhs=avg,
        detail=f"rho={rho:.12g}, average degree={avg:.12g}, regular={actual}",
    )


def check_join_detection(g: Graph, qspec: Optional[SpectrumSummary] = None) -> BoundReport:
    """q_1 > n-2 with n-2 of multiplicity >= 2 forces a disconnected complement."""
    if qspec is None:
        qspec = spectrum(g, MatrixKind.Q)
    n = g.n
    greater, equal = count_vs_rational(qspec, Fraction(n - 2))
    premise = equal >= 2 and qspec.largest.compare_rational(Fraction(n - 2)) > 0
    if not premise:
        return BoundReport(name="repeated_n_minus_2_detects_join", applicable=False,
                           detail="premise not met")
    disconnected = not complement(g).is_connected()
    return BoundReport(name="repeated_n_minus_2_detects_join", applicable=True,
                       holds=disconnected,
                       detail=f"eigenvalue {n - 2} has multiplicity {equal} and q_1 > {n - 2}; "
                              f"complement {'disconnected' if disconnected else 'connected'}")


def run_all_checks(g: Graph) -> list[BoundReport]:
    """Every applicable check on one graph; raises on any violated bound."""
    qspec = spectrum(g, MatrixKind.Q)
    aspec = spectrum(g, MatrixKind.A)
    reports = []
    reports += check_q_degree_bounds(g, qspec)
    reports += check_zero_multiplicity_counts(g)
    reports.append(check_spectral_radius_bound(g, aspec))
    reports.append(check_bipartite_q_equals_l(g))
    reports.append(check_three_l_eigenvalue_structure(g))
    reports.append(check_order_in_l_spectrum_iff_join(g))
    reports.append(check_regular_iff_radius_is_average(g, aspec))
    reports.append(check_join_detection(g, qspec))
    failures = [r.name for r in reports if r.applicable and r.holds is False]
    if failures:
        raise InvariantViolation(f"bound checks failed on a valid input: {failures}")
    return reports
