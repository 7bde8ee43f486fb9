"""Closed-form spectra for joins, complements, and cones over the Petersen graph.

These operate on polynomials and spectrum summaries rather than graphs,
mirroring how such formulas are stated: the join formulas take the
characteristic polynomials of the two regular parts, the complement map
takes a spectrum, and each result can be cross-checked exactly against
the direct computation from the constructed graph.

Every formula's regularity hypothesis is enforced at runtime: the exact
polynomial divisions leave no remainder exactly when the inputs belong
to regular graphs with the stated degrees and orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .graphs import petersen_graph
from .intpoly import IntPoly, poly_from_roots
from .spectra import MatrixKind, SpectrumSummary, charpoly, spectrum_from_charpoly
from .values import EigenValue


class FormulaHypothesisError(ValueError):
    """A closed-form's regularity hypothesis failed (division left a remainder)."""


def _exact_div(p: IntPoly, d: IntPoly, context: str) -> IntPoly:
    try:
        q, r = p.divmod_exact(d)
    except ValueError as exc:
        raise FormulaHypothesisError(f"{context}: {exc}") from exc
    if not r.is_zero:
        raise FormulaHypothesisError(f"{context}: division left a remainder; inputs are not regular as claimed")
    return q


def join_charpoly_adjacency(p1: IntPoly, r1: int, n1: int,
                            p2: IntPoly, r2: int, n2: int) -> IntPoly:
    """Adjacency characteristic polynomial of the join of two regular graphs.

    p1, p2 are the adjacency polynomials of an r1-regular graph on n1
    vertices and an r2-regular graph on n2 vertices.  The result is
    p1*p2 / ((x-r1)(x-r2)) * ((x-r1)(x-r2) - n1*n2), computed exactly.
    """
    cross = IntPoly([-r1, 1]) * IntPoly([-r2, 1])
    core = _exact_div(p1 * p2, cross, "adjacency join formula")
    return core * (cross - IntPoly([n1 * n2]))


def join_charpoly_q_regular(q1: IntPoly, r1: int, n1: int,
                            q2: IntPoly, r2: int, n2: int) -> IntPoly:
    """Signless-Laplacian characteristic polynomial of the join of regular graphs.

    q1(x - n2) * q2(x - n1) / ((x - 2r1 - n2)(x - 2r2 - n1)) * f(x)
    with f(x) = x^2 - (2(r1 + r2) + (n1 + n2)) x + 2(2 r1 r2 + r1 n1 + r2 n2).
    """
    shifted = q1.taylor_shift(-n2) * q2.taylor_shift(-n1)
    denom = IntPoly([-(2 * r1 + n2), 1]) * IntPoly([-(2 * r2 + n1), 1])
    core = _exact_div(shifted, denom, "signless-Laplacian join formula")
    f = IntPoly([2 * (2 * r1 * r2 + r1 * n1 + r2 * n2), -(2 * (r1 + r2) + (n1 + n2)), 1])
    return core * f


def _merge_entries(entries: list[tuple[EigenValue, int]]) -> SpectrumSummary:
    merged: list[tuple[EigenValue, int]] = []
    for v, m in entries:
        for i, (u, mu) in enumerate(merged):
            if v.eq_exact(u):
                merged[i] = (u, mu + m)
                break
        else:
            merged.append((v, m))
    merged.sort(key=lambda e: -e[0].approx)
    return SpectrumSummary(tuple(merged))


def complement_q_spectrum_regular(qspec: SpectrumSummary, n: int, r: int) -> SpectrumSummary:
    """Signless-Laplacian spectrum of the complement of an r-regular graph.

    Takes the Q-spectrum of the graph itself (largest eigenvalue 2r),
    removes one copy of that largest eigenvalue, maps every remaining
    eigenvalue q to n - 2 - q, and adds the new largest 2(n - r - 1).
    """
    if qspec.order != n:
        raise ValueError(f"spectrum has {qspec.order} entries, expected {n}")
    top = qspec.largest
    if top.rational != Fraction(2 * r):
        raise ValueError(f"largest Q-eigenvalue is {top.exact_str() or top.approx}, "
                         f"but an {r}-regular graph needs {2 * r}")
    out: list[tuple[EigenValue, int]] = []
    first = True
    for v, m in qspec.entries:
        if first:
            m -= 1
            first = False
        if m:
            out.append((v.reflect_about(n - 2), m))
    new_top = Fraction(2 * (n - r - 1))
    out.append((EigenValue.from_rational(new_top, IntPoly([-int(new_top), 1])), 1))
    return _merge_entries(out)


def laplacian_join_complement(mode: str,
                              spec: SpectrumSummary,
                              other: Optional[SpectrumSummary] = None) -> SpectrumSummary:
    """Laplacian spectrum of a complement or of a join, from Laplacian spectra.

    mode "complement": drop one zero eigenvalue, map the remaining
    values x to n - x, append a zero.  mode "join" (needs `other`):
    {n + m} plus each remaining eigenvalue of the first spectrum shifted
    by m, each of the second shifted by n, and a zero.
    """
    def drop_one_zero(s: SpectrumSummary) -> list[tuple[EigenValue, int]]:
        if s.multiplicity_of_rational(Fraction(0)) == 0:
            raise ValueError("a Laplacian spectrum must contain the eigenvalue 0")
        out = []
        for v, m in s.entries:
            if v.rational == 0:
                m -= 1
            if m:
                out.append((v, m))
        return out

    zero = EigenValue.from_rational(Fraction(0), IntPoly([0, 1]))
    if mode == "complement":
        n = spec.order
        entries = [(v.reflect_about(n), m) for v, m in drop_one_zero(spec)]
        entries.append((zero, 1))
        return _merge_entries(entries)
    if mode == "join":
        if other is None:
            raise ValueError("join mode needs two spectra")
        n, m = spec.order, other.order
        entries = [(v.add_const(m), mult) for v, mult in drop_one_zero(spec)]
        entries += [(v.add_const(n), mult) for v, mult in drop_one_zero(other)]
        entries.append((EigenValue.from_rational(Fraction(n + m), IntPoly([-(n + m), 1])), 1))
        entries.append((zero, 1))
        return _merge_entries(entries)
    raise ValueError(f"unknown mode {mode!r}")


# -- the multicone family over the Petersen graph -----------------------------


@lru_cache(maxsize=None)
def _petersen_charpoly(kind: MatrixKind) -> IntPoly:
    return charpoly(petersen_graph(), kind)


def complete_graph_q_charpoly(w: int) -> IntPoly:
    """Q-polynomial of the complete graph: root 2w-2 once, w-2 with multiplicity w-1."""
    return poly_from_roots([2 * w - 2] + [w - 2] * (w - 1))


def multicone_petersen_charpoly(w: int, kind: MatrixKind) -> IntPoly:
    """Characteristic polynomial of the w-clique cone over the Petersen graph.

    The A and Q kinds come from the regular-join formulas (computed, not
    transcribed); the L kind from the join rule for Laplacian spectra.
    Valid for any w >= 0; w = 0 is the Petersen graph itself.
    """
    if w < 0:
        raise ValueError("clique size must be >= 0")
    if w == 0:
        return _petersen_charpoly(kind)
    if kind is MatrixKind.A:
        pk = poly_from_roots([w - 1] + [-1] * (w - 1))
        return join_charpoly_adjacency(pk, w - 1, w, _petersen_charpoly(kind), 3, 10)
    if kind is MatrixKind.Q:
        return join_charpoly_q_regular(complete_graph_q_charpoly(w), w - 1, w,
                                       _petersen_charpoly(kind), 3, 10)
    # Laplacian: join rule on exact spectra
    lk = poly_from_roots([w] * (w - 1) + [0])
    kw_spec = spectrum_from_charpoly(lk)
    p_spec = spectrum_from_charpoly(_petersen_charpoly(kind))
    return laplacian_join_complement("join", kw_spec, p_spec).to_charpoly()


def multicone_petersen_spectrum(w: int, kind: MatrixKind) -> SpectrumSummary:
    """Exact spectrum of the w-clique cone over the Petersen graph.

    w = 0 returns the Petersen graph's own spectrum, flagged in the
    summary note.
    """
    p = multicone_petersen_charpoly(w, kind)
    note = "w=0: spectrum of the Petersen graph itself" if w == 0 else None
    s = spectrum_from_charpoly(p, note=note)
    return s


# -- audit of hand-recorded values --------------------------------------------

# Hand-recorded spectra for the small cones, kept for regression auditing.
# The Q-kind entries for w=1 and w=2 are known to disagree with exact
# computation (wrong low multiplicity-4 eigenvalue and wrong surd); the
# audit below is expected to flag exactly those discrepancies.
RECORDED_MULTICONE_Q_SPECTRA: dict[int, list[tuple[str, int]]] = {
    1: [("12", 1), ("5", 6), ("3", 4)],
    2: [("(20+sqrt(48))/2", 1), ("10", 1), ("6", 5), ("3", 4), ("(20-sqrt(48))/2", 1)],
}

# Same idea for the Laplacian spectrum of the complement of the 1-clique
# cone: the recorded multiset disagrees with the exact complement rule
# (and with the directly built complement graph), which gives {8^5, 5^4, 0^2}.
RECORDED_COMPLEMENT_L_SPECTRUM_W1: list[tuple[str, int]] = [("0", 2), ("9", 5), ("6", 4)]


@dataclass(frozen=True)
class SpectrumClaimAudit:
    """Comparison of a computed spectrum against a hand-recorded one."""

    label: str
    computed: str
    recorded: str
    agrees: bool
    trace_computed: int
    trace_recorded: float
    trace_expected: int  # sum of degrees of the actual graph

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "computed": self.computed,
            "recorded": self.recorded,
            "agrees": self.agrees,
            "trace": {
                "computed": self.trace_computed,
                "recorded": self.trace_recorded,
                "expected_degree_sum": self.trace_expected,
            },
        }


def _format_recorded(entries: list[tuple[str, int]]) -> str:
    return "{" + ", ".join(f"[{v}]^{m}" for v, m in entries) + "}"


def _recorded_trace(entries: list[tuple[str, int]]) -> float:
    import re

    total = 0.0
    for v, m in entries:
        match = re.fullmatch(r"\((-?\d+)([+-])sqrt\((\d+)\)\)/(\d+)", v)
        if match:
            p, sgn, disc, q = match.groups()
            val = (int(p) + (1 if sgn == "+" else -1) * int(disc) ** 0.5) / int(q)
        else:
            val = float(Fraction(v))
        total += m * val
    return total


def _audit_one(label: str, computed: SpectrumSummary, recorded: list[tuple[str, int]],
               trace_expected: int) -> SpectrumClaimAudit:
    comp_multiset = sorted((v.exact_str(), m) for v, m in computed.entries)
    p = computed.to_charpoly()
    return SpectrumClaimAudit(
        label=label,
        computed=computed.format(),
        recorded=_format_recorded(recorded),
        agrees=comp_multiset == sorted(recorded),
        trace_computed=-p[p.degree - 1],
        trace_recorded=round(_recorded_trace(recorded), 9),
        trace_expected=trace_expected,
    )


def audit_recorded_multicone_spectra() -> list[SpectrumClaimAudit]:
    """Cross-check the recorded spectra of the small cones against computation.

    The discrepancy report is part of the library's contract: recorded
    values whose traces cannot equal the graph's degree sum are surfaced
    rather than silently replaced.
    """
    out = []
    for w, recorded in sorted(RECORDED_MULTICONE_Q_SPECTRA.items()):
        degree_sum = w * (w - 1) + 20 * w + 30  # clique + cross + Petersen edges, doubled
        out.append(_audit_one(
            f"Q-spectrum of the {w}-clique cone over the Petersen graph",
            multicone_petersen_spectrum(w, MatrixKind.Q), recorded, degree_sum,
        ))
    cone_l = spectrum_from_charpoly(multicone_petersen_charpoly(1, MatrixKind.L))
    compl_l = laplacian_join_complement("complement", cone_l)
    # complement of the cone: isolated apex plus the 6-regular Petersen complement
    out.append(_audit_one(
        "L-spectrum of the complement of the 1-clique cone over the Petersen graph",
        compl_l, RECORDED_COMPLEMENT_L_SPECTRUM_W1, 2 * 30,
    ))
    return out
