"""Exact characteristic polynomials and spectra of A, L = D-A, Q = D+A.

Everything here is exact: characteristic polynomials come from
Faddeev-LeVerrier over the integers (one polynomial per connected
component, multiplied together), multiplicities from square-free
factorization, and eigenvalues in closed form whenever their algebraic
degree is at most two.  Floating point appears only in the `approx`
field of eigenvalues, which exists for display and ordering.

Cospectrality is coefficient-for-coefficient equality of characteristic
polynomials; no tolerances anywhere.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import InvariantViolation
from .graphs import Graph, structure_report
from .intpoly import IntPoly, factor_monic, isolate_real_roots, power_sums
from .values import EigenValue

MOMENT_CAP = 16


class MatrixKind(enum.Enum):
    """Which matrix of the graph is under study."""

    A = "A"  # adjacency
    L = "L"  # Laplacian D - A
    Q = "Q"  # signless Laplacian D + A

    def __str__(self) -> str:
        return self.value


def matrix_of(g: Graph, kind: MatrixKind) -> list[list[int]]:
    n = g.n
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        row = g.rows[i]
        di = bin(row).count("1")
        for j in range(n):
            a = row >> j & 1
            if kind is MatrixKind.A:
                m[i][j] = a
            elif kind is MatrixKind.L:
                m[i][j] = -a
            else:
                m[i][j] = a
        if kind is MatrixKind.L:
            m[i][i] = di
        elif kind is MatrixKind.Q:
            m[i][i] = di
    return m


def _charpoly_dense(m: list[list[int]]) -> IntPoly:
    """det(xI - M) by Faddeev-LeVerrier; every division is exact."""
    n = len(m)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [row[:] for row in m]
    for k in range(1, n + 1):
        trace = sum(mk[i][i] for i in range(n))
        ak, r = divmod(-trace, k)
        if r:
            raise InvariantViolation("Faddeev-LeVerrier division failed")
        coeffs[n - k] = ak
        if k == n:
            break
        for i in range(n):
            mk[i][i] += ak
        nxt = [[0] * n for _ in range(n)]
        for i in range(n):
            mi = m[i]
            row = nxt[i]
            for t in range(n):
                a = mi[t]
                if a:
                    mt = mk[t]
                    for j in range(n):
                        row[j] += a * mt[j]
        mk = nxt
    return IntPoly(coeffs)


def charpoly(g: Graph, kind: MatrixKind) -> IntPoly:
    """Exact characteristic polynomial of the chosen matrix of g."""
    comps = g.components()
    if len(comps) == 1:
        return _charpoly_dense(matrix_of(g, kind))
    p = IntPoly([1])
    for mask in comps:
        p = p * _charpoly_dense(matrix_of(g.induced(mask), kind))
    return p


def cospectral(g: Graph, h: Graph, kind: MatrixKind) -> bool:
    """Exact cospectrality: identical characteristic polynomials."""
    return charpoly(g, kind) == charpoly(h, kind)


# -- spectrum summaries -------------------------------------------------------


@dataclass(frozen=True)
class SpectrumSummary:
    """Eigenvalues with exact multiplicities, sorted descending."""

    entries: tuple[tuple[EigenValue, int], ...]
    note: Optional[str] = None

    @property
    def order(self) -> int:
        return sum(m for _, m in self.entries)

    @property
    def largest(self) -> EigenValue:
        return self.entries[0][0]

    @property
    def smallest(self) -> EigenValue:
        return self.entries[-1][0]

    def multiplicity_of_rational(self, r: Fraction) -> int:
        for v, m in self.entries:
            if v.rational is not None and v.rational == r:
                return m
        return 0

    def distinct_count(self) -> int:
        return len(self.entries)

    def to_charpoly(self) -> IntPoly:
        """Rebuild the monic characteristic polynomial, exactly.

        Rational eigenvalues must be integers, surds must occur in
        conjugate pairs of equal multiplicity, and numeric entries must
        jointly cover all roots of their defining factor with one common
        multiplicity.  All three hold for every spectrum produced here.
        """
        p = IntPoly([1])
        pending: dict[tuple, int] = {}
        numeric_groups: dict[tuple[int, ...], list[int]] = {}
        for v, m in self.entries:
            if v.rational is not None:
                if v.rational.denominator != 1:
                    raise ValueError("non-integral rational eigenvalue cannot come from a monic integer polynomial")
                p = p * IntPoly([-int(v.rational), 1]).pow(m)
            elif v.surd is not None:
                key = (v.surd.p, v.surd.disc, v.surd.q)
                pending[key] = pending.get(key, 0) + (m if v.surd.sign > 0 else -m)
                if v.surd.sign > 0:
                    p = p * v.factor.pow(m)
            else:
                numeric_groups.setdefault(v.factor.coeffs, []).append(m)
        if any(c != 0 for c in pending.values()):
            raise ValueError("surd eigenvalues do not pair into conjugates")
        for coeffs, mults in numeric_groups.items():
            factor = IntPoly(coeffs)
            if len(mults) != factor.degree or len(set(mults)) != 1:
                raise ValueError("numeric entries do not cover their defining factor's roots")
            p = p * factor.pow(mults[0])
        return p

    def format(self) -> str:
        parts = []
        for v, m in self.entries:
            s = v.exact_str()
            if s is None:
                s = f"~{v.approx:.9g}"
            parts.append(f"[{s}]^{m}")
        return "{" + ", ".join(parts) + "}"

    def to_json(self) -> list[dict]:
        return [{"value": v.to_json(), "multiplicity": m} for v, m in self.entries]


def spectrum_from_charpoly(p: IntPoly, note: Optional[str] = None) -> SpectrumSummary:
    """Exact spectrum summary of a monic integer polynomial with real roots."""
    entries: list[tuple[EigenValue, int]] = []
    for factor, mult in factor_monic(p):
        if factor.degree == 1:
            entries.append((EigenValue.from_rational(Fraction(-factor[0], factor[1]), factor), mult))
        elif factor.degree == 2:
            entries.append((EigenValue.from_quadratic(factor, +1), mult))
            entries.append((EigenValue.from_quadratic(factor, -1), mult))
        else:
            for lo, hi in isolate_real_roots(factor):
                entries.append((EigenValue.from_enclosure(factor, lo, hi), mult))
    entries.sort(key=lambda e: -e[0].approx)
    total = sum(m for _, m in entries)
    if total != p.degree:
        raise InvariantViolation(
            f"spectrum multiplicities sum to {total}, expected {p.degree}; "
            "polynomial has non-real roots or factorization failed"
        )
    return SpectrumSummary(tuple(entries), note=note)


def spectrum(g: Graph, kind: MatrixKind) -> SpectrumSummary:
    """Exact spectrum of the chosen matrix of g."""
    return spectrum_from_charpoly(charpoly(g, kind))


def spectra_equal(a: SpectrumSummary, b: SpectrumSummary) -> bool:
    """Exact equality of two fully exact spectra."""
    return a.to_charpoly() == b.to_charpoly()


# -- moments ------------------------------------------------------------------


@dataclass(frozen=True)
class MomentReport:
    """Power sums of a spectrum, with the combinatorial side when known."""

    kind: MatrixKind
    power_sums: tuple[int, ...]
    combinatorial: Optional[tuple[int, ...]]  # T_0..T_3 from counts, if applicable


def _combinatorial_moments(g: Graph, kind: MatrixKind) -> tuple[int, ...]:
    degs = g.degrees()
    n = g.n
    two_m = sum(degs)
    d2 = sum(d * d for d in degs)
    d3 = sum(d**3 for d in degs)
    t = structure_report(g).triangles
    if kind is MatrixKind.Q:
        return (n, two_m, two_m + d2, 6 * t + 3 * d2 + d3)
    if kind is MatrixKind.L:
        return (n, two_m, two_m + d2, -6 * t + 3 * d2 + d3)
    return (n, 0, two_m, 6 * t)


def moments(g: Graph, kind: MatrixKind, kmax: int) -> MomentReport:
    """Exact spectral power sums T_0..T_kmax, verified against edge/degree counts.

    For every kind the first four power sums are recomputed from the
    graph's edges, degrees, and triangles; a mismatch is an internal bug
    and raises InvariantViolation.
    """
    if not (0 <= kmax <= MOMENT_CAP):
        raise ValueError(f"kmax must be within 0..{MOMENT_CAP}")
    T = tuple(power_sums(charpoly(g, kind), max(kmax, 3)))
    comb = _combinatorial_moments(g, kind)
    if T[:4] != comb:
        raise InvariantViolation(
            f"power sums {T[:4]} disagree with combinatorial counts {comb} for kind {kind}"
        )
    return MomentReport(kind=kind, power_sums=T[: kmax + 1], combinatorial=comb)


# -- what a spectrum determines ------------------------------------------------


@dataclass(frozen=True)
class InvariantReport:
    """Graph data recoverable from a characteristic polynomial alone."""

    kind: MatrixKind
    n: int
    m: int
    closed_walks: Optional[tuple[int, ...]] = None  # A-kind: T_0..T_4
    bipartite: Optional[bool] = None  # A-kind: spectrum symmetric about 0
    regular: Optional[bool] = None  # A-kind, via average degree vs spectral radius
    spectral_radius: Optional[float] = None
    components: Optional[int] = None  # L-kind: multiplicity of 0
    spanning_trees: Optional[int] = None  # L-kind, connected graphs
    bipartite_components: Optional[int] = None  # Q-kind: multiplicity of 0
    sum_degrees_squared: Optional[int] = None  # L/Q kinds


def _root_multiplicity(p: IntPoly, r: int) -> int:
    mult = 0
    lin = IntPoly([-r, 1])
    while not p.is_zero and p.eval_int(r) == 0:
        p = p // lin
        mult += 1
    return mult


def spectral_invariants(p: IntPoly, kind: MatrixKind) -> InvariantReport:
    """Decode the invariants a spectrum of the given kind always determines."""
    if not p.is_monic:
        raise ValueError("characteristic polynomials are monic")
    n = p.degree
    T = power_sums(p, 4)
    if kind is MatrixKind.A:
        if T[2] % 2:
            raise ValueError("not an adjacency characteristic polynomial: odd trace of A^2")
        m = T[2] // 2
        sym = p.reflect() == (p if n % 2 == 0 else -p)
        summ = spectrum_from_charpoly(p)
        rho = summ.largest.approx
        avg = 2 * m / n
        return InvariantReport(
            kind=kind, n=n, m=m,
            closed_walks=tuple(T[:5]),
            bipartite=sym,
            regular=abs(rho - avg) < 1e-9,
            spectral_radius=rho,
        )
    if T[1] % 2:
        raise ValueError(f"not a {kind}-characteristic polynomial: odd degree sum")
    m = T[1] // 2
    d2 = T[2] - T[1]
    zero_mult = _root_multiplicity(p, 0)
    if kind is MatrixKind.L:
        trees = 0
        if zero_mult == 1:
            c1 = abs(p[1])
            trees, r = divmod(c1, n)
            if r:
                raise ValueError("spanning tree count is not integral; not a Laplacian polynomial")
        return InvariantReport(
            kind=kind, n=n, m=m,
            components=zero_mult,
            spanning_trees=trees,
            sum_degrees_squared=d2,
        )
    return InvariantReport(
        kind=kind, n=n, m=m,
        bipartite_components=zero_mult,
        sum_degrees_squared=d2,
    )
