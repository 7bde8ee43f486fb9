"""Exact arithmetic for polynomials with integer coefficients.

A polynomial c0 + c1*x + ... + cn*x^n is stored as the tuple
(c0, c1, ..., cn) of Python ints with cn != 0; the zero polynomial is
the empty tuple.  Coefficients are arbitrary precision, so products and
characteristic polynomials of matrices up to 64x64 never overflow.

Beyond ring arithmetic the module provides the pieces needed to turn a
characteristic polynomial into an exact spectrum: content/primitive
part, gcd over the integers, Yun square-free decomposition, Newton
power sums, Sturm-sequence real-root isolation and certified bisection
refinement, and extraction of integer roots and monic quadratic factors.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence


class IntPoly:
    """Immutable dense polynomial over the integers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def leading(self) -> int:
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c)) + "*"
                term = f"{mag}x" if i == 1 else f"{mag}x^{i}"
            if not parts:
                parts.append(("-" if c < 0 else "") + term)
            else:
                parts.append(("- " if c < 0 else "+ ") + term)
        return " ".join(parts)

    # -- ring arithmetic -----------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def divmod_exact(self, divisor: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Polynomial division; requires each elimination step to stay integral.

        Valid whenever the divisor is monic (the only case used here).
        Returns (quotient, remainder).
        """
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd, dc = divisor.degree, divisor.coeffs
        lead = divisor.leading
        quot = [0] * max(0, len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q, r = divmod(c, lead)
            if r != 0:
                raise ValueError("non-integral quotient in exact division")
            quot[i - dd] = q
            for j in range(dd + 1):
                rem[i - dd + j] -= q * dc[j]
        return IntPoly(quot), IntPoly(rem)

    def __floordiv__(self, other: "IntPoly") -> "IntPoly":
        q, r = self.divmod_exact(other)
        if not r.is_zero:
            raise ValueError("division left a remainder")
        return q

    def pow(self, k: int) -> "IntPoly":
        out = IntPoly([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- calculus / transforms ------------------------------------------

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def taylor_shift(self, a: int) -> "IntPoly":
        """Return p(x + a), computed by Horner on the shifted variable."""
        out = IntPoly()
        xa = IntPoly([a, 1])
        for c in reversed(self.coeffs):
            out = out * xa + IntPoly([c])
        return out

    def reflect(self) -> "IntPoly":
        """Return p(-x)."""
        return IntPoly([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)])

    def eval_int(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_fraction(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_float(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- content / gcd ----------------------------------------------------

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def primitive(self) -> "IntPoly":
        g = self.content()
        if g in (0, 1):
            return self
        sign = -1 if self.leading < 0 else 1
        return IntPoly([c // (sign * g) for c in self.coeffs])


def poly_from_roots(roots: Sequence[int]) -> IntPoly:
    """Monic polynomial with the given integer roots (with multiplicity)."""
    p = IntPoly([1])
    for r in roots:
        p = p * IntPoly([-r, 1])
    return p


def gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Greatest common divisor over Z, returned primitive with positive lead.

    Uses the rational Euclidean algorithm and clears denominators at the
    end; degrees here stay below ~64 so coefficient growth is acceptable.
    """
    if a.is_zero:
        return b.primitive()
    if b.is_zero:
        return a.primitive()
    fa = [Fraction(c) for c in a.coeffs]
    fb = [Fraction(c) for c in b.coeffs]

    def trim(cs):
        while cs and cs[-1] == 0:
            cs.pop()
        return cs

    fa, fb = trim(fa), trim(fb)
    while fb:
        # remainder of fa by fb
        rem = fa[:]
        db, lead = len(fb) - 1, fb[-1]
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q = c / lead
            for j in range(db + 1):
                rem[i - db + j] -= q * fb[j]
        fa, fb = fb, trim(rem)
    # clear denominators, make primitive
    den = 1
    for c in fa:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in fa]
    return IntPoly(ints).primitive()


def square_free_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun's algorithm: return [(g1, 1), (g2, 2), ...] with p = lc * prod gi^i.

    Each gi is primitive and square-free; factors of multiplicity i that
    are trivial (degree 0) are omitted.
    """
    if p.degree <= 0:
        return []
    p = p.primitive()
    dp = p.derivative()
    a = gcd(p, dp)
    if a.degree == 0:
        return [(p, 1)]
    b = p // a
    c = dp // a
    d = c - b.derivative()
    out: list[tuple[IntPoly, int]] = []
    i = 1
    while True:
        if d.is_zero:
            if b.degree > 0:
                out.append((b.primitive(), i))
            break
        a = gcd(b, d)
        if a.degree > 0:
            out.append((a.primitive(), i))
        b = b // a
        c = d // a
        d = c - b.derivative()
        i += 1
        if b.degree == 0:
            break
    return out


def power_sums(p: IntPoly, kmax: int) -> list[int]:
    """Newton's identities: exact power sums T_0..T_kmax of the roots of p.

    Requires p monic.  T_0 is the degree (all roots counted with
    multiplicity).
    """
    if not p.is_monic:
        raise ValueError("power sums need a monic polynomial")
    n = p.degree
    # elementary symmetric functions: e_i = (-1)^i * c_{n-i}
    e = [0] * (n + 1)
    for i in range(n + 1):
        e[i] = (-1) ** i * p[n - i]
    T = [n]
    for k in range(1, kmax + 1):
        s = 0
        for i in range(1, min(k, n) + 1):
            s += (-1) ** (i - 1) * e[i] * (T[k - i] if k - i > 0 else 0)
        if k <= n:
            s += (-1) ** (k - 1) * k * e[k]
        T.append(s)
    return T


# -- real root isolation (Sturm) -----------------------------------------


def _sturm_chain(p: IntPoly) -> list[IntPoly]:
    """Sturm chain of a square-free polynomial.

    Entries are scaled by positive integers only, which preserves signs
    and therefore the Sturm sign-change count.
    """
    chain = [p, p.derivative()]
    while chain[-1].degree > 0:
        a, b = chain[-2], chain[-1]
        rem = [Fraction(c) for c in a.coeffs]
        db, lead = b.degree, Fraction(b.leading)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q = c / lead
            for j in range(db + 1):
                rem[i - db + j] -= q * b.coeffs[j]
        while rem and rem[-1] == 0:
            rem.pop()
        if not rem:
            break
        den = 1
        for c in rem:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(-c * den) for c in rem]
        g = 0
        for c in ints:
            g = math.gcd(g, c)
        chain.append(IntPoly([c // g for c in ints]))
    return chain


def _sign_changes(chain: list[IntPoly], x: Fraction) -> int:
    signs = []
    for q in chain:
        v = q.eval_fraction(x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    changes = 0
    for a, b in zip(signs, signs[1:]):
        if a != b:
            changes += 1
    return changes


def root_bound(p: IntPoly) -> int:
    """Cauchy bound: every real root lies in (-B, B)."""
    if p.degree <= 0:
        return 1
    lead = abs(p.leading)
    m = max(abs(c) for c in p.coeffs[:-1]) if p.degree > 0 else 0
    return 1 + (m + lead - 1) // lead


def count_roots_in(p: IntPoly, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of square-free p in the interval (lo, hi]."""
    chain = _sturm_chain(p)
    return _sign_changes(chain, lo) - _sign_changes(chain, hi)


def isolate_real_roots(p: IntPoly) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals (lo, hi] for the distinct real roots of square-free p.

    Intervals are returned sorted ascending; every real root lies in
    exactly one of them.
    """
    if p.degree <= 0:
        return []
    chain = _sturm_chain(p)
    B = Fraction(root_bound(p))
    total = _sign_changes(chain, -B) - _sign_changes(chain, B)
    out: list[tuple[Fraction, Fraction]] = []

    def recurse(lo: Fraction, hi: Fraction, nlo: int, nhi: int):
        k = nlo - nhi
        if k == 0:
            return
        if k == 1:
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        nmid = _sign_changes(chain, mid)
        recurse(lo, mid, nlo, nmid)
        recurse(mid, hi, nmid, nhi)

    recurse(-B, B, _sign_changes(chain, -B), _sign_changes(chain, B))
    assert len(out) == total
    return sorted(out)


def refine_root(p: IntPoly, lo: Fraction, hi: Fraction, tol: Fraction = Fraction(1, 10**12)) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval (lo, hi] of square-free p below tol by bisection."""
    flo = p.eval_fraction(lo)
    if flo == 0:
        return lo, lo
    fhi = p.eval_fraction(hi)
    if fhi == 0:
        return hi, hi
    while hi - lo > tol:
        mid = (lo + hi) / 2
        fm = p.eval_fraction(mid)
        if fm == 0:
            return mid, mid
        if (flo < 0) != (fm < 0):
            hi, fhi = mid, fm
        else:
            lo, flo = mid, fm
    return lo, hi


# -- factor extraction -----------------------------------------------------


def integer_roots(p: IntPoly) -> list[int]:
    """Distinct integer roots of p (p need not be square-free)."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    roots = []
    if p[0] == 0:
        roots.append(0)
    # monic inputs: rational roots are integers dividing the constant term;
    # scanning the root bound interval is cheap at these degrees
    B = root_bound(p)
    for r in range(-B, B + 1):
        if r != 0 and p.eval_int(r) == 0:
            roots.append(r)
    return sorted(roots)


def split_square_free(p: IntPoly) -> list[IntPoly]:
    """Factor a monic square-free polynomial into monic integer factors.

    Linear and quadratic factors are always found exactly.  Residues of
    degree >= 3 are split further when a subset of roots yields integer
    coefficients (verified by exact division); anything that resists this
    is returned whole.  Every returned factor divides p exactly, and the
    product of the returned factors is p.
    """
    factors: list[IntPoly] = []
    rem = p
    for r in integer_roots(p):
        lin = IntPoly([-r, 1])
        q, rr = rem.divmod_exact(lin)
        if rr.is_zero:  # square-free input: each root divides exactly once
            factors.append(lin)
            rem = q
    if rem.degree <= 0:
        return sorted(factors, key=lambda f: (f.degree, f.coeffs))
    if rem.degree <= 2:
        factors.append(rem)
        return sorted(factors, key=lambda f: (f.degree, f.coeffs))

    # try to split the residue by recombining isolated real roots
    rem = _split_by_root_subsets(rem, factors)
    return sorted(factors, key=lambda f: (f.degree, f.coeffs))


def _split_by_root_subsets(rem: IntPoly, factors: list[IntPoly]) -> IntPoly:
    """Greedy exact splitting of a square-free residue without rational roots.

    Tries monic factors built from every subset of real roots, smallest
    degree first, with coefficients rounded from refined enclosures and
    verified by exact division.  Complete for quadratic factors; larger
    factors are found on a best-effort basis, which is enough for the
    graph polynomials handled here (symmetric matrices: all roots real).
    """
    from itertools import combinations

    tol = Fraction(1, 10**8)
    while rem.degree >= 3:
        ivs = [refine_root(rem, lo, hi, tol) for lo, hi in isolate_real_roots(rem)]
        mids = [(lo + hi) / 2 for lo, hi in ivs]
        found = None
        for size in range(2, rem.degree // 2 + 1):
            for picks in combinations(range(len(mids)), size):
                # elementary symmetric functions e_1..e_size of the chosen roots
                es = [Fraction(1)] + [Fraction(0)] * size
                for i in picks:
                    for j in range(size, 0, -1):
                        es[j] += es[j - 1] * mids[i]
                # monic candidate: x^size - e1 x^{size-1} + e2 x^{size-2} - ...
                cand_desc = [1] + [round((-1) ** j * es[j]) for j in range(1, size + 1)]
                candidate = IntPoly(list(reversed(cand_desc)))
                if candidate.degree != size:
                    continue
                try:
                    q, r = rem.divmod_exact(candidate)
                except ValueError:
                    continue
                if r.is_zero and q.degree >= 1:
                    found = (candidate, q)
                    break
            if found:
                break
        if not found:
            break
        candidate, rem = found
        factors.append(candidate)
        if 1 <= rem.degree <= 2:
            factors.append(rem)
            return IntPoly([1])
    if rem.degree >= 1:
        factors.append(rem)
    return IntPoly([1])


def factor_monic(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Factor a monic integer polynomial into monic factors with multiplicity.

    Combines Yun square-free decomposition with exact linear/quadratic
    extraction.  The product of factor^multiplicity over the result
    equals p.  Factors of degree 1 and 2 are irreducible over Q;
    higher-degree factors may in rare cases be further reducible.
    """
    if not p.is_monic:
        raise ValueError("factor_monic needs a monic polynomial")
    out: list[tuple[IntPoly, int]] = []
    for part, mult in square_free_decomposition(p):
        for f in split_square_free(part):
            out.append((f, mult))
    # merge identical factors
    merged: dict[tuple[int, ...], int] = {}
    order: list[IntPoly] = []
    for f, m in out:
        if f.coeffs not in merged:
            merged[f.coeffs] = 0
            order.append(f)
        merged[f.coeffs] += m
    return [(f, merged[f.coeffs]) for f in sorted(order, key=lambda f: (f.degree, f.coeffs))]
