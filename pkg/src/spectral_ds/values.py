"""Exact eigenvalue values: rationals, quadratic surds, certified numerics.

Spectra of the graphs treated here are made of three kinds of values:
rational roots (always integers for adjacency/Laplacian-type matrices),
roots of monic integer quadratics written as (b +- sqrt(disc))/2, and
roots of higher-degree factors carried numerically together with their
defining polynomial and a certified enclosure.

Quadratic surds keep the unreduced discriminant for display (so a root
of x^2 - 20x + 76 prints as "(20+sqrt(96))/2") but compare through a
square-free normal form, so equality tests are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .intpoly import IntPoly, refine_root


def _square_free_split(n: int) -> tuple[int, int]:
    """Write n = s^2 * d with d square-free; return (s, d)."""
    if n == 0:
        return 1, 0
    s, d = 1, 1
    rem = n
    f = 2
    while f * f <= rem:
        while rem % (f * f) == 0:
            rem //= f * f
            s *= f
        if rem % f == 0:
            rem //= f
            d *= f
        f += 1
    d *= rem
    return s, d


@dataclass(frozen=True)
class Surd:
    """The real number (p + sign*sqrt(disc)) / q with integer p, disc > 0, q > 0."""

    p: int
    disc: int
    q: int
    sign: int  # +1 or -1

    def __post_init__(self):
        if self.disc <= 0 or self.q <= 0 or self.sign not in (1, -1):
            raise ValueError("invalid surd")
        s, d = _square_free_split(self.disc)
        if d == 1:
            raise ValueError("discriminant is a perfect square; use a rational")

    def normal_form(self) -> tuple[Fraction, Fraction, int]:
        """(rational part, coefficient of sqrt(d), square-free d)."""
        s, d = _square_free_split(self.disc)
        return Fraction(self.p, self.q), Fraction(self.sign * s, self.q), d

    def __float__(self) -> float:
        return (self.p + self.sign * math.sqrt(self.disc)) / self.q

    def eq_exact(self, other: "Surd") -> bool:
        return self.normal_form() == other.normal_form()

    def __str__(self) -> str:
        sgn = "+" if self.sign > 0 else "-"
        core = f"({self.p}{sgn}sqrt({self.disc}))"
        return core if self.q == 1 else f"{core}/{self.q}"


@dataclass(frozen=True)
class EigenValue:
    """One spectrum entry: exact when algebraic degree <= 2, numeric otherwise.

    Exactly one of `rational` / `surd` is set for exact values; numeric
    values carry their defining factor and a certified enclosure instead.
    `approx` is always populated.
    """

    approx: float
    rational: Optional[Fraction] = None
    surd: Optional[Surd] = None
    factor: Optional[IntPoly] = None
    enclosure: Optional[tuple[Fraction, Fraction]] = None

    @staticmethod
    def from_rational(r: Fraction, factor: IntPoly) -> "EigenValue":
        return EigenValue(approx=float(r), rational=Fraction(r), factor=factor)

    @staticmethod
    def from_quadratic(factor: IntPoly, sign: int) -> "EigenValue":
        """Root (b + sign*sqrt(disc))/2 of the monic quadratic x^2 - bx + c."""
        if factor.degree != 2 or not factor.is_monic:
            raise ValueError("need a monic quadratic")
        b = -factor[1]
        c = factor[0]
        disc = b * b - 4 * c
        if disc <= 0:
            raise ValueError("quadratic has no two distinct real roots")
        s, d = _square_free_split(disc)
        if d == 1:  # rational roots after all
            root = Fraction(b + sign * s, 2)
            return EigenValue.from_rational(root, factor)
        surd = Surd(p=b, disc=disc, q=2, sign=sign)
        return EigenValue(approx=float(surd), surd=surd, factor=factor)

    @staticmethod
    def from_enclosure(factor: IntPoly, lo: Fraction, hi: Fraction) -> "EigenValue":
        lo, hi = refine_root(factor, lo, hi)
        return EigenValue(approx=float((lo + hi) / 2), factor=factor, enclosure=(lo, hi))

    @property
    def is_exact(self) -> bool:
        return self.rational is not None or self.surd is not None

    def exact_str(self) -> Optional[str]:
        if self.rational is not None:
            return str(self.rational)
        if self.surd is not None:
            return str(self.surd)
        return None

    def eq_exact(self, other: "EigenValue") -> bool:
        if self.rational is not None and other.rational is not None:
            return self.rational == other.rational
        if self.surd is not None and other.surd is not None:
            return self.surd.eq_exact(other.surd)
        if self.is_exact != other.is_exact:
            return False
        # numeric vs numeric: same defining factor and overlapping enclosures
        if self.factor == other.factor and self.enclosure and other.enclosure:
            a, b = self.enclosure
            c, d = other.enclosure
            return not (b < c or d < a)
        return False

    def compare_rational(self, r: Fraction) -> int:
        """Exact sign of (self - r): -1, 0, or +1."""
        if self.rational is not None:
            diff = self.rational - r
            return (diff > 0) - (diff < 0)
        if self.surd is not None:
            # (p + sign*sqrt(disc))/q vs r  <=>  sign*sqrt(disc) vs r*q - p
            rhs = r * self.surd.q - self.surd.p
            if self.surd.sign > 0:
                if rhs < 0:
                    return 1
                return (self.surd.disc > rhs * rhs) - (self.surd.disc < rhs * rhs)
            if rhs > 0:
                return -1
            rhs = -rhs
            return (rhs * rhs > self.surd.disc) - (rhs * rhs < self.surd.disc)
        lo, hi = self.enclosure
        if r < lo or (r == lo and self.factor.eval_fraction(lo) != 0):
            return 1
        if r > hi:
            return -1
        # refine until the enclosure separates from r, unless r is the root
        if self.factor.eval_fraction(r) == 0:
            return 0
        factor, (lo, hi) = self.factor, self.enclosure
        while lo <= r <= hi:
            lo, hi = refine_root(factor, lo, hi, tol=(hi - lo) / 4)
        return 1 if lo > r else -1

    def add_const(self, c: int) -> "EigenValue":
        """The eigenvalue shifted by an integer constant."""
        if self.rational is not None:
            shifted = self.rational + c
            return EigenValue.from_rational(shifted, self.factor.taylor_shift(-c) if self.factor else IntPoly([-int(shifted), 1]))
        if self.surd is not None:
            s = Surd(p=self.surd.p + c * self.surd.q, disc=self.surd.disc, q=self.surd.q, sign=self.surd.sign)
            return EigenValue(approx=float(s), surd=s, factor=self.factor.taylor_shift(-c) if self.factor else None)
        lo, hi = self.enclosure
        return EigenValue(
            approx=self.approx + c,
            factor=self.factor.taylor_shift(-c),
            enclosure=(lo + c, hi + c),
        )

    def reflect_about(self, c: int) -> "EigenValue":
        """The value c - eigenvalue (used by complement spectrum maps)."""
        if self.rational is not None:
            val = c - self.rational
            return EigenValue.from_rational(val, IntPoly([-int(val), 1]) if val.denominator == 1 else None)
        if self.surd is not None:
            s = Surd(p=c * self.surd.q - self.surd.p, disc=self.surd.disc, q=self.surd.q, sign=-self.surd.sign)
            newf = None
            if self.factor is not None:
                k = self.factor.degree
                newf = self.factor.reflect().taylor_shift(-c)
                if newf.leading < 0:
                    newf = -newf
            return EigenValue(approx=float(s), surd=s, factor=newf)
        lo, hi = self.enclosure
        k = self.factor.degree
        newf = self.factor.reflect().taylor_shift(-c)
        if newf.leading < 0:
            newf = -newf
        return EigenValue(approx=c - self.approx, factor=newf, enclosure=(c - hi, c - lo))

    def to_json(self) -> dict:
        out: dict = {"numeric": self.approx}
        exact = self.exact_str()
        if exact is not None:
            out["exact"] = exact
        else:
            out["exact"] = None
            out["factor"] = [str(c) for c in self.factor.coeffs]
        return out
