import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from spectral_ds.intpoly import (
    IntPoly,
    factor_monic,
    gcd,
    integer_roots,
    isolate_real_roots,
    poly_from_roots,
    power_sums,
    refine_root,
    square_free_decomposition,
)

x = sympy.Symbol("x")


def to_sympy(p: IntPoly):
    return sympy.Poly(list(reversed(p.coeffs)), x) if not p.is_zero else sympy.Poly(0, x)


def from_sympy(sp) -> IntPoly:
    return IntPoly(list(reversed([int(c) for c in sp.all_coeffs()])))


small_polys = st.lists(st.integers(-9, 9), min_size=1, max_size=7).map(IntPoly)


@given(small_polys, small_polys)
@settings(max_examples=200, deadline=None)
def test_mul_matches_sympy(a, b):
    assert a * b == from_sympy(to_sympy(a) * to_sympy(b))


@given(small_polys, small_polys)
@settings(max_examples=200, deadline=None)
def test_add_sub_roundtrip(a, b):
    assert (a + b) - b == a


def test_divmod_exact_monic():
    p = IntPoly([6, 11, 6, 1])  # (x+1)(x+2)(x+3)
    q, r = p.divmod_exact(IntPoly([1, 1]))
    assert r.is_zero
    assert q == IntPoly([6, 5, 1])


def test_divmod_rejects_nonintegral():
    with pytest.raises(ValueError):
        IntPoly([1, 1]).divmod_exact(IntPoly([0, 2]))


def test_taylor_shift():
    p = IntPoly([0, 0, 1])  # x^2
    assert p.taylor_shift(3) == IntPoly([9, 6, 1])  # (x+3)^2
    assert p.taylor_shift(-10) == IntPoly([100, -20, 1])


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=5))
@settings(max_examples=100, deadline=None)
def test_gcd_matches_sympy(roots):
    a = poly_from_roots(roots)
    b = poly_from_roots(roots[: len(roots) // 2 + 1])
    mine = gcd(a, b)
    theirs = sympy.gcd(to_sympy(a), to_sympy(b))
    assert to_sympy(mine) == sympy.Poly(theirs, x)


def test_square_free_decomposition():
    # (x-1)^3 (x+2)^2 (x-5)
    p = poly_from_roots([1, 1, 1, -2, -2, 5])
    parts = dict((m, f) for f, m in square_free_decomposition(p))
    assert parts[1] == IntPoly([-5, 1])
    assert parts[2] == IntPoly([2, 1])
    assert parts[3] == IntPoly([-1, 1])


def test_power_sums_known():
    # roots 1, 2, 3
    p = poly_from_roots([1, 2, 3])
    assert power_sums(p, 4) == [3, 6, 14, 36, 98]


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=6))
@settings(max_examples=100, deadline=None)
def test_power_sums_match_direct(roots):
    p = poly_from_roots(roots)
    T = power_sums(p, 5)
    for k in range(6):
        assert T[k] == sum(r**k for r in roots)


def test_integer_roots():
    p = poly_from_roots([0, 4, -7, 12])
    assert integer_roots(p) == [-7, 0, 4, 12]


def test_isolation_and_refinement():
    # x^2 - 2: roots +-sqrt(2)
    p = IntPoly([-2, 0, 1])
    ivs = isolate_real_roots(p)
    assert len(ivs) == 2
    lo, hi = refine_root(p, *ivs[1])
    mid = float((lo + hi) / 2)
    assert abs(mid - 2**0.5) < 1e-11


def test_factor_monic_mixed():
    # (x-2)^2 (x^2 - 2x - 1) (x^2 + x + 1): quadratics must come out exactly
    p = poly_from_roots([2, 2]) * IntPoly([-1, -2, 1]) * IntPoly([1, 1, 1])
    got = {(f.coeffs, m) for f, m in factor_monic(p)}
    assert ((-2, 1), 2) in got  # (x-2)^2
    assert ((-1, -2, 1), 1) in got
    assert ((1, 1, 1), 1) in got


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=6))
@settings(max_examples=100, deadline=None)
def test_factor_monic_reconstructs(roots):
    p = poly_from_roots(roots)
    prod = IntPoly([1])
    for f, m in factor_monic(p):
        prod = prod * f.pow(m)
    assert prod == p


def test_factor_monic_matches_sympy_on_random_products():
    rng = random.Random(7)
    for _ in range(20):
        roots = [rng.randint(-4, 4) for _ in range(rng.randint(1, 5))]
        extra = IntPoly([rng.randint(-3, 3), rng.randint(-3, 1), 1])
        p = poly_from_roots(roots) * extra
        mine = sorted((f.coeffs, m) for f, m in factor_monic(p))
        prod = IntPoly([1])
        for f, m in factor_monic(p):
            prod = prod * f.pow(m)
        assert prod == p
        # multiplicities of linear factors agree with sympy's full factorization
        _, sfactors = sympy.factor_list(to_sympy(p).as_expr())
        sym_lin = {}
        for fac, m in sfactors:
            pf = sympy.Poly(fac, x)
            if pf.degree() == 1 and pf.LC() == 1:
                sym_lin[tuple(int(c) for c in pf.all_coeffs())] = m
        my_lin = {tuple(reversed(f.coeffs)): m for f, m in factor_monic(p) if f.degree == 1}
        assert my_lin == sym_lin


def test_eval_fraction():
    p = IntPoly([1, 0, 1])  # x^2 + 1
    assert p.eval_fraction(Fraction(1, 2)) == Fraction(5, 4)
