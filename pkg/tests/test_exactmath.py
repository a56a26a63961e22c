import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from galois_embed.errors import FactorBudgetExceeded
from galois_embed.exactmath import (
    MPoly,
    UniPoly,
    discriminant,
    factor_small,
    factorint,
    is_cube,
    is_square,
    resultant,
    same_square_class,
    squarefree_part,
    tschirnhaus,
)
from galois_embed.exactmath.poly import rational_roots

from oracles import charpoly_tschirnhaus, divisor_rational_roots, sympy_discriminant, sympy_squarefree_part

small_q = st.fractions(min_value=-20, max_value=20, max_denominator=6)
nonzero_q = small_q.filter(lambda q: q != 0)


def poly_strategy(max_deg=4):
    return st.lists(st.integers(-9, 9), min_size=1, max_size=max_deg + 1).map(UniPoly)


def rand_poly(rng, deg, lo=-9, hi=9):
    c = [Fraction(rng.randint(lo, hi), rng.randint(1, 3)) for _ in range(deg)]
    return UniPoly(c + [Fraction(rng.choice([1, -1, 2, 3]))])


# --------------------------------------------------------------------------
# integers
# --------------------------------------------------------------------------

def test_squarefree_part_examples():
    assert squarefree_part(12) == 3
    assert squarefree_part(Fraction(-3, 4)) == -3
    assert squarefree_part(Fraction(2, 3)) == 6
    assert squarefree_part(-108) == -3


@given(nonzero_q, nonzero_q)
@settings(max_examples=200)
def test_squarefree_part_ignores_squares(x, y):
    assert squarefree_part(x * y * y) == squarefree_part(x)


@given(st.integers(-10**9, 10**9).filter(lambda n: n != 0))
@settings(max_examples=100)
def test_squarefree_part_matches_sympy(n):
    assert squarefree_part(n) == sympy_squarefree_part(n)


def test_factorint_semiprime_and_budget():
    n = 1000003 * 1000033
    assert factorint(n) == {1000003: 1, 1000033: 1}
    big = 2**61 - 1  # prime
    assert factorint(big * 1000000007) == {big: 1, 1000000007: 1}
    with pytest.raises(FactorBudgetExceeded):
        factorint((10**12 + 39) * (10**12 + 61), budget=10)


def test_is_square_and_cube():
    assert is_square(Fraction(9, 4)) == Fraction(3, 2)
    assert is_square(-4) is None
    assert is_square(2) is None
    assert is_cube(Fraction(-8, 27)) == Fraction(-2, 3)
    assert is_cube(4) is None
    assert same_square_class(-12, Fraction(-3, 4))
    assert not same_square_class(2, 3)


# --------------------------------------------------------------------------
# polynomials
# --------------------------------------------------------------------------

def test_discriminant_of_psi3_model():
    x = UniPoly.x()
    f = x**4 + 2 * x**2 - 12
    assert discriminant(f) == sympy_discriminant(f.descending())
    assert squarefree_part(discriminant(f)) == -3


@given(poly_strategy(), poly_strategy())
@settings(max_examples=60, deadline=None)
def test_discriminant_multiplicative_mod_squares(f, g):
    if f.degree < 1 or g.degree < 1:
        return
    df, dg, dfg = discriminant(f), discriminant(g), discriminant(f * g)
    if df == 0 or dg == 0 or dfg == 0:
        return
    assert is_square(dfg / (df * dg)) is not None


@given(poly_strategy(), poly_strategy())
@settings(max_examples=60, deadline=None)
def test_discriminant_matches_sympy(f, g):
    h = f * g
    if h.degree < 1:
        return
    assert discriminant(h) == sympy_discriminant(h.descending())


@given(poly_strategy(4))
@settings(max_examples=80, deadline=None)
def test_rational_roots_against_divisor_enumeration(f):
    if f.degree < 1:
        return
    assert sorted(set(rational_roots(f))) == divisor_rational_roots(f.descending())


def test_factor_small_remultiplies():
    rng = random.Random(7)
    for _ in range(60):
        parts = [rand_poly(rng, rng.randint(1, 2)) for _ in range(rng.randint(1, 3))]
        f = UniPoly((1,))
        for p in parts:
            f = f * p
        if f.degree > 4:
            continue
        lc, factors = factor_small(f)
        g = UniPoly((lc,))
        for p, e in factors:
            assert p.lc == 1
            g = g * p**e
        assert g == f


def test_factor_small_known_shapes():
    x = UniPoly.x()
    _, fac = factor_small(x**2 * (x**2 + 3))
    assert sorted((p.degree, e) for p, e in fac) == [(1, 2), (2, 1)]
    _, fac = factor_small(x**4 + 2 * x**2 - 12)
    assert [p.degree for p, _ in fac] == [4]
    _, fac = factor_small((x**2 + 2) * (x**2 - 6))
    assert sorted(p.degree for p, _ in fac) == [2, 2]


def test_resultant_univariate_and_multivariate():
    x = UniPoly.x()
    assert resultant(x**2 - 2, x**2 - 3) == 1
    assert resultant(x - 3, x**2 + 1) == 10
    t, y = MPoly.variables("t", "y")
    R = resultant(t * t - 2, y - t, "t")  # y^2 - 2 up to sign
    assert R.subs(y=Fraction(3)).constant_value() in (7, -7)


def test_tschirnhaus_against_charpoly_oracle():
    rng = random.Random(11)
    x = UniPoly.x()
    base = [x**4 + 2 * x**2 - 12, x**4 + x + 1, x * (x**3 + 2) + 1]
    for f in base:
        for _ in range(5):
            T = rand_poly(rng, rng.randint(1, 3))
            h = tschirnhaus(f, T)
            assert h.degree == f.degree
            assert h.descending() == charpoly_tschirnhaus(f.descending(), T.descending())


def test_format_roundtrip_text():
    x = UniPoly.x()
    f = 3 * x**4 - Fraction(13, 4) * x + 1
    assert str(f) == "3*x^4 - 13/4*x + 1"
