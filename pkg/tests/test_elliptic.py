import random
from fractions import Fraction

import pytest

from galois_embed.elliptic import (
    CASES,
    CM_J_INVARIANTS,
    RATIONAL_FUNCTIONS,
    Curve,
    classify_from_j,
    compose_rational,
    family,
    family_coefficients,
    is_cm_j,
    j_function,
    j_invariant,
    printed_psi3_factors,
    psi3,
    psi3_expr,
    quadratic_twist,
    same_rational_function,
)
from galois_embed.errors import DegenerateParameter, SingularCurve
from galois_embed.exactmath import MPoly, UniPoly, discriminant, squarefree_part


def rand_t(rng):
    while True:
        t = Fraction(rng.randint(-60, 60), rng.randint(1, 9))
        if t:
            return t


def admissible(case, t):
    try:
        E = family(case, t)
    except DegenerateParameter:
        return None
    return E


def product(parts):
    acc = parts[0]
    for p in parts[1:]:
        acc = acc * p
    return acc


def test_f1f2_equals_g1g2g3():
    F = RATIONAL_FUNCTIONS
    lhs = compose_rational(F["F1"], F["F2"])
    rhs = compose_rational(F["G1"], compose_rational(F["G2"], F["G3"]))
    assert same_rational_function(lhs, rhs)
    # and not trivially: F1 alone differs from G1
    assert not same_rational_function(F["F1"], F["G1"])


@pytest.mark.parametrize("case", CASES)
def test_psi3_matches_printed_factorization_symbolically(case):
    t, x = MPoly.variables("t", "x")
    A, B = family_coefficients(case, t)
    assert psi3_expr(A, B, x) == product(printed_psi3_factors(case, t, x))


@pytest.mark.parametrize("case", CASES)
def test_family_identities_at_random_t(case):
    rng = random.Random(CASES.index(case))
    x = UniPoly.x()
    jf = j_function(case)
    done = 0
    while done < 20:
        t = rand_t(rng)
        E = admissible(case, t)
        if E is None:
            continue
        assert j_invariant(E) == jf(t)
        parts = printed_psi3_factors(case, t, x)
        assert psi3(E) == product([UniPoly((Fraction(parts[0]),))] + parts[1:])
        assert squarefree_part(discriminant(psi3(E))) == -3
        done += 1


def test_psi3_discriminant_class():
    rng = random.Random(9)
    n = 0
    while n < 100:
        A = Fraction(rng.randint(-99, 99), rng.randint(1, 5))
        B = Fraction(rng.randint(-99, 99), rng.randint(1, 5))
        if 4 * A**3 + 27 * B**2 == 0:
            continue
        assert squarefree_part(discriminant(psi3(Curve(A, B)))) == -3
        n += 1


def test_classify_from_j_rows_for_families():
    rng = random.Random(10)
    for case in CASES:
        jf = j_function(case)
        seen = 0
        while seen < 8:
            t = rand_t(rng)
            if admissible(case, t) is None:
                continue
            j = jf(t)
            if is_cm_j(j):
                continue
            assert classify_from_j(j).row == case, (case, t)
            seen += 1


def test_classify_from_j_examples():
    jc = classify_from_j(432)
    assert jc.row == "S3"
    assert jc.witnesses["F1"] == [Fraction(-3)]
    assert classify_from_j(1).row == "D4"
    assert classify_from_j(Fraction(6912, 31)).row == "S4"
    assert classify_from_j(0).cm and classify_from_j(1728).cm


def test_membership_monotonicity():
    rng = random.Random(12)
    js = [j_function(c)(rand_t(rng)) for c in CASES for _ in range(5)]
    for j in js:
        m = classify_from_j(j).memberships
        assert not m["F1F2"] or m["F1"]
        assert not m["G1G2G3"] or m["G1G2"]
        assert not m["G1G2"] or m["G1"]
        assert m["F1F2"] == m["G1G2G3"]


def test_cm_list():
    assert len(CM_J_INVARIANTS) == 13
    assert is_cm_j(-12288000) and not is_cm_j(432)


def test_degenerate_and_singular():
    with pytest.raises(DegenerateParameter):
        family("S3", 0)
    with pytest.raises(DegenerateParameter):
        family("S4", 1728)
    with pytest.raises(SingularCurve):
        Curve(0, 0)


def test_twist_keeps_j():
    E = family("S3", -3)
    assert j_invariant(E) == 432
    assert j_invariant(quadratic_twist(E, 5)) == 432


def test_c2xc2_factor_needs_minus_three():
    # psi3 has constant term -A^2 <= 0; the factor x^2 - 2sx + (t+1)^2 s as
    # printed would give the constant 3 (t+1)^2 (t-3)^2 s^2 >= 0 instead
    t, x = MPoly.variables("t", "x")
    A, B = family_coefficients("C2xC2", t)
    s = t * t - 6 * t - 3
    printed = 3 * (x * x - 2 * s * x + (t + 1) ** 2 * s) * (x * x + 2 * s * x + (t - 3) ** 2 * s)
    assert psi3_expr(A, B, x) != printed
    corrected = product(printed_psi3_factors("C2xC2", t, x))
    assert psi3_expr(A, B, x) == corrected
