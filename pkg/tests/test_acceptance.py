"""Acceptance criteria 1-11, one test each.

Every test prints a single ``[PASS]`` / ``[FAIL]`` line; the lines are also
collected and repeated at the end of the pytest run (see conftest.py).  Run
``python3 tests/test_acceptance.py`` for the lines alone.
"""
import itertools
import random
import time
from fractions import Fraction

import pytest

from galois_embed.elliptic import (
    CASES,
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
    same_rational_function,
)
from galois_embed.errors import DegenerateParameter
from galois_embed.exactmath import MPoly, UniPoly, discriminant, is_square, squarefree_part, tschirnhaus
from galois_embed.gl2f3 import G, G_tilde, all_gl2, all_perms, is_split, iso_type, mul, perm_mul, phi, proj
from galois_embed.qexp import check_identity
from galois_embed.quadforms import INF, BinaryForm, hilbert_local, hilbert_symbols, involution_C
from galois_embed.quartic import classify, evenize
from galois_embed.solver import (
    d4_forms,
    obstruction,
    solve,
    solve_C2xC2,
    solve_D4,
    solve_S3,
    verify_certificate,
)

from oracles import frobenius_class, hilbert_bruteforce, hilbert_real

RESULTS = []
x = UniPoly.x()

SIX = [
    x**2 * (x**2 + 3),
    (x**2 - 2) * (x**2 + 6),
    (x**2 + 2) * (x**2 - 6),
    x * (x**3 + 2),
    x**4 + x**2 - 3,
    x**4 + 2 * x**2 - 12,
]
SIX_LABELS = ["C2", "C2xC2", "C2xC2", "S3", "D4", "D4"]
SIX_VERDICTS = ["trivial", -1, 1, "trivial", -1, 1]
SOLVABLE = [0, 2, 3, 5]  # indices into SIX


def report(n, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n:>2}: {detail}"
    print(line)
    RESULTS.append(line)
    assert ok, line


def rand_q(rng, bound=200, den=30):
    while True:
        q = Fraction(rng.randint(-bound, bound), rng.randint(1, den))
        if q:
            return q


# --------------------------------------------------------------------------

def test_criterion_01_regression_suite():
    start = time.perf_counter()
    labels = [classify(f).label for f in SIX]
    verdicts = [obstruction(classify(f)).global_symbol for f in SIX]
    classes = [obstruction(classify(f)).arguments for f in (SIX[4], SIX[5])]
    elapsed = time.perf_counter() - start
    ok = (labels == SIX_LABELS and verdicts == SIX_VERDICTS
          and classes[0] == (39, 2)
          and squarefree_part(classes[1][0]) == squarefree_part(156) and is_square(classes[1][1]) is not None
          and elapsed < 5)
    report(1, ok, f"labels {labels}, verdicts {verdicts}, D4 symbols (39,2) and (156,4~1), {elapsed:.2f}s < 5s")


def test_criterion_02_parametrization_cross_checks():
    fC, fS, fD = SIX[2], SIX[3], SIX[5]

    def t_c2xc2(r):
        return Fraction(r * r - 8 * r + 10, r * r + 2)

    ts = [t_c2xc2(0), t_c2xc2(1)]
    recs = solve_C2xC2(fC, 2, ts=ts)
    ok_c = (ts == [5, 1] and len(recs) == 2
            and all(verify_certificate(r, fC) for r in recs)
            and all(squarefree_part(r.t**2 - 6 * r.t - 3) == -2 for r in recs))

    r = Fraction(1)
    t_s3 = -(2 + r**3) / r**3
    rec_s = solve_S3(fS, 1, rs=[1])[0]
    ok_s = rec_s.t == t_s3 == -3 and rec_s.j == 432 and verify_certificate(rec_s, fS)

    rec_d = solve_D4(fD, 1, base=(Fraction(-1, 576), Fraction(-1, 720)),
                     pencil=((60, 112), (5, 44)), rs=[1])[0]
    printed = (-12 * (27 * r**4 + 464 * r**3 + 864 * r**2 + 6912 * r + 27392)
               / (23 * r**4 - 144 * r**3 - 2592 * r**2 - 14080 * r - 2304))
    ok_d = rec_d.t == printed == Fraction(2532, 113) and verify_certificate(rec_d, fD)
    report(2, ok_c and ok_s and ok_d,
           f"C2xC2 t(0)=5, t(1)=1 verified with class -2: {ok_c}; S3 t(1)=-3, j=432: {ok_s}; "
           f"D4 r=1: solver t={rec_d.t}, printed t(1)={printed}: {ok_d}")


def test_criterion_03_infinitude():
    ok, parts = True, []
    for idx in SOLVABLE:
        f = SIX[idx]
        start = time.perf_counter()
        case, _, recs = solve(f, 10)
        elapsed = time.perf_counter() - start
        good = sum(1 for r in recs if r.non_cm and verify_certificate(r, f))
        distinct = len({r.j for r in recs}) == len(recs)
        ok &= good >= 10 and distinct and elapsed < 30
        parts.append(f"{case.label} {good} ({elapsed:.2f}s)")
    report(3, ok, "count 10 gives verified non-CM records with distinct j, each < 30s: " + ", ".join(parts))


def test_criterion_04_family_identities():
    F = RATIONAL_FUNCTIONS
    comp = same_rational_function(compose_rational(F["F1"], F["F2"]),
                                  compose_rational(F["G1"], compose_rational(F["G2"], F["G3"])))
    t_sym, x_sym = MPoly.variables("t", "x")
    symbolic = all(psi3_expr(*family_coefficients(c, t_sym), x_sym)
                   == _product(printed_psi3_factors(c, t_sym, x_sym)) for c in CASES)
    rng = random.Random(4)
    numeric = True
    for case in CASES:
        jf, n = j_function(case), 0
        while n < 20:
            t = rand_q(rng, 60, 9)
            try:
                E = family(case, t)
            except DegenerateParameter:
                continue
            parts = printed_psi3_factors(case, t, x)
            numeric &= j_invariant(E) == jf(t)
            numeric &= psi3(E) == _product([UniPoly((Fraction(parts[0]),))] + parts[1:])
            n += 1
    report(4, comp and symbolic and numeric,
           f"F1(F2) = G1(G2(G3)): {comp}; psi3 = printed factorization symbolically: {symbolic}; "
           f"j and psi3 at 20 random t per case: {numeric} "
           "(C2xC2 uses the factor x^2 - 2sx - 3(t+1)^2 s; the printed +(t+1)^2 s cannot match)")


def _product(parts):
    acc = parts[0]
    for p in parts[1:]:
        acc = acc * p
    return acc


def test_criterion_05_psi3_discriminant_class():
    rng = random.Random(5)
    n = bad = 0
    while n < 100:
        A, B = rand_q(rng, 99, 5), rand_q(rng, 99, 5)
        if 4 * A**3 + 27 * B**2 == 0:
            continue
        bad += squarefree_part(discriminant(psi3(Curve(A, B)))) != -3
        n += 1
    report(5, bad == 0, f"squarefree_part(disc psi3) = -3 for {n - bad}/100 random (A, B)")


def test_criterion_06_hilbert_suite():
    rng = random.Random(6)
    prod_ok = 0
    for _ in range(200):
        a, b = rand_q(rng), rand_q(rng)
        prod = 1
        for _, s in hilbert_symbols(a, b):
            prod *= s
        prod_ok += prod == 1
    oracle_ok = 0
    for _ in range(50):
        a, b = rand_q(rng, 500), rand_q(rng, 500)
        oracle_ok += all(hilbert_local(a, b, p) == hilbert_bruteforce(a, b, p) for p in (2, 3, 5, 7, 13)) \
            and hilbert_local(a, b, INF) == hilbert_real(a, b)
    alg_ok = True
    for _ in range(100):
        a, a2, b = rand_q(rng), rand_q(rng), rand_q(rng)
        for v in (INF, 2, 3, 5, 7, 13):
            alg_ok &= hilbert_local(a, b, v) == hilbert_local(b, a, v)
            alg_ok &= hilbert_local(a * a2, b, v) == hilbert_local(a, b, v) * hilbert_local(a2, b, v)
    report(6, prod_ok == 200 and oracle_ok == 50 and alg_ok,
           f"product formula {prod_ok}/200; mod p^k oracle {oracle_ok}/50 at p in 2,3,5,7,13; "
           f"bimultiplicative and symmetric: {alg_ok}")


CORPUS = [
    (x * x + x + 1) * (x - 2) * (x + 5), (x * x + 3) * (x - 1) ** 2, (x * x + 3) * x * (x + 3),
    (x**2 - 10) * (x**2 + 30), (x**2 - 2) * (x**2 + 6), (x**2 + 2) * (x**2 - 6), (x**2 + 1) * (x**2 - 3),
    (x**2 - 5) * (x**2 + 15), x * (x**3 + 2), (x + 1) * (x**3 - 2), (x - 2) * (x**3 - 7), x * (x**3 + 3),
    x**4 + x**2 - 3, x**4 + 2 * x**2 - 12, x**4 + 3 * x**2 - 3, tschirnhaus(x**4 + x**2 - 3, x + x * x),
    psi3(Curve(1, 1)), psi3(Curve(-2, 5)), psi3(Curve(3, -7)), psi3(Curve(Fraction(1, 2), 4)),
]


def test_criterion_07_classifier_oracle():
    labels = [classify(f).label for f in CORPUS]
    guesses = [frobenius_class(f.descending(), nprimes=100)[0] for f in CORPUS]
    agree = sum(a == b for a, b in zip(labels, guesses))
    rng = random.Random(7)
    fam_ok, tried = 0, 0
    for case in CASES:
        n = 0
        while n < 2:
            t = rand_q(rng, 40, 4)
            try:
                E = family(case, t)
            except DegenerateParameter:
                continue
            j = j_invariant(E)
            # skip CM values and t where j drops to a smaller row (e.g. j a cube in the S4 family)
            if is_cm_j(j) or _row(j) != case:
                continue
            fam_ok += classify(psi3(E)).label == case
            tried += 1
            n += 1
    report(7, agree == 20 and set(labels) == set(CASES) and fam_ok == tried,
           f"Frobenius oracle agrees on {agree}/20 corpus polynomials spanning {sorted(set(labels))}; "
           f"classify(psi3(family(case, t))) = case on {fam_ok}/{tried} random t")


def _row(j):
    return classify_from_j(j).row


def test_criterion_08_d4_algebra():
    a, d, n, m = MPoly.variables("a", "d", "n", "m")
    sq1 = (3 * (a * a + 12 * d * d) * (a - 3 * d) ** 2 + 6 * a * (a**3 + 9 * a * d * d + 18 * d**3)
           == (3 * (a * a - a * d + 6 * d * d)) ** 2)
    sq2 = 3 * (a * a + 12 * d * d) + 6 * a * (a - 6 * d) == (3 * a - 6 * d) ** 2
    # the library's a_*, d_* agree with these polynomials at sample points
    a_star = (a**3 + 9 * a * d * d) * n * n + a * m * m - (2 * a * a + 12 * d * d) * n * m
    d_star = 3 * d**3 * n * n - d * m * m + a * d * n * m
    lib_match = all(
        d4_forms(av, dv)[0](nv, mv) == a_star.subs(a=av, d=dv, n=nv, m=mv).constant_value()
        and d4_forms(av, dv)[1](nv, mv) == d_star.subs(a=av, d=dv, n=nv, m=mv).constant_value()
        for av, dv, nv, mv in itertools.product((Fraction(2), Fraction(-3, 2)), (Fraction(1), Fraction(5)),
                                                (Fraction(1), Fraction(-4)), (Fraction(3), Fraction(2, 7)))
    )
    norm = (a_star**2 + 12 * d_star**2
            == (a * a * n * n + 3 * d * d * n * n - 2 * a * m * n + m * m) ** 2 * (a * a + 12 * d * d))
    e1, e2 = evenize(SIX[5]), evenize(SIX[4])
    ok = sq1 and sq2 and norm and lib_match and e1 == (8, 8) and e2 == (4, 4)
    report(8, ok, f"square identities: {sq1 and sq2}; a_*^2 + 12 d_*^2 factorization: {norm}; "
                  f"evenize(x^4+2x^2-12) = ({e1[0]}, {e1[1]}), evenize(x^4+x^2-3) = ({e2[0]}, {e2[1]})")


def test_criterion_09_gl2f3():
    perms = all_perms()
    hom = all(phi(perm_mul(s, t)) == proj(mul(phi(s), phi(t))) for s, t in itertools.product(perms, perms))
    images = {phi(s) for s in perms}
    bij = len(images) == 24 and images == {proj(M) for M in all_gl2()}
    g = [(G(i).order, iso_type(G(i))) for i in range(5)]
    gt = [(G_tilde(i).order, iso_type(G_tilde(i))) for i in range(5)]
    split = [is_split(G_tilde(i), G(i)) for i in range(5)]
    ok = (hom and bij
          and g == [(2, "C2"), (4, "C2xC2"), (6, "S3"), (8, "D4"), (24, "S4")]
          and gt == [(4, "C2xC2"), (8, "D4"), (12, "D6"), (16, "SD16"), (48, "GL2F3")]
          and split == [True, False, True, False, False])
    report(9, ok, f"homomorphism {hom}, bijective {bij}; G_i {[l for _, l in g]}; "
                  f"G~_i {[l for _, l in gt]}; split {split}")


def test_criterion_10_qexp():
    start = time.perf_counter()
    ok = check_identity(30)
    elapsed = time.perf_counter() - start
    report(10, ok and elapsed < 5, f"t^3 = j through u^29: {ok}, {elapsed:.2f}s < 5s")


def test_criterion_11_involution():
    rng = random.Random(11)
    good = n = 0
    while n < 50:
        Qp = BinaryForm(rng.randint(-20, 20), rng.randint(-20, 20), rng.randint(-20, 20))
        if Qp.disc == 0 or is_square(-Qp.disc) is not None:
            continue
        px, py = rand_q(rng, 20, 9), rand_q(rng, 20, 9)
        A, B = rng.randint(-20, 20), rng.randint(-20, 20)
        C = (-1 - A * px * px - B * py * py) / (px * py)
        try:
            Q = BinaryForm(A, B, C)
        except ValueError:
            continue
        p = (px, py)
        q = involution_C(Qp, Q, p)
        good += Q(*p) == -1 and Qp(*q) ** 2 + Q(*q) == 0 and involution_C(Qp, Q, q) == p
        n += 1
    report(11, good == 50, f"double application is the identity and images lie on Q'^2 + Q = 0: {good}/50")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s", "--no-header", "-p", "no:warnings"]))
