import random
from fractions import Fraction

import pytest

from galois_embed.elliptic import CASES, classify_from_j, family, is_cm_j, j_invariant, psi3
from galois_embed.errors import DegenerateParameter, DiscriminantClassMismatch, WrongDegree
from galois_embed.exactmath import (
    UniPoly,
    discriminant,
    is_irreducible,
    same_square_class,
    squarefree_part,
    tschirnhaus,
)
from galois_embed.quartic import (
    chain_holds,
    classify,
    evenize,
    evenize_with_chain,
    lemma_conditions,
    resolvent_cubic,
    validate,
)

from oracles import ALLOWED_TYPES, frobenius_class

x = UniPoly.x()

EXAMPLES = [
    (x**2 * (x**2 + 3), "C2"),
    ((x**2 - 2) * (x**2 + 6), "C2xC2"),
    ((x**2 + 2) * (x**2 - 6), "C2xC2"),
    (x * (x**3 + 2), "S3"),
    (x**4 + x**2 - 3, "D4"),
    (x**4 + 2 * x**2 - 12, "D4"),
]

CORPUS = [
    (x * x + x + 1) * (x - 2) * (x + 5),
    (x * x + 3) * (x - 1) ** 2,
    (x * x + 3) * x * (x + 3),
    (x**2 - 10) * (x**2 + 30),
    (x**2 - 2) * (x**2 + 6),
    (x**2 + 2) * (x**2 - 6),
    (x**2 + 1) * (x**2 - 3),
    (x**2 - 5) * (x**2 + 15),
    x * (x**3 + 2),
    (x + 1) * (x**3 - 2),
    (x - 2) * (x**3 - 7),
    x * (x**3 + 3),
    x**4 + x**2 - 3,
    x**4 + 2 * x**2 - 12,
    x**4 + 3 * x**2 - 3,
    tschirnhaus(x**4 + x**2 - 3, x + x * x),
    psi3(family("S4", 5)),
    psi3(family("S4", Fraction(-7, 2))),
    3 * x**4 + 6 * x**2 + 12 * x - 1,
    3 * x**4 - 12 * x**2 + 36 * x - 4,
]


@pytest.mark.parametrize("f,label", EXAMPLES)
def test_examples(f, label):
    assert classify(f).label == label


def test_example_payloads():
    assert classify(EXAMPLES[1][0]).data == (2, -6)
    assert classify(EXAMPLES[2][0]).data == (-2, 6)
    assert classify(EXAMPLES[3][0]).data == (0, 2)
    assert classify(EXAMPLES[4][0]).data == (1, 1)
    assert classify(EXAMPLES[5][0]).data == (2, 2)


@pytest.mark.parametrize("idx", range(len(CORPUS)))
def test_frobenius_oracle_agrees(idx):
    f = CORPUS[idx]
    label = classify(f).label
    guess, types = frobenius_class(f.descending(), nprimes=100)
    assert label == guess
    if sum(types[0]) == 4:
        assert set(types) <= ALLOWED_TYPES[label]


def test_corpus_spans_all_classes():
    assert {classify(f).label for f in CORPUS} == set(CASES)


def test_validate_errors():
    with pytest.raises(WrongDegree):
        validate(x**3 + 2)
    with pytest.raises(DiscriminantClassMismatch):
        validate(x**4 + x + 1)
    v = validate(x**2 * (x**2 + 3))
    assert v.radical == x**3 + 3 * x


def test_c2xc2_deltas():
    for f in CORPUS[3:8]:
        d1, d2 = classify(f).data
        assert same_square_class(d1 * d2, -3)
        assert not same_square_class(d1, 1) and not same_square_class(d2, 1)


def test_resolvent_cubic_roots_are_pair_sums():
    # x^4 - 5x^2 + 4 has roots 1, -1, 2, -2
    R = resolvent_cubic(-5, 0, 4)
    for theta in (1 * -1 + 2 * -2, 1 * 2 + -1 * -2, 1 * -2 + -1 * 2):
        assert R(theta) == 0


def test_evenize_examples():
    assert evenize(x**4 + 2 * x**2 - 12) == (8, 8)
    assert evenize(x**4 + x**2 - 3) == (4, 4)


@pytest.mark.parametrize("f", [x**4 + 2 * x**2 - 12, x**4 + x**2 - 3, CORPUS[15],
                               tschirnhaus(x**4 + 3 * x**2 - 3, 1 + x - x**3)])
def test_evenize_chain_certifies(f):
    a, d, chain = evenize_with_chain(f)
    assert chain_holds(chain)
    h = chain[-1][0]
    assert h == x**4 + a * x**2 - 3 * d * d
    assert is_irreducible(h)
    assert squarefree_part(discriminant(h)) == -3
    assert lemma_conditions(a, -3 * d * d)


def _field_invariant(case):
    if case.label == "C2xC2":
        return tuple(sorted(squarefree_part(v) for v in case.data))
    if case.label == "S3":
        a, b = case.data
        return squarefree_part(-4 * a**3 - 27 * b * b)
    if case.label == "D4":
        a, d = case.data
        return squarefree_part(a * a + 12 * d * d)
    return None


def test_conjugate_representations_give_same_case():
    rng = random.Random(13)
    for f in [x**4 + 2 * x**2 - 12, x**4 + 3 * x**2 - 3, (x + 1) * (x**3 - 2), (x**2 + 1) * (x**2 - 3)]:
        base = classify(f)
        for _ in range(2):
            while True:
                T = UniPoly([rng.randint(-3, 3) for _ in range(3)] + [1])
                g = tschirnhaus(f, T)
                if discriminant(g) != 0:
                    break
            other = classify(g)
            assert other.label == base.label
            assert _field_invariant(other) == _field_invariant(base)


@pytest.mark.parametrize("case", CASES)
def test_psi3_of_family_classifies_as_case(case):
    rng = random.Random(20 + CASES.index(case))
    generic = 0
    for _ in range(12):
        t = Fraction(rng.randint(-40, 40), rng.randint(1, 4))
        try:
            E = family(case, t)
        except DegenerateParameter:
            continue
        j = j_invariant(E)
        if is_cm_j(j):
            continue
        # special t (e.g. a cube in the S4 family) land in a smaller row
        row = classify_from_j(j).row
        assert classify(psi3(E)).label == row, t
        generic += row == case
    assert generic >= 3
