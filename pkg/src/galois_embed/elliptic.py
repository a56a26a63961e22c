"""Short Weierstrass curves, 3-division polynomials and the five families E_{t,G}.

Family coefficients and the printed psi3 factors are written as plain
arithmetic in t, so they work for a rational t and for an MPoly t alike.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DegenerateParameter, SingularCurve
from .exactmath import UniPoly, factor_small, is_cube, is_square, rational_roots

CASES = ("C2", "C2xC2", "S3", "D4", "S4")

CM_J_INVARIANTS = (
    0,
    1728,
    -3375,
    8000,
    -32768,
    54000,
    287496,
    -884736,
    -12288000,
    16581375,
    -884736000,
    -147197952000,
    -262537412640768000,
)
_CM_SET = frozenset(Fraction(j) for j in CM_J_INVARIANTS)


@dataclass(frozen=True)
class Curve:
    """y^2 = x^3 + A x + B over Q."""

    A: Fraction
    B: Fraction

    def __post_init__(self):
        object.__setattr__(self, "A", Fraction(self.A))
        object.__setattr__(self, "B", Fraction(self.B))
        if self.discriminant_term == 0:
            raise SingularCurve(f"4A^3 + 27B^2 = 0 for (A, B) = ({self.A}, {self.B})")

    @property
    def discriminant_term(self):
        return 4 * self.A**3 + 27 * self.B**2

    def __str__(self):
        return f"y^2 = x^3 + ({self.A})*x + ({self.B})"


def j_invariant(E):
    if isinstance(E, Curve):
        A, B = E.A, E.B
    else:
        A, B = (Fraction(v) for v in E)
    den = 4 * A**3 + 27 * B**2
    if den == 0:
        raise SingularCurve("singular curve has no j-invariant")
    return 6912 * A**3 / den


def psi3_expr(A, B, x):
    """3x^4 + 6Ax^2 + 12Bx - A^2 for any ring elements."""
    return 3 * x**4 + 6 * A * x**2 + 12 * B * x - A * A


def psi3(E):
    """The 3-division polynomial of E as a UniPoly in x."""
    return UniPoly((-E.A * E.A, 12 * E.B, 6 * E.A, 0, 3))


def quadratic_twist(E, d):
    d = Fraction(d)
    if d == 0:
        raise ValueError("twist parameter must be nonzero")
    return Curve(d * d * E.A, d**3 * E.B)


def is_cm_j(j):
    return Fraction(j) in _CM_SET


# --------------------------------------------------------------------------
# the rational functions F1, F2, G1, G2, G3
# --------------------------------------------------------------------------

def F1(t):
    return 27 * (t + 1) * (t + 9) ** 3 / t**3


def F2(t):
    return t * (t * t + 3 * t + 3)


def G1(t):
    return t**3


def G2(t):
    return 3 * (t + 1) * (t - 3) / t


def G3(t):
    return (t * t + 3 * t + 3) / t


# numerator / denominator pairs as UniPolys, for exact composition
_T = UniPoly((0, 1))
RATIONAL_FUNCTIONS = {
    "F1": (27 * (_T + 1) * (_T + 9) ** 3, _T**3),
    "F2": (_T * (_T * _T + 3 * _T + 3), UniPoly((1,))),
    "G1": (_T**3, UniPoly((1,))),
    "G2": (3 * (_T + 1) * (_T - 3), _T),
    "G3": (_T * _T + 3 * _T + 3, _T),
}


def compose_rational(outer, inner):
    """outer(inner) for rational functions given as (num, den) UniPoly pairs."""
    N, D = outer
    p, q = inner
    k = max(N.degree, D.degree)

    def hom(P):
        acc = UniPoly(())
        for i, c in enumerate(P.coeffs):
            acc = acc + c * p**i * q ** (k - i)
        return acc

    return hom(N), hom(D)


def same_rational_function(R1, R2):
    return R1[0] * R2[1] == R2[0] * R1[1]


def j_function(case):
    """t -> j(E_{t,case}) as a callable on ring elements."""
    return {
        "S4": lambda t: t,
        "S3": F1,
        "D4": G1,
        "C2xC2": lambda t: G1(G2(t)),
        "C2": lambda t: F1(F2(t)),
    }[case]


# --------------------------------------------------------------------------
# families
# --------------------------------------------------------------------------

def family_coefficients(case, t):
    """(A, B) of E_{t,case}; t may be a rational or any ring element."""
    if case == "S4":
        return -3 * t * (t - 1728), -2 * t * (t - 1728) ** 2
    if case == "S3":
        return -3 * (t + 1) * (t + 9), -2 * (t + 1) * (t * t - 18 * t - 27)
    if case == "D4":
        return -3 * t * (t**3 - 1728), -2 * (t**3 - 1728) ** 2
    if case == "C2xC2":
        s = t * t - 6 * t - 3
        return -3 * (t - 3) * (t + 1) * s, -2 * (t * t + 3) * s * s
    if case == "C2":
        return (
            -3 * (t + 1) * (t + 3) * (t * t + 3),
            -2 * (t * t - 3) * (t**4 + 6 * t**3 + 18 * t * t + 18 * t + 9),
        )
    raise ValueError(f"unknown case {case!r}")


def printed_psi3_factors(case, t, x):
    """The factorization of psi3(E_{t,case}): [constant, factor, factor, ...]."""
    if case == "S4":
        u = t * (t - 1728)
        return [3, x**4 - 6 * u * x**2 - 8 * u * (t - 1728) * x - 3 * u * u]
    if case == "S3":
        return [
            3,
            x - 3 * t - 3,
            x**3 + 3 * (t + 1) * x**2 + 3 * (t + 1) * (t - 15) * x + (t + 1) * (t + 9) ** 2,
        ]
    if case == "D4":
        v = t**3 - 1728
        return [1, 3 * x**4 - 18 * t * v * x**2 - 24 * v * v * x - 9 * t * t * v * v]
    if case == "C2xC2":
        s = t * t - 6 * t - 3
        # the first constant is printed as (t+1)^2 s in the source; the
        # product only equals psi3 (whose constant is -A^2 <= 0) with -3(t+1)^2 s
        return [
            3,
            x * x - 2 * s * x - 3 * (t + 1) ** 2 * s,
            x * x + 2 * s * x + (t - 3) ** 2 * s,
        ]
    if case == "C2":
        return [
            3,
            x - 3 * t * t - 6 * t - 3,
            x + t * t + 6 * t + 9,
            x * x + (2 * t * t - 6) * x + t**4 + 6 * t * t + 9,
        ]
    raise ValueError(f"unknown case {case!r}")


def family(case, t):
    """The curve E_{t,case} for a rational t != 0."""
    t = Fraction(t)
    if t == 0:
        raise DegenerateParameter("t = 0 is excluded from every family")
    A, B = family_coefficients(case, t)
    if 4 * A**3 + 27 * B**2 == 0:
        raise DegenerateParameter(f"E_(t,{case}) is singular at t = {t}")
    return Curve(A, B)


def psi3_factorization(E):
    lc, factors = factor_small(psi3(E))
    return lc, factors


# --------------------------------------------------------------------------
# classification by j
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class JClass:
    j: Fraction
    memberships: dict
    witnesses: dict = field(default_factory=dict)
    cm: bool = False

    @property
    def row(self):
        m = self.memberships
        if not m["F1"] and not m["G1"]:
            return "S4"
        if m["F1"] and not m["F1F2"]:
            return "S3"
        if m["G1"] and not m["G1G2"]:
            return "D4"
        if m["G1G2"] and not m["G1G2G3"]:
            return "C2xC2"
        return "C2"

    def to_json(self):
        return {
            "j": str(self.j),
            "cm": self.cm,
            "memberships": dict(self.memberships),
            "witnesses": {k: [str(w) for w in v] for k, v in self.witnesses.items()},
            "row": self.row,
        }


def _quadratic_rational_roots(a, b, c):
    disc = b * b - 4 * a * c
    w = is_square(disc)
    if w is None:
        return []
    return sorted({(-b + w) / (2 * a), (-b - w) / (2 * a)})


def classify_from_j(j):
    """Fibre memberships of j under F1, G1 and their compositions."""
    j = Fraction(j)
    # F1 fibre: 27(t+1)(t+9)^3 - j t^3 = 0, t = 0 is never a root
    P = 27 * (_T + 1) * (_T + 9) ** 3 - j * _T**3
    f1 = sorted(set(rational_roots(P)))
    # F1(F2(w)) with F2(w) = (w+1)^3 - 1
    f1f2 = []
    for t in f1:
        c = is_cube(t + 1)
        if c is not None and c != 1:
            f1f2.append(c - 1)
    # G1 fibre: s^3 = j, s != 0
    s = is_cube(j) if j != 0 else None
    g1 = [s] if s is not None else []
    # G2 fibre over s: 3u^2 - (6 + s)u - 9 = 0
    g1g2 = [u for s0 in g1 for u in _quadratic_rational_roots(3, -(6 + s0), -9) if u != 0]
    # G3 fibre over u: w^2 + (3 - u)w + 3 = 0
    g1g2g3 = [w for u in g1g2 for w in _quadratic_rational_roots(1, 3 - u, 3) if w != 0]
    witnesses = {"F1": f1, "F1F2": sorted(f1f2), "G1": g1, "G1G2": g1g2, "G1G2G3": sorted(set(g1g2g3))}
    memberships = {k: bool(v) for k, v in witnesses.items()}
    return JClass(j, memberships, witnesses, is_cm_j(j))
