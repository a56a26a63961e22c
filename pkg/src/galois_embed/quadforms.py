"""Hilbert symbols over Q, binary quadratic forms and rational points on conics."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import AnisotropyViolated, SearchBudgetExceeded
from .exactmath import UniPoly, is_square, prime_support, squarefree_part
from .exactmath.integers import legendre_symbol, sqrt_mod_squarefree

INF = "inf"
DEFAULT_HEIGHT_BUDGET = 48


# --------------------------------------------------------------------------
# Hilbert symbols
# --------------------------------------------------------------------------

def _as_integer(x):
    # x and num*den lie in the same square class
    x = Fraction(x)
    return x.numerator * x.denominator


def _split_val(a, p):
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return v, a


def hilbert_local(a, b, place):
    """Local Hilbert symbol (a, b)_v for v a prime or ``"inf"``."""
    a, b = _as_integer(a), _as_integer(b)
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol of zero")
    if place == INF:
        return -1 if a < 0 and b < 0 else 1
    p = int(place)
    alpha, u = _split_val(a, p)
    beta, v = _split_val(b, p)
    if p == 2:
        def eps(z):
            return ((z - 1) // 2) % 2

        def omega(z):
            return ((z * z - 1) // 8) % 2

        e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u)
        return -1 if e % 2 else 1
    s = -1 if (alpha * beta * (p - 1) // 2) % 2 else 1
    if beta % 2:
        s *= legendre_symbol(u, p)
    if alpha % 2:
        s *= legendre_symbol(v, p)
    return s


def relevant_places(a, b, budget=None):
    primes = set(prime_support(a, budget)) | set(prime_support(b, budget)) | {2}
    return [INF] + sorted(primes)


def hilbert_symbols(a, b, budget=None):
    """All local symbols at the places where one can be nontrivial."""
    return [(v, hilbert_local(a, b, v)) for v in relevant_places(a, b, budget)]


def hilbert_global(a, b, budget=None):
    """+1 iff z^2 = a x^2 + b y^2 has a nontrivial rational solution."""
    return -1 if any(s == -1 for _, s in hilbert_symbols(a, b, budget)) else 1


@dataclass(frozen=True)
class ObstructionReport:
    """Outcome of the obstruction computation for one Galois case.

    ``global_symbol`` is ``1``, ``-1``, ``"trivial"`` or ``"unsupported"``.
    """

    case: str
    global_symbol: object
    entries: tuple = ()
    arguments: tuple | None = None
    note: str = ""

    @property
    def solvable(self):
        if self.global_symbol == "unsupported":
            return None
        return self.global_symbol != -1

    @property
    def failing_places(self):
        return [v for v, s in self.entries if s == -1]

    def to_json(self):
        return {
            "case": self.case,
            "global_symbol": self.global_symbol,
            "arguments": None if self.arguments is None else [str(Fraction(v)) for v in self.arguments],
            "entries": [{"place": v, "symbol": s} for v, s in self.entries],
            "solvable": self.solvable,
            "note": self.note,
        }


def symbol_report(case, a, b, budget=None, note=""):
    entries = tuple(hilbert_symbols(a, b, budget))
    g = -1 if any(s == -1 for _, s in entries) else 1
    return ObstructionReport(case, g, entries, (Fraction(a), Fraction(b)), note)


# --------------------------------------------------------------------------
# binary forms
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class BinaryForm:
    """Q(x, y) = A x^2 + B y^2 + C x y."""

    A: Fraction
    B: Fraction
    C: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("A", "B", "C"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.A == 0 and self.B == 0 and self.C == 0:
            raise ValueError("zero binary form")

    def __call__(self, x, y):
        return self.A * x * x + self.B * y * y + self.C * x * y

    def __neg__(self):
        return BinaryForm(-self.A, -self.B, -self.C)

    def scaled(self, c):
        return BinaryForm(c * self.A, c * self.B, c * self.C)

    @property
    def disc(self):
        """4AB - C^2 (so -disc = C^2 - 4AB)."""
        return 4 * self.A * self.B - self.C**2

    def swapped(self):
        return BinaryForm(self.B, self.A, self.C)

    def gradient(self, x, y):
        return (2 * self.A * x + self.C * y, 2 * self.B * y + self.C * x)

    def __str__(self):
        return f"{self.A}*x^2 + {self.B}*y^2 + {self.C}*x*y"


def represents(Q, target, budget=None):
    """True iff Q(x, y) = target has a rational solution."""
    target = Fraction(target)
    if target == 0:
        raise ValueError("target must be nonzero")
    if Q.B == 0:
        if Q.A == 0:
            return True
        Q = Q.swapped()
    D = -Q.disc
    if D == 0:
        return is_square(target / Q.B) is not None
    return hilbert_global(D, Q.B * target, budget) == 1


def represents_one(Q, budget=None):
    """Q represents 1 iff (-disc Q, B) = 1 (after swapping if B = 0)."""
    return represents(Q, 1, budget)


# --------------------------------------------------------------------------
# rational points
# --------------------------------------------------------------------------

def rationals_by_height(limit=None):
    """0, 1, -1, 2, -2, 1/2, -1/2, 3, -3, 1/3, -1/3, 3/2, ... (height = max(|p|, q))."""
    yield Fraction(0)
    h = 1
    while limit is None or h <= limit:
        for q in range(1, h + 1):
            if gcd(h, q) == 1:
                yield Fraction(h, q)
                yield Fraction(-h, q)
        for p in range(1, h):
            if gcd(p, h) == 1:
                yield Fraction(p, h)
                yield Fraction(-p, h)
        h += 1


def _legendre(a, b, budget):
    """Nontrivial integers (X, Y, Z) with X^2 = a Y^2 + b Z^2; a, b squarefree nonzero.

    Lagrange descent: reduce |b| with t^2 = a (mod b) until a coefficient is 1.
    """
    if a == 1:
        return (1, 1, 0)
    if b == 1:
        return (1, 0, 1)
    if a == -b:
        return (0, 1, 1)
    if abs(a) > abs(b):
        X, Y, Z = _legendre(b, a, budget)
        return (X, Z, Y)
    t = sqrt_mod_squarefree(a, b, budget)
    if t is None:
        raise ArithmeticError("conic has no rational point")
    if t > abs(b) // 2:
        t -= abs(b)
    k = (t * t - a) // b
    if k == 0:
        raise ArithmeticError("descent hit a square coefficient")
    c = squarefree_part(k, budget)
    s = abs(k // c)
    s_root = is_square(s)
    X1, Y1, Z1 = _legendre(a, c, budget)
    X = X1 * t + a * Y1
    Y = X1 + Y1 * t
    Z = c * Z1 * int(s_root)
    g = gcd(gcd(X, Y), Z)
    return (X // g, Y // g, Z // g)


def _descent_point(Q, target, budget):
    """A rational point of Q = target via completing the square and Legendre descent."""
    swap = Q.B == 0
    if swap:
        Q = Q.swapped()
    A, B, C = Q.A, Q.B, Q.C
    D = C * C - 4 * A * B  # 4B*Q = (2B y + C x)^2 - D x^2
    if D == 0:
        s = is_square(target / B)
        x, y = Fraction(1), s - C / (2 * B)
    elif is_square(D) is not None:
        # Q = B (y - l1 x)(y - l2 x)
        w = is_square(D)
        l1, l2 = (-C + w) / (2 * B), (-C - w) / (2 * B)
        k = Fraction(1)
        while True:
            L1, L2 = k, target / (B * k)
            x = (L1 - L2) / (l2 - l1)
            y = L1 + l1 * x
            if x and y:
                break
            k += 1
    else:
        d0 = squarefree_part(D, budget)
        e = 4 * B * target
        e0 = squarefree_part(e, budget)
        sD = is_square(D / d0)
        sE = is_square(e / e0)
        U, Yp, Zp = _legendre(d0, e0, budget)
        # U^2 = D (Yp/sD)^2 + e (Zp/sE)^2 with Zp != 0 since D is not a square
        X = Fraction(Yp) / sD
        Z = Fraction(Zp) / sE
        x = X / Z
        u = Fraction(U) / Z
        y = (u - C * x) / (2 * B)
    return (y, x) if swap else (x, y)


def _search_point(Q, target, height_budget):
    fallback = None
    for x in rationals_by_height(height_budget):
        if Q.B == 0:
            if Q.C * x != 0:
                y = (target - Q.A * x * x) / (Q.C * x)
                if y:
                    return (x, y)
            continue
        b, c = Q.C * x, Q.A * x * x - target
        w = is_square(b * b - 4 * Q.B * c)
        if w is None:
            continue
        roots = {(-b + w) / (2 * Q.B), (-b - w) / (2 * Q.B)}
        for y in sorted(roots, key=lambda v: (v < 0, abs(v))):
            if x and y:
                return (x, y)
            if fallback is None:
                fallback = (x, y)
    return fallback


def conic_point(Q, target, height_budget=DEFAULT_HEIGHT_BUDGET, method="auto", budget=None):
    """A rational (x, y) with Q(x, y) = target, or None if none exists.

    Small-height enumeration first (prefers points with both coordinates
    nonzero); if that finds nothing, Legendre descent, which always succeeds
    on a solvable conic.  ``method="search"`` disables the descent.
    """
    target = Fraction(target)
    if not represents(Q, target, budget):
        return None
    pt = _search_point(Q, target, height_budget)
    if pt is not None:
        return pt
    if method == "search":
        raise SearchBudgetExceeded(f"no point of height <= {height_budget}")
    pt = _descent_point(Q, target, budget)
    assert Q(*pt) == target
    return pt


@dataclass(frozen=True)
class ConicParametrization:
    """r -> base + s(r) * (w0 + r*w1): the second intersection of a pencil of lines.

    ``w1`` is tangent at the base point, so r = infinity returns the base.
    The map is (X(r)/W(r), Y(r)/W(r)) with X, Y, W of degree <= 2.
    """

    form: BinaryForm
    target: Fraction
    base: tuple
    w0: tuple
    w1: tuple
    X: UniPoly = field(repr=False)
    Y: UniPoly = field(repr=False)
    W: UniPoly = field(repr=False)

    def __call__(self, r):
        if r is None:
            return self.base
        w = self.W(r)
        if w == 0:
            return None
        return (self.X(r) / w, self.Y(r) / w)

    def identity_holds(self):
        """Q(X, Y) == target * W^2 as polynomials in r."""
        Q = self.form
        lhs = Q.A * self.X * self.X + Q.B * self.Y * self.Y + Q.C * self.X * self.Y
        return lhs == self.target * self.W * self.W


def conic_parametrize(Q, target, base, w0=None, w1=None):
    target = Fraction(target)
    x0, y0 = (Fraction(v) for v in base)
    if Q(x0, y0) != target:
        raise ValueError("base point is not on the conic")
    gx, gy = Q.gradient(x0, y0)
    tangent = (-gy, gx)
    if w1 is None:
        w1 = tangent
    else:
        w1 = tuple(Fraction(v) for v in w1)
        if gx * w1[0] + gy * w1[1] != 0:
            raise ValueError("w1 must be tangent at the base point")
    if w0 is None:
        w0 = (Fraction(1), Fraction(0)) if w1[1] != 0 else (Fraction(0), Fraction(1))
    w0 = tuple(Fraction(v) for v in w0)
    if w0[0] * w1[1] - w0[1] * w1[0] == 0:
        raise ValueError("w0 must not be parallel to the tangent")
    vx = UniPoly((w0[0], w1[0]))
    vy = UniPoly((w0[1], w1[1]))
    W = Q.A * vx * vx + Q.B * vy * vy + Q.C * vx * vy
    L = gx * vx + gy * vy
    X = x0 * W - L * vx
    Y = y0 * W - L * vy
    return ConicParametrization(Q, target, (x0, y0), w0, w1, X, Y, W)


def involution_C(Qp, Q, p):
    """(x, y) -> (x, y) / Qp(x, y), swapping points of Qp^2 + Q = 0 and Q = -1."""
    if is_square(-Qp.disc) is not None:
        raise AnisotropyViolated("-disc(Q') is a square; Q' is isotropic")
    x, y = (Fraction(v) for v in p)
    v = Qp(x, y)
    if v == 0:
        raise AnisotropyViolated("Q' vanishes at the point")
    on_quartic = v * v + Q(x, y) == 0
    on_conic = Q(x, y) == -1
    if not (on_quartic or on_conic):
        raise ValueError("point lies on neither Q'^2 + Q = 0 nor Q = -1")
    return (x / v, y / v)
