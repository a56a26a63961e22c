"""Validation and Galois-group classification of quartics with discriminant -3 mod squares."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    DiscriminantClassMismatch,
    EvenizeDegenerate,
    ImpossibleClass,
    WrongDegree,
)
from .exactmath import (
    UniPoly,
    discriminant,
    factor_small,
    is_square,
    mod_inverse,
    rational_roots,
    same_square_class,
    squarefree_part,
    tschirnhaus,
)

DEFAULT_RETRY_BUDGET = 16
X = UniPoly((0, 1))


@dataclass(frozen=True)
class ValidatedQuartic:
    f: UniPoly
    radical: UniPoly
    factors: tuple  # distinct monic irreducible factors with multiplicities
    disc_class: int = -3

    @property
    def distinct(self):
        return [p for p, _ in self.factors]


@dataclass(frozen=True)
class GaloisCase:
    """Classification result; ``data`` depends on the label.

    C2: ()      C2xC2: (delta1, delta2)      S3: (a, b) of x^3 + a x + b
    D4: (a, d) of x^4 + a x^2 - 3 d^2        S4: the monic quartic
    """

    label: str
    data: tuple = ()
    source: UniPoly | None = field(default=None, compare=False)
    even_chain: tuple = field(default=(), compare=False)

    def field_description(self):
        if self.label == "C2":
            return "Q(sqrt(-3))"
        if self.label == "C2xC2":
            d1, d2 = self.data
            return f"Q(sqrt({d1}), sqrt({d2}))"
        if self.label == "S3":
            a, b = self.data
            return f"splitting field of x^3 + ({a})*x + ({b}), contains sqrt(-3)"
        if self.label == "D4":
            a, d = self.data
            return f"Q(sqrt((-({a}) + sqrt({a * a + 12 * d * d}))/2), sqrt(-3))"
        return f"splitting field of {self.data[0]}"

    def payload_json(self):
        if self.label == "S4":
            return {"quartic": str(self.data[0])}
        keys = {"C2": (), "C2xC2": ("delta1", "delta2"), "S3": ("a", "b"), "D4": ("a", "d")}[self.label]
        return {k: str(Fraction(v)) for k, v in zip(keys, self.data)}


def validate(f):
    """Check deg f = 4 and that the distinct irreducible factors have disc product -3 mod squares."""
    if isinstance(f, ValidatedQuartic):
        return f
    if not isinstance(f, UniPoly):
        f = UniPoly(f)
    if f.degree != 4:
        raise WrongDegree(f"expected a quartic, got degree {f.degree}")
    _, factors = factor_small(f)
    prod = Fraction(1)
    radical = UniPoly((1,))
    for p, _ in factors:
        radical = radical * p
        if p.degree >= 2:
            prod *= discriminant(p)
    if not same_square_class(prod, -3):
        cls = squarefree_part(prod) if prod else 0
        raise DiscriminantClassMismatch(f"discriminant class is {cls}, not -3")
    return ValidatedQuartic(f, radical, tuple(factors))


def resolvent_cubic(q, r, s):
    """theta^3 - q theta^2 - 4 s theta + (4 q s - r^2), roots alpha_i alpha_j + alpha_k alpha_l."""
    q, r, s = Fraction(q), Fraction(r), Fraction(s)
    return UniPoly((4 * q * s - r * r, -4 * s, -q, 1))


def depress(f):
    """(shift c, g) with g(x) = f(x - c) monic and free of x^3; roots of g are alpha + c."""
    f = f.monic()
    c = f[f.degree - 1] / f.degree
    return c, f.shift(-c)


def depressed_cubic(g):
    """(a, b) with g monic cubic ~ x^3 + a x + b after removing the x^2 term."""
    _, h = depress(g)
    return h[1], h[0]


def _delta(p):
    return squarefree_part(discriminant(p))


def classify(v):
    if not isinstance(v, ValidatedQuartic):
        v = validate(v)
    degs = sorted(p.degree for p in v.distinct)
    if 3 in degs:
        cubic = next(p for p in v.distinct if p.degree == 3)
        return GaloisCase("S3", depressed_cubic(cubic), v.f)
    if 4 in degs:
        return _classify_irreducible(v.f.monic())
    quads = [p for p in v.distinct if p.degree == 2]
    if len(quads) == 2:
        d = sorted((_delta(p) for p in quads), key=lambda z: (abs(z), z))
        return GaloisCase("C2xC2", tuple(d), v.f)
    if len(quads) == 1:
        return GaloisCase("C2", (), v.f)
    raise ImpossibleClass("no irreducible factor of degree >= 2")


def _classify_irreducible(f):
    _, g = depress(f)
    R = resolvent_cubic(g[2], g[1], g[0])
    roots = sorted(set(rational_roots(R)))
    if not roots:
        return GaloisCase("S4", (f,), f)
    if len(roots) == 1:
        direct = even_form(f)
        if direct is not None:
            return GaloisCase("D4", direct, f)
        a, d, chain = evenize_with_chain(f)
        return GaloisCase("D4", (a, d), f, tuple(chain))
    raise ImpossibleClass("resolvent cubic splits completely; impossible with disc -3")


def even_form(f):
    """(a, d) if f is already monic x^4 + a x^2 - 3 d^2 with d > 0, else None."""
    f = f.monic()
    if f.degree != 4 or f[3] or f[1] or f[0] == 0:
        return None
    d = is_square(-f[0] / 3)
    if d is None:
        return None
    return f[2], d


def lemma_conditions(a, b):
    """Non-square checks for x^4 + a x^2 + b: b and a^2 - 4b are not squares."""
    a, b = Fraction(a), Fraction(b)
    if b == 0 or a * a - 4 * b == 0:
        return False
    return is_square(b) is None and is_square(a * a - 4 * b) is None


def _evenize_once(g):
    """Try the pair-difference transform on a monic depressed quartic g.

    Returns (T, h) with h = tschirnhaus(g, T) even, or None.
    """
    q, r, s = g[2], g[1], g[0]
    roots = sorted(set(rational_roots(resolvent_cubic(q, r, s))))
    if len(roots) != 1:
        return None
    theta = roots[0]
    if r == 0:
        u = UniPoly(())
    else:
        # alpha_1 + alpha_2 as a polynomial in alpha_1, where theta = a1 a2 + a3 a4
        inv = mod_inverse(X * X + theta / 2, g)
        if inv is None:
            return None
        u = ((theta - q) * X - r / 2) * inv % g
    T = 2 * X - u
    h = tschirnhaus(g, T)
    if h[3] or h[1]:
        return None
    if discriminant(h) == 0 or not lemma_conditions(h[2], h[0]):
        return None
    if is_square(-h[0] / 3) is None:
        return None
    return T, h


def evenize_with_chain(f, retry_budget=None):
    """(a, d, chain) where chain is a list of (poly, T) steps starting at monic f.

    Each step satisfies tschirnhaus(poly, T) == next poly; the last poly is
    x^4 + a x^2 - 3 d^2.
    """
    from .quadforms import rationals_by_height

    if retry_budget is None:
        retry_budget = DEFAULT_RETRY_BUDGET
    f = f.monic()
    chain = []
    current = f
    cands = rationals_by_height()
    next(cands)  # skip c = 0
    for attempt in range(retry_budget + 1):
        c, g = depress(current)
        steps = [(current, X + c)] if c else []
        res = _evenize_once(g)
        if res is not None:
            T, h = res
            chain.extend(steps)
            chain.append((g, T))
            chain.append((h, None))
            d = is_square(-h[0] / 3)
            return h[2], d, chain
        if attempt == retry_budget:
            break
        # preliminary transform y = x + c x^2, deterministic c sequence
        cc = next(cands)
        T0 = X + cc * X * X
        nxt = tschirnhaus(current, T0)
        if discriminant(nxt) == 0:
            continue
        chain.append((current, T0))
        current = nxt
    raise EvenizeDegenerate(f"no even form found after {retry_budget} retries")


def evenize(f, retry_budget=None):
    a, d, _ = evenize_with_chain(f, retry_budget)
    return a, d


def chain_holds(chain):
    """Replay a Tschirnhaus chain exactly."""
    for (p, T), (nxt, _) in zip(chain, chain[1:]):
        if T is None or tschirnhaus(p, T) != nxt.monic():
            return False
    return chain[-1][1] is None
