"""Dense univariate polynomials over Q and the algorithms built on them.

Coefficients are ``fractions.Fraction`` stored degree-ascending.  The
resultant is the subresultant PRS, written once over an abstract coefficient
ring so the same code serves Q, Q[x] (Tschirnhaus transforms) and the
multivariate ring in :mod:`.mpoly`.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .integers import is_square


def _frac(v):
    return v if type(v) is Fraction else Fraction(v)


class UniPoly:
    """Immutable polynomial in one variable with rational coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=()):
        c = [_frac(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def from_descending(cls, coeffs):
        return cls(list(coeffs)[::-1])

    @classmethod
    def from_roots(cls, roots):
        p = cls((1,))
        for r in roots:
            p = p * cls((-_frac(r), 1))
        return p

    @property
    def coeffs(self):
        return self._c

    def descending(self):
        return list(reversed(self._c))

    @property
    def degree(self):
        return len(self._c) - 1

    @property
    def lc(self):
        return self._c[-1] if self._c else Fraction(0)

    def is_zero(self):
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __getitem__(self, i):
        return self._c[i] if 0 <= i < len(self._c) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == UniPoly((other,))._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    @staticmethod
    def _coerce(other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self._c), len(o._c))
        return UniPoly([self[i] + o[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self._c])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self._c])
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not self._c or not other._c:
            return UniPoly()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(other._c):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = UniPoly((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, c):
        # scalar division only
        c = _frac(c)
        return UniPoly([v / c for v in self._c])

    def __divmod__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly((other,))
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self._c)
        dq = len(r) - len(other._c)
        if dq < 0:
            return UniPoly(), self
        q = [Fraction(0)] * (dq + 1)
        lc = other._c[-1]
        for k in range(dq, -1, -1):
            coef = r[k + len(other._c) - 1] / lc
            q[k] = coef
            if coef:
                for j, b in enumerate(other._c):
                    r[k + j] -= coef * b
        return UniPoly(q), UniPoly(r[: len(other._c) - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exquo(self, other):
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def __call__(self, v):
        """Horner evaluation; ``v`` may be any ring element (Fraction, UniPoly, MPoly...)."""
        acc = 0
        for c in reversed(self._c):
            acc = acc * v + c
        return acc

    def compose(self, g):
        acc = UniPoly()
        for c in reversed(self._c):
            acc = acc * g + c
        return acc

    def derivative(self):
        return UniPoly([i * c for i, c in enumerate(self._c)][1:])

    def monic(self):
        if not self._c:
            return self
        return self / self._c[-1]

    def shift(self, c):
        """f(x + c)."""
        return self.compose(UniPoly((c, 1)))

    def scale(self, c):
        """f(c*x)."""
        c = _frac(c)
        return UniPoly([v * c**i for i, v in enumerate(self._c)])

    def integer_primitive(self):
        """Primitive integer polynomial with positive leading coefficient, same roots."""
        if not self._c:
            return UniPoly()
        den = lcm(*(c.denominator for c in self._c))
        ints = [int(c * den) for c in self._c]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if ints[-1] < 0:
            g = -g
        return UniPoly([v // g for v in ints])

    def gcd(self, other):
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic()

    def squarefree(self):
        """The product of the distinct monic irreducible factors (the radical)."""
        if self.degree <= 0:
            return UniPoly((1,))
        return (self // self.gcd(self.derivative())).monic()

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"UniPoly({format_poly(self)!r})"


def format_poly(f, var="x"):
    """Human-readable, re-parseable form such as ``3*x^4 - 13/4*x + 1``."""
    if f.is_zero():
        return "0"
    parts = []
    for i in range(f.degree, -1, -1):
        c = f[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = str(a)
        else:
            mon = var if i == 1 else f"{var}^{i}"
            body = mon if a == 1 else f"{a}*{mon}"
        parts.append((sign, body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# --------------------------------------------------------------------------
# subresultant PRS over an abstract integral domain
# --------------------------------------------------------------------------

def _strip(seq, is_zero):
    i = 0
    while i < len(seq) and is_zero(seq[i]):
        i += 1
    return seq[i:]


def _prem(A, B, is_zero):
    """Pseudo-remainder lc(B)^(deg A - deg B + 1) * A mod B on descending lists."""
    dB = len(B) - 1
    lcB = B[0]
    R = list(A)
    e = len(A) - len(B) + 1
    while R and len(R) - 1 >= dB:
        lr = R[0]
        R = [lcB * c for c in R]
        for i, b in enumerate(B):
            R[i] = R[i] - lr * b
        R = _strip(R[1:], is_zero)
        e -= 1
    if e:
        f = lcB**e
        R = [f * c for c in R]
    return R


def resultant_generic(A, B, exquo, is_zero, one):
    """Resultant of two descending coefficient lists over an integral domain.

    ``exquo(a, b)`` must perform exact division in the coefficient ring.
    """
    A = _strip(list(A), is_zero)
    B = _strip(list(B), is_zero)
    if not A or not B:
        return one * 0
    s = 1
    if len(A) < len(B):
        A, B = B, A
        if (len(A) - 1) % 2 and (len(B) - 1) % 2:
            s = -1
    g = h = one
    while True:
        dA, dB = len(A) - 1, len(B) - 1
        if dB == 0:
            if dA == 0:
                return one * s
            return exquo(B[0] ** dA, h ** (dA - 1)) * s
        delta = dA - dB
        if dA % 2 and dB % 2:
            s = -s
        R = _prem(A, B, is_zero)
        if not R:
            return one * 0
        A, B = B, R
        div = g * h**delta
        B = [exquo(c, div) for c in B]
        g = A[0]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = exquo(g**delta, h ** (delta - 1))


def _frac_exquo(a, b):
    return a / b


def resultant(f, g):
    """Res(f, g) of two nonzero rational polynomials."""
    if f.is_zero() or g.is_zero():
        return Fraction(0)
    return resultant_generic(
        f.descending(), g.descending(), _frac_exquo, lambda c: c == 0, Fraction(1)
    )


def discriminant(f):
    """(-1)^(n(n-1)/2) Res(f, f') / lc(f)."""
    n = f.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    if n == 1:
        return Fraction(1)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative()) / f.lc


def tschirnhaus(f, T):
    """Monic polynomial whose roots are T(alpha) over the roots alpha of f.

    Computed as Res_y(f(y), x - T(y)) with the outer resultant taken over Q[x].
    """
    if f.degree < 1:
        raise ValueError("tschirnhaus needs deg f >= 1")
    f = f.monic()
    T = T % f
    n = f.degree
    if T.degree <= 0:
        return UniPoly((-T[0], 1)) ** n
    A = [UniPoly((c,)) for c in f.descending()]
    B = [UniPoly((-c,)) for c in T.descending()]
    B[-1] = UniPoly((-T[0], 1))
    res = resultant_generic(
        A, B, lambda a, b: a.exquo(b), lambda c: c.is_zero(), UniPoly((1,))
    )
    return res.monic()


def mod_inverse(a, f):
    """Inverse of a modulo f in Q[x]/(f), or None if gcd(a, f) != 1."""
    r0, r1 = f, a % f
    s0, s1 = UniPoly(), UniPoly((1,))
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    if r0.degree != 0:
        return None
    return (s0 / r0[0]) % f


# --------------------------------------------------------------------------
# rational roots via exact real-root isolation
# --------------------------------------------------------------------------

def _sturm(p):
    seq = [p, p.derivative()]
    while seq[-1].degree > 0:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(-r)
    return seq


def _variations(seq, x):
    signs = []
    for q in seq:
        v = q(x)
        if v:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _isolate(p, seq, lo, hi, vlo, vhi, out, hits):
    count = vlo - vhi
    if count == 0:
        return
    if count == 1:
        out.append((lo, hi))
        return
    mid = (lo + hi) / 2
    k = 2
    while p(mid) == 0:
        hits.add(mid)
        mid = lo + (hi - lo) * Fraction(k, 2 * k + 1)
        k += 1
    vm = _variations(seq, mid)
    _isolate(p, seq, lo, mid, vlo, vm, out, hits)
    _isolate(p, seq, mid, hi, vm, vhi, out, hits)


def _rational_roots_squarefree(p):
    """Distinct rational roots of a squarefree primitive integer polynomial."""
    roots = set()
    if p.degree < 1:
        return roots
    if p[0] == 0:
        roots.add(Fraction(0))
        p = p // UniPoly.x()
        if p.degree < 1:
            return roots
    if p.degree == 1:
        roots.add(-p[0] / p[1])
        return roots
    if p.degree == 2:
        d = is_square(p[1] ** 2 - 4 * p[0] * p[2])
        if d is not None:
            roots.update({(-p[1] + d) / (2 * p[2]), (-p[1] - d) / (2 * p[2])})
        return roots
    L = int(abs(p.lc))
    bound = 1 + max(abs(c) for c in p.coeffs[:-1]) / abs(p.lc)
    seq = _sturm(p)
    intervals: list = []
    _isolate(p, seq, -bound, bound, _variations(seq, -bound), _variations(seq, bound), intervals, roots)
    width = Fraction(1, 2 * L * L)
    for lo, hi in intervals:
        slo = p(lo) > 0
        found = None
        while hi - lo >= width:
            mid = (lo + hi) / 2
            v = p(mid)
            if v == 0:
                found = mid
                break
            if (v > 0) == slo:
                lo = mid
            else:
                hi = mid
        if found is None:
            cand = ((lo + hi) / 2).limit_denominator(L)
            if p(cand) == 0:
                found = cand
        if found is not None:
            roots.add(found)
    return roots


def rational_roots(f):
    """All rational roots of f, repeated according to multiplicity, ascending.

    A rational root u/v of a primitive integer polynomial has v | lc, so an
    isolating interval shrunk below 1/(2 lc^2) pins it down uniquely; no
    factoring of the coefficients is required.
    """
    if f.is_zero():
        raise ValueError("rational_roots of the zero polynomial")
    distinct = _rational_roots_squarefree(f.squarefree().integer_primitive())
    out = []
    for r in sorted(distinct):
        lin = UniPoly((-r, 1))
        g = f
        while True:
            q, rem = divmod(g, lin)
            if rem:
                break
            out.append(r)
            g = q
    return out


# --------------------------------------------------------------------------
# factorization of degree <= 4
# --------------------------------------------------------------------------

def _quadratic_split(h):
    """Split a monic quartic with no rational root into two monic quadratics, or None."""
    s = h[3] / 4
    g = h.shift(-s)  # depressed: x^4 + q x^2 + r x + c
    q, r, c = g[2], g[1], g[0]
    candidates = []
    if r == 0:
        w = is_square(q * q - 4 * c)
        if w is not None:
            candidates.append((Fraction(0), (q - w) / 2, (q + w) / 2))
    resolvent = UniPoly((-r * r, q * q - 4 * c, 2 * q, 1))
    for U in sorted(set(rational_roots(resolvent))):
        if U <= 0:
            continue
        u = is_square(U)
        if u is None:
            continue
        diff = r / u  # w - v
        tot = q + U  # v + w
        candidates.append((u, (tot - diff) / 2, (tot + diff) / 2))
    for u, v, w in candidates:
        g1 = UniPoly((v, u, 1))
        g2 = UniPoly((w, -u, 1))
        if g1 * g2 == g:
            return g1.shift(s), g2.shift(s)
    return None


def factor_small(f):
    """Complete factorization over Q of a polynomial of degree 1..4.

    Returns ``(lc, [(monic irreducible factor, multiplicity), ...])`` with
    ``lc * prod(p**e) == f``.
    """
    if not 1 <= f.degree <= 4:
        raise ValueError("factor_small handles degrees 1..4")
    lc = f.lc
    found: list = []
    rest = f.monic()
    for r in rational_roots(rest):
        lin = UniPoly((-r, 1))
        found.append(lin)
        rest = rest // lin
    if rest.degree == 4:
        split = _quadratic_split(rest)
        if split is None:
            found.append(rest)
        else:
            found.extend(split)
    elif rest.degree >= 2:
        found.append(rest)
    merged: dict = {}
    for p in found:
        merged[p] = merged.get(p, 0) + 1
    items = sorted(merged.items(), key=lambda kv: (kv[0].degree, [c for c in kv[0].coeffs]))
    return lc, items


def is_irreducible(f):
    _, fac = factor_small(f)
    return len(fac) == 1 and fac[0][1] == 1
