"""Truncated Laurent series in u = q^(1/3) and the identity j = t^3.

With q = u^3, eta(tau/3)^3 / eta(3 tau)^3 has prefactor
q^(3/72 - 9/24) = q^(-1/3) = u^(-1), so

    h = (1/3) u^(-1) prod (1 - u^n)^3 / prod (1 - u^(9n))^3.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import DivideByZeroSeries

DEFAULT_TERMS = 30


class LaurentSeries:
    """sum_{k >= val} c_k u^k, known exactly for exponents < prec."""

    __slots__ = ("val", "coeffs", "prec")

    def __init__(self, val, coeffs, prec):
        coeffs = [Fraction(c) for c in coeffs][: max(prec - val, 0)]
        # normalize so the leading stored coefficient is nonzero
        i = 0
        while i < len(coeffs) and coeffs[i] == 0:
            i += 1
        self.val = val + i if i < len(coeffs) else prec
        self.coeffs = tuple(coeffs[i:])
        self.prec = prec

    @classmethod
    def monomial(cls, c, k, prec):
        return cls(k, [c], prec)

    @classmethod
    def from_poly(cls, coeffs, prec, val=0):
        return cls(val, coeffs, prec)

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, k):
        if k >= self.prec:
            raise IndexError(f"coefficient of u^{k} is beyond the precision {self.prec}")
        i = k - self.val
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def terms(self):
        return {self.val + i: c for i, c in enumerate(self.coeffs) if c}

    def _coerce(self, other):
        if isinstance(other, LaurentSeries):
            return other
        return LaurentSeries(0, [other], 10**9)

    def __add__(self, other):
        o = self._coerce(other)
        prec = min(self.prec, o.prec)
        lo = min(self.val, o.val)
        return LaurentSeries(lo, [self[k] + o[k] for k in range(lo, prec)], prec)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries(self.val, [-c for c in self.coeffs], self.prec)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        if self.is_zero() or o.is_zero():
            return LaurentSeries(0, [], min(self.prec + o.val, o.prec + self.val))
        val = self.val + o.val
        prec = min(self.prec + o.val, o.prec + self.val)
        n = prec - val
        out = [Fraction(0)] * max(n, 0)
        for i, a in enumerate(self.coeffs[:n]):
            if a:
                for j, b in enumerate(o.coeffs[: n - i]):
                    out[i + j] += a * b
        return LaurentSeries(val, out, prec)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivideByZeroSeries("inverse of a series that vanishes to the known precision")
        n = self.prec - self.val  # relative precision
        a0 = self.coeffs[0]
        inv = [Fraction(0)] * n
        inv[0] = 1 / a0
        for k in range(1, n):
            s = sum(self.coeffs[i] * inv[k - i] for i in range(1, min(k, len(self.coeffs) - 1) + 1))
            inv[k] = -s / a0
        return LaurentSeries(-self.val, inv, n - self.val)

    def __truediv__(self, other):
        o = self._coerce(other)
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = LaurentSeries(0, [1], 10**9)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        prec = min(self.prec, other.prec)
        lo = min(self.val, other.val)
        return all(self[k] == other[k] for k in range(lo, prec))

    def __repr__(self):
        shown = " + ".join(f"{c}*u^{self.val + i}" for i, c in enumerate(self.coeffs[:6]) if c)
        return f"LaurentSeries({shown or 0} + O(u^{self.prec}))"


def euler_product(step, prec, power=1):
    """prod_{n >= 1} (1 - u^(step*n))^power up to u^prec."""
    coeffs = [Fraction(0)] * prec
    coeffs[0] = Fraction(1)
    for n in range(step, prec, step):
        for _ in range(power):
            # multiply by (1 - u^n) in place, high to low
            for k in range(prec - 1, n - 1, -1):
                coeffs[k] -= coeffs[k - n]
    return LaurentSeries(0, coeffs, prec)


def eta_quotient_h(N=DEFAULT_TERMS):
    """h known for exponents < N (valuation -1)."""
    prec = N + 1  # products are needed one step further because of the u^-1
    num = euler_product(1, prec, 3)
    den = euler_product(9, prec, 3)
    return LaurentSeries.monomial(Fraction(1, 3), -1, 10**9) * (num / den)


def hauptmodul_t(h):
    """t = 3(h+1)(h+3)(h^2+3) / (h(h^2+3h+3))."""
    num = 3 * (h + 1) * (h + 3) * (h * h + 3)
    den = h * (h * h + 3 * h + 3)
    return num / den


def _sigma3(n):
    return sum(d**3 for d in range(1, n + 1) if n % d == 0)


def j_series(N=DEFAULT_TERMS):
    """j = E4^3 / Delta in u, known for exponents < N."""
    qprec = N // 3 + 2  # q-exponents needed
    E4 = LaurentSeries(0, [1] + [240 * _sigma3(n) for n in range(1, qprec)], qprec)
    prod24 = euler_product(1, qprec, 24)
    j_q = E4**3 / (LaurentSeries.monomial(1, 1, 10**9) * prod24)
    # substitute q = u^3
    out = {}
    for k, c in j_q.terms().items():
        out[3 * k] = c
    prec = min(3 * j_q.prec, N)
    lo = min(out)
    return LaurentSeries(lo, [out.get(k, 0) for k in range(lo, prec)], prec)


def check_identity(N=DEFAULT_TERMS, h=None):
    """True iff t^3 - j vanishes at every exponent from -3 up to N - 1."""
    if h is None:
        h = eta_quotient_h(N + 3)
    t = hauptmodul_t(h)
    j = j_series(N + 1)
    diff = t**3 - j
    if diff.prec < N:
        raise ArithmeticError(f"series known only below u^{diff.prec}, need u^{N}")
    return all(diff[k] == 0 for k in range(-3, N))


def is_integral(s):
    return all(c.denominator == 1 for c in s.coeffs)
