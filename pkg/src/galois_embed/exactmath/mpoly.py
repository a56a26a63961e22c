"""Sparse multivariate polynomials over Q.

Small and slow on purpose: used to state identities in several parameters
(a, d, n, m, t, x, y) exactly, and for resultants in a named variable.
"""
from __future__ import annotations

from fractions import Fraction

from .poly import UniPoly, resultant_generic


class MPoly:
    __slots__ = ("gens", "terms")

    def __init__(self, gens, terms=None):
        self.gens = tuple(gens)
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def variables(cls, *names):
        out = []
        for i in range(len(names)):
            e = [0] * len(names)
            e[i] = 1
            out.append(cls(names, {tuple(e): 1}))
        return tuple(out)

    def _const(self, c):
        return MPoly(self.gens, {(0,) * len(self.gens): c})

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.gens != self.gens:
                raise ValueError("MPoly generators differ")
            return other
        if isinstance(other, (int, Fraction)):
            return self._const(other)
        return None

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        o = self._coerce(other) if isinstance(other, (MPoly, int, Fraction)) else None
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash((self.gens, frozenset(self.terms.items())))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        t = dict(self.terms)
        for k, v in o.terms.items():
            t[k] = t.get(k, 0) + v
        return MPoly(self.gens, t)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.gens, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        t: dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in o.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                t[k] = t.get(k, 0) + v1 * v2
        return MPoly(self.gens, t)

    __rmul__ = __mul__

    def __truediv__(self, c):
        if isinstance(c, MPoly):
            return self.exquo(c)
        c = Fraction(c)
        return MPoly(self.gens, {k: v / c for k, v in self.terms.items()})

    def __pow__(self, e):
        result, base = self._const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def _index(self, var):
        return self.gens.index(var)

    def degree(self, var):
        i = self._index(var)
        return max((k[i] for k in self.terms), default=-1)

    def coefficients(self, var):
        """Ascending list of coefficients with respect to ``var``."""
        i = self._index(var)
        out = [dict() for _ in range(self.degree(var) + 1)]
        for k, v in self.terms.items():
            kk = k[:i] + (0,) + k[i + 1 :]
            out[k[i]][kk] = v
        return [MPoly(self.gens, d) for d in out]

    def subs(self, **values):
        """Substitute scalars or MPolys (same generators) for variables."""
        acc = self._const(0)
        for k, v in self.terms.items():
            term = self._const(v)
            rest = list(k)
            for name, val in values.items():
                i = self._index(name)
                if rest[i]:
                    term = term * (val ** rest[i] if isinstance(val, MPoly) else Fraction(val) ** rest[i])
                    rest[i] = 0
            acc = acc + term * MPoly(self.gens, {tuple(rest): 1})
        return acc

    def exquo(self, d):
        """Exact division; raises ArithmeticError if d does not divide self."""
        d = self._coerce(d)
        if d.is_zero():
            raise ZeroDivisionError("MPoly division by zero")
        lead_d = max(d.terms)
        cd = d.terms[lead_d]
        q: dict = {}
        r = self
        while r.terms:
            lead = max(r.terms)
            diff = tuple(a - b for a, b in zip(lead, lead_d))
            if min(diff) < 0:
                raise ArithmeticError("inexact multivariate division")
            c = r.terms[lead] / cd
            q[diff] = q.get(diff, 0) + c
            r = r - MPoly(self.gens, {diff: c}) * d
        return MPoly(self.gens, q)

    def constant_value(self):
        if not self.terms:
            return Fraction(0)
        if list(self.terms) != [(0,) * len(self.gens)]:
            raise ValueError("not a constant")
        return next(iter(self.terms.values()))

    def to_unipoly(self, var):
        i = self._index(var)
        for k in self.terms:
            if any(e for j, e in enumerate(k) if j != i):
                raise ValueError(f"polynomial involves variables other than {var}")
        return UniPoly([c.constant_value() for c in self.coefficients(var)])

    @classmethod
    def from_unipoly(cls, f, gens, var):
        i = gens.index(var)
        t = {}
        for deg, c in enumerate(f.coeffs):
            e = [0] * len(gens)
            e[i] = deg
            t[tuple(e)] = c
        return cls(gens, t)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            v = self.terms[k]
            mon = "*".join(
                g if e == 1 else f"{g}^{e}" for g, e in zip(self.gens, k) if e
            )
            if not mon:
                parts.append(str(v))
            elif v == 1:
                parts.append(mon)
            elif v == -1:
                parts.append("-" + mon)
            else:
                parts.append(f"{v}*{mon}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def mresultant(f, g, var):
    """Res_var(f, g) for MPolys over the same generators; result is free of ``var``."""
    A = f.coefficients(var)[::-1]
    B = g.coefficients(var)[::-1]
    one = f._const(1)
    return resultant_generic(A, B, lambda a, b: a.exquo(b), lambda c: c.is_zero(), one)
