"""Integer factorization, square classes and exact roots of rationals.

Factoring is trial division by the primes below ``TRIAL_LIMIT`` followed by
Brent's variant of Pollard rho.  Rho iterations are charged against a budget
so a pathological input fails loudly instead of hanging.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from ..errors import FactorBudgetExceeded

TRIAL_LIMIT = 10**6
DEFAULT_FACTOR_BUDGET = 10**7

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


@lru_cache(maxsize=4)
def small_primes(limit=TRIAL_LIMIT):
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


def is_probable_prime(n):
    """Miller-Rabin with the first 13 prime bases (deterministic below 3.3e24)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def iroot(n, k):
    """Floor of the real k-th root of a nonnegative integer."""
    if n < 0:
        raise ValueError("iroot of negative number")
    if n < 2:
        return n
    if k == 2:
        return isqrt(n)
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x**k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def _perfect_power(n):
    for k in range(2, n.bit_length() + 1):
        r = iroot(n, k)
        if r < 2:
            break
        if r**k == n:
            return r, k
    return None


class _Budget:
    __slots__ = ("left",)

    def __init__(self, steps):
        self.left = steps

    def spend(self, steps):
        self.left -= steps
        if self.left < 0:
            raise FactorBudgetExceeded("Pollard rho step budget exhausted")


def _rho(n, budget):
    # Brent cycle detection; c runs 1, 2, ... so results are reproducible.
    if n % 2 == 0:
        return 2
    c = 0
    while True:
        c += 1
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                steps = min(m, r - k)
                budget.spend(steps)
                for _ in range(steps):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                budget.spend(1)
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


def _factor_large(n, budget, out):
    if n == 1:
        return
    if is_probable_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    pp = _perfect_power(n)
    if pp is not None:
        base, k = pp
        sub: dict[int, int] = {}
        _factor_large(base, budget, sub)
        for p, e in sub.items():
            out[p] = out.get(p, 0) + e * k
        return
    d = _rho(n, budget)
    _factor_large(d, budget, out)
    _factor_large(n // d, budget, out)


def factorint(n, budget=None, trial_limit=TRIAL_LIMIT):
    """Prime factorization of a nonzero integer as ``{p: e}`` (sign dropped)."""
    n = abs(int(n))
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    for p in small_primes(trial_limit):
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
    if n > 1:
        if n < trial_limit * trial_limit:
            out[n] = out.get(n, 0) + 1
        else:
            _factor_large(n, _Budget(DEFAULT_FACTOR_BUDGET if budget is None else budget), out)
    return dict(sorted(out.items()))


def prime_support(x, budget=None):
    """Primes dividing the numerator or denominator of a nonzero rational."""
    x = Fraction(x)
    primes = set()
    for part in (x.numerator, x.denominator):
        if abs(part) > 1:
            primes.update(factorint(part, budget))
    return sorted(primes)


def squarefree_part(x, budget=None):
    """The squarefree integer s with x = s * (rational square)."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("squarefree_part of zero")
    s = -1 if x < 0 else 1
    for part in (x.numerator, x.denominator):
        if abs(part) > 1:
            for p, e in factorint(part, budget).items():
                if e % 2:
                    s *= p
    return s


def _exact_root(x, k):
    x = Fraction(x)
    num, den = x.numerator, x.denominator
    if num < 0:
        if k % 2 == 0:
            return None
        r = _exact_root(-x, k)
        return None if r is None else -r
    a, b = iroot(num, k), iroot(den, k)
    if a**k == num and b**k == den:
        return Fraction(a, b)
    return None


def is_square(x):
    """Exact rational square root (nonnegative) or None."""
    return _exact_root(x, 2)


def is_cube(x):
    """Exact rational cube root or None."""
    return _exact_root(x, 3)


def same_square_class(x, y):
    """True iff x and y are nonzero and x/y is a rational square; no factoring needed."""
    x, y = Fraction(x), Fraction(y)
    if x == 0 or y == 0:
        return False
    return is_square(x * y) is not None


def legendre_symbol(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def sqrt_mod_prime(a, p):
    """A square root of a modulo the prime p (Tonelli-Shanks); None if a is a non-residue."""
    a %= p
    if p == 2 or a == 0:
        return a
    if legendre_symbol(a, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre_symbol(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def sqrt_mod_squarefree(a, n, budget=None):
    """A square root of a modulo a squarefree n > 0, via CRT; None if none exists."""
    n = abs(n)
    if n == 1:
        return 0
    root, mod = 0, 1
    for p in factorint(n, budget):
        r = sqrt_mod_prime(a, p)
        if r is None:
            return None
        # CRT merge of root mod `mod` with r mod p
        k = ((r - root) * pow(mod, -1, p)) % p
        root, mod = root + mod * k, mod * p
    return root % mod
