"""Exact truncated power series and rational functions over the integers.

Everything is arbitrary-precision: power series are tuples of Python ints,
rational functions are coprime integer polynomial pairs.  The two counting
operators live here as well:

* ``rho`` turns the growth series of a rotation-closed, power-closed language
  into the growth series of its lexicographically least rotation
  representatives, via the totient-weighted integral transform
  ``[z^n] rho(f) = (1/n) * sum_{k | n} phi(k) * [z^{n/k}] f``.
* ``neck`` is the necklace transform
  ``sum_{k,l >= 1} (phi(k)/(k*l)) * f(z^k)^l``
  counting cyclic sequences of blocks drawn from a language.

Both operators must produce integer coefficients on language-derived input;
non-integrality is reported as an error, never rounded away.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class NonIntegralCoefficient(ArithmeticError):
    """An operator produced a non-integer coefficient.

    For rho/neck this signals that the input series is not the growth series
    of a rotation-and-power-closed language.
    """


# ---------------------------------------------------------------------------
# integer polynomials as coefficient lists (ascending degree)
# ---------------------------------------------------------------------------

def poly_trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_add(a, b):
    n = max(len(a), len(b))
    return poly_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def poly_neg(a):
    return [-x for x in a]

def poly_sub(a, b):
    return poly_add(a, poly_neg(b))


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return poly_trim(out)


def poly_content(a):
    g = 0
    for x in a:
        g = gcd(g, abs(x))
    return g


def poly_primitive(a):
    g = poly_content(a)
    if g in (0, 1):
        return list(a)
    return [x // g for x in a]


def poly_gcd(a, b):
    """Primitive gcd of integer polynomials, positive leading coefficient."""
    a = poly_trim(a)
    b = poly_trim(b)
    if not a:
        base = b
    elif not b:
        base = a
    else:
        fa = [Fraction(x) for x in a]
        fb = [Fraction(x) for x in b]
        while fb:
            # remainder of fa by fb over the rationals
            fa = fa[:]
            while len(fa) >= len(fb) and any(fa):
                factor = fa[-1] / fb[-1]
                shift = len(fa) - len(fb)
                for i, c in enumerate(fb):
                    fa[shift + i] -= factor * c
                while fa and fa[-1] == 0:
                    fa.pop()
            fa, fb = fb, fa
        denominator_lcm = 1
        for c in fa:
            denominator_lcm = denominator_lcm * c.denominator // gcd(denominator_lcm, c.denominator)
        base = [int(c * denominator_lcm) for c in fa]
    base = poly_primitive(poly_trim(base))
    if base and base[-1] < 0:
        base = poly_neg(base)
    return base


def poly_divide_exact(a, b):
    """Quotient a/b when b divides a exactly over the rationals."""
    a = [Fraction(x) for x in poly_trim(a)]
    b = poly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    out = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and any(a):
        factor = a[-1] / b[-1]
        shift = len(a) - len(b)
        out[shift] = factor
        for i, c in enumerate(b):
            a[shift + i] -= factor * c
        while a and a[-1] == 0:
            a.pop()
    if any(a):
        raise ValueError("polynomial division is not exact")
    if any(c.denominator != 1 for c in out):
        raise NonIntegralCoefficient("exact quotient has non-integer coefficients")
    return poly_trim([int(c) for c in out])


# ---------------------------------------------------------------------------
# truncated power series
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PowerSeries:
    """Integer power series truncated at ``max_degree`` (inclusive)."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a truncated series needs at least its constant term")

    @staticmethod
    def from_list(values, max_degree=None) -> "PowerSeries":
        values = [int(v) for v in values]
        if max_degree is not None:
            values = values[: max_degree + 1] + [0] * (max_degree + 1 - len(values))
        return PowerSeries(tuple(values))

    @staticmethod
    def zero(max_degree: int) -> "PowerSeries":
        return PowerSeries((0,) * (max_degree + 1))

    @staticmethod
    def one(max_degree: int) -> "PowerSeries":
        return PowerSeries((1,) + (0,) * max_degree)

    @property
    def max_degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n: int) -> int:
        return self.coefficients[n]

    def truncate(self, max_degree: int) -> "PowerSeries":
        return PowerSeries.from_list(self.coefficients, max_degree)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.max_degree, other.max_degree)
        return PowerSeries(tuple(self[i] + other[i] for i in range(n + 1)))

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.max_degree, other.max_degree)
        return PowerSeries(tuple(self[i] - other[i] for i in range(n + 1)))

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.max_degree, other.max_degree)
        out = [0] * (n + 1)
        for i in range(n + 1):
            a = self[i]
            if a:
                for j in range(n + 1 - i):
                    b = other[j]
                    if b:
                        out[i + j] += a * b
        return PowerSeries(tuple(out))

    def scale(self, factor: int) -> "PowerSeries":
        return PowerSeries(tuple(factor * c for c in self.coefficients))

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coefficients]


def series_add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    return a + b


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    return a * b


def substitute_power(f: PowerSeries, k: int) -> PowerSeries:
    """f(z^k), truncated at f's degree bound."""
    if k < 1:
        raise ValueError("power substitution needs k >= 1")
    n = f.max_degree
    out = [0] * (n + 1)
    for m in range(0, n // k + 1):
        out[k * m] = f[m]
    return PowerSeries(tuple(out))


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RationalFunction:
    """Reduced integer rational function num/den.

    Canonical form: gcd(num, den) = 1, no common content, and the denominator
    has positive constant term (positive leading coefficient if the constant
    term is zero).
    """

    num: tuple[int, ...]
    den: tuple[int, ...]

    def __post_init__(self):
        if not self.den:
            raise ZeroDivisionError("zero denominator")

    @staticmethod
    def make(num, den=(1,)) -> "RationalFunction":
        num = poly_trim(list(num))
        den = poly_trim(list(den))
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return RationalFunction((0,), (1,))
        g = poly_gcd(num, den)
        if len(g) > 1:
            num = poly_divide_exact(num, g)
            den = poly_divide_exact(den, g)
        c = gcd(poly_content(num), poly_content(den))
        if c > 1:
            num = [x // c for x in num]
            den = [x // c for x in den]
        sign_ref = den[0] if den[0] != 0 else den[-1]
        if sign_ref < 0:
            num = poly_neg(num)
            den = poly_neg(den)
        return RationalFunction(tuple(num), tuple(den))

    @staticmethod
    def constant(c: int) -> "RationalFunction":
        return RationalFunction.make([c])

    @staticmethod
    def z() -> "RationalFunction":
        return RationalFunction.make([0, 1])

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction.make(
            poly_add(poly_mul(self.num, other.den), poly_mul(other.num, self.den)),
            poly_mul(self.den, other.den),
        )

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction.make(
            poly_sub(poly_mul(self.num, other.den), poly_mul(other.num, self.den)),
            poly_mul(self.den, other.den),
        )

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction.make(poly_mul(self.num, other.num), poly_mul(self.den, other.den))

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        if not poly_trim(other.num):
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction.make(poly_mul(self.num, other.den), poly_mul(self.den, other.num))

    def __pow__(self, k: int) -> "RationalFunction":
        if k < 0:
            raise ValueError("negative powers not supported")
        out = RationalFunction.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def equals(self, other: "RationalFunction") -> bool:
        return poly_trim(poly_sub(poly_mul(self.num, other.den), poly_mul(other.num, self.den))) == []

    def expand(self, max_degree: int) -> PowerSeries:
        """Taylor coefficients to ``max_degree`` via the linear recurrence."""
        if self.den[0] == 0:
            raise ZeroDivisionError("denominator constant term is zero")
        d0 = Fraction(self.den[0])
        out = []
        for n in range(max_degree + 1):
            acc = Fraction(self.num[n]) if n < len(self.num) else Fraction(0)
            for i in range(1, min(n, len(self.den) - 1) + 1):
                acc -= self.den[i] * out[n - i]
            acc /= d0
            out.append(acc)
        if any(c.denominator != 1 for c in out):
            raise NonIntegralCoefficient("expansion has non-integer coefficients")
        return PowerSeries(tuple(int(c) for c in out))

    def to_json_dict(self) -> dict:
        return {"num": [str(c) for c in self.num], "den": [str(c) for c in self.den]}


def rat_add(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    return a + b


def rat_mul(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    return a * b


def rat_eq(a: RationalFunction, b: RationalFunction) -> bool:
    return a.equals(b)


# ---------------------------------------------------------------------------
# totient and counting operators
# ---------------------------------------------------------------------------

def euler_phi(k: int) -> int:
    """Euler totient by trial-division factorization."""
    if k < 1:
        raise ValueError("euler_phi needs k >= 1")
    result = k
    remaining = k
    p = 2
    while p * p <= remaining:
        if remaining % p == 0:
            while remaining % p == 0:
                remaining //= p
            result -= result // p
        p += 1 if p == 2 else 2
    if remaining > 1:
        result -= result // remaining
    return result


def rho(f: PowerSeries) -> PowerSeries:
    """Rotation-class counting transform.

    [z^n] rho(f) = (1/n) * sum_{k | n} phi(k) * [z^{n/k}] f, with the division
    required to be exact.  The input must have zero constant term.
    """
    if f[0] != 0:
        raise ValueError("rho requires a series with zero constant term")
    n = f.max_degree
    out = [0] * (n + 1)
    for m in range(1, n + 1):
        total = 0
        for k in range(1, m + 1):
            if m % k == 0:
                total += euler_phi(k) * f[m // k]
        q, r = divmod(total, m)
        if r:
            raise NonIntegralCoefficient(
                f"rho coefficient at degree {m} is {total}/{m}, not an integer"
            )
        out[m] = q
    return PowerSeries(tuple(out))


def neck(f: PowerSeries) -> PowerSeries:
    """Necklace transform sum_{k,l>=1} (phi(k)/(k*l)) f(z^k)^l, truncated.

    The input must have zero constant term, so only k, l up to the truncation
    degree contribute.  Intermediate arithmetic is exact rational; the final
    coefficients must come out integral.
    """
    if f[0] != 0:
        raise ValueError("neck requires a series with zero constant term")
    n = f.max_degree
    total = [Fraction(0)] * (n + 1)
    for k in range(1, n + 1):
        g = substitute_power(f, k)
        weight = Fraction(euler_phi(k), k)
        power = PowerSeries.one(n)
        max_l = n // k if k > 1 else n
        for l in range(1, max_l + 1):
            power = power * g
            w = weight / l
            for i in range(l, n + 1):
                if power[i]:
                    total[i] += w * power[i]
    for i, c in enumerate(total):
        if c.denominator != 1:
            raise NonIntegralCoefficient(
                f"neck coefficient at degree {i} is {c}, not an integer"
            )
    return PowerSeries(tuple(int(c) for c in total))


def rho_integral_form(f: PowerSeries) -> PowerSeries:
    """rho computed by formally integrating sum_k phi(k) f(t^k) / t.

    Slower than ``rho`` but follows the defining integral term by term; used
    as an independent check of the closed coefficient formula.
    """
    if f[0] != 0:
        raise ValueError("rho requires a series with zero constant term")
    n = f.max_degree
    integrand = [Fraction(0)] * (n + 1)  # coefficient of t^(m-1) stored at m
    for k in range(1, n + 1):
        g = substitute_power(f, k)
        phi_k = euler_phi(k)
        for m in range(1, n + 1):
            if g[m]:
                integrand[m] += phi_k * g[m]
    out = [Fraction(0)] * (n + 1)
    for m in range(1, n + 1):
        out[m] = integrand[m] / m
    if any(c.denominator != 1 for c in out):
        raise NonIntegralCoefficient("integral form produced non-integer coefficients")
    return PowerSeries(tuple(int(c) for c in out))
