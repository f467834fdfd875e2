"""Exact arithmetic in Q(tau), the quadratic field of the golden mean.

Numbers are stored as a + b*tau with rational coefficients, where tau is the
positive root of x^2 = x + 1. All comparisons are exact: a sign is decided by
integer (or Fraction) arithmetic alone, never through floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal, ROUND_HALF_EVEN, localcontext
from fractions import Fraction
from functools import total_ordering

Rational = int | Fraction

_FIBS = [0, 1]


def fib(n: int) -> int:
    """n-th Fibonacci number (F_0 = 0, F_1 = 1), arbitrary precision."""
    if n < 0:
        raise ValueError(f"fib is defined for n >= 0, got {n}")
    while len(_FIBS) <= n:
        _FIBS.append(_FIBS[-1] + _FIBS[-2])
    return _FIBS[n]


def sqrt5_sign(p: Rational, q: Rational) -> int:
    """Exact sign of p + q*sqrt(5) for rational p, q.

    When p and q disagree in sign, the larger of p^2 and 5*q^2 decides;
    they cannot be equal for nonzero rationals because sqrt(5) is irrational.
    """
    sp = (p > 0) - (p < 0)
    sq = (q > 0) - (q < 0)
    if sq == 0:
        return sp
    if sp == 0:
        return sq
    if sp == sq:
        return sp
    pp = p * p
    qq = 5 * q * q
    if pp == qq:  # would mean p/q = +-sqrt(5), impossible over Q
        raise ArithmeticError("p^2 == 5*q^2 with nonzero rational p, q")
    return sp if pp > qq else sq


def _as_fraction(value: Rational) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"rational coefficient required, got {type(value).__name__}")


@total_ordering
class GoldenNumber:
    """Immutable element a + b*tau of Q(tau), coefficients exact Fractions."""

    __slots__ = ("_a", "_b")

    def __init__(self, a: Rational = 0, b: Rational = 0) -> None:
        object.__setattr__(self, "_a", _as_fraction(a))
        object.__setattr__(self, "_b", _as_fraction(b))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("GoldenNumber is immutable")

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @staticmethod
    def _coerce(other: object) -> GoldenNumber | None:
        if isinstance(other, GoldenNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return GoldenNumber(other)
        return None

    def __add__(self, other: object) -> GoldenNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GoldenNumber(self._a + o._a, self._b + o._b)

    __radd__ = __add__

    def __neg__(self) -> GoldenNumber:
        return GoldenNumber(-self._a, -self._b)

    def __sub__(self, other: object) -> GoldenNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GoldenNumber(self._a - o._a, self._b - o._b)

    def __rsub__(self, other: object) -> GoldenNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> GoldenNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # (a + b*tau)(c + d*tau) with tau^2 = tau + 1
        a, b, c, d = self._a, self._b, o._a, o._b
        return GoldenNumber(a * c + b * d, a * d + b * c + b * d)

    __rmul__ = __mul__

    @property
    def norm(self) -> Fraction:
        """Field norm (a + b*tau)(a + b - b*tau) = a^2 + a*b - b^2."""
        return self._a * self._a + self._a * self._b - self._b * self._b

    def conjugate(self) -> GoldenNumber:
        """Image under tau -> 1 - tau, the nontrivial field automorphism."""
        return GoldenNumber(self._a + self._b, -self._b)

    def inverse(self) -> GoldenNumber:
        n = self.norm
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(tau)")
        return GoldenNumber((self._a + self._b) / n, -self._b / n)

    def __truediv__(self, other: object) -> GoldenNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> GoldenNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> GoldenNumber:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def sign(self) -> int:
        """Exact sign: a + b*tau = ((2a + b) + b*sqrt(5)) / 2."""
        return sqrt5_sign(2 * self._a + self._b, self._b)

    def __abs__(self) -> GoldenNumber:
        return -self if self.sign() < 0 else self

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._a == o._a and self._b == o._b

    def __lt__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (o - self).sign() > 0

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b))

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    @property
    def is_rational(self) -> bool:
        return self._b == 0

    def as_fraction(self) -> Fraction:
        if self._b != 0:
            raise ValueError(f"{self} is irrational")
        return self._a

    def __float__(self) -> float:
        # display/estimation only; never used for decisions
        return float(self._a) + float(self._b) * (1 + math.sqrt(5)) / 2

    def decimal(self, places: int = 6, *, precision: int = 50) -> str:
        """Decimal rendering at the given number of places, exact rounding.

        Evaluation runs at `precision` significant digits, far beyond the
        requested places, so the quantized result is correctly rounded for
        every value this package produces.
        """
        with localcontext() as ctx:
            ctx.prec = precision
            tau = (1 + Decimal(5).sqrt()) / 2
            val = (
                Decimal(self._a.numerator) / self._a.denominator
                + Decimal(self._b.numerator) / self._b.denominator * tau
            )
            return str(val.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN))

    def __str__(self) -> str:
        if self._b == 0:
            return str(self._a)
        if self._b == 1:
            tau_part = "tau"
        elif self._b == -1:
            tau_part = "-tau"
        else:
            tau_part = f"{self._b}*tau"
        if self._a == 0:
            return tau_part
        sign = "-" if self._b < 0 else "+"
        mag = tau_part.lstrip("-")
        return f"{self._a} {sign} {mag}"

    def __repr__(self) -> str:
        return f"GoldenNumber({self._a!r}, {self._b!r})"


ZERO = GoldenNumber(0, 0)
ONE = GoldenNumber(1, 0)
TAU = GoldenNumber(0, 1)


def tau_pow(n: int) -> GoldenNumber:
    """tau**n as an exact GoldenNumber, any integer n.

    For n >= 1 this is F_{n-1} + F_n * tau; negative powers are built by
    repeated multiplication with tau**-1 = tau - 1.
    """
    if n == 0:
        return ONE
    if n > 0:
        return GoldenNumber(fib(n - 1), fib(n))
    inv = GoldenNumber(-1, 1)
    result = ONE
    for _ in range(-n):
        result = result * inv
    return result


@dataclass
class FibPropertyReport:
    """Pass/fail summary for the classical Fibonacci identities."""

    n_max: int
    results: dict[str, bool] = field(default_factory=dict)
    failures: dict[str, str] = field(default_factory=dict)

    @property
    def all_pass(self) -> bool:
        return all(self.results.values())


def verify_fib_properties(n_max: int) -> FibPropertyReport:
    """Check the classical identities exactly for all indices up to n_max.

    Covers: Cassini's identity, coprimality of neighbours, the golden
    remainder F_{n+1} - tau*F_n = (-1)^n / tau^n, strict shrinking of
    |F_{n+1}/F_n - tau| (the limit statement, checked as monotonicity),
    sign alternation with strictly decreasing |F_{n+1} - tau*F_n|, and the
    index-addition rule F_{m+1}F_{n+1} + F_m F_n = F_{m+n+1}.
    """
    if n_max < 2:
        raise ValueError(f"n_max must be at least 2, got {n_max}")
    report = FibPropertyReport(n_max=n_max)

    def record(name: str, ok: bool, witness: str = "") -> None:
        report.results[name] = ok
        if not ok:
            report.failures[name] = witness

    ok, witness = True, ""
    for n in range(1, n_max + 1):
        if fib(n + 1) * fib(n - 1) - fib(n) ** 2 != (-1) ** n:
            ok, witness = False, f"n={n}"
            break
    record("cassini", ok, witness)

    ok, witness = True, ""
    for n in range(0, n_max + 1):
        if math.gcd(fib(n), fib(n + 1)) != 1:
            ok, witness = False, f"n={n}"
            break
    record("coprimality", ok, witness)

    ok, witness = True, ""
    for n in range(0, n_max + 1):
        lhs = GoldenNumber(fib(n + 1), -fib(n))
        rhs = tau_pow(-n) if n % 2 == 0 else -tau_pow(-n)
        if lhs != rhs:
            ok, witness = False, f"n={n}"
            break
    record("golden_remainder", ok, witness)

    ok, witness = True, ""
    prev = None
    for n in range(1, n_max + 1):
        gap = abs(GoldenNumber(Fraction(fib(n + 1), fib(n)), -1))
        if prev is not None and (prev - gap).sign() <= 0:
            ok, witness = False, f"n={n}"
            break
        prev = gap
    record("ratio_convergence", ok, witness)

    ok, witness = True, ""
    prev = None
    for n in range(0, n_max + 1):
        rem = GoldenNumber(fib(n + 1), -fib(n))
        if rem.sign() != (1 if n % 2 == 0 else -1):
            ok, witness = False, f"n={n} sign"
            break
        mag = abs(rem)
        if prev is not None and (prev - mag).sign() <= 0:
            ok, witness = False, f"n={n} magnitude"
            break
        prev = mag
    record("remainder_alternation", ok, witness)

    ok, witness = True, ""
    for m in range(0, n_max + 1):
        for n in range(m, n_max + 1):
            if fib(m + 1) * fib(n + 1) + fib(m) * fib(n) != fib(m + n + 1):
                ok, witness = False, f"m={m} n={n}"
                break
        if not ok:
            break
    record("index_addition", ok, witness)

    return report
