"""Asymptotic repetition exponents and their exact golden-mean bounds.

The centrepiece is the bound for the coloured Fibonacci word over 2*delta
letters: with H = 2^(delta-1) and the unique level n0 satisfying
tau^(n0+1) <= H < tau^(n0+2), the asymptotic critical exponent is at most
1 + 1/(H * tau^(n0-1)). Everything on that path is exact; floating point
appears only in decimal renderings.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass
from decimal import Decimal, ROUND_HALF_EVEN, localcontext
from fractions import Fraction
from typing import NamedTuple

from .analysis import RepetitionRecord, max_fractional_power
from .golden import ONE, GoldenNumber, fib, sqrt5_sign, tau_pow
from .words import SequenceGenerator, colouring


class RatioEntry(NamedTuple):
    index: int
    bispecial_length: int
    return_length: int
    ratio: Fraction


@dataclass(frozen=True)
class ExponentEstimate:
    """A computed stand-in for an asymptotic critical exponent.

    mode "asymptotic" means long-period behaviour: either the closed-form
    bispecial/return length ratios (`ratios` filled) or a repetition scan
    restricted to long periods (`witness` filled). Scan results are lower
    estimates: the true exponent can only be larger.
    """

    mode: str
    estimate: Fraction
    ratios: tuple[RatioEntry, ...] = ()
    witness: RepetitionRecord | None = None


@dataclass(frozen=True)
class BoundResult:
    """Exact upper bound for the coloured sequence over 2*delta letters."""

    delta: int
    d: int
    period_length: int  # H = 2^(delta-1)
    level: int  # the n0 with tau^(n0+1) <= H < tau^(n0+2)
    bound: GoldenNumber

    def bound_decimal(self, places: int = 6) -> str:
        return self.bound.decimal(places)

    def to_json_dict(self) -> dict[str, object]:
        return {
            "delta": self.delta,
            "d": self.d,
            "H": self.period_length,
            "N0": self.level,
            "bound_exact": {
                "a_num": self.bound.a.numerator,
                "a_den": self.bound.a.denominator,
                "b_num": self.bound.b.numerator,
                "b_den": self.bound.b.denominator,
            },
            "bound_decimal": self.bound_decimal(),
        }


@dataclass(frozen=True)
class CoefficientBoundCertificate:
    """Exhaustive certificate that golden-proximity forces large coefficients.

    For a threshold c strictly between |F_{n+1} - tau*F_n| and
    |F_n - tau*F_{n-1}|, every pair (kappa, lam) with kappa + lam >= 1 and
    |kappa - tau*lam| < c was checked to satisfy kappa >= F_{n+1} and
    lam >= F_n, enumerating all pairs up to F_{n+3}.
    """

    n: int
    threshold: GoldenNumber
    kappa_min: int
    lambda_min: int
    search_limit: int
    qualifying_pairs: int
    violations: tuple[tuple[int, int], ...]
    minimal_pair_qualifies: bool

    @property
    def passed(self) -> bool:
        return not self.violations and self.minimal_pair_qualifies


def fibonacci_asymptotic_estimate(n_max: int) -> ExponentEstimate:
    """Asymptotic critical exponent of the Fibonacci word from closed forms.

    Uses the bispecial lengths F_{n+3} - 2 against the shorter return word
    lengths F_{n+1}; the ratios increase strictly towards tau^2, so the
    estimate 1 + ratio(n_max) approaches 2 + tau from below.
    """
    if n_max < 3:
        raise ValueError(f"n_max must be at least 3, got {n_max}")
    ratios = tuple(
        RatioEntry(n, fib(n + 3) - 2, fib(n + 1), Fraction(fib(n + 3) - 2, fib(n + 1)))
        for n in range(0, n_max + 1)
    )
    return ExponentEstimate(mode="asymptotic", estimate=1 + ratios[-1].ratio, ratios=ratios)


def coefficient_lower_bounds(n: int, c: GoldenNumber | None = None) -> CoefficientBoundCertificate:
    """Enumerate the certificate for level n; c defaults to the midpoint of
    the admissible interval. Raises ValueError when c is not strictly inside
    (|F_{n+1} - tau*F_n|, |F_n - tau*F_{n-1}|).
    """
    if n < 1:
        raise ValueError(f"level must be >= 1, got {n}")
    lo = abs(GoldenNumber(fib(n + 1), -fib(n)))
    hi = abs(GoldenNumber(fib(n), -fib(n - 1)))
    if c is None:
        c = (lo + hi) * Fraction(1, 2)
    if not ((c - lo).sign() > 0 and (hi - c).sign() > 0):
        raise ValueError(
            f"threshold {c} is not strictly between {lo} and {hi} (level {n})"
        )

    # clear denominators once: c = (P + Q*tau) / D with integer P, Q, D > 0
    denom = c.a.denominator
    denom = denom * c.b.denominator // math.gcd(denom, c.b.denominator)
    p_int = int(c.a * denom)
    q_int = int(c.b * denom)

    kappa_min, lambda_min = fib(n + 1), fib(n)
    limit = fib(n + 3)
    qualifying = 0
    violations: list[tuple[int, int]] = []
    minimal_ok = False
    for kappa in range(0, limit + 1):
        dk = denom * kappa
        for lam in range(0, limit + 1):
            if kappa == 0 and lam == 0:
                continue
            dl = denom * lam
            # c - (kappa - lam*tau) > 0 and c + (kappa - lam*tau) > 0
            b1 = q_int + dl
            if sqrt5_sign(2 * (p_int - dk) + b1, b1) <= 0:
                continue
            b2 = q_int - dl
            if sqrt5_sign(2 * (p_int + dk) + b2, b2) <= 0:
                continue
            qualifying += 1
            if kappa == kappa_min and lam == lambda_min:
                minimal_ok = True
            if kappa < kappa_min or lam < lambda_min:
                violations.append((kappa, lam))
    return CoefficientBoundCertificate(
        n=n,
        threshold=c,
        kappa_min=kappa_min,
        lambda_min=lambda_min,
        search_limit=limit,
        qualifying_pairs=qualifying,
        violations=tuple(violations),
        minimal_pair_qualifies=minimal_ok,
    )


def colouring_exponent_bound(delta: int) -> BoundResult:
    """Exact upper bound 1 + tau^(1-n0)/H for the 2*delta-letter colouring."""
    if not 1 <= delta <= 9:
        raise ValueError(f"delta must be in 1..9, got {delta}")
    H = 2 ** (delta - 1)
    level = -1
    while not (tau_pow(level + 2) - H).sign() > 0:
        level += 1
    assert (GoldenNumber(H) - tau_pow(level + 1)).sign() >= 0
    bound = ONE + tau_pow(1 - level) * Fraction(1, H)
    return BoundResult(delta=delta, d=2 * delta, period_length=H, level=level, bound=bound)


def colouring_coefficient_certificate(delta: int) -> CoefficientBoundCertificate:
    """Run the coefficient certificate at the colouring's own threshold
    tau^2 / H and its level n0. Needs delta >= 3 so that n0 >= 1.
    """
    result = colouring_exponent_bound(delta)
    if result.level < 1:
        raise ValueError(
            f"delta {delta} has level {result.level}; the certificate needs level >= 1"
        )
    c = tau_pow(2) * Fraction(1, result.period_length)
    return coefficient_lower_bounds(result.level, c)


def shortest_return_lower_bound(index: int, delta: int) -> int:
    """Every return word of the level-`index` bispecial factor of the
    colouring has length at least H * F_(n0 + index + 2).
    """
    if index < 0:
        raise ValueError("index must be >= 0")
    result = colouring_exponent_bound(delta)
    return result.period_length * fib(result.level + index + 2)


def repetitive_threshold_bound(d: int) -> GoldenNumber:
    """Coarse bound 1 + tau^3 / 2^(d-2) for balanced sequences over d letters
    (d even). Checked exactly against the sharper colouring bound.
    """
    if d < 2 or d % 2 != 0:
        raise ValueError(f"d must be an even integer >= 2, got {d}")
    if d > 18:
        raise ValueError(f"d must be <= 18, got {d}")
    value = ONE + tau_pow(3) * Fraction(1, 2 ** (d - 2))
    sharper = colouring_exponent_bound(d // 2).bound
    if not (value - sharper).sign() > 0:
        raise ArithmeticError(f"coarse bound failed to dominate at d={d}")
    return value


class SplitLetterGenerator(SequenceGenerator):
    """Replace occurrences of one letter alternately with two fresh letters."""

    def __init__(
        self,
        base: SequenceGenerator,
        target: str,
        fresh: tuple[str, str] = ("A", "B"),
        probe_horizon: int = 4096,
    ) -> None:
        super().__init__()
        if fresh[0] == fresh[1]:
            raise ValueError("fresh letters must differ")
        if target not in base.letters(probe_horizon):
            raise ValueError(
                f"letter {target!r} does not occur in the first {probe_horizon} letters"
            )
        self.base = base
        self.target = target
        self.fresh = fresh
        self._parity = 0

    def _extend(self, n: int) -> None:
        start = len(self._buf)
        buf = self._buf
        for tok in self.base.letters(n)[start:]:
            if tok == self.target:
                buf.append(self.fresh[self._parity])
                self._parity ^= 1
            else:
                buf.append(tok)


def split_letter(
    base: SequenceGenerator,
    target: str,
    fresh: tuple[str, str] = ("A", "B"),
) -> SplitLetterGenerator:
    """Alternating split of one letter into two; takes a d-letter balanced
    sequence to a (d+1)-letter balanced one without raising the asymptotic
    critical exponent.
    """
    return SplitLetterGenerator(base, target, fresh)


def empirical_asymptotic_estimate(
    delta: int,
    horizon: int,
    min_period: int,
    max_period: int | None = None,
    progress: Callable[[int, int], None] | None = None,
) -> ExponentEstimate:
    """Scan the colouring for its strongest long-period repetition.

    A lower estimate of the asymptotic critical exponent: the maximum exact
    exponent among repetitions with period >= min_period in prefix(horizon).
    max_period defaults to min(horizon // 2, 20 * min_period), enough to see
    several bispecial levels above min_period.
    """
    if not 1 <= delta <= 5:
        raise ValueError(f"delta must be in 1..5 for the scan, got {delta}")
    if horizon > 10**6:
        raise ValueError(f"horizon capped at 10^6 for the scan, got {horizon}")
    if max_period is None:
        max_period = min(horizon // 2, 20 * min_period)
    record = max_fractional_power(
        colouring(delta), horizon, min_period, max_period, progress=progress
    )
    return ExponentEstimate(mode="asymptotic", estimate=record.exponent, witness=record)


def _surd_decimal(p: int, q: int, r: int, s: int, places: int = 6) -> str:
    """(p + q*sqrt(r)) / s rendered to `places` decimal places."""
    with localcontext() as ctx:
        ctx.prec = 50
        val = (p + q * Decimal(r).sqrt()) / s
        return str(val.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN))


# best published values of the repetitive threshold RTB*(d) for even d:
# exact elements of Q(tau) where known, otherwise (p, q, r, s) for (p+q*sqrt(r))/s
_KNOWN_THRESHOLDS: dict[int, GoldenNumber | tuple[int, int, int, int]] = {
    2: GoldenNumber(2, 1),
    4: GoldenNumber(1, Fraction(1, 2)),
    6: (75, 3, 65, 80),
    8: GoldenNumber(Fraction(5, 4), Fraction(-1, 8)),
    10: (364, -21, 7, 304),
}


@dataclass(frozen=True)
class ThresholdRow:
    d: int
    period_length: int
    level: int
    bound: GoldenNumber
    bound_decimal: str
    rtb_star_decimal: str
    marker: str

    def to_json_dict(self) -> dict[str, object]:
        return {
            "d": self.d,
            "H": self.period_length,
            "N0": self.level,
            "bound_exact": {
                "a_num": self.bound.a.numerator,
                "a_den": self.bound.a.denominator,
                "b_num": self.bound.b.numerator,
                "b_den": self.bound.b.denominator,
            },
            "bound_decimal": self.bound_decimal,
            "rtb_star_decimal": self.rtb_star_decimal,
            "marker": self.marker,
        }


def _marker(bound: GoldenNumber, known: GoldenNumber | tuple[int, int, int, int]) -> str:
    """"=" when the known threshold equals the bound, "<" when it is below."""
    if isinstance(known, GoldenNumber):
        s = (bound - known).sign()
    else:
        with localcontext() as ctx:
            ctx.prec = 50
            p, q, r, s_den = known
            known_val = (p + q * Decimal(r).sqrt()) / s_den
            tau = (1 + Decimal(5).sqrt()) / 2
            bound_val = (
                Decimal(bound.a.numerator) / bound.a.denominator
                + Decimal(bound.b.numerator) / bound.b.denominator * tau
            )
            diff = bound_val - known_val
        if abs(diff) < Decimal("1e-40"):
            s = 0
        else:
            s = 1 if diff > 0 else -1
    return {0: "=", 1: "<", -1: ">"}[s]


def threshold_table(d_max: int = 10) -> list[ThresholdRow]:
    """One row per even alphabet size up to d_max: the exact colouring bound
    next to the best known threshold value, with a marker telling whether the
    known value meets the bound ("=") or sits strictly below it ("<").
    """
    if d_max < 2 or d_max % 2 != 0 or d_max > 10:
        raise ValueError(f"d_max must be an even integer in 2..10, got {d_max}")
    rows = []
    for d in range(2, d_max + 1, 2):
        result = colouring_exponent_bound(d // 2)
        known = _KNOWN_THRESHOLDS[d]
        if isinstance(known, GoldenNumber):
            known_decimal = known.decimal(6)
        else:
            known_decimal = _surd_decimal(*known)
        rows.append(
            ThresholdRow(
                d=d,
                period_length=result.period_length,
                level=result.level,
                bound=result.bound,
                bound_decimal=result.bound_decimal(),
                rtb_star_decimal=known_decimal,
                marker=_marker(result.bound, known),
            )
        )
    return rows


EXPECTED_MARKERS: dict[int, str] = {2: "=", 4: "=", 6: "<", 8: "=", 10: "<"}
