"""Midpoint-radius enclosures backed by mpmath's interval arithmetic.

Every transcendental quantity in this package is returned as an
ErrorBoundedValue: a pair of exact binary-float endpoints guaranteed to
bracket the true real number.  mpmath's interval context (``mpmath.iv``)
supplies the directed-rounding primitives; this module adds exact endpoint
bookkeeping, precision budgeting, and conversions from exact rationals.
Endpoint arithmetic on ErrorBoundedValue itself (add/sub/neg) is done in
exact rational arithmetic, so it never depends on any global precision
setting.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from mpmath import iv, mp
from mpmath.libmp import from_man_exp, from_rational, mpf_neg, round_ceiling, round_floor

LOG2_10 = math.log2(10)


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class PrecisionError(RuntimeError):
    """Requested radius was not achieved after exhausting escalation."""


@contextmanager
def interval_precision(bits: int):
    """Temporarily run the shared interval context at ``bits`` of precision."""
    saved = iv.prec
    iv.prec = bits
    try:
        yield iv
    finally:
        iv.prec = saved


def iv_from_fraction(value: Fraction):
    """Tightest interval containing an exact rational at the current precision."""
    p, q = value.numerator, value.denominator
    lo = from_rational(p, q, iv.prec, round_floor)
    hi = from_rational(p, q, iv.prec, round_ceiling)
    return iv.make_mpf((lo, hi))


def mpf_to_fraction(x) -> Fraction:
    """Exact rational value of a finite mpf."""
    sign, man, exp, _ = x._mpf_
    if man == 0 and exp != 0:
        raise ValueError("non-finite mpf has no rational value")
    # int() strips the gmpy2.mpz type mpmath uses under its gmpy backend
    v = Fraction(int(man)) * Fraction(2) ** int(exp)
    return -v if sign else v


def _mpf_from_dyadic(value: Fraction):
    den = value.denominator
    k = den.bit_length() - 1
    if den != 1 << k:
        raise ValueError("not a dyadic rational")
    return mp.make_mpf(from_man_exp(value.numerator, -k))


@dataclass(frozen=True)
class ErrorBoundedValue:
    """Enclosure [lower, upper] of a real number, endpoints exact mpf values."""

    lower: object
    upper: object

    def __post_init__(self):
        if not (mp.isfinite(self.lower) and mp.isfinite(self.upper)):
            raise PrecisionError("enclosure has a non-finite endpoint")
        if self.lower > self.upper:
            raise ValueError("lower endpoint exceeds upper endpoint")

    @classmethod
    def from_interval(cls, x) -> "ErrorBoundedValue":
        lo, hi = x._mpi_
        return cls(mp.make_mpf(lo), mp.make_mpf(hi))

    @classmethod
    def from_fraction(cls, value, bits: int = 128) -> "ErrorBoundedValue":
        value = Fraction(value)
        p, q = value.numerator, value.denominator
        lo = from_rational(p, q, bits, round_floor)
        hi = from_rational(p, q, bits, round_ceiling)
        return cls(mp.make_mpf(lo), mp.make_mpf(hi))

    @classmethod
    def exact(cls, value) -> "ErrorBoundedValue":
        """Zero-radius enclosure of an int or dyadic rational."""
        x = _mpf_from_dyadic(Fraction(value))
        return cls(x, x)

    @classmethod
    def zero(cls) -> "ErrorBoundedValue":
        return cls.exact(0)

    def interval(self):
        """View as an mpmath interval under the current iv context."""
        return iv.make_mpf((self.lower._mpf_, self.upper._mpf_))

    @property
    def midpoint(self) -> Fraction:
        return (mpf_to_fraction(self.lower) + mpf_to_fraction(self.upper)) / 2

    @property
    def radius(self) -> Fraction:
        return (mpf_to_fraction(self.upper) - mpf_to_fraction(self.lower)) / 2

    def endpoints(self) -> tuple[Fraction, Fraction]:
        return mpf_to_fraction(self.lower), mpf_to_fraction(self.upper)

    def contains(self, value) -> bool:
        lo, hi = self.endpoints()
        if isinstance(value, ErrorBoundedValue):
            vlo, vhi = value.endpoints()
            return lo <= vlo and vhi <= hi
        v = Fraction(value)
        return lo <= v <= hi

    def contains_zero(self) -> bool:
        return self.contains(0)

    def overlaps(self, other: "ErrorBoundedValue") -> bool:
        alo, ahi = self.endpoints()
        blo, bhi = other.endpoints()
        return alo <= bhi and blo <= ahi

    def widened(self, slack) -> "ErrorBoundedValue":
        """Enclosure with both endpoints pushed outward by ``slack`` >= 0."""
        s = Fraction(slack) if not isinstance(slack, Fraction) else slack
        if s < 0:
            raise ValueError("slack must be nonnegative")
        lo, hi = self.endpoints()
        return ErrorBoundedValue.from_fraction_pair(lo - s, hi + s)

    @classmethod
    def from_fraction_pair(cls, lo: Fraction, hi: Fraction, bits: int = 0) -> "ErrorBoundedValue":
        """Enclosure of [lo, hi]; endpoints rounded outward if not dyadic."""
        bits = bits or max(lo.numerator.bit_length(), hi.numerator.bit_length(), 64) + 8
        lo_m = from_rational(lo.numerator, lo.denominator, bits, round_floor)
        hi_m = from_rational(hi.numerator, hi.denominator, bits, round_ceiling)
        return cls(mp.make_mpf(lo_m), mp.make_mpf(hi_m))

    def __neg__(self) -> "ErrorBoundedValue":
        # mpf unary minus rounds to the ambient context; raw negation is exact
        return ErrorBoundedValue(
            mp.make_mpf(mpf_neg(self.upper._mpf_)),
            mp.make_mpf(mpf_neg(self.lower._mpf_)),
        )

    def __add__(self, other) -> "ErrorBoundedValue":
        other = _as_ebv(other)
        alo, ahi = self.endpoints()
        blo, bhi = other.endpoints()
        return ErrorBoundedValue.from_fraction_pair(alo + blo, ahi + bhi)

    def __sub__(self, other) -> "ErrorBoundedValue":
        return self + (-_as_ebv(other))

    def __rsub__(self, other) -> "ErrorBoundedValue":
        return _as_ebv(other) + (-self)

    __radd__ = __add__

    def abs_sup(self) -> Fraction:
        lo, hi = self.endpoints()
        return max(abs(lo), abs(hi))

    def abs_inf(self) -> Fraction:
        lo, hi = self.endpoints()
        if lo <= 0 <= hi:
            return Fraction(0)
        return min(abs(lo), abs(hi))

    def __repr__(self):
        return f"ErrorBoundedValue({mp.nstr(self.lower, 20)}, {mp.nstr(self.upper, 20)})"


def _as_ebv(value) -> ErrorBoundedValue:
    if isinstance(value, ErrorBoundedValue):
        return value
    return ErrorBoundedValue.from_fraction(Fraction(value), bits=256)


@dataclass(frozen=True)
class PrecisionBudget:
    """Target accuracy plus the internal precision used to reach it."""

    target_digits: int
    working_bits: int
    guard_terms: int = 8

    def __post_init__(self):
        if self.target_digits < 1:
            raise ValueError("target_digits must be positive")
        if self.guard_terms < 0:
            raise ValueError("guard_terms must be nonnegative")
        if self.working_bits < self.min_working_bits(self.target_digits):
            raise ValueError(
                f"working_bits {self.working_bits} below required "
                f"{self.min_working_bits(self.target_digits)} for "
                f"{self.target_digits} digits"
            )

    @staticmethod
    def min_working_bits(digits: int) -> int:
        return math.ceil(digits * LOG2_10) + 32

    @classmethod
    def for_digits(cls, digits: int, extra_bits: int = 64, guard_terms: int = 8) -> "PrecisionBudget":
        return cls(digits, math.ceil(digits * LOG2_10) + 32 + extra_bits, guard_terms)

    def escalate(self) -> "PrecisionBudget":
        return PrecisionBudget(self.target_digits, 2 * self.working_bits, self.guard_terms)

    @property
    def tolerance(self) -> Fraction:
        return Fraction(1, 10 ** self.target_digits)


Real = Union[int, Fraction, ErrorBoundedValue]
