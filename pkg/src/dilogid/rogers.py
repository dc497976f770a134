"""Rigorous evaluation of Li2 and the Rogers dilogarithm on [0, 1].

Li2(x) = sum_{n>=1} x^n/n^2 is summed directly for x <= 1/2 with the
geometric tail bound x^(N+1)/((N+1)^2 (1-x)); for x > 1/2 the standard
Euler reflection to 1-x is used.  The Rogers function

    L(x) = Li2(x) + log(x) log(1-x) / 2,   L(0) = 0,  L(1) = pi^2/6

is assembled from those pieces; every result is an ErrorBoundedValue whose
radius is driven below 10^(-target_digits), doubling the working precision
up to three times before reporting failure.

The product log(x) log(1-x) is nonnegative on (0, 1).  When 1-x (or x)
cannot be separated from 1 at working precision, the product is enclosed
via |log(1-x)| <= x/(1-x) instead of evaluating a log at an endpoint glued
to 1.

The inner series and log-product loops run on raw mpmath.libmp interval
primitives: identity verification sums tens of thousands of these
evaluations, and the high-level interval wrapper costs more than the
arithmetic itself.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Union

from mpmath import iv
from mpmath.libmp import from_int, from_rational, fone, fzero, mpf_ge, mpf_le, mpf_lt, round_ceiling, round_floor
from mpmath.libmp.libmpi import mpi_add, mpi_div, mpi_log, mpi_mul, mpi_sub

from .enclosure import (
    DomainError,
    ErrorBoundedValue,
    PrecisionBudget,
    PrecisionError,
    interval_precision,
)

Argument = Union[int, Fraction, ErrorBoundedValue]

_HALF = Fraction(1, 2)
_DEFAULT_BUDGET_DIGITS = 40
_MAX_ESCALATIONS = 3
_MPI_ZERO = (fzero, fzero)
_MPI_ONE = (fone, fone)


def default_budget(digits: int = _DEFAULT_BUDGET_DIGITS) -> PrecisionBudget:
    return PrecisionBudget.for_digits(digits)


def _validate_unit_arg(x: Argument, open_interval: bool = False):
    """Return a Fraction or interval-backed argument confined to [0, 1]."""
    if isinstance(x, int):
        x = Fraction(x)
    if isinstance(x, Fraction):
        if open_interval and not (0 < x < 1):
            raise DomainError(f"argument {x} outside the open interval (0, 1)")
        if not (0 <= x <= 1):
            raise DomainError(f"argument {x} outside [0, 1]")
        return x
    if isinstance(x, ErrorBoundedValue):
        lo, hi = x.endpoints()
        if lo == hi:
            # collapse exact dyadic points to the rational path
            return _validate_unit_arg(lo, open_interval)
        # genuine intervals must be separated from both boundary points
        if not (0 < lo and hi < 1):
            raise DomainError("argument enclosure must lie strictly inside (0, 1)")
        return x
    raise TypeError(f"unsupported argument type {type(x).__name__}")


def _raw_from_fraction(value: Fraction, prec: int):
    p, q = value.numerator, value.denominator
    return (from_rational(p, q, prec, round_floor), from_rational(p, q, prec, round_ceiling))


def _raw(x, prec: int):
    if isinstance(x, Fraction):
        return _raw_from_fraction(x, prec)
    return (x.lower._mpf_, x.upper._mpf_)


def _exact_int(n: int):
    f = from_int(n)
    return (f, f)


def _raw_log2_upper(raw_mpf) -> Optional[float]:
    """Upper estimate of log2 of a positive raw mpf; None for zero."""
    sign, man, exp, bc = raw_mpf
    if man == 0:
        return None
    drop = max(bc - 24, 0)
    return math.log2(man >> drop) + exp + drop


def _series_terms_needed(sup_raw, bits: int, guard: int) -> int:
    # heuristic only: the rigorous tail is added afterwards regardless
    lg = _raw_log2_upper(sup_raw)
    if lg is None:
        return 1 + guard
    decay = max(-lg, 1e-9)
    # cap keeps pathological near-1 enclosures from stalling; the rigorous
    # tail still covers whatever the truncation omits
    return min(max(1, int((bits + 8) / decay) + 1) + guard, 200 * bits + 1000)


def _pi_squared_over(divisor: int):
    return iv.pi ** 2 / divisor


def _li2_series_raw(x_raw, omx_raw, prec: int, guard: int):
    """Raw enclosure of Li2 on the direct branch; omx_raw encloses 1-x."""
    if x_raw[1][1] == 0:  # sup(x) = 0, the exact-zero point
        return _MPI_ZERO
    n_terms = _series_terms_needed(x_raw[1], prec, guard)
    acc = _MPI_ZERO
    xp = _MPI_ONE
    for n in range(1, n_terms + 1):
        xp = mpi_mul(xp, x_raw, prec)
        acc = mpi_add(acc, mpi_div(xp, _exact_int(n * n), prec), prec)
    # tail: sum_{n>N} x^n/n^2 <= x^(N+1) / ((N+1)^2 (1-x))
    tail = mpi_div(
        mpi_mul(xp, x_raw, prec),
        mpi_mul(_exact_int((n_terms + 1) ** 2), omx_raw, prec),
        prec,
    )
    return mpi_add(acc, (fzero, tail[1]), prec)


def _log_product_raw(x_raw, omx_raw, prec: int):
    """Raw enclosure of log(x)*log(1-x) >= 0 for x inside (0, 1)."""
    if mpf_le(x_raw[0], fzero) or mpf_le(omx_raw[0], fzero):
        raise DomainError("log product requires an argument separated inside (0, 1)")
    if mpf_ge(omx_raw[1], fone):
        # -log(1-x) <= x/(1-x): product within [0, log(1/x) * x/(1-x)]
        hi = mpi_mul(
            mpi_log(mpi_div(_MPI_ONE, x_raw, prec), prec),
            mpi_div(x_raw, omx_raw, prec),
            prec,
        )[1]
        return (fzero, hi)
    if mpf_ge(x_raw[1], fone):
        # symmetric bound with the roles of x and 1-x exchanged
        hi = mpi_mul(
            mpi_log(mpi_div(_MPI_ONE, omx_raw, prec), prec),
            mpi_div(omx_raw, x_raw, prec),
            prec,
        )[1]
        return (fzero, hi)
    lo, hi = mpi_mul(mpi_log(x_raw, prec), mpi_log(omx_raw, prec), prec)
    if mpf_lt(lo, fzero):  # the true product is nonnegative
        lo = fzero
    return (lo, hi)


def _branch_is_low(x) -> bool:
    if isinstance(x, Fraction):
        return x <= _HALF
    lo, hi = x.endpoints()
    return (lo + hi) / 2 <= _HALF


def _one_minus(x):
    if isinstance(x, Fraction):
        return 1 - x
    lo, hi = x.endpoints()
    return ErrorBoundedValue.from_fraction_pair(1 - hi, 1 - lo)


def _raw_pair(x, prec: int):
    """Raw intervals of (x, 1-x), each as tight as the representation allows."""
    x_raw = _raw(x, prec)
    omx_raw = _raw(_one_minus(x), prec)
    return x_raw, omx_raw


def _pi26_raw(prec: int):
    with interval_precision(prec):
        return _pi_squared_over(6)._mpi_


def _li2_eval(x, guard: int):
    """Interval Li2 under the current precision context; x inside [0, 1]."""
    prec = iv.prec
    if isinstance(x, Fraction):
        if x == 0:
            return iv.mpf(0)
        if x == 1:
            return _pi_squared_over(6)
    if _branch_is_low(x):
        x_raw, omx_raw = _raw_pair(x, prec)
        return iv.make_mpf(_li2_series_raw(x_raw, omx_raw, prec, guard))
    x_raw, omx_raw = _raw_pair(x, prec)
    reflected = _li2_series_raw(omx_raw, x_raw, prec, guard)
    prod = _log_product_raw(x_raw, omx_raw, prec)
    out = mpi_sub(_pi26_raw(prec), mpi_add(prod, reflected, prec), prec)
    return iv.make_mpf(out)


def _rogers_eval(x, guard: int):
    """Interval Rogers L under the current precision context; x in (0, 1)."""
    prec = iv.prec
    x_raw, omx_raw = _raw_pair(x, prec)
    half_prod = _half_raw(_log_product_raw(x_raw, omx_raw, prec))
    if _branch_is_low(x):
        series = _li2_series_raw(x_raw, omx_raw, prec, guard)
        return iv.make_mpf(mpi_add(series, half_prod, prec))
    series = _li2_series_raw(omx_raw, x_raw, prec, guard)
    out = mpi_sub(_pi26_raw(prec), mpi_add(series, half_prod, prec), prec)
    return iv.make_mpf(out)


def _halve_mpf(m):
    sign, man, exp, bc = m
    if man == 0:
        return m
    return (sign, man, exp - 1, bc)


def _half_raw(raw):
    # halving is exact in binary
    return (_halve_mpf(raw[0]), _halve_mpf(raw[1]))


def _with_escalation(budget: PrecisionBudget, evaluator) -> ErrorBoundedValue:
    bits = budget.working_bits
    tolerance = budget.tolerance
    result = None
    for _ in range(_MAX_ESCALATIONS + 1):
        with interval_precision(bits):
            result = ErrorBoundedValue.from_interval(evaluator())
        if result.radius <= tolerance:
            return result
        bits *= 2
    raise PrecisionError(
        f"radius {float(result.radius):.3e} above 10^-{budget.target_digits} "
        f"after {_MAX_ESCALATIONS} escalations"
    )


def li2(x: Argument, budget: Optional[PrecisionBudget] = None) -> ErrorBoundedValue:
    """Enclosure of the dilogarithm series sum x^n/n^2 on [0, 1]."""
    budget = budget or default_budget()
    x = _validate_unit_arg(x)
    if isinstance(x, Fraction) and x == 0:
        return ErrorBoundedValue.zero()
    return _with_escalation(budget, lambda: _li2_eval(x, budget.guard_terms))


def rogers_l(x: Argument, budget: Optional[PrecisionBudget] = None) -> ErrorBoundedValue:
    """Enclosure of the Rogers dilogarithm with its boundary values."""
    budget = budget or default_budget()
    x = _validate_unit_arg(x)
    if isinstance(x, Fraction):
        if x == 0:
            return ErrorBoundedValue.zero()
        if x == 1:
            return _with_escalation(budget, lambda: _pi_squared_over(6))
    return _with_escalation(budget, lambda: _rogers_eval(x, budget.guard_terms))


def reflection_residual(x: Argument, budget: Optional[PrecisionBudget] = None) -> ErrorBoundedValue:
    """Enclosure of L(x) + L(1-x) - pi^2/6; must contain zero."""
    budget = budget or default_budget()
    x = _validate_unit_arg(x)

    def boundary_aware(value, guard):
        if isinstance(value, Fraction):
            if value == 0:
                return iv.mpf(0)
            if value == 1:
                return _pi_squared_over(6)
        return _rogers_eval(value, guard)

    def evaluate():
        guard = budget.guard_terms
        return (
            boundary_aware(x, guard)
            + boundary_aware(_one_minus(x), guard)
            - _pi_squared_over(6)
        )

    return _with_escalation(budget, evaluate)


def abel_residual(x: Argument, y: Argument, budget: Optional[PrecisionBudget] = None) -> ErrorBoundedValue:
    """Enclosure of the five-term combination

    L(x) + L(y) - L(xy) - L(x(1-y)/(1-xy)) - L(y(1-x)/(1-xy)),

    which vanishes identically for x, y in (0, 1).
    """
    budget = budget or default_budget()
    x = _validate_unit_arg(x, open_interval=True)
    y = _validate_unit_arg(y, open_interval=True)
    guard = budget.guard_terms

    if isinstance(x, Fraction) and isinstance(y, Fraction):
        xy = x * y
        mid_x = x * (1 - y) / (1 - xy)
        mid_y = y * (1 - x) / (1 - xy)

        def evaluate():
            return (
                _rogers_eval(x, guard)
                + _rogers_eval(y, guard)
                - _rogers_eval(xy, guard)
                - _rogers_eval(mid_x, guard)
                - _rogers_eval(mid_y, guard)
            )

        return _with_escalation(budget, evaluate)

    def evaluate_numeric():
        xi = x.interval() if isinstance(x, ErrorBoundedValue) else iv.make_mpf(_raw(x, iv.prec))
        yi = y.interval() if isinstance(y, ErrorBoundedValue) else iv.make_mpf(_raw(y, iv.prec))
        xy = xi * yi
        denom = 1 - xy
        args = [xy, xi * (1 - yi) / denom, yi * (1 - xi) / denom]
        ebv_args = []
        for a in args:
            ebv = ErrorBoundedValue.from_interval(a)
            lo, hi = ebv.endpoints()
            if not (0 < lo and hi < 1):
                raise DomainError("five-term argument not separated inside (0, 1)")
            ebv_args.append(ebv)
        total = _rogers_eval(x, guard) + _rogers_eval(y, guard)
        for a in ebv_args:
            total = total - _rogers_eval(a, guard)
        return total

    return _with_escalation(budget, evaluate_numeric)
