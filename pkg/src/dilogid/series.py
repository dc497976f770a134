"""Evaluators and verifiers for the dilogarithm series identities.

Each verifier truncates its series at an index N chosen so that the
certified bound on the omitted tail drops below half the requested
tolerance (or the term cap is reached), evaluates the partial sum and the
closed-form side as rigorous enclosures, and returns an IdentityReport.
The verdict convention is

    pass  iff  |residual.midpoint| <= residual.radius + tail_bound + 10^-digits,

with an explicit fail when precision escalation cannot push the residual
radius below 10^-digits.

Tail bounds use L(x) <= x*(pi^2/6 + log(1/x)) on (0, 1/2] together with a
geometric dominating sequence certified by the caller:

  * two-parameter series: term ratio <= min(1-a,1-b)/max(1-a,1-b), a
    consequence of the shift identities D_n >= max(1-a,1-b) D_{n-1};
  * Lucas series with Q > 0: term ratio <= (Q/alpha^2)^k, from
    U_{m+k} >= alpha^k U_m (Binet, both roots positive);
  * Lucas series with Q < 0, k odd: both parity sub-series have term
    ratio <= (Q^2/alpha^4)^k, by the same Binet argument applied with
    step 2k to U at even and V at odd indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Iterator, Optional

from mpmath import iv, mp

from .enclosure import (
    DomainError,
    ErrorBoundedValue,
    PrecisionBudget,
    PrecisionError,
    interval_precision,
    iv_from_fraction,
    mpf_to_fraction,
)
from .exactnum import QuadraticElement, exact_sqrt, quad_pow, quad_to_real
from .lucas import Coefficient, LucasParams, PreconditionError, lucas_uv
from .rogers import _pi_squared_over, _rogers_eval, default_budget

_HALF = Fraction(1, 2)


class UsageError(ValueError):
    """Malformed request: unknown identity or invalid parameter set."""


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TwoParamInstance:
    """Parameters (a, b) of the two-parameter series, exact rationals."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if not (0 < self.a < 1 and 0 < self.b < 1):
            raise DomainError("parameters must lie in the open interval (0, 1)")
        if self.a == self.b:
            raise DomainError("parameters must be distinct")


@dataclass(frozen=True)
class PellSolution:
    """Solution (a, b) of x^2 - n*y^2 = +-1, identified with u = a + b*sqrt(n)."""

    a: Fraction
    b: Fraction
    n: int
    sign: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.a <= 0 or self.b <= 0:
            raise DomainError("Pell solution components must be positive")
        if not isinstance(self.n, int) or self.n <= 0:
            raise DomainError("radicand must be a positive integer")
        if exact_sqrt(Fraction(self.n)) is not None:
            raise DomainError(f"radicand {self.n} is a perfect square")
        val = self.a * self.a - self.n * self.b * self.b
        if val == 1:
            object.__setattr__(self, "sign", 1)
        elif val == -1:
            object.__setattr__(self, "sign", -1)
        else:
            raise DomainError(f"a^2 - n*b^2 = {val}, not a Pell solution")

    def unit(self) -> QuadraticElement:
        return QuadraticElement(self.a, self.b, Fraction(self.n))

    def is_integral(self) -> bool:
        return self.a.denominator == 1 and self.b.denominator == 1


@dataclass(frozen=True)
class IdentityReport:
    """Record of one identity verification."""

    identity_id: str
    parameters: dict
    digits: int
    terms_used: int
    lhs: ErrorBoundedValue
    rhs: ErrorBoundedValue
    tail_bound: object  # mp.mpf upper bound on the omitted tail
    residual: ErrorBoundedValue
    verdict: str

    @classmethod
    def build(
        cls,
        identity_id: str,
        parameters: dict,
        digits: int,
        terms_used: int,
        lhs: ErrorBoundedValue,
        rhs: ErrorBoundedValue,
        tail_bound,
        residual: ErrorBoundedValue,
        force_fail: bool = False,
    ) -> "IdentityReport":
        tolerance = Fraction(1, 10 ** digits)
        ok = abs(residual.midpoint) <= residual.radius + mpf_to_fraction(tail_bound) + tolerance
        verdict = "pass" if (ok and not force_fail) else "fail"
        return cls(
            identity_id,
            dict(parameters),
            digits,
            terms_used,
            lhs,
            rhs,
            tail_bound,
            residual,
            verdict,
        )


# ---------------------------------------------------------------------------
# Lemma sequences: D_n, (x_n, y_n), and the summand
# ---------------------------------------------------------------------------


def d_seq(inst: TwoParamInstance, n: int) -> Fraction:
    """D_n(a,b) = (a(1-b)^(n+1) - b(1-a)^(n+1)) / (a-b), exactly."""
    if n < 0:
        raise DomainError("index must be nonnegative")
    a, b = inst.a, inst.b
    return (a * (1 - b) ** (n + 1) - b * (1 - a) ** (n + 1)) / (a - b)


def xy_seq(inst: TwoParamInstance, n: int) -> tuple[Fraction, Fraction]:
    """The pair (x_n, y_n) = (a(1-b)^n, b(1-a)^n) / D_n, exactly."""
    dn = d_seq(inst, n)
    a, b = inst.a, inst.b
    x = a * (1 - b) ** n / dn
    y = b * (1 - a) ** n / dn
    if not (0 < x < 1 and 0 < y < 1):
        raise AssertionError("sequence escaped the open unit interval")
    return x, y


def theorem_main_term(inst: TwoParamInstance, n: int) -> Fraction:
    """Summand of the two-parameter series; equals x_n * y_n exactly."""
    dn = d_seq(inst, n)
    a, b = inst.a, inst.b
    return a * b * (1 - a) ** n * (1 - b) ** n / (dn * dn)


def _theorem_terms(inst: TwoParamInstance) -> Iterator[Fraction]:
    # integer core: with a = A/q, b = B/q over a common denominator q and
    # C = q - A, D = q - B, the summand reduces to
    #     A B (A-B)^2 (C D)^n / (A D^(n+1) - B C^(n+1))^2,
    # so each term costs integer multiplies plus one Fraction reduction
    a, b = inst.a, inst.b
    q = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
    big_a = a.numerator * (q // a.denominator)
    big_b = b.numerator * (q // b.denominator)
    c, d = q - big_a, q - big_b
    numer_scale = big_a * big_b * (big_a - big_b) ** 2
    cd_pow = 1
    d_pow, c_pow = d, c
    while True:
        n_n = big_a * d_pow - big_b * c_pow
        yield Fraction(numer_scale * cd_pow, n_n * n_n)
        cd_pow *= c * d
        d_pow *= d
        c_pow *= c


# ---------------------------------------------------------------------------
# tail machinery
# ---------------------------------------------------------------------------


def _as_sup_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, ErrorBoundedValue):
        return value.endpoints()[1]
    if isinstance(value, QuadraticElement):
        rv = value.rational_value()
        if rv is not None:
            return rv
        return quad_to_real(value, 80).endpoints()[1]
    # mpf
    return mpf_to_fraction(value)


def tail_bound(first_omitted, ratio_cap):
    """Certified bound on sum L(t_j) over omitted terms t_j.

    Requires t_0 <= first_omitted <= 1/2 and t_{j+1} <= ratio_cap * t_j.
    Uses L(x) <= x*(pi^2/6 + log(1/x)) on (0, 1/2], summed over the
    dominating geometric sequence t_0 * r^j.
    """
    t = _as_sup_fraction(first_omitted)
    r = _as_sup_fraction(ratio_cap)
    if t < 0:
        raise DomainError("first omitted term must be nonnegative")
    if t == 0:
        return mp.mpf(0)
    if t > _HALF:
        raise DomainError("first omitted term above 1/2: lower the truncation point")
    if not (0 < r < 1):
        raise DomainError("ratio cap must lie in (0, 1)")
    with interval_precision(96):
        ti = iv_from_fraction(t)
        ri = iv_from_fraction(r)
        one_minus_r = 1 - ri
        bound = ti * (
            (_pi_squared_over(6) + iv.log(1 / ti)) / one_minus_r
            + ri * iv.log(1 / ri) / (one_minus_r * one_minus_r)
        )
        return mp.make_mpf(bound._mpi_[1])


def _log10_upper(value: Fraction) -> float:
    return (value.numerator.bit_length() - value.denominator.bit_length() + 1) * 0.30103


def _tail_small_enough(term, cap, tolerance_half: Fraction, digits: int) -> bool:
    t = _as_sup_fraction(term)
    if t > _HALF:
        return False
    if t > 0 and _log10_upper(t) > -(digits + 1):
        return False
    try:
        bound = tail_bound(t, cap)
    except DomainError:
        return False
    return mpf_to_fraction(bound) <= tolerance_half


# ---------------------------------------------------------------------------
# shared evaluation driver
# ---------------------------------------------------------------------------


def _assert_unit_open(value) -> None:
    if isinstance(value, Fraction):
        if not (0 < value < 1):
            raise AssertionError(f"series argument {value} outside (0, 1)")
        return
    if isinstance(value, QuadraticElement):
        if not (value.sign() > 0 and (value - 1).sign() < 0):
            raise AssertionError("series argument outside (0, 1)")
        return
    lo, hi = value.endpoints()
    if not (0 < lo and hi < 1):
        raise AssertionError("series argument enclosure not inside (0, 1)")


def _term_rogers(term, guard: int, bits: int):
    """Interval Rogers L of one exact or enclosed series term."""
    if isinstance(term, QuadraticElement):
        rv = term.rational_value()
        term = rv if rv is not None else quad_to_real(term, bits + 16)
    return _rogers_eval(term, guard)


def _mpf_sum_upper(*values):
    """Exact upper bound (as mpf) of a sum of mpf values."""
    total = Fraction(0)
    for v in values:
        total += mpf_to_fraction(v)
    return ErrorBoundedValue.from_fraction_pair(total, total).upper


def _effective_digits(digits: int, n_terms: int) -> int:
    return digits + max(4, len(str(max(n_terms, 1))) + 3)


def _evaluate_series_report(
    identity_id: str,
    parameters: dict,
    budget: PrecisionBudget,
    terms: list,
    tail,
    rhs_fn: Callable[[int, int], object],
    trace: Optional[list] = None,
    ratio_cap=None,
) -> IdentityReport:
    """Sum enclosures of L over ``terms``, evaluate the closed form, report.

    ``rhs_fn(guard, bits)`` must return an interval for the right-hand side
    under the ambient precision context.
    """
    digits = budget.target_digits
    tolerance = budget.tolerance
    for t in terms:
        _assert_unit_open(t)
    digits_eff = _effective_digits(digits, len(terms))
    bits = max(budget.working_bits, PrecisionBudget.min_working_bits(digits_eff) + 64)
    guard = budget.guard_terms
    force_fail = False
    rows: list = []
    for attempt in range(4):
        rows = []
        with interval_precision(bits):
            acc = iv.mpf(0)
            for idx, t in enumerate(terms):
                acc = acc + _term_rogers(t, guard, bits)
                if trace is not None:
                    rows.append((idx, t, ErrorBoundedValue.from_interval(acc)))
            rhs_iv = rhs_fn(guard, bits)
            res_iv = acc - rhs_iv
            lhs = ErrorBoundedValue.from_interval(acc)
            rhs = ErrorBoundedValue.from_interval(rhs_iv)
            residual = ErrorBoundedValue.from_interval(res_iv)
        if residual.radius <= tolerance:
            break
        bits *= 2
    else:
        force_fail = True
    if trace is not None:
        trace.extend(_trace_rows(rows, terms, tail, ratio_cap))
    return IdentityReport.build(
        identity_id,
        parameters,
        digits,
        len(terms),
        lhs,
        rhs,
        tail,
        residual,
        force_fail=force_fail,
    )


def _trace_rows(rows, terms, final_tail, ratio_cap):
    out = []
    for idx, term, partial in rows:
        if idx + 1 < len(terms) and ratio_cap is not None:
            try:
                running = tail_bound(terms[idx + 1], ratio_cap)
            except DomainError:
                running = None
        else:
            running = final_tail
        out.append({"n": idx, "term": term, "lhs_partial": partial, "tail_bound": running})
    return out


def _choose_truncation(
    term_iter: Iterable,
    ratio_cap,
    budget: PrecisionBudget,
    max_terms: int,
    min_terms: int = 1,
) -> tuple[list, object]:
    """Collect terms until the certified tail fits in half the tolerance.

    Returns (terms, first_omitted).
    """
    if max_terms < 1:
        raise UsageError("max_terms must be positive")
    tol_half = budget.tolerance / 2
    digits = budget.target_digits
    terms = []
    for t in term_iter:
        if len(terms) >= max_terms:
            return terms, t
        if len(terms) >= min_terms and _tail_small_enough(t, ratio_cap, tol_half, digits):
            return terms, t
        terms.append(t)
    raise AssertionError("term iterator exhausted unexpectedly")


# ---------------------------------------------------------------------------
# Theorem (two-parameter series) and its corollary
# ---------------------------------------------------------------------------


def _two_param_ratio_cap(inst: TwoParamInstance) -> Fraction:
    oma, omb = 1 - inst.a, 1 - inst.b
    return min(oma, omb) / max(oma, omb)


def theorem_main_verify(
    inst: TwoParamInstance,
    budget: Optional[PrecisionBudget] = None,
    max_terms: int = 10000,
    trace: Optional[list] = None,
) -> IdentityReport:
    """Verify sum L(x_n y_n) = L(a) + L(b) - L(|a-b|/(1-min(a,b)))."""
    budget = budget or default_budget()
    a, b = inst.a, inst.b
    cap = _two_param_ratio_cap(inst)
    terms, first_omitted = _choose_truncation(_theorem_terms(inst), cap, budget, max_terms)
    tail = tail_bound(first_omitted, cap)
    third = abs(a - b) / (1 - min(a, b))

    def rhs_fn(guard, bits):
        return (
            _rogers_eval(a, guard)
            + _rogers_eval(b, guard)
            - _rogers_eval(third, guard)
        )

    return _evaluate_series_report(
        "theorem-main",
        {"a": str(a), "b": str(b)},
        budget,
        terms,
        tail,
        rhs_fn,
        trace,
        ratio_cap=cap,
    )


def corollary_remark_term(t: Fraction, m: int) -> Fraction:
    """Simplified summand 4 t^2 (1-t^2)^m / ((1+t)^(m+1) - (1-t)^(m+1))^2."""
    return 4 * t * t * (1 - t * t) ** m / ((1 + t) ** (m + 1) - (1 - t) ** (m + 1)) ** 2


def corollary_verify(
    t: Fraction,
    budget: Optional[PrecisionBudget] = None,
    max_terms: int = 10000,
    trace: Optional[list] = None,
) -> IdentityReport:
    """Verify the one-parameter specialization summing to L((1-t)/(1+t)).

    The instance is the two-parameter series at (a, b) = ((1+t)/2, (1-t)/2),
    re-indexed from 1; every generated term is checked exactly against the
    simplified closed form ``corollary_remark_term``.
    """
    budget = budget or default_budget()
    t = Fraction(t)
    if not (0 < t < 1):
        raise DomainError("parameter must lie in (0, 1)")
    inst = TwoParamInstance((1 + t) / 2, (1 - t) / 2)
    cap = _two_param_ratio_cap(inst)
    terms, first_omitted = _choose_truncation(_theorem_terms(inst), cap, budget, max_terms)
    tail = tail_bound(first_omitted, cap)
    # incremental powers: recomputing corollary_remark_term per index would
    # redo three large exponentiations for every term
    sq = 1 - t * t
    sq_pow = sq
    plus_pow = (1 + t) ** 2
    minus_pow = (1 - t) ** 2
    for n, term in enumerate(terms):
        expected = 4 * t * t * sq_pow / (plus_pow - minus_pow) ** 2
        if term != expected:
            raise AssertionError(f"summand {n} does not match the simplified form")
        sq_pow *= sq
        plus_pow *= 1 + t
        minus_pow *= 1 - t
    target = (1 - t) / (1 + t)

    def rhs_fn(guard, bits):
        return _rogers_eval(target, guard)

    return _evaluate_series_report(
        "corollary",
        {"t": str(t)},
        budget,
        terms,
        tail,
        rhs_fn,
        trace,
        ratio_cap=cap,
    )


# ---------------------------------------------------------------------------
# Lucas-sequence series
# ---------------------------------------------------------------------------


def _coeff_interval(value: Coefficient):
    if isinstance(value, QuadraticElement):
        root = iv.sqrt(iv_from_fraction(value.radicand))
        return iv_from_fraction(value.rat_part) + iv_from_fraction(value.rad_part) * root
    return iv_from_fraction(value)


def _alpha_interval(params: LucasParams):
    p = _coeff_interval(params.p)
    d = _coeff_interval(params.d)
    return (p + iv.sqrt(d)) / 2


def _ratio_cap_sup(params: LucasParams, k: int, power: int) -> Fraction:
    """Upper bound on (|Q| / alpha^2)^(power*k), rigorously below 1."""
    bits = 96
    for _ in range(6):
        with interval_precision(bits):
            alpha = _alpha_interval(params)
            q = abs(_coeff_interval(params.q))
            cap = (q / alpha ** 2) ** (power * k)
            sup = mpf_to_fraction(mp.make_mpf(cap._mpi_[1]))
        if 0 < sup < 1:
            return sup
        bits *= 2
    raise PrecisionError("could not certify the geometric ratio below 1")


def _coeff_str(value: Coefficient) -> str:
    if isinstance(value, QuadraticElement):
        rv = value.rational_value()
        if rv is not None:
            return str(rv)
        return str(value)
    return str(value)


def _lucas_pos_terms(params: LucasParams, k: int) -> Iterator:
    uk = lucas_uv(params, k).u
    numer = uk * uk
    qk = params.q ** k
    p, q = params.p, params.q
    u_lo = lucas_uv(params, k).u
    u_hi = lucas_uv(params, k + 1).u
    qpow = qk
    while True:
        for _ in range(k):
            u_lo, u_hi = u_hi, p * u_hi - q * u_lo
        yield numer * qpow / (u_lo * u_lo)
        qpow = qpow * qk


def lucas_pos_verify(
    params: LucasParams,
    k: int,
    budget: Optional[PrecisionBudget] = None,
    max_terms: int = 10000,
    trace: Optional[list] = None,
    identity_id: str = "lucas-pos",
) -> IdentityReport:
    """Verify sum_{n>=1} L(U_k^2 Q^(kn) / U_{k(n+1)}^2) = L(Q^k / alpha^(2k))."""
    budget = budget or default_budget()
    if not isinstance(k, int) or k < 1:
        raise PreconditionError("k must be a positive integer")
    if _sign_of(params.q) <= 0:
        raise PreconditionError("this branch requires Q > 0")
    cap = _ratio_cap_sup(params, k, power=1)
    terms, first_omitted = _choose_truncation(_lucas_pos_terms(params, k), cap, budget, max_terms)
    tail = tail_bound(first_omitted, cap)
    rhs_arg = _pos_rhs_arg(params, k)

    def rhs_fn(guard, bits):
        return _term_rogers(rhs_arg, guard, bits)

    return _evaluate_series_report(
        identity_id,
        {"P": _coeff_str(params.p), "Q": _coeff_str(params.q), "k": str(k)},
        budget,
        terms,
        tail,
        rhs_fn,
        trace,
        ratio_cap=cap,
    )


def _sign_of(value: Coefficient) -> int:
    if isinstance(value, QuadraticElement):
        return value.sign()
    return (value > 0) - (value < 0)


def _pos_rhs_arg(params: LucasParams, k: int):
    """Exact Q^k / alpha^(2k), in the coefficient ring when possible."""
    alpha = params.alpha_exact()
    if alpha is None:
        raise PreconditionError("exact closed form requires sqrt(D) in the ring")
    qk = params.q ** k
    if isinstance(alpha, QuadraticElement) and not isinstance(qk, QuadraticElement):
        qk = QuadraticElement.from_rational(qk, alpha.radicand)
    arg = qk / quad_pow(alpha, 2 * k)
    _assert_unit_open(arg)
    return arg


def _neg_rhs_arg(params: LucasParams, k: int):
    alpha = params.alpha_exact()
    if alpha is None:
        raise PreconditionError("exact closed form requires sqrt(D) in the ring")
    qk = -(params.q ** k)
    if isinstance(alpha, QuadraticElement) and not isinstance(qk, QuadraticElement):
        qk = QuadraticElement.from_rational(qk, alpha.radicand)
    arg = qk / quad_pow(alpha, 2 * k)
    _assert_unit_open(arg)
    return arg


def _lucas_neg_terms(params: LucasParams, k: int) -> Iterator:
    """Pairs (A_n, B_n) of the two sub-series for Q < 0, odd k."""
    vk = lucas_uv(params, k).v
    vk2 = vk * vk
    d = params.d
    p, q = params.p, params.q
    q2k = params.q ** (2 * k)
    # U stream at indices 2kn (step 2k), V stream at k(2n+1) (step 2k)
    u_lo, u_hi = lucas_uv(params, 2 * k).u, lucas_uv(params, 2 * k + 1).u
    v_lo, v_hi = lucas_uv(params, 3 * k).v, lucas_uv(params, 3 * k + 1).v
    qpow_a = params.q ** k
    qpow_b = q2k
    while True:
        a_term = -vk2 * qpow_a / (d * u_lo * u_lo)
        b_term = vk2 * qpow_b / (v_lo * v_lo)
        yield a_term, b_term
        for _ in range(2 * k):
            u_lo, u_hi = u_hi, p * u_hi - q * u_lo
            v_lo, v_hi = v_hi, p * v_hi - q * v_lo
        qpow_a = qpow_a * q2k
        qpow_b = qpow_b * q2k


def lucas_neg_verify(
    params: LucasParams,
    k: int,
    budget: Optional[PrecisionBudget] = None,
    max_terms: int = 10000,
    trace: Optional[list] = None,
    identity_id: str = "lucas-neg",
) -> IdentityReport:
    """Verify the two-series identity for Q < 0 and odd k:

    sum L(-V_k^2 Q^(k(2n-1)) / (D U_{2kn}^2)) + sum L(V_k^2 Q^(2kn) / V_{k(2n+1)}^2)
        = L(-Q^k / alpha^(2k)).
    """
    budget = budget or default_budget()
    if not isinstance(k, int) or k < 1 or k % 2 == 0:
        raise PreconditionError("k must be a positive odd integer")
    if _sign_of(params.q) >= 0:
        raise PreconditionError("this branch requires Q < 0")
    cap = _ratio_cap_sup(params, k, power=2)
    tol_half = budget.tolerance / 2
    digits = budget.target_digits
    pairs: list = []
    first_omitted_pair = None
    for a_term, b_term in _lucas_neg_terms(params, k):
        if len(pairs) >= max_terms:
            first_omitted_pair = (a_term, b_term)
            break
        if pairs and _tail_small_enough(a_term, cap, tol_half / 2, digits) and _tail_small_enough(
            b_term, cap, tol_half / 2, digits
        ):
            first_omitted_pair = (a_term, b_term)
            break
        pairs.append((a_term, b_term))
    tail = _mpf_sum_upper(
        tail_bound(first_omitted_pair[0], cap),
        tail_bound(first_omitted_pair[1], cap),
    )
    terms = [t for pair in pairs for t in pair]
    rhs_arg = _neg_rhs_arg(params, k)

    def rhs_fn(guard, bits):
        return _term_rogers(rhs_arg, guard, bits)

    return _evaluate_series_report(
        identity_id,
        {"P": _coeff_str(params.p), "Q": _coeff_str(params.q), "k": str(k)},
        budget,
        terms,
        tail,
        rhs_fn,
        trace,
        ratio_cap=cap,
    )


# ---------------------------------------------------------------------------
# the (P', Q') reduction
# ---------------------------------------------------------------------------


def neg_from_pos_split_check(params: LucasParams, k: int, n_terms: int) -> bool:
    """Exact check that the Q > 0 series at (P', Q') = (sqrt(D), -Q) reproduces,
    term by term, the Q < 0 series (odd k, split by parity) or the plain
    U-ratio series (even k)."""
    from .lucas import transform_params

    if not params.is_rational:
        raise PreconditionError("split check requires rational parameters")
    if _sign_of(params.q) >= 0:
        raise PreconditionError("split check requires Q < 0")
    if not isinstance(k, int) or k < 1:
        raise PreconditionError("k must be a positive integer")
    transformed = transform_params(params)
    pos_terms = _lucas_pos_terms(transformed, k)
    vk = lucas_uv(params, k).v
    uk = lucas_uv(params, k).u
    d, q = params.d, params.q
    for n in range(1, n_terms + 1):
        summand = next(pos_terms)
        u_next = lucas_uv(params, k * (n + 1)).u
        v_next = lucas_uv(params, k * (n + 1)).v
        if k % 2 == 1:
            if n % 2 == 1:
                expected = -vk * vk * q ** (k * n) / (d * u_next * u_next)
            else:
                expected = vk * vk * q ** (k * n) / (v_next * v_next)
        else:
            expected = uk * uk * q ** (k * n) / (u_next * u_next)
        if summand != expected:
            return False
    return True


# ---------------------------------------------------------------------------
# Pell solutions and the Bridgeman correspondence
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PellLucasCorrespondence:
    """Dictionary between powers u^k = a_k + b_k sqrt(n) and Lucas values."""

    solution: PellSolution
    params: LucasParams

    def a_k(self, k: int) -> Fraction:
        return lucas_uv(self.params, k).v / 2

    def b_k(self, k: int) -> Fraction:
        return self.solution.b * lucas_uv(self.params, k).u

    def power_components(self, k: int) -> tuple[Fraction, Fraction]:
        power = quad_pow(self.solution.unit(), k)
        return power.rat_part, power.rad_part

    def roundtrip_ok(self, k: int) -> bool:
        rat, rad = self.power_components(k)
        return rat == self.a_k(k) and rad == self.b_k(k)


def pell_to_lucas(sol: PellSolution) -> PellLucasCorrespondence:
    """Map u = a + b*sqrt(n) to parameters (2a, a^2 - n b^2) with scale data."""
    params = LucasParams(2 * sol.a, Fraction(sol.sign))
    return PellLucasCorrespondence(sol, params)


def bridgeman_divisibility_check(sol: PellSolution, k_max: int = 50) -> bool:
    """Integrality of b_k/b (positive case) and b_2k/a, a_{2k+1}/a (negative)."""
    if not sol.is_integral():
        raise PreconditionError("divisibility claims require an integral solution")
    corr = pell_to_lucas(sol)
    if sol.sign > 0:
        return all((corr.b_k(k) / sol.b).denominator == 1 for k in range(1, k_max + 1))
    for k in range(1, k_max + 1):
        if (corr.b_k(2 * k) / sol.a).denominator != 1:
            return False
        if (corr.a_k(2 * k + 1) / sol.a).denominator != 1:
            return False
    return True


def bridgeman_verify(
    sol: PellSolution,
    budget: Optional[PrecisionBudget] = None,
    max_terms: int = 10000,
    trace: Optional[list] = None,
    cross_terms: int = 30,
) -> IdentityReport:
    """Verify the rewritten orthospectrum-style series for L(1/u^2).

    Positive solutions: L(1/u^2) = sum_{k>=2} L(1/U_k(2a,1)^2);
    negative solutions: the two-series form with V_1(2a,-1) = 2a and
    D = 4 b^2 n.  In both cases the series is exactly the k = 1 Lucas
    series under pell_to_lucas, and the first ``cross_terms`` terms are
    cross-checked against the original b^2/b_k^2 (resp. a^2/(n b_{2k}^2),
    a^2/a_{2k+1}^2) forms computed independently from powers of u.
    """
    budget = budget or default_budget()
    corr = pell_to_lucas(sol)
    params = corr.params
    a, b, n = sol.a, sol.b, sol.n

    # the rewritten series must coincide with the original Bridgeman form,
    # with b_k, a_k taken from exact powers of u
    if sol.sign > 0:
        term_stream = _lucas_pos_terms(params, 1)
        for idx in range(1, cross_terms + 1):
            term = next(term_stream)
            b_power = quad_pow(sol.unit(), idx + 1).rad_part
            if term != b * b / (b_power * b_power):
                raise AssertionError("term mismatch with the b^2/b_k^2 form")
    else:
        pair_stream = _lucas_neg_terms(params, 1)
        for idx in range(1, cross_terms + 1):
            a_term, b_term = next(pair_stream)
            even_power = quad_pow(sol.unit(), 2 * idx)
            odd_power = quad_pow(sol.unit(), 2 * idx + 1)
            if a_term != a * a / (n * even_power.rad_part ** 2):
                raise AssertionError("term mismatch with the a^2/(n b_2k^2) form")
            if b_term != a * a / (odd_power.rat_part ** 2):
                raise AssertionError("term mismatch with the a^2/a_{2k+1}^2 form")

    # closed-form argument 1/u^2 agrees exactly with the Lucas-side argument
    inv_u_sq = QuadraticElement.from_rational(1, Fraction(sol.n)) / quad_pow(sol.unit(), 2)
    lucas_arg = _pos_rhs_arg(params, 1) if sol.sign > 0 else _neg_rhs_arg(params, 1)
    if inv_u_sq != lucas_arg:
        raise AssertionError("1/u^2 does not match the Lucas closed-form argument")

    if sol.sign > 0:
        report = lucas_pos_verify(params, 1, budget, max_terms, trace)
    else:
        report = lucas_neg_verify(params, 1, budget, max_terms, trace)
    parameters = {
        "a": str(a),
        "b": str(b),
        "n": str(n),
        "sign": "+1" if sol.sign > 0 else "-1",
    }
    return IdentityReport(
        "bridgeman",
        parameters,
        report.digits,
        report.terms_used,
        report.lhs,
        report.rhs,
        report.tail_bound,
        report.residual,
        report.verdict,
    )


# ---------------------------------------------------------------------------
# catalog of worked examples
# ---------------------------------------------------------------------------


def _richmond_szekeres_verify(
    budget: PrecisionBudget,
    max_terms: int,
    trace: Optional[list] = None,
) -> IdentityReport:
    """Partial sum of L(1/n^2) from n = 2 plus an integral-style tail bound,
    bracketing pi^2/6."""
    digits = budget.target_digits
    last = max_terms + 1  # include n = 2 .. max_terms+1
    bits = budget.working_bits
    rows = []
    with interval_precision(bits):
        acc = iv.mpf(0)
        for m in range(2, last + 1):
            acc = acc + _rogers_eval(Fraction(1, m * m), 2)
            if trace is not None:
                rows.append((m, Fraction(1, m * m), ErrorBoundedValue.from_interval(acc)))
        rhs_iv = _pi_squared_over(6)
        res_iv = acc - rhs_iv
        lhs = ErrorBoundedValue.from_interval(acc)
        rhs = ErrorBoundedValue.from_interval(rhs_iv)
        residual = ErrorBoundedValue.from_interval(res_iv)
    # tail over n > last: sum (pi^2/6 + 2 log n)/n^2 <= (pi^2/6 + 2 log N + 2)/N
    with interval_precision(96):
        n_iv = iv.mpf(last)
        bound = (_pi_squared_over(6) + 2 * iv.log(n_iv) + 2) / n_iv
        tail = mp.make_mpf(bound._mpi_[1])
    if trace is not None:
        trace.extend(
            {"n": m, "term": t, "lhs_partial": p, "tail_bound": None} for m, t, p in rows
        )
    return IdentityReport.build(
        "richmond-szekeres",
        {"terms": str(max_terms)},
        digits,
        max_terms,
        lhs,
        rhs,
        tail,
        residual,
    )


def _sinh_theta_verify(
    theta: Fraction,
    budget: PrecisionBudget,
    max_terms: int,
    trace: Optional[list] = None,
) -> IdentityReport:
    """Numeric-parameter instance P = 2cosh(theta), Q = 1, k = 1:
    sum_{n>=2} L(sinh^2(theta)/sinh^2(n theta)) = L(e^(-2 theta))."""
    theta = Fraction(theta)
    if theta <= 0:
        raise DomainError("theta must be positive")
    digits = budget.target_digits
    tolerance = budget.tolerance
    bits = budget.working_bits
    force_fail = False
    for attempt in range(4):
        with interval_precision(bits):
            th = iv_from_fraction(theta)
            growth = iv.exp(th)
            decay = 1 / growth
            p_iv = growth + decay  # 2 cosh(theta)
            cap_iv = (decay * decay)  # 1/alpha^2 with alpha = e^theta
            cap = mpf_to_fraction(mp.make_mpf(cap_iv._mpi_[1]))
            if not (0 < cap < 1):
                bits *= 2
                continue
            terms: list[ErrorBoundedValue] = []
            first_omitted = None
            u_lo, u_hi = iv.mpf(1), p_iv  # U_1, U_2 for (P, 1)
            while True:
                term_iv = 1 / (u_hi * u_hi)  # U_1^2 Q^n / U_{n+1}^2
                term = ErrorBoundedValue.from_interval(term_iv)
                if len(terms) >= max_terms:
                    first_omitted = term
                    break
                if terms and _tail_small_enough(term, cap, tolerance / 2, digits):
                    first_omitted = term
                    break
                terms.append(term)
                u_lo, u_hi = u_hi, p_iv * u_hi - u_lo
            tail = tail_bound(first_omitted, cap)
            acc = iv.mpf(0)
            rows = []
            for idx, term in enumerate(terms):
                acc = acc + _rogers_eval(term, budget.guard_terms)
                if trace is not None:
                    rows.append((idx, term, ErrorBoundedValue.from_interval(acc)))
            rhs_arg = ErrorBoundedValue.from_interval(decay * decay)
            rhs_iv = _rogers_eval(rhs_arg, budget.guard_terms)
            res_iv = acc - rhs_iv
            lhs = ErrorBoundedValue.from_interval(acc)
            rhs = ErrorBoundedValue.from_interval(rhs_iv)
            residual = ErrorBoundedValue.from_interval(res_iv)
        if residual.radius <= tolerance:
            break
        bits *= 2
    else:
        force_fail = True
    if trace is not None:
        trace.extend(
            {"n": i, "term": t, "lhs_partial": p, "tail_bound": None} for i, t, p in rows
        )
    return IdentityReport.build(
        "sinh-theta",
        {"theta": str(theta)},
        digits,
        len(terms),
        lhs,
        rhs,
        tail,
        residual,
        force_fail=force_fail,
    )


def _sqrt5_params() -> LucasParams:
    return LucasParams(QuadraticElement.sqrt_of(5), 1)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    run: Callable
    defaults: dict
    description: str


def _catalog() -> dict:
    return {
        "richmond-szekeres": CatalogEntry(
            "richmond-szekeres",
            lambda budget, max_terms, trace, **kw: _richmond_szekeres_verify(budget, max_terms, trace),
            {},
            "sum of L(1/n^2) from n=2 brackets pi^2/6",
        ),
        "sinh-theta": CatalogEntry(
            "sinh-theta",
            lambda budget, max_terms, trace, theta=Fraction(1), **kw: _sinh_theta_verify(
                Fraction(theta), budget, max_terms, trace
            ),
            {"theta": Fraction(1)},
            "sum of L(sinh^2(theta)/sinh^2(n theta)) = L(e^(-2 theta))",
        ),
        "chebyshev-x": CatalogEntry(
            "chebyshev-x",
            lambda budget, max_terms, trace, x=Fraction(2), k=1, **kw: lucas_pos_verify(
                LucasParams(2 * Fraction(x), 1), k, budget, max_terms, trace
            ),
            {"x": Fraction(2), "k": 1},
            "Chebyshev-denominator series for rational x > 1",
        ),
        "repunit-x": CatalogEntry(
            "repunit-x",
            lambda budget, max_terms, trace, x=Fraction(2), k=1, **kw: lucas_pos_verify(
                LucasParams(Fraction(x) + 1, Fraction(x)), k, budget, max_terms, trace
            ),
            {"x": Fraction(2), "k": 1},
            "base-x repunit series summing to L(1/x^k)",
        ),
        "fib-even": CatalogEntry(
            "fib-even",
            lambda budget, max_terms, trace, k=1, **kw: lucas_pos_verify(
                LucasParams(3, 1), k, budget, max_terms, trace
            ),
            {"k": 1},
            "even-indexed Fibonacci series summing to L(1/phi^(4k))",
        ),
        "fib-lucas-neg": CatalogEntry(
            "fib-lucas-neg",
            lambda budget, max_terms, trace, k=1, **kw: lucas_neg_verify(
                LucasParams(1, -1), k, budget, max_terms, trace
            ),
            {"k": 1},
            "Fibonacci/Lucas two-series identity summing to L(1/phi^(2k))",
        ),
        "pell": CatalogEntry(
            "pell",
            lambda budget, max_terms, trace, k=1, **kw: lucas_neg_verify(
                LucasParams(2, -1), k, budget, max_terms, trace
            ),
            {"k": 1},
            "Pell/Pell-Lucas two-series identity",
        ),
        "q-minus-3": CatalogEntry(
            "q-minus-3",
            lambda budget, max_terms, trace, k=1, **kw: lucas_neg_verify(
                LucasParams(1, -3), k, budget, max_terms, trace
            ),
            {"k": 1},
            "(P,Q) = (1,-3) two-series identity",
        ),
        "sqrt5-k-odd": CatalogEntry(
            "sqrt5-k-odd",
            lambda budget, max_terms, trace, k=1, **kw: _sqrt5_catalog(k, budget, max_terms, trace, want_odd=True),
            {"k": 1},
            "(P,Q) = (sqrt(5),1) series, odd k, recovering the Q<0 Fibonacci case",
        ),
        "sqrt5-k-even": CatalogEntry(
            "sqrt5-k-even",
            lambda budget, max_terms, trace, k=2, **kw: _sqrt5_catalog(k, budget, max_terms, trace, want_odd=False),
            {"k": 2},
            "(P,Q) = (sqrt(5),1) series, even k, recovering the Fibonacci case",
        ),
    }


def _sqrt5_catalog(k, budget, max_terms, trace, want_odd):
    if not isinstance(k, int) or k < 1:
        raise UsageError("k must be a positive integer")
    if want_odd and k % 2 == 0:
        raise UsageError("this catalog entry requires odd k")
    if not want_odd and k % 2 == 1:
        raise UsageError("this catalog entry requires even k")
    return lucas_pos_verify(_sqrt5_params(), k, budget, max_terms, trace)


CATALOG_NAMES = tuple(_catalog().keys())


def catalog_verify(
    name: str,
    budget: Optional[PrecisionBudget] = None,
    max_terms: int = 10000,
    trace: Optional[list] = None,
    **overrides,
) -> IdentityReport:
    """Run a named worked-example instance from the registry."""
    budget = budget or default_budget()
    entries = _catalog()
    if name not in entries:
        raise UsageError(f"unknown identity {name!r}; known: {', '.join(CATALOG_NAMES)}")
    entry = entries[name]
    unknown = set(overrides) - set(entry.defaults)
    if unknown:
        raise UsageError(f"unknown parameter keys for {name}: {sorted(unknown)}")
    kwargs = dict(entry.defaults)
    kwargs.update(overrides)
    return entry.run(budget, max_terms, trace, **kwargs)
