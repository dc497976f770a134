"""Command-line front end: identity registry, reports, property suites.

Subcommands:

  verify          one identity -> JSON report (exact decimal fields)
  suite           every registry instance at default parameters -> summary
  properties      seeded randomized invariant suites
  special-values  the closed-form table L(0), L(1/2), L(1/phi), L(1/phi^2), L(1)

Exit status: 0 all pass, 1 any verification failure, 2 usage/config error.
Rationals are entered as "p/q" or decimal strings and parsed exactly; no
binary floats touch the exact paths.  Reports are deterministic: numeric
fields are rendered as exact decimal strings of the dyadic endpoints.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from pathlib import Path
from typing import Callable, Optional

from mpmath import iv

from .enclosure import (
    DomainError,
    ErrorBoundedValue,
    PrecisionBudget,
    interval_precision,
    mpf_to_fraction,
)
from .exactnum import QuadraticElement, quad_pow, quad_to_real
from .lucas import LucasParams, PreconditionError, lucas_uv, lucas_uv_naive
from .rogers import abel_residual, reflection_residual, rogers_l
from .series import (
    IdentityReport,
    PellSolution,
    TwoParamInstance,
    UsageError,
    bridgeman_verify,
    catalog_verify,
    corollary_verify,
    d_seq,
    lucas_neg_verify,
    lucas_pos_verify,
    tail_bound,
    theorem_main_verify,
    xy_seq,
)

DIGITS_ENV_VAR = "DILOG_DIGITS"
DEFAULT_DIGITS = 40
DEFAULT_MAX_TERMS = 10000
DEFAULT_SEED = 987654321


# ---------------------------------------------------------------------------
# exact decimal rendering and parsing
# ---------------------------------------------------------------------------


def exact_decimal(value) -> str:
    """Exact decimal string of a dyadic rational (or mpf); never lossy."""
    if not isinstance(value, Fraction):
        value = mpf_to_fraction(value)
    if value == 0:
        return "0"
    sign = "-" if value < 0 else ""
    v = abs(value)
    den = v.denominator
    k = den.bit_length() - 1
    if den != 1 << k:
        raise ValueError("value is not a dyadic rational")
    digits = str(v.numerator * 5 ** k)
    if k == 0:
        return sign + digits
    if len(digits) <= k:
        digits = "0" * (k - len(digits) + 1) + digits
    return f"{sign}{digits[:-k]}.{digits[-k:]}"


def parse_decimal(text: str) -> Fraction:
    """Exact rational value of a plain decimal or p/q string."""
    return Fraction(text.strip())


def approx_decimal(value, significant: int = 12) -> str:
    """Deterministically rounded decimal (for human-facing trace columns)."""
    if isinstance(value, ErrorBoundedValue):
        value = value.midpoint
    value = Fraction(value)
    if value == 0:
        return "0"
    with localcontext() as ctx:
        ctx.prec = significant
        d = Decimal(value.numerator) / Decimal(value.denominator)
        return str(d)


# ---------------------------------------------------------------------------
# report serialization
# ---------------------------------------------------------------------------


def _ebv_fields(value: ErrorBoundedValue) -> dict:
    return {"midpoint": exact_decimal(value.midpoint), "radius": exact_decimal(value.radius)}


def emit_report(report: IdentityReport, fmt: str = "json") -> str:
    """Deterministic serialization of one report."""
    if fmt != "json":
        raise UsageError(f"unsupported report format {fmt!r}")
    doc = {
        "identity_id": report.identity_id,
        "parameters": dict(sorted(report.parameters.items())),
        "digits": report.digits,
        "terms_used": report.terms_used,
        "lhs": _ebv_fields(report.lhs),
        "rhs": _ebv_fields(report.rhs),
        "tail_bound": exact_decimal(report.tail_bound),
        "residual": _ebv_fields(report.residual),
        "verdict": report.verdict,
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_report(text: str) -> dict:
    """Parse an emitted report back to exact values (round-trip companion)."""
    doc = json.loads(text)
    out = dict(doc)
    for key in ("lhs", "rhs", "residual"):
        out[key] = {
            "midpoint": parse_decimal(doc[key]["midpoint"]),
            "radius": parse_decimal(doc[key]["radius"]),
        }
    out["tail_bound"] = parse_decimal(doc["tail_bound"])
    return out


def write_trace_csv(rows: list, path: str, significant: int = 24) -> None:
    """CSV of partial sums: one row per term index."""
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["n", "term", "lhs_partial", "tail_bound"])
        for row in rows:
            tail = row.get("tail_bound")
            writer.writerow(
                [
                    row["n"],
                    approx_decimal(row["term"], significant),
                    approx_decimal(row["lhs_partial"], significant),
                    "" if tail is None else approx_decimal(mpf_to_fraction(tail), significant),
                ]
            )


# ---------------------------------------------------------------------------
# run configuration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RunConfig:
    identity_id: str
    parameters: dict = field(default_factory=dict)
    digits: int = DEFAULT_DIGITS
    max_terms: int = DEFAULT_MAX_TERMS
    seed: int = DEFAULT_SEED
    output: Optional[str] = None
    fmt: str = "json"
    trace_path: Optional[str] = None

    def __post_init__(self):
        if self.digits < 10:
            raise UsageError("digits must be at least 10")
        if self.max_terms < 1:
            raise UsageError("max_terms must be positive")

    def budget(self) -> PrecisionBudget:
        return PrecisionBudget.for_digits(self.digits)


def default_digits() -> int:
    raw = os.environ.get(DIGITS_ENV_VAR)
    if raw is None:
        return DEFAULT_DIGITS
    try:
        return int(raw)
    except ValueError as exc:
        raise UsageError(f"{DIGITS_ENV_VAR} must be an integer, got {raw!r}") from exc


# ---------------------------------------------------------------------------
# identity dispatch
# ---------------------------------------------------------------------------

_IDENTITY_PARAMS = {
    "theorem-main": {"a", "b"},
    "corollary": {"t"},
    "lucas-pos": {"P", "Q", "k"},
    "lucas-neg": {"P", "Q", "k"},
    "bridgeman": {"pell_a", "pell_b", "pell_n"},
    "richmond-szekeres": set(),
    "sinh-theta": {"theta"},
    "chebyshev-x": {"x", "k"},
    "repunit-x": {"x", "k"},
    "fib-even": {"k"},
    "fib-lucas-neg": {"k"},
    "pell": {"k"},
    "q-minus-3": {"k"},
    "sqrt5-k-odd": {"k"},
    "sqrt5-k-even": {"k"},
}


def known_identities() -> tuple:
    return tuple(_IDENTITY_PARAMS)


def run_identity(config: RunConfig, trace: Optional[list] = None) -> IdentityReport:
    """Dispatch one RunConfig to the matching verifier."""
    name = config.identity_id
    if name not in _IDENTITY_PARAMS:
        raise UsageError(f"unknown identity {name!r}; known: {', '.join(known_identities())}")
    allowed = _IDENTITY_PARAMS[name]
    given = dict(config.parameters)
    unknown = set(given) - allowed
    if unknown:
        raise UsageError(f"unknown parameter keys for {name}: {sorted(unknown)}")
    budget = config.budget()
    max_terms = config.max_terms
    try:
        if name == "theorem-main":
            inst = TwoParamInstance(parse_decimal(given["a"]), parse_decimal(given["b"]))
            return theorem_main_verify(inst, budget, max_terms, trace)
        if name == "corollary":
            return corollary_verify(parse_decimal(given["t"]), budget, max_terms, trace)
        if name == "lucas-pos":
            params = LucasParams(parse_decimal(given["P"]), parse_decimal(given["Q"]))
            return lucas_pos_verify(params, int(given.get("k", "1")), budget, max_terms, trace)
        if name == "lucas-neg":
            params = LucasParams(parse_decimal(given["P"]), parse_decimal(given["Q"]))
            return lucas_neg_verify(params, int(given.get("k", "1")), budget, max_terms, trace)
        if name == "bridgeman":
            sol = PellSolution(
                parse_decimal(given["pell_a"]),
                parse_decimal(given["pell_b"]),
                int(given["pell_n"]),
            )
            return bridgeman_verify(sol, budget, max_terms, trace)
        overrides = {}
        if "k" in given:
            overrides["k"] = int(given["k"])
        if "x" in given:
            overrides["x"] = parse_decimal(given["x"])
        if "theta" in given:
            overrides["theta"] = parse_decimal(given["theta"])
        return catalog_verify(name, budget, max_terms, trace, **overrides)
    except KeyError as exc:
        raise UsageError(f"identity {name} requires parameter {exc.args[0]!r}") from exc
    except UsageError:
        raise
    except (PreconditionError, DomainError, ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from exc


# ---------------------------------------------------------------------------
# registry for `suite`
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RegistryEntry:
    name: str
    config: RunConfig
    expected: Optional[Callable[[PrecisionBudget], ErrorBoundedValue]]
    cited_value: str


def _pi2_over(divisor: int, budget: PrecisionBudget) -> ErrorBoundedValue:
    with interval_precision(budget.working_bits):
        return ErrorBoundedValue.from_interval(iv.pi ** 2 / divisor)


def _rogers_of_quad(element: QuadraticElement, budget: PrecisionBudget) -> ErrorBoundedValue:
    return rogers_l(quad_to_real(element, budget.working_bits), budget)


def _phi_inverse_power(power: int) -> QuadraticElement:
    phi = QuadraticElement(Fraction(1, 2), Fraction(1, 2), Fraction(5))
    return QuadraticElement.from_rational(1, Fraction(5)) / quad_pow(phi, power)


def registry() -> tuple:
    """The paper's example instances with their cited closed-form values."""
    mk = lambda name, params, digits=None: RunConfig(
        name, params, digits or default_digits()
    )
    return (
        RegistryEntry(
            "theorem-main(2/3,1/3)",
            mk("theorem-main", {"a": "2/3", "b": "1/3"}),
            lambda b: _pi2_over(12, b),
            "pi^2/12",
        ),
        RegistryEntry(
            "corollary(1/3)",
            mk("corollary", {"t": "1/3"}),
            lambda b: _pi2_over(12, b),
            "pi^2/12",
        ),
        RegistryEntry(
            "fib-even",
            mk("fib-even", {"k": "1"}),
            lambda b: _rogers_of_quad(_phi_inverse_power(4), b),
            "L(1/phi^4) = L(2/(7+3*sqrt(5)))",
        ),
        RegistryEntry(
            "chebyshev-x(2)",
            mk("chebyshev-x", {"x": "2", "k": "1"}),
            lambda b: _rogers_of_quad(QuadraticElement(7, -4, 3), b),
            "L(7-4*sqrt(3))",
        ),
        RegistryEntry(
            "repunit-x(2)",
            mk("repunit-x", {"x": "2", "k": "1"}),
            lambda b: _pi2_over(12, b),
            "L(1/2) = pi^2/12",
        ),
        RegistryEntry(
            "fib-lucas-neg",
            mk("fib-lucas-neg", {"k": "1"}),
            lambda b: _pi2_over(15, b),
            "pi^2/15",
        ),
        RegistryEntry(
            "pell",
            mk("pell", {"k": "1"}),
            lambda b: _rogers_of_quad(QuadraticElement(3, -2, 2), b),
            "L(1/(3+2*sqrt(2)))",
        ),
        RegistryEntry(
            "q-minus-3",
            mk("q-minus-3", {"k": "1"}),
            lambda b: _rogers_of_quad(QuadraticElement(Fraction(7, 6), Fraction(-1, 6), 13), b),
            "L(6/(7+sqrt(13)))",
        ),
        RegistryEntry(
            "sqrt5-k-odd",
            mk("sqrt5-k-odd", {"k": "1"}),
            lambda b: _pi2_over(15, b),
            "L(1/phi^2) = pi^2/15",
        ),
        RegistryEntry(
            "sqrt5-k-even",
            mk("sqrt5-k-even", {"k": "2"}),
            lambda b: _rogers_of_quad(_phi_inverse_power(4), b),
            "L(1/phi^4)",
        ),
        RegistryEntry(
            "sinh-theta(1)",
            mk("sinh-theta", {"theta": "1"}),
            None,
            "L(e^-2)",
        ),
        RegistryEntry(
            "richmond-szekeres",
            mk("richmond-szekeres", {}),
            lambda b: _pi2_over(6, b),
            "pi^2/6",
        ),
        RegistryEntry(
            "bridgeman(3,2,2)",
            mk("bridgeman", {"pell_a": "3", "pell_b": "2", "pell_n": "2"}),
            lambda b: _rogers_of_quad(QuadraticElement(17, -12, 2), b),
            "L(1/u^2) = L(17-12*sqrt(2))",
        ),
        RegistryEntry(
            "bridgeman(1,1,2)",
            mk("bridgeman", {"pell_a": "1", "pell_b": "1", "pell_n": "2"}),
            lambda b: _rogers_of_quad(QuadraticElement(3, -2, 2), b),
            "L(1/u^2) = L(3-2*sqrt(2))",
        ),
    )


def run_suite(digits: int, max_terms: int, stream) -> bool:
    """Run every registry entry; print one line per identity."""
    all_ok = True
    for entry in registry():
        config = RunConfig(
            entry.config.identity_id,
            entry.config.parameters,
            digits,
            max_terms,
        )
        report = run_identity(config)
        ok = report.verdict == "pass"
        agree = ""
        if entry.expected is not None:
            expected = entry.expected(config.budget())
            tolerance = Fraction(1, 10 ** digits)
            matches = report.rhs.widened(tolerance).overlaps(expected)
            ok = ok and matches
            agree = " rhs=cited" if matches else " RHS-MISMATCH"
        all_ok = all_ok and ok
        status = "PASS" if ok else "FAIL"
        print(
            f"{status} {entry.name:24s} verdict={report.verdict} "
            f"terms={report.terms_used}{agree} [{entry.cited_value}]",
            file=stream,
        )
    return all_ok


# ---------------------------------------------------------------------------
# seeded property suites
# ---------------------------------------------------------------------------


def _random_fraction(rng: random.Random, max_den: int = 200) -> Fraction:
    den = rng.randint(2, max_den)
    num = rng.randint(1, den - 1)
    return Fraction(num, den)


def _random_quad(rng: random.Random, radicand: Fraction) -> QuadraticElement:
    def small(lo=-9, hi=9):
        return Fraction(rng.randint(lo, hi), rng.randint(1, 9))

    return QuadraticElement(small(), small(), radicand)


def _prop_field_axioms(rng: random.Random, count: int) -> tuple:
    for _ in range(count):
        d = Fraction(rng.randint(2, 60))
        x, y, z = (_random_quad(rng, d) for _ in range(3))
        if (x + y) + z != x + (y + z):
            return False, "associativity of addition failed"
        if (x * y) * z != x * (y * z):
            return False, "associativity of multiplication failed"
        if x * (y + z) != x * y + x * z:
            return False, "distributivity failed"
        if x * y != y * x or x + y != y + x:
            return False, "commutativity failed"
    return True, f"{count} triples"


def _prop_norm_multiplicative(rng: random.Random, count: int) -> tuple:
    for _ in range(count):
        d = Fraction(rng.randint(2, 60))
        x, y = _random_quad(rng, d), _random_quad(rng, d)
        if (x * y).norm() != x.norm() * y.norm():
            return False, f"norm multiplicativity failed at {x}, {y}"
    return True, f"{count} pairs"


def _prop_reflection(rng: random.Random, count: int, digits: int) -> tuple:
    budget = PrecisionBudget.for_digits(digits)
    for _ in range(count):
        x = _random_fraction(rng)
        if not reflection_residual(x, budget).contains_zero():
            return False, f"reflection residual missed zero at x={x}"
    return True, f"{count} points at {digits} digits"


def _prop_abel(rng: random.Random, count: int, digits: int) -> tuple:
    budget = PrecisionBudget.for_digits(digits)
    for _ in range(count):
        x, y = _random_fraction(rng), _random_fraction(rng)
        if not abel_residual(x, y, budget).contains_zero():
            return False, f"five-term residual missed zero at ({x}, {y})"
    return True, f"{count} points at {digits} digits"


def _prop_lemma_recurrence(rng: random.Random, count: int) -> tuple:
    for _ in range(count):
        a, b = _random_fraction(rng, 40), _random_fraction(rng, 40)
        if a == b:
            continue
        inst = TwoParamInstance(a, b)
        x, y = xy_seq(inst, 0)
        for n in range(40):
            nx = x * (1 - y) / (1 - x * y)
            ny = y * (1 - x) / (1 - x * y)
            expected = xy_seq(inst, n + 1)
            if (nx, ny) != expected:
                return False, f"recurrence failed at ({a},{b}), n={n}"
            x, y = nx, ny
    return True, f"{count} instances, 40 steps each"


def _prop_cassini_shift(rng: random.Random, count: int) -> tuple:
    for _ in range(count):
        a, b = _random_fraction(rng, 40), _random_fraction(rng, 40)
        if a == b:
            continue
        inst = TwoParamInstance(a, b)
        for n in range(1, 30):
            dn, dp, dnn = d_seq(inst, n), d_seq(inst, n - 1), d_seq(inst, n + 1)
            if dn * dn - dp * dnn != a * b * (1 - a) ** n * (1 - b) ** n:
                return False, f"Cassini-like identity failed at ({a},{b}), n={n}"
            if dn - (1 - b) * dp != b * (1 - a) ** n:
                return False, f"first shift identity failed at ({a},{b}), n={n}"
            if dn - (1 - a) * dp != a * (1 - b) ** n:
                return False, f"second shift identity failed at ({a},{b}), n={n}"
    return True, f"{count} instances, n < 30"


def _prop_lucas_doubling(rng: random.Random, count: int) -> tuple:
    for _ in range(count):
        p = rng.randint(1, 9)
        q = rng.randint(-9, 9)
        if q == 0 or p * p - 4 * q <= 0:
            continue
        params = LucasParams(p, q)
        n = rng.randint(0, 120)
        fast, slow = lucas_uv(params, n), lucas_uv_naive(params, n)
        if fast.u != slow.u or fast.v != slow.v:
            return False, f"doubling mismatch at (P,Q)=({p},{q}), n={n}"
    return True, f"{count} random (P,Q,n)"


def _prop_tail_domination(rng: random.Random, count: int) -> tuple:
    budget = PrecisionBudget.for_digits(25)
    for _ in range(count):
        t0 = Fraction(rng.randint(1, 100), 400)  # in (0, 1/4]
        ratio = Fraction(rng.randint(10, 90), 100)
        bound = mpf_to_fraction(tail_bound(t0, ratio))
        partial = Fraction(0)
        term = t0
        for _ in range(200):
            partial += rogers_l(term, budget).endpoints()[1]
            term *= ratio
            if term == 0 or term < Fraction(1, 10 ** 30):
                break
        if bound < partial:
            return False, f"tail bound {float(bound)} below partial sum {float(partial)}"
    return True, f"{count} geometric configurations"


def run_properties(seed: int, digits: int, points: int, stream) -> bool:
    """Seeded random invariant suites; one line per suite."""
    suites = (
        ("exact-field-axioms", lambda rng: _prop_field_axioms(rng, 1000)),
        ("norm-multiplicativity", lambda rng: _prop_norm_multiplicative(rng, 1000)),
        ("lemma-recurrence", lambda rng: _prop_lemma_recurrence(rng, 25)),
        ("cassini-and-shifts", lambda rng: _prop_cassini_shift(rng, 10)),
        ("lucas-fast-doubling", lambda rng: _prop_lucas_doubling(rng, 50)),
        ("reflection-residual", lambda rng: _prop_reflection(rng, points, digits)),
        ("abel-residual", lambda rng: _prop_abel(rng, points, digits)),
        ("tail-domination", lambda rng: _prop_tail_domination(rng, 10)),
    )
    all_ok = True
    for name, runner in suites:
        rng = random.Random(f"{seed}:{name}")
        ok, detail = runner(rng)
        all_ok = all_ok and ok
        print(f"{'PASS' if ok else 'FAIL'} {name:24s} {detail}", file=stream)
    return all_ok


# ---------------------------------------------------------------------------
# special values
# ---------------------------------------------------------------------------


def special_values_table(digits: int) -> list:
    """Rows (label, enclosure, closed_form_enclosure, ok) for the 5-point table."""
    budget = PrecisionBudget.for_digits(digits)
    inv_phi = QuadraticElement(Fraction(-1, 2), Fraction(1, 2), 5)
    inv_phi_sq = QuadraticElement(Fraction(3, 2), Fraction(-1, 2), 5)
    tolerance = Fraction(1, 10 ** digits)
    points = (
        ("0", Fraction(0), None),
        ("1/2", Fraction(1, 2), 12),
        ("1/phi", inv_phi, 10),
        ("1/phi^2", inv_phi_sq, 15),
        ("1", Fraction(1), 6),
    )
    rows = []
    for label, point, divisor in points:
        if isinstance(point, QuadraticElement):
            value = rogers_l(quad_to_real(point, budget.working_bits), budget)
        else:
            value = rogers_l(point, budget)
        closed = (
            ErrorBoundedValue.zero() if divisor is None else _pi2_over(divisor, budget)
        )
        ok = value.widened(tolerance).overlaps(closed)
        rows.append((label, value, closed, ok))
    return rows


# ---------------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dilogid",
        description="Rigorous verification of Rogers-dilogarithm series identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="verify a single identity")
    verify.add_argument("--identity", required=True, help=", ".join(known_identities()))
    verify.add_argument("--a", help="rational parameter a (p/q or decimal)")
    verify.add_argument("--b", help="rational parameter b")
    verify.add_argument("--t", help="rational parameter t of the one-parameter form")
    verify.add_argument("--P", help="Lucas parameter P")
    verify.add_argument("--Q", help="Lucas parameter Q")
    verify.add_argument("--k", help="series index k")
    verify.add_argument("--x", help="catalog family parameter x")
    verify.add_argument("--theta", help="positive real theta (decimal, exact)")
    verify.add_argument("--pell-a", dest="pell_a", help="Pell solution component a")
    verify.add_argument("--pell-b", dest="pell_b", help="Pell solution component b")
    verify.add_argument("--pell-n", dest="pell_n", help="Pell radicand n (nonsquare integer)")
    verify.add_argument("--digits", type=int, default=None)
    verify.add_argument("--max-terms", type=int, default=DEFAULT_MAX_TERMS)
    verify.add_argument("--output", help="path for the JSON report (default stdout)")
    verify.add_argument("--trace", help="path for a CSV of partial sums")
    verify.add_argument(
        "--rhs-expected",
        help="decimal value the right-hand side must match within tolerance",
    )

    suite = sub.add_parser("suite", help="run every registry identity")
    suite.add_argument("--digits", type=int, default=None)
    suite.add_argument("--max-terms", type=int, default=DEFAULT_MAX_TERMS)

    props = sub.add_parser("properties", help="seeded random invariant suites")
    props.add_argument("--seed", type=int, default=DEFAULT_SEED)
    props.add_argument("--digits", type=int, default=None)
    props.add_argument("--points", type=int, default=100)

    special = sub.add_parser("special-values", help="closed-form value table")
    special.add_argument("--digits", type=int, default=None)
    return parser


def _collect_params(args) -> dict:
    params = {}
    for key in ("a", "b", "t", "P", "Q", "k", "x", "theta", "pell_a", "pell_b", "pell_n"):
        value = getattr(args, key, None)
        if value is not None:
            params[key] = value
    return params


def _cmd_verify(args) -> int:
    config = RunConfig(
        args.identity,
        _collect_params(args),
        args.digits if args.digits is not None else default_digits(),
        args.max_terms,
        output=args.output,
        trace_path=args.trace,
    )
    trace_rows: Optional[list] = [] if args.trace else None
    report = run_identity(config, trace_rows)
    document = emit_report(report)
    if args.output:
        try:
            Path(args.output).write_text(document)
        except OSError as exc:
            print(f"error: cannot write report: {exc}", file=sys.stderr)
            return 1
    else:
        sys.stdout.write(document)
    if args.trace:
        try:
            write_trace_csv(trace_rows, args.trace)
        except OSError as exc:
            print(f"error: cannot write trace: {exc}", file=sys.stderr)
            return 1
    if args.rhs_expected is not None:
        expected = parse_decimal(args.rhs_expected)
        tolerance = Fraction(1, 10 ** min(config.digits, 30))
        if not report.rhs.widened(tolerance).contains(expected):
            print("error: right-hand side does not match --rhs-expected", file=sys.stderr)
            return 1
    return 0 if report.verdict == "pass" else 1


def _cmd_suite(args) -> int:
    digits = args.digits if args.digits is not None else default_digits()
    ok = run_suite(digits, args.max_terms, sys.stdout)
    return 0 if ok else 1


def _cmd_properties(args) -> int:
    digits = args.digits if args.digits is not None else default_digits()
    ok = run_properties(args.seed, digits, args.points, sys.stdout)
    return 0 if ok else 1


def _cmd_special_values(args) -> int:
    digits = args.digits if args.digits is not None else default_digits()
    rows = special_values_table(digits)
    all_ok = True
    for label, value, closed, ok in rows:
        all_ok = all_ok and ok
        print(
            f"{'PASS' if ok else 'FAIL'} L({label:7s}) = {approx_decimal(value, digits)}"
            f"  closed-form {approx_decimal(closed, digits)}"
        )
    return 0 if all_ok else 1


def run_cli(argv: Optional[list] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    handlers = {
        "verify": _cmd_verify,
        "suite": _cmd_suite,
        "properties": _cmd_properties,
        "special-values": _cmd_special_values,
    }
    try:
        return handlers[args.command](args)
    except (UsageError, PreconditionError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
