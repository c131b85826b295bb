"""Independent checks on computed asymptotes.

``cross_validate`` runs every route on one rational function and compares
them exactly. ``run_campaign`` does the same over seeded random inputs; each
trial draws from its own generator keyed on ``(seed, trial_index)`` so the
trial sequence does not depend on scheduling.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from .asymptote import (
    Method,
    asymptote_of,
    build_matrix,
    check_lemma21,
    det_fraction_free,
)
from .parser import format_polynomial, format_rational_function
from .poly_core import Polynomial, RationalFunction, poly_eval, poly_mul, poly_sub

#: Sample points for residual decay: 10, 100, ..., 10**6.
DEFAULT_POINTS = tuple(Fraction(10**e) for e in range(1, 7))


def residual(rf: RationalFunction, g: Polynomial) -> RationalFunction:
    """``f - g`` as a rational function over the same denominator."""
    return RationalFunction(poly_sub(rf.numerator, poly_mul(g, rf.denominator)), rf.denominator)


@dataclass(frozen=True)
class DecayRow:
    x: Fraction
    value: Optional[Fraction]
    pole: bool = False


def residual_decay_table(
    rf: RationalFunction, g: Polynomial, points: Iterable[Fraction] = DEFAULT_POINTS
) -> list[DecayRow]:
    """Exact values of ``f(x) - g(x)``; denominator roots are marked as poles."""
    res = residual(rf, g)
    rows = []
    for x in points:
        x = Fraction(x)
        den = poly_eval(res.denominator, x)
        if not den:
            rows.append(DecayRow(x, None, pole=True))
        else:
            rows.append(DecayRow(x, poly_eval(res.numerator, x) / den))
    return rows


@dataclass
class ValidationReport:
    """Outcome of :func:`cross_validate` for a single rational function."""

    expression: str
    asymptote: Polynomial
    remainder: Polynomial
    k: int | float
    methods: tuple[Method, ...]
    failures: list[str] = field(default_factory=list)
    determinant_checks: int = 0
    recurrence_checks: int = 0
    lemma21_checks: int = 0
    max_bits: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures


def _bits(values: Iterable[Fraction]) -> int:
    return max(
        (max(v.numerator.bit_length(), v.denominator.bit_length()) for v in values), default=0
    )


def cross_validate(rf: RationalFunction) -> ValidationReport:
    """Compare determinant, recurrence and division routes exactly.

    Besides asymptote and remainder equality this checks, for every
    ``alpha <= k``: Hessenberg vs. Bareiss determinant of ``M_alpha``, the
    recurrence value against ``(-1)^alpha det(M_alpha)``, the remainder degree
    bound, and the cancellation identity for every ``phi`` in ``1..k``.
    """
    text = format_rational_function(rf)
    div = asymptote_of(rf, Method.DIVISION)
    report = ValidationReport(text, div.asymptote, div.remainder, rf.k, (Method.DIVISION,))
    fail = report.failures

    if not div.remainder.degree < rf.denominator.degree:
        fail.append(f"division remainder degree {div.remainder.degree} is not below denominator degree")
    k = rf.k
    if k < 0:
        return report

    report.methods = (Method.DETERMINANT, Method.RECURRENCE, Method.DIVISION)
    det = asymptote_of(rf, Method.DETERMINANT)
    rec = asymptote_of(rf, Method.RECURRENCE)
    det_primes: list[Fraction] = []
    for alpha, (td, tr) in enumerate(zip(det.traces, rec.traces)):
        d_ff = det_fraction_free(build_matrix(rf, alpha))
        report.determinant_checks += 1
        if td.det_value != d_ff:
            fail.append(f"alpha={alpha}: det_hessenberg={td.det_value} but det_fraction_free={d_ff}")
        prime = -d_ff if alpha % 2 else d_ff
        report.recurrence_checks += 1
        if tr.theta_prime != prime:
            fail.append(
                f"alpha={alpha}: recurrence theta'={tr.theta_prime} "
                f"but (-1)^alpha det(M_alpha)={prime}"
            )
        det_primes.append(prime)
    report.max_bits = _bits(det_primes)

    for res in (det, rec):
        if res.asymptote != div.asymptote:
            fail.append(
                f"{res.method} asymptote {format_polynomial(res.asymptote)} != division quotient "
                f"{format_polynomial(div.asymptote)}"
            )
        if res.remainder != div.remainder:
            fail.append(f"{res.method} remainder {format_polynomial(res.remainder)} != division remainder")
        if not res.remainder.degree < rf.denominator.degree:
            fail.append(f"{res.method} remainder degree {res.remainder.degree} not below denominator degree")
    if det.asymptote.leading != rf.numerator.leading / rf.denominator.leading:
        fail.append("leading coefficient of asymptote is not a_n / b_(n-k)")

    for phi in range(1, k + 1):
        rep = check_lemma21(rf, phi, det_primes)
        report.lemma21_checks += 1
        if not rep.passed:
            fail.append(
                f"phi={phi}: cancellation failed (nonzero degrees {list(rep.violations)}, "
                f"surviving {rep.surviving} vs theta'={rep.expected})"
            )
    return report


@dataclass(frozen=True)
class FuzzConfig:
    trials: int = 1000
    max_degree: int = 8
    coeff_bound: int = 99
    seed: int = 0
    allow_equal_degrees: bool = True

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.max_degree < 1:
            raise ValueError("max_degree must be at least 1")
        if self.coeff_bound < 1:
            raise ValueError("coeff_bound must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")


@dataclass
class CampaignReport:
    trials_run: int
    failures: list[tuple[str, str]]
    lemma21_checks: int
    determinant_checks: int = 0
    recurrence_checks: int = 0
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self, *, include_elapsed: bool = True) -> dict:
        out = {
            "trials": self.trials_run,
            "failures": [{"input": rf, "disagreement": msg} for rf, msg in self.failures],
            "lemma21_checks": self.lemma21_checks,
            "determinant_checks": self.determinant_checks,
            "recurrence_checks": self.recurrence_checks,
        }
        if include_elapsed:
            out["elapsed_seconds"] = round(self.elapsed, 6)
        return out

    def to_json(self, *, include_elapsed: bool = True) -> str:
        return json.dumps(self.to_dict(include_elapsed=include_elapsed))


def _nonzero(rng: np.random.Generator, bound: int) -> int:
    v = int(rng.integers(1, bound, endpoint=True))
    return -v if rng.integers(2) else v


def _poly(rng: np.random.Generator, degree: int, bound: int) -> Polynomial:
    body = [int(v) for v in rng.integers(-bound, bound, size=degree, endpoint=True)]
    return Polynomial(tuple(body) + (_nonzero(rng, bound),))


def random_rational_function(config: FuzzConfig, index: int) -> RationalFunction:
    """Trial ``index`` of the campaign described by ``config``."""
    rng = np.random.default_rng([config.seed, index])
    lo = 0 if config.allow_equal_degrees else 1
    n = int(rng.integers(lo, config.max_degree, endpoint=True))
    hi = n if config.allow_equal_degrees else n - 1
    m = int(rng.integers(0, hi, endpoint=True))
    return RationalFunction(_poly(rng, n, config.coeff_bound), _poly(rng, m, config.coeff_bound))


def run_campaign(config: FuzzConfig, indices: Optional[Sequence[int]] = None) -> CampaignReport:
    """Cross-validate ``config.trials`` seeded random rational functions."""
    start = time.perf_counter()
    report = CampaignReport(0, [], 0)
    for i in indices if indices is not None else range(config.trials):
        rf = random_rational_function(config, i)
        rep = cross_validate(rf)
        report.trials_run += 1
        report.lemma21_checks += rep.lemma21_checks
        report.determinant_checks += rep.determinant_checks
        report.recurrence_checks += rep.recurrence_checks
        report.failures.extend((rep.expression, msg) for msg in rep.failures)
    report.elapsed = time.perf_counter() - start
    return report
