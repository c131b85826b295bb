"""Timing the three asymptote routes as the degree grows.

Exact arithmetic cost is driven by coefficient growth as much as by operation
count, so each row also records the largest bit length seen in the outputs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .asymptote import AsymptoteResult, Method, asymptote_of
from .poly_core import Polynomial, RationalFunction


@dataclass(frozen=True)
class BenchRow:
    degree: int
    k: int
    method: Method
    seconds: float
    peak_bits: int


def _bits(values: Iterable[Fraction]) -> int:
    return max(
        (max(v.numerator.bit_length(), v.denominator.bit_length()) for v in values), default=0
    )


def peak_bits(result: AsymptoteResult) -> int:
    vals = list(result.asymptote.coeffs) + list(result.remainder.coeffs)
    for t in result.traces:
        vals += [t.det_value, t.theta_prime, t.theta]
    return _bits(vals)


def bench_function(degree: int, coeff_bound: int = 99, seed: int = 0) -> RationalFunction:
    """Dense numerator of ``degree`` over a denominator of ``degree // 2``."""
    rng = np.random.default_rng([seed, degree])

    def poly(d: int) -> Polynomial:
        c = [int(v) for v in rng.integers(-coeff_bound, coeff_bound, size=d + 1, endpoint=True)]
        if c[-1] == 0:
            c[-1] = coeff_bound
        return Polynomial(tuple(c))

    return RationalFunction(poly(degree), poly(degree // 2))


def run_bench(
    degrees: Sequence[int],
    coeff_bound: int = 99,
    seed: int = 0,
    repeats: int = 3,
    methods: Sequence[Method] = tuple(Method),
) -> list[BenchRow]:
    """Best-of-``repeats`` wall time per (degree, method)."""
    if repeats < 1:
        raise ValueError("repeats must be at least 1")
    rows = []
    for d in degrees:
        if d < 1:
            raise ValueError(f"bench degree must be positive, got {d}")
        rf = bench_function(d, coeff_bound, seed)
        for m in methods:
            best = float("inf")
            for _ in range(repeats):
                t0 = time.perf_counter()
                res = asymptote_of(rf, m)
                best = min(best, time.perf_counter() - t0)
            rows.append(BenchRow(d, rf.k, m, best, peak_bits(res)))
    return rows


def format_table(rows: Sequence[BenchRow]) -> str:
    lines = [f"{'degree':>6} {'k':>4} {'method':<12} {'time (ms)':>11} {'peak bits':>10}"]
    for r in rows:
        lines.append(
            f"{r.degree:>6} {r.k:>4} {r.method.value:<12} {r.seconds * 1e3:>11.3f} {r.peak_bits:>10}"
        )
    return "\n".join(lines)
