"""Asymptotic polynomial of a rational function, three ways.

For ``f = a/b`` with ``n = deg a`` and ``k = n - deg b >= 0`` the asymptote is

    g(x) = sum_{alpha=0}^{k} theta_alpha x^(k - alpha)

where ``theta_alpha = (-1)^alpha det(M_alpha) / b_{n-k}^(alpha+1)`` and
``M_alpha`` is the ``(alpha+1) x (alpha+1)`` upper-Hessenberg matrix whose top
row is ``a_n .. a_{n-alpha}`` and whose lower rows are shifted copies of the
denominator coefficients ``b_{n-k}, b_{n-k-1}, ...`` (``b_i = 0`` for
``i < 0``).

The scaled numerators ``theta'_alpha = (-1)^alpha det(M_alpha)`` also satisfy a
linear recurrence, which gives all coefficients in O(k^2) without touching a
determinant. Euclidean division is the third, independent route.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Callable, Optional, Sequence

from .poly_core import Polynomial, RationalFunction, poly_mul, poly_sub, poly_divmod

__all__ = [
    "AsymptoteResult",
    "CoefficientMatrix",
    "Lemma21Report",
    "Method",
    "ThetaTrace",
    "asymptote_of",
    "build_matrix",
    "check_lemma21",
    "det_fraction_free",
    "det_hessenberg",
    "hessenberg_minors",
    "lemma21_expression",
    "theta_det",
    "theta_recurrence_all",
]


class Method(str, Enum):
    DETERMINANT = "determinant"
    RECURRENCE = "recurrence"
    DIVISION = "division"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class CoefficientMatrix:
    """Square matrix ``M_alpha`` stored as a tuple of row tuples."""

    alpha: int
    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def rows(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]

    def is_upper_hessenberg(self) -> bool:
        return all(
            not self.entries[i][j] for i in range(self.size) for j in range(i - 1)
        )

    def leading(self, alpha: int) -> CoefficientMatrix:
        """Leading principal ``(alpha+1)``-block, which is ``M_alpha`` itself."""
        if not 0 <= alpha <= self.alpha:
            raise ValueError(f"alpha={alpha} outside 0..{self.alpha}")
        return CoefficientMatrix(
            alpha, tuple(row[: alpha + 1] for row in self.entries[: alpha + 1])
        )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int | Fraction]]) -> CoefficientMatrix:
        size = len(rows)
        if size == 0 or any(len(r) != size for r in rows):
            raise ValueError("matrix must be square and non-empty")
        return cls(size - 1, tuple(tuple(Fraction(v) for v in r) for r in rows))


@dataclass(frozen=True)
class ThetaTrace:
    alpha: int
    theta: Fraction
    theta_prime: Fraction
    det_value: Fraction
    matrix: Optional[CoefficientMatrix] = None


@dataclass(frozen=True)
class AsymptoteResult:
    """Asymptote ``g`` with ``numerator == g*denominator + remainder``.

    ``proper_fraction`` is set when ``deg a < deg b``; then ``g`` is zero and the
    asymptote is the horizontal line ``y = 0``.
    """

    asymptote: Polynomial
    remainder: Polynomial
    method: Method
    traces: tuple[ThetaTrace, ...] = ()
    proper_fraction: bool = False
    k: int | float = 0


@dataclass(frozen=True)
class Lemma21Report:
    phi: int
    passed: bool
    violations: tuple[int, ...]
    surviving: Fraction
    expected: Fraction
    expression: Polynomial = field(repr=False, default_factory=Polynomial.zero)


def _gap(rf: RationalFunction) -> tuple[int, int]:
    n, k = rf.n, rf.k
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"degree gap k={k} is negative; no polynomial asymptote")
    return n, k


def build_matrix(rf: RationalFunction, alpha: int) -> CoefficientMatrix:
    """Coefficient matrix ``M_alpha`` for ``0 <= alpha <= k``."""
    n, k = _gap(rf)
    if alpha < 0:
        raise ValueError("alpha must be non-negative")
    if alpha > k:
        raise ValueError(f"alpha exceeds degree gap (alpha={alpha}, k={k})")
    lead = n - k
    zero = Fraction(0)
    top = tuple(rf.a(n - j) for j in range(alpha + 1))
    rows = [top]
    for i in range(1, alpha + 1):
        rows.append(
            tuple(rf.b(lead - (j - i + 1)) if j >= i - 1 else zero for j in range(alpha + 1))
        )
    return CoefficientMatrix(alpha, tuple(rows))


def det_fraction_free(m: CoefficientMatrix | Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant by Bareiss elimination.

    Rows are first scaled to integers so every elimination step is an exact
    integer division; the scaling is divided back out at the end.
    """
    rows = m.rows() if isinstance(m, CoefficientMatrix) else [list(r) for r in m]
    size = len(rows)
    if any(len(r) != size for r in rows):
        raise ValueError("matrix is not square")
    if size == 0:
        return Fraction(1)
    scale = 1
    a: list[list[int]] = []
    for r in rows:
        r = [Fraction(v) for v in r]
        d = 1
        for v in r:
            d = d * v.denominator // gcd(d, v.denominator)
        scale *= d
        a.append([v.numerator * (d // v.denominator) for v in r])

    sign = 1
    prev = 1
    for c in range(size - 1):
        if a[c][c] == 0:
            for p in range(c + 1, size):
                if a[p][c]:
                    a[c], a[p] = a[p], a[c]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        piv = a[c][c]
        rc = a[c]
        for i in range(c + 1, size):
            ri = a[i]
            f = ri[c]
            for j in range(c + 1, size):
                ri[j] = (piv * ri[j] - f * rc[j]) // prev
            ri[c] = 0
        prev = piv
    return Fraction(sign * a[-1][-1], scale)


def hessenberg_minors(m: CoefficientMatrix) -> list[Fraction]:
    """Leading principal minors ``D_0 = 1, D_1, ..., D_size`` of a Hessenberg matrix.

    Expanding ``D_s`` along its last column, every cofactor collapses to a
    product of subdiagonal entries times an earlier minor:

        D_s = sum_i (-1)^(s-1-i) h[i][s-1] * prod_{j=i+1}^{s-1} h[j][j-1] * D_i
    """
    if not m.is_upper_hessenberg():
        raise ValueError("not upper-Hessenberg")
    h = m.entries
    minors = [Fraction(1)]
    for s in range(1, m.size + 1):
        col = s - 1
        total = h[col][col] * minors[col]
        sub = Fraction(1)
        for i in range(col - 1, -1, -1):
            sub *= h[i + 1][i]
            if not sub:
                break
            if h[i][col]:
                term = h[i][col] * sub * minors[i]
                total += -term if (col - i) % 2 else term
        minors.append(total)
    return minors


def det_hessenberg(m: CoefficientMatrix) -> Fraction:
    """Determinant of an upper-Hessenberg matrix in O(size^2)."""
    return hessenberg_minors(m)[-1]


def _trace(alpha: int, det_value: Fraction, lead: Fraction, matrix=None) -> ThetaTrace:
    tp = -det_value if alpha % 2 else det_value
    return ThetaTrace(alpha, tp / lead ** (alpha + 1), tp, det_value, matrix)


def theta_det(
    rf: RationalFunction,
    alpha: int,
    *,
    det: Callable[[CoefficientMatrix], Fraction] = det_hessenberg,
    keep_matrix: bool = False,
) -> ThetaTrace:
    """``theta_alpha`` from the determinant of ``M_alpha``."""
    m = build_matrix(rf, alpha)
    lead = rf.denominator.leading
    return _trace(alpha, det(m), lead, m if keep_matrix else None)


def theta_recurrence_all(rf: RationalFunction) -> list[ThetaTrace]:
    """All ``theta_j``, ``0 <= j <= k``, from the linear recurrence

        theta'_j = a_{n-j} b^j - sum_{m<j} b_{n-k-(j-m)} b^(j-1-m) theta'_m

    with ``b = b_{n-k}``. No determinant is formed; ``det_value`` in the
    returned traces is recovered as ``(-1)^j theta'_j``.
    """
    n, k = _gap(rf)
    lead_deg = n - k
    b = rf.denominator.leading
    bpow = [Fraction(1)]
    for _ in range(k + 1):
        bpow.append(bpow[-1] * b)
    tp: list[Fraction] = []
    for j in range(k + 1):
        acc = rf.a(n - j) * bpow[j]
        for m in range(max(0, j - lead_deg), j):
            acc -= rf.b(lead_deg - (j - m)) * bpow[j - 1 - m] * tp[m]
        tp.append(acc)
    return [
        ThetaTrace(j, t / bpow[j + 1], t, -t if j % 2 else t) for j, t in enumerate(tp)
    ]


def asymptote_of(
    rf: RationalFunction,
    method: Method | str = Method.DETERMINANT,
    *,
    keep_matrices: bool = False,
    det: Callable[[CoefficientMatrix], Fraction] = det_hessenberg,
) -> AsymptoteResult:
    """Asymptotic polynomial of ``rf`` and the matching division remainder."""
    method = Method(method)
    k = rf.k
    if k < 0:
        return AsymptoteResult(
            Polynomial.zero(), rf.numerator, method, (), proper_fraction=True, k=k
        )
    if method is Method.DIVISION:
        q, r = poly_divmod(rf.numerator, rf.denominator)
        return AsymptoteResult(q, r, method, (), k=k)
    if method is Method.RECURRENCE:
        traces = theta_recurrence_all(rf)
    else:
        traces = [theta_det(rf, a, det=det, keep_matrix=keep_matrices) for a in range(k + 1)]
    g = Polynomial(tuple(reversed([t.theta for t in traces])))
    rem = poly_sub(rf.numerator, poly_mul(g, rf.denominator))
    return AsymptoteResult(g, rem, method, tuple(traces), k=k)


def lemma21_expression(
    rf: RationalFunction, phi: int, theta_primes: Optional[Sequence[Fraction]] = None
) -> Polynomial:
    """Cancellation polynomial

        E(x) = b^phi a(x) - b(x) * sum_{alpha<phi} b^(phi-1-alpha) theta'_alpha x^(k-alpha)

    with ``b = b_{n-k}``. Every coefficient above degree ``n - phi`` vanishes and
    the coefficient at ``n - phi`` is ``theta'_phi``. ``theta_primes`` defaults to
    the recurrence values; pass determinant values for an independent check.
    """
    n, k = _gap(rf)
    if not 1 <= phi <= k:
        raise ValueError(f"phi={phi} outside 1..{k}")
    if theta_primes is None:
        theta_primes = [t.theta_prime for t in theta_recurrence_all(rf)]
    b = rf.denominator.leading
    second = [Fraction(0)] * (k + 1)
    for alpha in range(phi):
        second[k - alpha] = b ** (phi - 1 - alpha) * theta_primes[alpha]
    return poly_sub(rf.numerator.scale(b**phi), poly_mul(rf.denominator, Polynomial(tuple(second))))


def check_lemma21(
    rf: RationalFunction, phi: int, theta_primes: Optional[Sequence[Fraction]] = None
) -> Lemma21Report:
    if theta_primes is None:
        theta_primes = [t.theta_prime for t in theta_recurrence_all(rf)]
    e = lemma21_expression(rf, phi, theta_primes)
    n = rf.n
    violations = tuple(d for d in range(n - phi + 1, len(e.coeffs)) if e.coeffs[d])
    surviving = e.coeff(n - phi)
    expected = theta_primes[phi]
    return Lemma21Report(
        phi, not violations and surviving == expected, violations, surviving, expected, e
    )
