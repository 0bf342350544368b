"""Cycle generating polynomials and their evaluation.

``P_n(x) = sum_k count(n, k) x^k`` for the family with bound ``a``.  Exact
evaluation happens over :class:`fractions.Fraction`; evaluation on the unit
circle happens in double precision after normalizing the coefficients to
probabilities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from cyclecensus.census import DEFAULT_CAPS, Caps, census_row, small_cycle_table
from cyclecensus.errors import NormalizationError, OutOfRangeError, PropertyViolationError

__all__ = [
    "CyclePolynomial",
    "UnitPoint",
    "DifferenceReport",
    "build_polynomial",
    "eval_exact",
    "eval_unit_circle",
    "eval_negative_simplified",
    "finite_difference_profile",
    "UNNORMALIZED_MAX_N",
]

UNNORMALIZED_MAX_N = 300
UNIT_TOL = 1e-12


@dataclass(frozen=True)
class CyclePolynomial:
    a: int
    n: int
    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        for k in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[k]:
                return k
        return -1

    @property
    def lead(self) -> int:
        return self.coeffs[self.degree] if self.degree >= 0 else 0

    def __str__(self) -> str:
        terms = [f"{c}x^{k}" if k else str(c) for k, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) or "0"


@dataclass(frozen=True)
class UnitPoint:
    """A point on the unit circle."""

    re: float
    im: float

    def __post_init__(self) -> None:
        if abs(self.re * self.re + self.im * self.im - 1.0) > UNIT_TOL:
            raise ValueError(f"({self.re}, {self.im}) is not on the unit circle")

    @classmethod
    def root_of_unity(cls, t: int, q: int) -> UnitPoint:
        """exp(2*pi*i*t/q)."""
        theta = 2.0 * math.pi * (t % q) / q
        return cls(math.cos(theta), math.sin(theta))

    @classmethod
    def from_complex(cls, z: complex) -> UnitPoint:
        return cls(z.real, z.imag)

    def __complex__(self) -> complex:
        return complex(self.re, self.im)


def build_polynomial(a: int, n: int, caps: Caps = DEFAULT_CAPS) -> CyclePolynomial:
    """Generating polynomial of row n of the family-``a`` census table."""
    return CyclePolynomial(a=a, n=n, coeffs=census_row(a, n, caps))


def eval_exact(p: CyclePolynomial, x: Fraction | int) -> Fraction:
    """Horner evaluation over the rationals.

    >>> eval_exact(build_polynomial(1, 4), -1)
    Fraction(-3, 1)
    """
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def _eval_int(coeffs: tuple[int, ...], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def eval_unit_circle(p: CyclePolynomial, v: UnitPoint | complex, normalized: bool = True) -> complex:
    """Evaluate ``p`` at a point of modulus one in double precision.

    With ``normalized`` the result is ``p(v)/p(1)``; each coefficient is turned
    into a probability before conversion to float, so huge rows do not
    overflow.
    """
    z = complex(v)
    if normalized:
        total = sum(p.coeffs)
        if total == 0:
            raise NormalizationError(f"family a={p.a} is empty at n={p.n}")
        if z == 1:
            return complex(1.0)
        weights = [c / total for c in p.coeffs]
    else:
        if p.n > UNNORMALIZED_MAX_N:
            raise OutOfRangeError(
                f"unnormalized evaluation refused for n={p.n} > {UNNORMALIZED_MAX_N}"
            )
        weights = [float(c) for c in p.coeffs]
    acc = 0j
    for w in reversed(weights):
        acc = acc * z + w
    return acc


def eval_negative_simplified(
    n: int, t: int, a: int = 1, caps: Caps = DEFAULT_CAPS
) -> int:
    """P_n(-t) using only the sieve terms that survive at a negative integer.

    Sieving on a set of short cycles of total size b leaves an arbitrary
    permutation on n-b points, whose cycle polynomial ``x(x+1)...(x+n-b-1)``
    vanishes at -t once n-b > t.  Only ``b >= n-t`` is kept (every b when
    n <= t); for ``a=1`` this is the window ``i = n-t .. n`` over the number
    of removed fixed points.
    """
    if not 1 <= t <= 12:
        raise OutOfRangeError(f"t must be in 1..12, got {t}")
    if n < 0:
        raise OutOfRangeError(f"n must be nonnegative, got {n}")
    caps.check(a, n)

    def stirling_at(m: int) -> int:
        # sum_k c(m, k) (-t)^k, i.e. the product (-t)(-t+1)...(-t+m-1)
        return _eval_int(census_row(0, m, caps), -t)

    if a == 0:
        return stirling_at(n)
    m = small_cycle_table(a, n, n, caps) if a > 1 else None
    total = 0
    for b in range(max(0, n - t), n + 1):
        inner = stirling_at(n - b)
        if not inner:
            continue
        if a == 1:
            sieve = t**b
        else:
            # cycles of length <= a on b points, weighted by t^(number of cycles)
            sieve = sum(m[i, b] * t**i for i in range(-(-b // a), b + 1))
        total += comb(n, b) * sieve * inner
    return total


@dataclass(frozen=True)
class DifferenceReport:
    """Finite-difference profile of ``n -> P_n(-t) / t^n`` over a window."""

    t: int
    a: int
    n_lo: int
    n_hi: int
    values: tuple[Fraction, ...]
    vanishing_order: int
    newton: tuple[Fraction, ...]  # leading forward differences at n_lo
    coefficients: tuple[Fraction, ...]  # monomial basis in n, low degree first

    @property
    def degree(self) -> int:
        return self.vanishing_order - 1

    def evaluate(self, n: int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * n + c
        return acc


def _newton_to_monomial(newton: list[Fraction], n0: int) -> list[Fraction]:
    # sum_j newton[j] * C(n - n0, j), expanded in powers of n
    result = [Fraction(0)] * max(len(newton), 1)
    basis = [Fraction(1)]  # coefficients of (n-n0)(n-n0-1)...(n-n0-j+1)
    fact = 1
    for j, dj in enumerate(newton):
        if j:
            fact *= j
            root = n0 + j - 1
            nxt = [Fraction(0)] * (len(basis) + 1)
            for i, c in enumerate(basis):
                nxt[i + 1] += c
                nxt[i] -= root * c
            basis = nxt
        for i, c in enumerate(basis):
            result[i] += dj * c / fact
    while len(result) > 1 and result[-1] == 0:
        result.pop()
    return result


def finite_difference_profile(
    t: int,
    a: int,
    n_lo: int,
    n_hi: int,
    cap: int = 12,
    caps: Caps = DEFAULT_CAPS,
) -> DifferenceReport:
    """Find the least order at which forward differences of ``P_n(-t)/t^n``
    vanish on ``[n_lo, n_hi]`` and recover the interpolating polynomial.

    Raises :class:`PropertyViolationError` when no order ``<= cap`` works,
    meaning the sequence is not polynomial on this window.
    """
    if t < 1:
        raise OutOfRangeError(f"t must be positive, got {t}")
    if n_hi - n_lo < t + 3:
        raise OutOfRangeError(f"window [{n_lo}, {n_hi}] too short for t={t}")
    values = [
        eval_exact(build_polynomial(a, n, caps), -t) / t**n for n in range(n_lo, n_hi + 1)
    ]
    newton: list[Fraction] = []
    diff = list(values)
    order = None
    for d in range(0, cap + 1):
        # need at least two surviving entries for the zero row to mean anything
        if len(diff) < 2:
            break
        if all(x == 0 for x in diff):
            order = d
            break
        newton.append(diff[0])
        diff = [diff[i + 1] - diff[i] for i in range(len(diff) - 1)]
    if order is None:
        raise PropertyViolationError(
            f"forward differences of P_n(-{t})/{t}^n (a={a}) do not vanish up to "
            f"order {cap} on [{n_lo}, {n_hi}]"
        )
    coefficients = _newton_to_monomial(newton, n_lo) if newton else [Fraction(0)]
    report = DifferenceReport(
        t=t,
        a=a,
        n_lo=n_lo,
        n_hi=n_hi,
        values=tuple(values),
        vanishing_order=order,
        newton=tuple(newton),
        coefficients=tuple(coefficients),
    )
    for n, v in zip(range(n_lo, n_hi + 1), values):
        if report.evaluate(n) != v:
            raise PropertyViolationError(f"recovered polynomial misses the value at n={n}")
    return report


def unit_circle_points(q: int) -> list[UnitPoint]:
    """All q-th roots of unity, starting from 1."""
    return [UnitPoint.root_of_unity(t, q) for t in range(q)]

