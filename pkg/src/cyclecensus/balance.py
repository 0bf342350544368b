"""How evenly the number of cycles spreads over residue classes mod q.

Exact residue sums come straight from the census rows.  The roots-of-unity
filter and the decay of ``P_n(v)/P_n(1)`` on the unit circle are checked in
double precision against those exact sums.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from cyclecensus.census import DEFAULT_CAPS, Caps, census_row
from cyclecensus.errors import IdentityViolationError, InsufficientNError, NormalizationError
from cyclecensus.genfunc import UnitPoint, build_polynomial, eval_unit_circle
from cyclecensus.rootloc import isolate_root_near, refine_interval

__all__ = [
    "ResidueReport",
    "FilterCheck",
    "DecaySeries",
    "GoodRootBound",
    "residue_sums",
    "unity_filter_check",
    "magnitude_product",
    "decay_series",
    "good_root_bound",
]


@dataclass(frozen=True)
class ResidueReport:
    a: int
    n: int
    q: int
    counts: tuple[int, ...]
    total: int

    @property
    def ratios(self) -> tuple[Fraction, ...]:
        if not self.total:
            raise NormalizationError(f"family a={self.a} is empty at n={self.n}")
        return tuple(Fraction(c, self.total) for c in self.counts)

    @property
    def max_deviation(self) -> Fraction:
        share = Fraction(1, self.q)
        return max(abs(r - share) for r in self.ratios)


def residue_sums(a: int, n: int, q: int, caps: Caps = DEFAULT_CAPS) -> ResidueReport:
    """Split row n of the family-``a`` table by number of cycles mod q.

    >>> residue_sums(0, 4, 3).counts
    (6, 7, 11)
    """
    if q < 1:
        raise ValueError(f"q must be positive, got {q}")
    row = census_row(a, n, caps)
    counts = [0] * q
    for k, c in enumerate(row):
        counts[k % q] += c
    return ResidueReport(a=a, n=n, q=q, counts=tuple(counts), total=sum(row))


@dataclass(frozen=True)
class FilterCheck:
    a: int
    n: int
    q: int
    r: int
    lhs: float  # q * counts[r] / total, from exact integers
    rhs: complex  # sum_t w^(-rt) P(w^t) / P(1)
    residual: float


def unity_filter_check(
    a: int, n: int, q: int, r: int, tol: float = 1e-9, caps: Caps = DEFAULT_CAPS
) -> FilterCheck:
    """Compare ``q * share of class r`` with the averaged root-of-unity values.

    Raises :class:`IdentityViolationError` if they differ by ``tol`` or more.
    """
    if not 0 <= r < q:
        raise ValueError(f"need 0 <= r < q, got r={r}, q={q}")
    report = residue_sums(a, n, q, caps)
    lhs = float(q * report.ratios[r])
    p = build_polynomial(a, n, caps)
    rhs = 0j
    for t in range(q):
        w = UnitPoint.root_of_unity(t, q)
        phase = cmath.exp(-2j * math.pi * ((r * t) % q) / q)
        rhs += phase * eval_unit_circle(p, w, normalized=True)
    residual = abs(lhs - rhs)
    check = FilterCheck(a=a, n=n, q=q, r=r, lhs=lhs, rhs=rhs, residual=residual)
    if not residual < tol:
        raise IdentityViolationError(f"filter residual {residual:.3e} >= {tol} for {check}")
    return check


def magnitude_product(v: UnitPoint, n: int) -> float:
    """``|C_n(v)/n!|^2`` through the product of ``|v+j|^2 / (j+1)^2``.

    Only the real part of v enters, because ``|v+j|^2 = 1 + 2 Re(v) j + j^2``
    on the unit circle.
    """
    x = v.re
    out = 1.0
    for j in range(1, n):
        out *= (1.0 + 2.0 * x * j + j * j) / ((j + 1) * (j + 1))
    return out


@dataclass(frozen=True)
class DecaySeries:
    a: int
    q: int
    ns: tuple[int, ...]
    deviations: tuple[Fraction, ...]
    filter_magnitudes: tuple[float, ...]  # max over t != 0 of |P(w^t)/P(1)|

    @property
    def max_deviations(self) -> tuple[float, ...]:
        return tuple(float(d) for d in self.deviations)

    def rows(self):
        for n, d, m in zip(self.ns, self.deviations, self.filter_magnitudes):
            yield n, d, m


def decay_series(
    a: int, q: int, n_grid: Iterable[int], caps: Caps = DEFAULT_CAPS
) -> DecaySeries:
    ns = sorted(set(n_grid))
    deviations, mags = [], []
    for n in ns:
        deviations.append(residue_sums(a, n, q, caps).max_deviation)
        p = build_polynomial(a, n, caps)
        mags.append(
            max(
                (abs(eval_unit_circle(p, UnitPoint.root_of_unity(t, q))) for t in range(1, q)),
                default=0.0,
            )
        )
    return DecaySeries(
        a=a, q=q, ns=tuple(ns), deviations=tuple(deviations), filter_magnitudes=tuple(mags)
    )


@dataclass(frozen=True)
class GoodRootBound:
    n: int
    h: int
    intervals: tuple[tuple[Fraction, Fraction], ...]
    H: float  # from interval midpoints
    H_upper: float  # worst case over the certified intervals
    actual: float

    @property
    def slack(self) -> float:
        return self.H_upper / self.H - 1.0 if self.H else 0.0

    @property
    def holds(self) -> bool:
        return self.actual <= self.H * (1.0 + self.slack)


def good_root_bound(
    n: int,
    v: UnitPoint,
    h: int,
    a: int = 1,
    epsilon: Fraction = Fraction(1, 4),
    width: Fraction = Fraction(1, 2**40),
    caps: Caps = DEFAULT_CAPS,
) -> GoodRootBound:
    """Bound ``|P_n(v)/P_n(1)|`` by the factors of the roots nearest -1..-h.

    Every root x is real and nonpositive, so ``|v - x| <= |1 - x|`` for v on
    the unit circle and dropping factors only makes the ratio larger.  Each
    good root is certified within ``epsilon`` of its target and then narrowed
    to ``width``; ``H_upper`` takes the worst point of every interval.
    """
    p = build_polynomial(a, n, caps)
    z = complex(v)
    intervals = []
    for t in range(1, h + 1):
        w = isolate_root_near(p, t, epsilon)
        if w is None:
            raise InsufficientNError(f"no root within {epsilon} of -{t} at n={n}")
        lo, hi, _ = refine_interval(p, w.lo, w.hi, width, toward=Fraction(-t))
        intervals.append((lo, hi))
    H, H_upper = 1.0, 1.0
    for lo, hi in intervals:
        mid = float((lo + hi) / 2)
        H *= abs(z - mid) / abs(1 - mid)
        H_upper *= max(abs(z - float(lo)), abs(z - float(hi))) / (1 - float(hi))
    # float rounding of the bound itself
    H_upper *= 1 + 1e-12
    actual = abs(eval_unit_circle(p, v, normalized=True))
    return GoodRootBound(
        n=n, h=h, intervals=tuple(intervals), H=H, H_upper=H_upper, actual=actual
    )
