"""Certified real-root localization with Sturm chains over the integers.

Polynomials are coefficient tuples, constant term first.  The zero root that
every nonempty cycle polynomial carries is factored out before the chain is
built and accounted for separately, so interval counts still include it.
Counts are of distinct roots on half-open intervals ``(lo, hi]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from cyclecensus.census import DEFAULT_CAPS, Caps
from cyclecensus.genfunc import CyclePolynomial, build_polynomial

__all__ = [
    "SturmChain",
    "RootWitness",
    "sturm_chain",
    "count_roots_in",
    "isolate_root_near",
    "refine_interval",
    "nearest_root_distance",
    "root_radius_bound",
    "pigeonhole_bound",
    "threshold_scan",
]

Rational = Union[Fraction, int, str]
Poly = tuple[int, ...]


def _as_fraction(x: Rational | float) -> Fraction:
    if isinstance(x, float):
        # 0.1 should mean 1/10, not the nearest binary double
        return Fraction(repr(x))
    return Fraction(x)


def _trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _primitive(p: list[int]) -> list[int]:
    g = math.gcd(*p) if p else 0
    if g > 1:
        p = [c // g for c in p]
    return p


def _derivative(p: Sequence[int]) -> list[int]:
    return [k * p[k] for k in range(1, len(p))]


def _neg_prem(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Negated pseudo-remainder of a by b, scaled by a positive factor and
    reduced to its primitive part."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    scale = abs(lb)
    sign = 1 if lb > 0 else -1
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [scale * c for c in r]
        for i, c in enumerate(b):
            r[shift + i] -= sign * lr * c
        _trim(r)
    return _primitive([-c for c in r])


def _exact_quotient(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """a / b for b dividing a over the rationals, as a primitive integer poly
    with positive leading coefficient."""
    r = [Fraction(c) for c in a]
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    for s in range(len(q) - 1, -1, -1):
        coef = r[s + len(b) - 1] / b[-1]
        q[s] = coef
        for i, c in enumerate(b):
            r[s + i] -= coef * c
    if any(r):
        raise ArithmeticError("divisor does not divide polynomial")
    den = math.lcm(*(c.denominator for c in q))
    out = _primitive([int(c * den) for c in q])
    return out if out[-1] > 0 else [-c for c in out]


@dataclass(frozen=True)
class SturmChain:
    """Sturm sequence of the square-free part of ``p / x^zero_order``."""

    zero_order: int
    square_free: Poly
    members: tuple[Poly, ...]

    def variations(self, x: Fraction) -> int:
        num, den = x.numerator, x.denominator
        count, last = 0, 0
        for p in self.members:
            s = _sign_at(p, num, den)
            if s:
                if last and s != last:
                    count += 1
                last = s
        return count

    def count(self, lo: Fraction, hi: Fraction) -> int:
        """Distinct nonzero roots in (lo, hi]."""
        return self.variations(lo) - self.variations(hi)


def _sign_at(p: Poly, num: int, den: int) -> int:
    # sign of den^deg * p(num/den); den > 0
    dpow = 1
    d = len(p) - 1
    acc = p[d]
    for k in range(d - 1, -1, -1):
        dpow *= den
        acc = acc * num + p[k] * dpow
    return (acc > 0) - (acc < 0)


@lru_cache(maxsize=4096)
def _chain_for(coeffs: Poly) -> SturmChain:
    p = list(coeffs)
    _trim(p)
    if not p:
        raise ValueError("zero polynomial has no Sturm chain")
    order = 0
    while p[order] == 0:
        order += 1
    p0 = _primitive(p[order:])
    if p0[-1] < 0:
        p0 = [-c for c in p0]

    def build(base: list[int]) -> list[list[int]]:
        chain = [base]
        if len(base) > 1:
            chain.append(_primitive(_derivative(base)))
            while len(chain[-1]) > 1:
                nxt = _neg_prem(chain[-2], chain[-1])
                if not nxt:
                    break
                chain.append(nxt)
        return chain

    chain = build(p0)
    if len(chain[-1]) > 1:
        # repeated roots: the last member is gcd(p0, p0'), divide it out
        p0 = _exact_quotient(p0, chain[-1])
        chain = build(p0)
    return SturmChain(
        zero_order=order,
        square_free=tuple(p0),
        members=tuple(tuple(m) for m in chain),
    )


def _coeffs(p: CyclePolynomial | Sequence[int]) -> Poly:
    return tuple(p.coeffs) if isinstance(p, CyclePolynomial) else tuple(p)


def sturm_chain(p: CyclePolynomial | Sequence[int]) -> SturmChain:
    return _chain_for(_coeffs(p))


def count_roots_in(p: CyclePolynomial | Sequence[int], lo: Rational, hi: Rational) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``.

    >>> count_roots_in((0, 6, 3), Fraction(-21, 10), Fraction(-19, 10))
    1
    """
    lo, hi = _as_fraction(lo), _as_fraction(hi)
    if not lo < hi:
        raise ValueError(f"need lo < hi, got ({lo}, {hi}]")
    chain = sturm_chain(p)
    n = chain.count(lo, hi)
    if chain.zero_order and lo < 0 <= hi:
        n += 1
    return n


@dataclass(frozen=True)
class RootWitness:
    target: int  # the negative integer -t
    epsilon: Fraction
    a: int
    n: int
    lo: Fraction
    hi: Fraction
    sturm_count: int

    @property
    def achieved_radius(self) -> Fraction:
        return max(abs(self.lo - self.target), abs(self.hi - self.target))

    def as_dict(self) -> dict:
        return {
            "found": True,
            "a": self.a,
            "n": self.n,
            "target": self.target,
            "epsilon": str(self.epsilon),
            "lo": str(self.lo),
            "hi": str(self.hi),
            "sturm_count": self.sturm_count,
            "achieved_radius": str(self.achieved_radius),
        }


def refine_interval(
    p: CyclePolynomial | Sequence[int],
    lo: Fraction,
    hi: Fraction,
    width: Fraction,
    toward: Fraction | None = None,
) -> tuple[Fraction, Fraction, int]:
    """Bisect ``(lo, hi]`` (which must hold a root) down to ``width``.

    When both halves hold roots the half containing ``toward`` wins, else the
    left one.  Returns the final interval and its root count.
    """
    count = count_roots_in(p, lo, hi)
    if count < 1:
        raise ValueError(f"no root in ({lo}, {hi}]")
    while hi - lo > width:
        mid = (lo + hi) / 2
        left = count_roots_in(p, lo, mid)
        right = count - left
        if left and right:
            go_left = toward is None or toward <= mid
        else:
            go_left = left > 0
        if go_left:
            hi, count = mid, left
        else:
            lo, count = mid, right
    return lo, hi, count


def isolate_root_near(
    p: CyclePolynomial, t: int, epsilon: Rational | float
) -> RootWitness | None:
    """Certify a root of ``p`` within ``epsilon`` of ``-t``.

    Returns ``None`` when a Sturm count shows no root in the window; otherwise
    a witness interval of width at most ``epsilon/8``.
    """
    eps = _as_fraction(epsilon)
    if eps <= 0:
        raise ValueError(f"epsilon must be positive, got {eps}")
    target = Fraction(-t)
    lo, hi = target - eps, min(target + eps, Fraction(0))
    if count_roots_in(p, lo, hi) == 0:
        return None
    lo, hi, count = refine_interval(p, lo, hi, eps / 8, toward=target)
    return RootWitness(
        target=-t, epsilon=eps, a=p.a, n=p.n, lo=lo, hi=hi, sturm_count=count
    )


def root_radius_bound(coeffs: Poly) -> Fraction:
    # Cauchy bound: every root has modulus <= 1 + max |c_k / lead|
    lead = abs(coeffs[-1])
    return 1 + Fraction(max(abs(c) for c in coeffs[:-1]), lead) if len(coeffs) > 1 else Fraction(0)


def nearest_root_distance(
    p: CyclePolynomial | Sequence[int], x0: Rational, rel_tol: float = 1e-6
) -> tuple[Fraction, Fraction]:
    """Bracket ``(r_lo, r_hi]`` for the distance from ``x0`` to the nearest real
    root of ``p``, by bisection on the radius of a Sturm-counted window."""
    coeffs = _coeffs(p)
    x0 = _as_fraction(x0)

    def hits(r: Fraction) -> bool:
        # closed window [x0 - r, x0 + r]
        lo = x0 - r
        if _sign_at(coeffs, lo.numerator, lo.denominator) == 0:
            return True
        return count_roots_in(coeffs, lo, x0 + r) > 0

    if _sign_at(coeffs, x0.numerator, x0.denominator) == 0:
        return Fraction(0), Fraction(0)
    r_lo, r_hi = Fraction(0), root_radius_bound(coeffs) + abs(x0)
    if not hits(r_hi):
        raise ValueError("polynomial has no real roots")
    while r_hi - r_lo > Fraction(rel_tol) * r_hi:
        mid = (r_lo + r_hi) / 2
        # keep the bracket short in bits
        mid = Fraction(round(mid * 2**64), 2**64) if mid.denominator > 2**64 else mid
        if hits(mid):
            r_hi = mid
        else:
            r_lo = mid
    return r_lo, r_hi


def pigeonhole_bound(n: int, t: int, a: int = 1, caps: Caps = DEFAULT_CAPS) -> float:
    """``(|P_n(-t)| / lead)^(1/d)`` with ``d = n // (a+1)`` the degree.

    Since ``|P(x)| / lead`` is the product of the d distances from x to the
    roots, the smallest distance cannot exceed this value.
    """
    if n < a + 1:
        raise ValueError(f"family a={a} is empty at n={n}")
    p = build_polynomial(a, n, caps)
    d = n // (a + 1)
    value = 0
    for c in reversed(p.coeffs):
        value = value * -t + c
    if value == 0:
        return 0.0
    return math.exp((math.log(abs(value)) - math.log(p.coeffs[d])) / d)


def threshold_scan(
    t: int,
    epsilon: Rational | float,
    a: int = 1,
    n_max: int = 100,
    caps: Caps = DEFAULT_CAPS,
) -> int | None:
    """Least N such that a root within ``epsilon`` of ``-t`` is certified for
    every length N..n_max, or ``None`` if it fails at ``n_max`` itself.

    Lengths start at ``max(t, a) + 1``: below that the target is not inside
    the range where the product form forces roots.
    """
    caps.check(a, n_max)
    start = max(t, a) + 1
    n_ok = None
    for n in range(n_max, start - 1, -1):
        if isolate_root_near(build_polynomial(a, n, caps), t, epsilon) is None:
            break
        n_ok = n
    return n_ok
