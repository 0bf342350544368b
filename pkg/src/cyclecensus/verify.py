"""Invariant suites behind ``cyclecensus verify``.

Each check returns ``(ok, detail)``.  Sizes follow the stated invariants
except where noted; the pytest suite covers the same ground independently.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial
from typing import Callable

from cyclecensus.balance import (
    good_root_bound,
    magnitude_product,
    residue_sums,
    unity_filter_check,
)
from cyclecensus.census import (
    CycleType,
    census_row,
    census_table,
    cycle_type_count,
    derangement_count,
    derangement_count_alternating,
    inclusion_exclusion_count,
    leading_coefficient,
    small_cycle_table,
)
from cyclecensus.errors import CensusError, InsufficientNError
from cyclecensus.genfunc import (
    UnitPoint,
    build_polynomial,
    eval_exact,
    eval_negative_simplified,
    eval_unit_circle,
    finite_difference_profile,
)
from cyclecensus.oracle import brute_force_census, brute_force_small_cycle
from cyclecensus.rootloc import (
    count_roots_in,
    isolate_root_near,
    pigeonhole_bound,
    root_radius_bound,
    threshold_scan,
)

Check = Callable[[], "tuple[bool, str]"]
SUITES: dict[str, list[tuple[str, Check]]] = {
    "tables": [],
    "lemma": [],
    "roots": [],
    "balance": [],
}


def check(suite: str):
    def register(fn: Check) -> Check:
        SUITES[suite].append((fn.__name__, fn))
        return fn

    return register


def _first_failure(cases, predicate) -> tuple[bool, str]:
    count = 0
    for case in cases:
        count += 1
        if not predicate(*case):
            return False, f"fails at {case}"
    return True, f"{count} cases"


# --- tables -----------------------------------------------------------------


@check("tables")
def oracle_equivalence():
    def same(n, a):
        row = census_row(a, n)
        oracle = brute_force_census(n, a).counts
        return list(row) + [0] * (len(oracle) - len(row)) == list(oracle)

    return _first_failure(product(range(10), range(4)), same)


@check("tables")
def identity_chain():
    cases = ((n, k, a) for a in range(4) for n in range(25) for k in range(n // (a + 1) + 1))
    return _first_failure(
        cases, lambda n, k, a: census_row(a, n)[k] == inclusion_exclusion_count(n, k, a)
    )


@check("tables")
def recurrence_routes_agree():
    return _first_failure(
        ((a,) for a in range(5)),
        lambda a: census_table(a, 40).rows == census_table(a, 40, method="cycle_removal").rows,
    )


@check("tables")
def row_sum_factorial():
    return _first_failure(((n,) for n in range(301)), lambda n: sum(census_row(0, n)) == factorial(n))


@check("tables")
def stirling_recurrence():
    def ok(n):
        row, prev = census_row(0, n), census_row(0, n - 1)
        get = lambda r, k: r[k] if 0 <= k < len(r) else 0
        return all(row[k] == get(prev, k - 1) + (n - 1) * get(prev, k) for k in range(len(row)))

    return _first_failure(((n,) for n in range(1, 201)), ok)


@check("tables")
def small_cycle_consistency():
    def by_types(a, b):
        totals: dict[int, int] = {}
        for g in product(*(range(b // j + 1) for j in range(1, a + 1))):
            ct = CycleType(tuple(g))
            if ct.size == b:
                totals[ct.cycles] = totals.get(ct.cycles, 0) + cycle_type_count(ct)
        m = small_cycle_table(a, b, b)
        return all(m[i, b] == totals.get(i, 0) for i in range(b + 1))

    return _first_failure(((a, b) for a in range(1, 5) for b in range(13)), by_types)


@check("tables")
def small_cycle_oracle():
    return _first_failure(
        ((a, b) for a in range(1, 4) for b in range(9)),
        lambda a, b: tuple(small_cycle_table(a, b, b)[i, b] for i in range(b + 1))
        == brute_force_small_cycle(a, b),
    )


@check("tables")
def stirling_alternating_sum():
    return _first_failure(
        ((n,) for n in range(2, 301)),
        lambda n: sum(c * (-1) ** k for k, c in enumerate(census_row(0, n))) == 0,
    )


# 1/e to far better than 1/30! accuracy
INV_E = sum(Fraction((-1) ** i, factorial(i)) for i in range(80))


@check("tables")
def derangement_closed_forms():
    def ok(n):
        d = derangement_count(n, 1)
        nearest = n == 0 or abs(d - factorial(n) * INV_E) < Fraction(1, 2)
        return d == derangement_count_alternating(n) and (n > 30 or nearest)

    return _first_failure(((n,) for n in range(301)), ok)


@check("tables")
def leading_coefficient_closed_form():
    return _first_failure(
        ((n,) for n in range(2, 201)),
        lambda n: leading_coefficient(n) == census_row(1, n)[n // 2],
    )


# --- lemma (generating polynomials) ------------------------------------------


@check("lemma")
def minus_one_evaluation():
    return _first_failure(
        ((n,) for n in range(1, 301)), lambda n: eval_exact(build_polynomial(1, n), -1) == 1 - n
    )


@check("lemma")
def simplified_formula():
    cases = ((n, t, a) for a in (1, 2) for t in range(1, 6) for n in range(2, 121))
    return _first_failure(
        cases,
        lambda n, t, a: eval_negative_simplified(n, t, a) == eval_exact(build_polynomial(a, n), -t),
    )


@check("lemma")
def product_form_roots():
    def ok(n):
        p = build_polynomial(0, n)
        return all(eval_exact(p, -m) == 0 for m in range(1, n))

    return _first_failure(((n,) for n in range(1, 201)), ok)


@check("lemma")
def finite_difference_vanishing():
    def ok(t):
        rep = finite_difference_profile(t, 1, 1, 40)
        return rep.vanishing_order == t + 1

    return _first_failure(((t,) for t in range(1, 6)), ok)


@check("lemma")
def normalized_unit_circle():
    def ok(a, n):
        p = build_polynomial(a, n)
        if eval_unit_circle(p, UnitPoint(1.0, 0.0)) != 1:
            return False
        return all(
            abs(eval_unit_circle(p, UnitPoint.root_of_unity(t, 7))) <= 1 + 1e-9 for t in range(7)
        )

    return _first_failure(((a, n) for a in range(3) for n in range(a + 1, 121)), ok)


# --- roots ------------------------------------------------------------------


@check("roots")
def root_census():
    # roots run far below -n (D_6 has one near -7.6), so count inside the
    # Cauchy radius: floor(n/2) distinct roots there means real-rooted and simple
    def ok(n):
        p = build_polynomial(1, n)
        big = root_radius_bound(p.coeffs) + 1
        inside = count_roots_in(p, -big, 0)
        outside = count_roots_in(p, -2 * big, -big) + count_roots_in(p, 0, 2 * big)
        return inside == n // 2 and outside == 0

    return _first_failure(((n,) for n in range(2, 61)), ok)


@check("roots")
def no_positive_roots():
    return _first_failure(
        ((a, n) for a in range(3) for n in range(a + 1, 61)),
        lambda a, n: count_roots_in(build_polynomial(a, n), 0, 10**9) == 0,
    )


@check("roots")
def pigeonhole_dominance():
    def ok(n, t):
        bound = pigeonhole_bound(n, t)
        if bound == 0:
            return eval_exact(build_polynomial(1, n), -t) == 0
        r = Fraction(bound) * (1 + Fraction(1, 10**12))
        return count_roots_in(build_polynomial(1, n), -t - r - Fraction(1, 10**30), -t + r) >= 1

    return _first_failure(((n, t) for n in range(6, 101) for t in (1, 2, 3)), ok)


@check("roots")
def witness_refinement():
    def ok(n, t):
        w = isolate_root_near(build_polynomial(1, n), t, Fraction(1, 4))
        return w is None or (
            w.sturm_count >= 1 and w.hi - w.lo <= w.epsilon / 8 and w.achieved_radius <= w.epsilon
        )

    return _first_failure(((n, t) for n in range(2, 41) for t in (1, 2, 3)), ok)


@check("roots")
def threshold_t1():
    n = threshold_scan(1, Fraction(1, 10), 1, 60)
    return n is not None and n <= 6, f"N = {n}"


# --- balance ----------------------------------------------------------------


@check("balance")
def residue_exactness():
    return _first_failure(
        ((a, n, q) for a in range(3) for n in range(0, 61, 3) for q in range(1, 7)),
        lambda a, n, q: sum(residue_sums(a, n, q).counts) == derangement_count(n, a),
    )


@check("balance")
def filter_identity():
    def ok(a, n, q):
        try:
            for r in range(q):
                unity_filter_check(a, n, q, r)
        except CensusError:
            return False
        return True

    return _first_failure(
        ((a, n, q) for a in range(3) for n in range(a + 1, 61) for q in range(1, 7)), ok
    )


@check("balance")
def product_formula():
    points = [UnitPoint(0.0, 1.0)] + [
        UnitPoint.from_complex(cmath.exp(2j * math.pi / k)) for k in (3, 5)
    ]

    def ok(n, v):
        direct = abs(eval_unit_circle(build_polynomial(0, n), v)) ** 2
        prod_ = magnitude_product(v, n)
        return abs(prod_ - direct) <= 1e-10 * max(abs(direct), 1e-300)

    return _first_failure(((n, v) for n in range(1, 51) for v in points), ok)


@check("balance")
def parity_closed_forms():
    def ok(n):
        c0 = residue_sums(0, n, 2).counts
        d1 = residue_sums(1, n, 2).counts
        return c0 == (factorial(n) // 2,) * 2 and abs(d1[0] - d1[1]) == n - 1

    return _first_failure(((n,) for n in range(2, 201)), ok)


@check("balance")
def good_root_dominance():
    w = UnitPoint.root_of_unity(1, 3)
    certified = 0
    for n in range(20, 81, 5):
        for h in (1, 2, 3):
            try:
                g = good_root_bound(n, w, h)
            except InsufficientNError:
                continue
            certified += 1
            if not g.holds:
                return False, f"fails at n={n}, h={h}"
    return certified > 0, f"{certified} certified cases"


@check("balance")
def deviation_decay():
    # (a=0, q=2) sits at exactly zero deviation for n >= 2, so compare with <=
    def ok(a, q):
        d30 = residue_sums(a, 30, q).max_deviation
        d150 = residue_sums(a, 150, q).max_deviation
        return d150 < d30 or d150 == d30 == 0

    return _first_failure(((a, q) for a in (0, 1) for q in (2, 3, 4)), ok)


@dataclass
class Outcome:
    suite: str
    name: str
    ok: bool
    detail: str


def run_suite(name: str) -> list[Outcome]:
    names = list(SUITES) if name == "all" else [name]
    out = []
    for suite in names:
        for check_name, fn in SUITES[suite]:
            try:
                ok, detail = fn()
            except Exception as exc:  # a crash is a failed property, not a dead run
                ok, detail = False, f"{type(exc).__name__}: {exc}"
            out.append(Outcome(suite, check_name, ok, detail))
    return out
