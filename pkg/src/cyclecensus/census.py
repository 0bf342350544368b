"""Exact count tables for permutations classified by their cycles.

``a`` is the family bound throughout: a permutation belongs to family ``a``
when every one of its cycles is longer than ``a``.  So ``a=0`` is all
permutations (signless Stirling numbers of the first kind), ``a=1`` the
derangements, and so on.

Rows are cached per family and extended on demand; cached rows are tuples
and never mutated after they are published.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from math import comb, factorial, prod

from cyclecensus.errors import ResourceCapError, UnsupportedParameterError

__all__ = [
    "Caps",
    "DEFAULT_CAPS",
    "CensusTable",
    "SmallCycleTable",
    "CycleType",
    "census_row",
    "census_table",
    "small_cycle_table",
    "cycle_type_count",
    "inclusion_exclusion_count",
    "derangement_count",
    "derangement_count_alternating",
    "leading_coefficient",
]


@dataclass(frozen=True)
class Caps:
    """Resource guards. Override by passing a custom instance."""

    max_a: int = 8
    max_n: int = 2000

    def check(self, a: int, n: int) -> None:
        if a < 0 or n < 0:
            raise ValueError(f"a and n must be nonnegative, got a={a}, n={n}")
        if a > self.max_a:
            raise ResourceCapError(f"a={a} exceeds cap {self.max_a}")
        if n > self.max_n:
            raise ResourceCapError(f"n={n} exceeds cap {self.max_n}")


DEFAULT_CAPS = Caps()


@dataclass(frozen=True)
class CensusTable:
    """Triangle ``rows[n][k]`` = number of length-n permutations with k cycles,
    all longer than ``a``.  Row n has ``n // (a+1) + 1`` entries; index 0 is
    kept explicitly so that entries line up with powers of x."""

    a: int
    n_max: int
    rows: tuple[tuple[int, ...], ...] = field(repr=False)

    def __getitem__(self, nk: tuple[int, int]) -> int:
        n, k = nk
        row = self.rows[n]
        return row[k] if 0 <= k < len(row) else 0

    def row(self, n: int) -> tuple[int, ...]:
        return self.rows[n]

    def total(self, n: int) -> int:
        return sum(self.rows[n])


@dataclass(frozen=True)
class SmallCycleTable:
    """``m[i][b]``: permutations of length b with i cycles, none longer than ``cap``."""

    cap: int
    m: tuple[tuple[int, ...], ...] = field(repr=False)

    def __getitem__(self, ib: tuple[int, int]) -> int:
        i, b = ib
        if 0 <= i < len(self.m) and 0 <= b < len(self.m[i]):
            return self.m[i][b]
        return 0


@dataclass(frozen=True)
class CycleType:
    """Cycle multiplicities ``g[j-1]`` = number of cycles of length j."""

    g: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(x < 0 for x in self.g):
            raise ValueError(f"negative multiplicity in {self.g}")

    @property
    def size(self) -> int:
        return sum(j * gj for j, gj in enumerate(self.g, start=1))

    @property
    def cycles(self) -> int:
        return sum(self.g)

    @property
    def longest(self) -> int:
        return max((j for j, gj in enumerate(self.g, start=1) if gj), default=0)


# ---------------------------------------------------------------------------
# cached rows

_lock = threading.Lock()
_rows: dict[int, list[tuple[int, ...]]] = {}


def _extend(a: int, n_max: int) -> list[tuple[int, ...]]:
    # Element n either sits in a cycle of length exactly a+1 (pick and order the
    # other a elements) or was inserted after one of the n-1 others in a cycle
    # that is still long enough without it.
    with _lock:
        rows = _rows.setdefault(a, [(1,)])
        arrange = factorial(a)
        for n in range(len(rows), n_max + 1):
            prev = rows[n - 1]
            shorter = rows[n - 1 - a] if n - 1 - a >= 0 else ()
            new_cycle = comb(n - 1, a) * arrange
            width = n // (a + 1) + 1
            row = [0] * width
            for k in range(1, width):
                v = (n - 1) * prev[k] if k < len(prev) else 0
                if 0 <= k - 1 < len(shorter):
                    v += new_cycle * shorter[k - 1]
                row[k] = v
            rows.append(tuple(row))
        return rows


def census_row(a: int, n: int, caps: Caps = DEFAULT_CAPS) -> tuple[int, ...]:
    caps.check(a, n)
    rows = _rows.get(a)
    if rows is None or len(rows) <= n:
        rows = _extend(a, n)
    return rows[n]


def _cycle_removal_rows(a: int, n_max: int) -> list[tuple[int, ...]]:
    # Remove the cycle through the largest element: j-1 companions chosen from
    # n-1 and arranged in (j-1)! cyclic orders.
    rows: list[tuple[int, ...]] = [(1,)]
    for n in range(1, n_max + 1):
        width = n // (a + 1) + 1
        row = [0] * width
        for j in range(a + 1, n + 1):
            ways = comb(n - 1, j - 1) * factorial(j - 1)
            rest = rows[n - j]
            for k in range(1, width):
                if k - 1 < len(rest):
                    row[k] += ways * rest[k - 1]
        rows.append(tuple(row))
    return rows


def census_table(
    a: int,
    n_max: int,
    caps: Caps = DEFAULT_CAPS,
    method: str = "insertion",
) -> CensusTable:
    """Exact table of a-derangement counts by number of cycles, rows 0..n_max.

    ``method="insertion"`` (default, cached) uses the two-term recurrence
    ``d(n,k) = (n-1) d(n-1,k) + C(n-1,a) a! d(n-1-a,k-1)``;
    ``method="cycle_removal"`` sums over the length of the cycle holding the
    largest element and is cubic in n, so use it only as a cross-check.

    >>> census_table(0, 4).row(4)
    (0, 6, 11, 6, 1)
    >>> census_table(1, 4).row(4)
    (0, 6, 3)
    """
    caps.check(a, n_max)
    if method == "insertion":
        rows = _extend(a, n_max) if len(_rows.get(a, ())) <= n_max else _rows[a]
    elif method == "cycle_removal":
        rows = _cycle_removal_rows(a, n_max)
    else:
        raise ValueError(f"unknown method {method!r}")
    return CensusTable(a=a, n_max=n_max, rows=tuple(rows[: n_max + 1]))


_small_lock = threading.Lock()
_small_cols: dict[int, list[tuple[int, ...]]] = {}


def _small_columns(a: int, b_max: int) -> list[tuple[int, ...]]:
    # column b holds m(i, b) for i = 0..b; the cycle through element b has
    # length j <= a
    with _small_lock:
        cols = _small_cols.setdefault(a, [(1,)])
        for b in range(len(cols), b_max + 1):
            col = [0] * (b + 1)
            for j in range(1, min(a, b) + 1):
                ways = comb(b - 1, j - 1) * factorial(j - 1)
                prev = cols[b - j]
                for i in range(1, b + 1):
                    if i - 1 < len(prev) and prev[i - 1]:
                        col[i] += ways * prev[i - 1]
            cols.append(tuple(col))
        return cols


def small_cycle_table(
    a: int, i_max: int, b_max: int, caps: Caps = DEFAULT_CAPS
) -> SmallCycleTable:
    """Table ``m[i][b]`` of permutations of length b with i cycles, each of
    length at most ``a``."""
    if a < 1:
        raise UnsupportedParameterError(f"cap must be >= 1, got {a}")
    caps.check(a, max(i_max, b_max))
    cols = _small_cols.get(a)
    if cols is None or len(cols) <= b_max:
        cols = _small_columns(a, b_max)
    m = tuple(
        tuple(cols[b][i] if i <= b else 0 for b in range(b_max + 1))
        for i in range(i_max + 1)
    )
    return SmallCycleTable(cap=a, m=m)


def cycle_type_count(ct: CycleType) -> int:
    """Number of permutations of length ``ct.size`` with cycle type ``ct``.

    >>> cycle_type_count(CycleType((0, 0, 2)))
    40
    """
    denom = prod(factorial(gj) * j**gj for j, gj in enumerate(ct.g, start=1))
    return factorial(ct.size) // denom


def inclusion_exclusion_count(n: int, k: int, a: int, caps: Caps = DEFAULT_CAPS) -> int:
    """Count a-derangements of length n with k cycles by sieving out the
    permutations that contain a chosen set of short ("bad") cycles.

    Independent of the recurrence in :func:`census_table`; only Stirling rows
    and the small-cycle table are used.
    """
    caps.check(a, n)
    if a == 0:
        row = census_row(0, n, caps)
        return row[k] if 0 <= k < len(row) else 0
    m = small_cycle_table(a, k, n, caps)
    total = 0
    for i in range(0, k + 1):
        inner = 0
        for b in range(i, n + 1):
            mib = m[i, b]
            if not mib:
                continue
            c_row = census_row(0, n - b, caps)
            if 0 <= k - i < len(c_row):
                inner += c_row[k - i] * mib * comb(n, b)
        total += -inner if i % 2 else inner
    return total


def derangement_count(n: int, a: int = 1, caps: Caps = DEFAULT_CAPS) -> int:
    """Number of length-n permutations whose cycles are all longer than ``a``."""
    return sum(census_row(a, n, caps))


def derangement_count_alternating(n: int) -> int:
    """D(n) = n! * sum_{i<=n} (-1)^i / i!, evaluated with integers only."""
    total, term = 0, 1
    # term = n!/i!, walked downward from i = n
    for i in range(n, -1, -1):
        total += -term if i % 2 else term
        term *= i
    return total


def leading_coefficient(n: int, a: int = 1) -> int:
    """Closed form for d(n, n//2): all 2-cycles when n is even, one 3-cycle and
    the rest 2-cycles when n is odd."""
    if a != 1:
        raise UnsupportedParameterError("closed form is only known for a=1")
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if n % 2 == 0:
        return prod(range(n - 1, 0, -2))
    return (n - 1) * prod(range(n, 0, -2)) // 3
