"""Ground truth by enumerating every permutation of a small set."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from cyclecensus.errors import ResourceCapError

__all__ = ["OracleRow", "ORACLE_MAX_N", "brute_force_census", "brute_force_small_cycle"]

ORACLE_MAX_N = 10


@dataclass(frozen=True)
class OracleRow:
    n: int
    a: int
    counts: tuple[int, ...]  # indexed by number of cycles, 0..n


def _next_permutation(p: list[int]) -> bool:
    """Advance ``p`` in place to its lexicographic successor."""
    i = len(p) - 2
    while i >= 0 and p[i] >= p[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(p) - 1
    while p[j] <= p[i]:
        j -= 1
    p[i], p[j] = p[j], p[i]
    p[i + 1 :] = reversed(p[i + 1 :])
    return True


def _cycle_lengths(p: list[int], seen: list[bool]) -> list[int]:
    n = len(p)
    for i in range(n):
        seen[i] = False
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        length, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        lengths.append(length)
    return lengths


@lru_cache(maxsize=None)
def _profile(n: int) -> dict[tuple[int, int, int], int]:
    """Permutation counts keyed by (shortest cycle, longest cycle, cycles)."""
    if n > ORACLE_MAX_N:
        raise ResourceCapError(f"brute force is capped at n={ORACLE_MAX_N}, got {n}")
    profile: dict[tuple[int, int, int], int] = {}
    p = list(range(n))
    seen = [False] * n
    while True:
        lengths = _cycle_lengths(p, seen)
        key = (min(lengths, default=0), max(lengths, default=0), len(lengths))
        profile[key] = profile.get(key, 0) + 1
        if not _next_permutation(p):
            break
    return profile


def brute_force_census(n: int, a: int) -> OracleRow:
    """Count length-n permutations with every cycle longer than ``a``, by cycles."""
    counts = [0] * (n + 1)
    for (shortest, _, k), c in _profile(n).items():
        # the empty permutation has no cycles, so every family contains it
        if n == 0 or shortest > a:
            counts[k] += c
    return OracleRow(n=n, a=a, counts=tuple(counts))


def brute_force_small_cycle(a: int, b: int) -> tuple[int, ...]:
    """``result[i]``: permutations of length b with i cycles, none longer than ``a``."""
    counts = [0] * (b + 1)
    for (_, longest, i), c in _profile(b).items():
        if longest <= a:
            counts[i] += c
    return tuple(counts)
