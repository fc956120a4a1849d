"""Complexity profiles and the exact counting checks built on them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .words import LanguageTable, Word


@dataclass(frozen=True)
class ComplexityProfile:
    """P(1..N) with its difference structure.

    ``max_difference`` is the largest one-step increment observed.
    ``k_linear`` is the smallest integer k with P(n) < k*(n+1) at every
    measured n, the finite-depth stand-in for a linear growth coefficient;
    claims made with it are only meaningful together with ``max_n``.
    """

    values: tuple
    differences: tuple
    max_difference: int
    k_linear: int

    @property
    def max_n(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class DifferenceVerdict:
    bounded: bool
    bound: int
    max_difference: int
    exceeded_at: Optional[int]  # first n with P(n+1)-P(n) > bound


def profile(table: LanguageTable) -> ComplexityProfile:
    values = tuple(table.count(n) for n in range(1, table.max_n + 1))
    differences = tuple(b - a for a, b in zip(values, values[1:]))
    max_difference = max(differences, default=0)
    k_linear = max(p // (n + 1) + 1 for n, p in enumerate(values, start=1))
    return ComplexityProfile(values, differences, max_difference, k_linear)


def check_difference_bound(prof: ComplexityProfile, bound: int) -> DifferenceVerdict:
    """Is every one-step complexity increment <= bound?"""
    for n, d in enumerate(prof.differences, start=1):
        if d > bound:
            return DifferenceVerdict(False, bound, prof.max_difference, n)
    return DifferenceVerdict(True, bound, prof.max_difference, None)


def extension_failure_count(table: LanguageTable, n: int, m: int) -> int:
    """Number of length-n words that do not extend uniquely m times right."""
    if m == 0:
        return 0
    return sum(1 for w in table.level(n)
               if table.right_extension_count(w, m) != 1)


def nonuniquely_left_extendable_count(table: LanguageTable, n: int) -> int:
    """Number of length-n words with two or more left extensions."""
    return sum(1 for w in table.level(n) if len(table.left_extensions(w)) >= 2)


def right_special_count(table: LanguageTable, n: int) -> int:
    """Number of length-n words with two or more right extensions."""
    return sum(1 for w in table.level(n) if len(table.right_extensions(w)) >= 2)


def periodicity_threshold(prof: ComplexityProfile) -> Optional[int]:
    """Smallest measured n with P(n) <= n, which forces the shift to be
    wholly periodic; None when no measured length satisfies it."""
    for n, p in enumerate(prof.values, start=1):
        if p <= n:
            return n
    return None
