"""The closure operator on union-closed families, iterated closures and density.

The closure of a union-closed family F over [n] is the family of all
non-empty A for which F + {A} is still union-closed, i.e. A such that
every ``A | B`` (B in F) is either a member of F or A itself.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import NotUnionClosed, UniverseTooLarge
from .setcore import (
    MAX_TABLE,
    SetFamily,
    elements_of,
    format_family,
    is_union_closed,
    popcount,
)

MAX_CLOSURE = MAX_TABLE


def _require(family: SetFamily) -> None:
    if family.n > MAX_CLOSURE:
        raise UniverseTooLarge(f"closure needs n <= {MAX_CLOSURE}, got {family.n}")
    if not _union_closed_cached(family):
        raise NotUnionClosed(f"family is not union-closed: {family}")


@lru_cache(maxsize=65536)
def _union_closed_cached(family: SetFamily) -> bool:
    return is_union_closed(family)


@lru_cache(maxsize=16384)
def _closure_kernel(family: SetFamily) -> SetFamily:
    n = family.n
    if family.is_power_set():
        return family
    cand = np.arange(1, 1 << n, dtype=np.int64)
    ok = np.ones(cand.shape, dtype=bool)
    present = family.presence
    full = family.full
    for b in family.members:
        if b == full:
            continue
        u = cand | b
        ok &= present[u] | (u == cand)
    return SetFamily(n, tuple(int(m) for m in cand[ok]))


def closure(family: SetFamily) -> SetFamily:
    """All non-empty A such that ``family + {A}`` is union-closed."""
    _require(family)
    return _closure_kernel(family)


def iterated_closure(family: SetFamily, i: int) -> SetFamily:
    if i < 0:
        raise ValueError(f"iteration count must be non-negative, got {i}")
    _require(family)
    for _ in range(i):
        if family.is_power_set():
            break
        family = _closure_kernel(family)
    return family


@dataclass(frozen=True)
class ClosureTrace:
    """Levels ``F = F^(0) < F^(1) < ... < power set``."""

    levels: tuple[SetFamily, ...]

    @property
    def density(self) -> int:
        return len(self.levels) - 1

    @property
    def n(self) -> int:
        return self.levels[0].n

    def level_sizes(self) -> list[int]:
        return [len(level) for level in self.levels]

    def to_text(self) -> str:
        parts = []
        for i, level in enumerate(self.levels):
            parts.append(f"--- level {i}\n")
            parts.append(format_family(level))
        return "".join(parts)

    def to_report(self) -> dict:
        report = {
            "n": self.n,
            "density": self.density,
            "level_sizes": self.level_sizes(),
        }
        if self.n <= 10:
            report["levels"] = [
                [elements_of(m) for m in level.members] for level in self.levels
            ]
        return report

    def to_json(self) -> str:
        return json.dumps(self.to_report(), indent=2)


@lru_cache(maxsize=16384)
def closure_trace(family: SetFamily) -> ClosureTrace:
    _require(family)
    levels = [family]
    while not levels[-1].is_power_set():
        if len(levels) > family.n:
            # density can never exceed n - 1
            raise RuntimeError(f"closure failed to reach the power set: {family}")
        levels.append(_closure_kernel(levels[-1]))
    return ClosureTrace(tuple(levels))


def density(family: SetFamily) -> int:
    """Smallest k with the k-fold closure equal to the power set."""
    return closure_trace(family).density


def min_full_level(family: SetFamily) -> int:
    """Smallest t >= 1 such that every t-subset of [n] is a member."""
    n = family.n
    counts = [0] * (n + 1)
    for m in family.members:
        counts[popcount(m)] += 1
    binom = 1
    for t in range(1, n + 1):
        binom = binom * (n - t + 1) // t
        if counts[t] == binom:
            return t
    raise NotUnionClosed("the universe is missing")  # unreachable for valid families


def longest_chain_lengths(family: SetFamily) -> dict[int, int]:
    """L(A) = length of the longest strict member chain ending at A."""
    order = sorted(family.members, key=popcount)
    lengths: dict[int, int] = {}
    for i, a in enumerate(order):
        best = 0
        for b in order[:i]:
            if b & a == b and b != a and lengths[b] > best:
                best = lengths[b]
        lengths[a] = best + 1
    return lengths


def has_outside_superset(family: SetFamily, a: int) -> bool:
    """Whether some strict superset of ``a`` is not a member."""
    inside = sum(1 for b in family.members if b & a == a)
    return inside < 1 << (family.n - popcount(a))


def s_param(family: SetFamily) -> int:
    """Longest member chain ``A_1 < ... < A_r`` capped by a non-member ``B > A_r``."""
    lengths = longest_chain_lengths(family)
    best = 0
    for a, length in lengths.items():
        if length > best and has_outside_superset(family, a):
            best = length
    return best


@dataclass(frozen=True)
class DensityReport:
    density: int
    s_param: int

    @property
    def lower_bound(self) -> int:
        return self.s_param + 1

    @property
    def bound_tight(self) -> bool:
        return self.density == self.s_param + 1

    def to_text(self) -> str:
        return (
            f"density={self.density} s={self.s_param} "
            f"bound_tight={str(self.bound_tight).lower()}"
        )

    def to_report(self) -> dict:
        return {
            "density": self.density,
            "s_param": self.s_param,
            "lower_bound": self.lower_bound,
            "bound_tight": self.bound_tight,
        }


def density_report(family: SetFamily) -> DensityReport:
    return DensityReport(density(family), s_param(family))
