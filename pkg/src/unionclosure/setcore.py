"""Subsets of [n] as bitmasks, set families, and the basic family predicates.

Element ``i`` of the universe ``[n] = {1, ..., n}`` is stored in bit ``i - 1``.
The empty set is never a member of a family, and every family must contain
the full universe ``[n]``.
"""

from __future__ import annotations

import itertools
from bisect import bisect_left
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    EmptySetPresent,
    FamilyError,
    MaskOutOfRange,
    ParseError,
    UniverseMissing,
    UniverseTooLarge,
)

MAX_UNIVERSE = 32
MAX_MATERIALIZED = 24  # ops that build all 2^n masks
MAX_TABLE = 20  # presence-table membership up to here
MAX_ISO = 8


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_of(elements: Iterable[int]) -> int:
    """Bitmask of a collection of 1-based elements."""
    mask = 0
    for e in elements:
        if e < 1:
            raise MaskOutOfRange(f"element {e} is not a positive integer")
        mask |= 1 << (e - 1)
    return mask


def elements_of(mask: int) -> list[int]:
    """1-based elements of ``mask`` in increasing order."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def prefix(k: int) -> int:
    """The mask of ``[k] = {1, ..., k}``."""
    return (1 << k) - 1


def min_element(mask: int) -> int:
    return (mask & -mask).bit_length()


def max_element(mask: int) -> int:
    return mask.bit_length()


def format_set(mask: int) -> str:
    return "{" + ",".join(map(str, elements_of(mask))) + "}"


def is_subset(a: int, b: int) -> bool:
    return a & b == a


def _check_universe(n: int, cap: int = MAX_UNIVERSE) -> None:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise FamilyError(f"universe size must be a positive integer, got {n!r}")
    if n > cap:
        raise UniverseTooLarge(f"universe size {n} exceeds the cap of {cap}")


@dataclass(frozen=True)
class SetFamily:
    """An immutable family of non-empty subsets of ``[n]`` containing ``[n]``.

    ``members`` is strictly ascending.  Build instances through
    :func:`make_family`; the bare constructor trusts its input.
    """

    n: int
    members: tuple[int, ...]

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def _member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    @cached_property
    def presence(self) -> np.ndarray:
        """Boolean table of length ``2^n``; ``presence[m]`` iff ``m`` is a member."""
        if self.n > MAX_TABLE:
            raise UniverseTooLarge(
                f"presence table needs n <= {MAX_TABLE}, got n = {self.n}"
            )
        table = np.zeros(1 << self.n, dtype=bool)
        table[np.fromiter(self.members, dtype=np.int64, count=len(self.members))] = True
        return table

    @cached_property
    def array(self) -> np.ndarray:
        return np.fromiter(self.members, dtype=np.int64, count=len(self.members))

    def __contains__(self, mask: int) -> bool:
        if self.n <= MAX_TABLE:
            return mask in self._member_set
        i = bisect_left(self.members, mask)
        return i < len(self.members) and self.members[i] == mask

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def issubfamily(self, other: SetFamily) -> bool:
        return self.n == other.n and self._member_set <= other._member_set

    def is_power_set(self) -> bool:
        return len(self.members) == (1 << self.n) - 1

    def as_sets(self) -> list[list[int]]:
        return [elements_of(m) for m in self.members]

    def __str__(self) -> str:
        return "{" + ", ".join(format_set(m) for m in self.members) + "}"


def make_family(n: int, sets: Iterable[int]) -> SetFamily:
    """Validate and canonicalize a family given as bitmasks.

    Rejects the empty set, masks outside ``[n]``, and a missing universe
    set; duplicates are dropped and members sorted.
    """
    _check_universe(n)
    full = full_mask(n)
    seen = set()
    for m in sets:
        m = int(m)
        if m == 0:
            raise EmptySetPresent("the empty set may not be a member")
        if m < 0 or m > full:
            raise MaskOutOfRange(f"mask {m:#x} is not a subset of [{n}]")
        seen.add(m)
    if full not in seen:
        raise UniverseMissing(f"the universe [{n}] is not a member")
    return SetFamily(n, tuple(sorted(seen)))


def family_from_sets(n: int, sets: Iterable[Iterable[int]]) -> SetFamily:
    """Like :func:`make_family` but with sets given as 1-based element lists."""
    masks = []
    for s in sets:
        s = list(s)
        if any(e > n for e in s):
            raise MaskOutOfRange(f"set {s} is not a subset of [{n}]")
        masks.append(mask_of(s))
    return make_family(n, masks)


def power_set_family(n: int) -> SetFamily:
    """All ``2^n - 1`` non-empty subsets of ``[n]``."""
    _check_universe(n, MAX_MATERIALIZED)
    return SetFamily(n, tuple(range(1, 1 << n)))


def is_union_closed(family: SetFamily) -> bool:
    if family.n <= MAX_TABLE and len(family) > 16:
        present = family.presence
        arr = family.array
        for b in family.members:
            if not present[arr | b].all():
                return False
        return True
    members = family.members
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            if (a | b) not in family:
                return False
    return True


def is_up_set(family: SetFamily) -> bool:
    """Every superset of every member is a member."""
    n = family.n
    full = family.full
    for a in family.members:
        # adding any single missing element must stay inside the family;
        # that suffices by induction on the size of the superset
        missing = full & ~a
        while missing:
            bit = missing & -missing
            if (a | bit) not in family:
                return False
            missing ^= bit
    return True


@lru_cache(maxsize=None)
def _permutation_tables(n: int) -> tuple[tuple[int, ...], ...]:
    tables = []
    for perm in itertools.permutations(range(n)):
        table = [0] * (1 << n)
        for m in range(1, 1 << n):
            low = m & -m
            table[m] = table[m ^ low] | (1 << perm[low.bit_length() - 1])
        tables.append(tuple(table))
    return tuple(tables)


def relabel(family: SetFamily, perm: Sequence[int]) -> SetFamily:
    """Apply the element relabeling ``i -> perm[i - 1]`` (1-based images)."""
    n = family.n
    if sorted(perm) != list(range(1, n + 1)):
        raise FamilyError(f"{perm!r} is not a permutation of [{n}]")
    out = []
    for m in family.members:
        img = 0
        for e in elements_of(m):
            img |= 1 << (perm[e - 1] - 1)
        out.append(img)
    return SetFamily(n, tuple(sorted(out)))


def canonical_iso_form(family: SetFamily) -> SetFamily:
    """Lexicographically least sorted member list over all relabelings of ``[n]``."""
    n = family.n
    if n > MAX_ISO:
        raise UniverseTooLarge(f"isomorphism canonical form needs n <= {MAX_ISO}")
    best = None
    members = family.members
    for table in _permutation_tables(n):
        cand = tuple(sorted(table[m] for m in members))
        if best is None or cand < best:
            best = cand
    return SetFamily(n, best)


@dataclass(frozen=True)
class FamilyStatistics:
    size: int
    frequencies: tuple[int, ...]  # frequencies[x - 1] = d_F(x)
    max_frequency_element: int

    def frequency(self, x: int) -> int:
        return self.frequencies[x - 1]

    @property
    def max_frequency(self) -> int:
        return self.frequencies[self.max_frequency_element - 1]


def statistics(family: SetFamily) -> FamilyStatistics:
    """Element frequencies; ties for the maximum go to the smallest element."""
    n = family.n
    freq = [0] * n
    for m in family.members:
        for e in elements_of(m):
            freq[e - 1] += 1
    best = max(range(n), key=lambda i: (freq[i], -i))
    return FamilyStatistics(len(family), tuple(freq), best + 1)


# -- text format -------------------------------------------------------------


def format_family(family: SetFamily) -> str:
    lines = [f"universe {family.n}"]
    lines.extend(" ".join(map(str, elements_of(m))) for m in family.members)
    return "\n".join(lines) + "\n"


def parse_family(text: str) -> SetFamily:
    """Parse the line-oriented family format.

    One set per line as 1-based integers; ``#`` starts a comment; an
    optional leading ``universe n`` line fixes the universe size, which
    otherwise defaults to the largest element seen.
    """
    n = None
    rows: list[tuple[int, list[int]]] = []
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "universe":
            if seen_content:
                raise ParseError("'universe' must be the first non-comment line", lineno)
            if len(tokens) != 2:
                raise ParseError("expected 'universe <n>'", lineno)
            try:
                n = int(tokens[1])
            except ValueError:
                raise ParseError(f"bad universe size {tokens[1]!r}", lineno) from None
            if n < 1:
                raise ParseError("universe size must be positive", lineno)
            seen_content = True
            continue
        seen_content = True
        try:
            elems = [int(t) for t in tokens]
        except ValueError as exc:
            raise ParseError(f"non-integer element ({exc})", lineno) from None
        for e in elems:
            if e < 1:
                raise ParseError(f"element {e} is not >= 1", lineno)
            if n is not None and e > n:
                raise ParseError(f"element {e} exceeds universe size {n}", lineno)
        rows.append((lineno, elems))
    if n is None:
        if not rows:
            raise ParseError("no sets found")
        n = max(max(elems) for _, elems in rows)
    if n > MAX_UNIVERSE:
        raise UniverseTooLarge(f"universe size {n} exceeds the cap of {MAX_UNIVERSE}")
    full = full_mask(n)
    masks = [mask_of(elems) for _, elems in rows]
    if full not in masks:
        last = rows[-1][0] if rows else None
        raise UniverseMissing(
            f"the universe [{n}] is not listed (read through line {last})"
        )
    return make_family(n, masks)
