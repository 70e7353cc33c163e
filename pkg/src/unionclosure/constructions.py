"""Named union-closed families with known density and chain parameter."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import FamilyError, UniverseTooSmall
from .setcore import (
    MAX_MATERIALIZED,
    SetFamily,
    _check_universe,
    full_mask,
    make_family,
    power_set_family,
    prefix,
)


def chain_family(n: int) -> SetFamily:
    """The prefixes ``[1], [2], ..., [n]``; density n - 1."""
    _check_universe(n)
    return SetFamily(n, tuple(prefix(i) for i in range(1, n + 1)))


def lifted_family(base: SetFamily, n: int) -> SetFamily:
    """``base + {[n]}`` for a family over ``[k]`` with ``n >= k + 2``; density k + 1."""
    k = base.n
    if n < k + 2:
        raise UniverseTooSmall(f"lifting a family over [{k}] needs n >= {k + 2}, got {n}")
    _check_universe(n)
    return SetFamily(n, base.members + (full_mask(n),))


def in_path_family(mask: int) -> bool:
    """Every element has a neighbour (i - 1 or i + 1) in the set."""
    return mask != 0 and mask & ~((mask << 1) | (mask >> 1)) == 0


def path_family(n: int) -> SetFamily:
    """Non-empty unions of adjacent pairs ``{i, i+1}``; density n - 1 for n >= 6."""
    if n < 2:
        raise UniverseTooSmall(f"path family needs n >= 2, got {n}")
    _check_universe(n, MAX_MATERIALIZED)
    return SetFamily(n, tuple(m for m in range(1, 1 << n) if in_path_family(m)))


def adjacent_pairs(n: int) -> list[int]:
    return [3 << i for i in range(n - 1)]


def path_upset(n: int) -> SetFamily:
    """All subsets of [n] containing some adjacent pair ``{i, i+1}``."""
    if n < 2:
        raise UniverseTooSmall(f"path up-set needs n >= 2, got {n}")
    _check_universe(n, MAX_MATERIALIZED)
    return SetFamily(n, tuple(m for m in range(1, 1 << n) if m & (m >> 1)))


def loose_bound_family(n: int) -> SetFamily:
    """``{[n-2], [n]-{3}, [n]-{2}, [n]-{1}, [n]}``.

    Density n - 1 while its chain parameter is only 1.
    """
    if n < 5:
        raise UniverseTooSmall(f"needs n >= 5, got {n}")
    _check_universe(n)
    full = full_mask(n)
    return make_family(n, [prefix(n - 2), full ^ 0b100, full ^ 0b010, full ^ 0b001, full])


def interval_chain_family(c: int, k: int, n: int) -> SetFamily:
    """``{[k-c], ..., [k-1], [n]}``: chain parameter c and density k.

    Valid for ``1 <= c < k <= n - 1``.
    """
    if not (1 <= c < k):
        raise FamilyError(f"need 1 <= c < k, got c={c}, k={k}")
    if k > n - 1:
        raise UniverseTooSmall(f"need k <= n - 1, got k={k}, n={n}")
    _check_universe(n)
    return make_family(n, [prefix(i) for i in range(k - c, k)] + [full_mask(n)])


def cube_plus_universe(n: int) -> SetFamily:
    """All non-empty subsets of ``[n-2]`` plus ``[n]``; density n - 1."""
    if n < 4:
        raise UniverseTooSmall(f"needs n >= 4, got {n}")
    _check_universe(n, MAX_MATERIALIZED)
    return SetFamily(n, tuple(range(1, 1 << (n - 2))) + (full_mask(n),))


def up_set_family(generators: list[int], n: int) -> SetFamily:
    # local import: relative depends on closure which is heavier
    from .relative import up_set_generated

    return up_set_generated(generators, n)


@dataclass(frozen=True)
class ConstructionSpec:
    """A named construction plus its parameters.

    ``expected_density`` and ``expected_s`` carry the values the
    construction is known to have, or ``None`` when nothing is claimed.
    """

    kind: str
    n: int
    k: Optional[int] = None
    c: Optional[int] = None
    base: Optional[SetFamily] = None
    generators: tuple[int, ...] = field(default=())

    def build(self) -> SetFamily:
        try:
            builder = _BUILDERS[self.kind]
        except KeyError:
            raise FamilyError(
                f"unknown construction {self.kind!r}; choose from {', '.join(KINDS)}"
            ) from None
        return builder(self)

    @property
    def expected_density(self) -> Optional[int]:
        n, k = self.n, self.k
        if self.kind == "chain":
            return n - 1
        if self.kind == "lifted":
            return self._base().n + 1
        if self.kind == "path":
            return n - 1 if n >= 6 else None
        if self.kind in ("loose-bound", "cube-plus-universe"):
            return n - 1
        if self.kind == "interval-chain":
            return k
        if self.kind == "power-set":
            return 0
        if self.kind in ("up-set", "path-upset"):
            return None if self.build().is_power_set() else 1
        return None

    @property
    def expected_s(self) -> Optional[int]:
        if self.kind == "chain":
            return max(self.n - 2, 0)
        if self.kind == "loose-bound":
            return 1
        if self.kind == "interval-chain":
            return self.c
        if self.kind in ("power-set", "up-set", "path-upset"):
            return 0
        return None

    def _base(self) -> SetFamily:
        if self.base is not None:
            return self.base
        if self.k is None:
            raise FamilyError("lifted construction needs a base family or k")
        return power_set_family(self.k)


_BUILDERS: dict[str, Callable[[ConstructionSpec], SetFamily]] = {
    "chain": lambda s: chain_family(s.n),
    "lifted": lambda s: lifted_family(s._base(), s.n),
    "path": lambda s: path_family(s.n),
    "path-upset": lambda s: path_upset(s.n),
    "loose-bound": lambda s: loose_bound_family(s.n),
    "interval-chain": lambda s: interval_chain_family(_need(s.c, "c"), _need(s.k, "k"), s.n),
    "cube-plus-universe": lambda s: cube_plus_universe(s.n),
    "up-set": lambda s: up_set_family(list(s.generators), s.n),
    "power-set": lambda s: power_set_family(s.n),
}

KINDS = tuple(_BUILDERS)


def _need(value, name):
    if value is None:
        raise FamilyError(f"construction parameter {name} is required")
    return value


def construct(kind: str, n: int, **params) -> SetFamily:
    return ConstructionSpec(kind, n, **params).build()
