"""Frequency statistics, exhaustive enumeration, density census and closure tree."""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterator

from .closure import closure, density
from .errors import DisagreementFound, NoFamilyWithDensity, UniverseTooLarge
from .relative import union_closed_subfamilies
from .setcore import SetFamily, canonical_iso_form, statistics

MAX_ENUMERATION = 4
MAX_LONG_ENUMERATION = 5


@dataclass(frozen=True)
class FranklResult:
    element: int
    count: int
    size: int
    satisfied: bool


def frankl_check(family: SetFamily, strict: bool = False) -> FranklResult:
    """Does some element lie in at least half of the members?

    The default threshold is ``floor(|F| / 2)``; ``strict`` demands
    ``2 * count >= |F|`` instead.
    """
    stats = statistics(family)
    count = stats.max_frequency
    size = stats.size
    ok = 2 * count >= size if strict else count >= size // 2
    return FranklResult(stats.max_frequency_element, count, size, ok)


def g_value(family: SetFamily) -> Fraction:
    """Largest element frequency divided by the family size."""
    stats = statistics(family)
    return Fraction(stats.max_frequency, stats.size)


def enumerate_union_closed(n: int, long_run: bool = False) -> Iterator[SetFamily]:
    """All union-closed families over [n] in a fixed order.

    ``n <= 4`` by default; ``n = 5`` needs ``long_run``.
    """
    cap = MAX_LONG_ENUMERATION if long_run else MAX_ENUMERATION
    if n < 1 or n > cap:
        raise UniverseTooLarge(
            f"enumeration supports 1 <= n <= {cap}"
            + ("" if long_run else " (n = 5 needs long_run)")
        )
    for members in union_closed_subfamilies(n, range(1, 1 << n)):
        yield SetFamily(n, members)


@lru_cache(maxsize=None)
def all_union_closed(n: int) -> tuple[SetFamily, ...]:
    return tuple(enumerate_union_closed(n))


def count_union_closed(n: int) -> int:
    """Number of labelled union-closed families over [n]."""
    return len(all_union_closed(n))


@dataclass(frozen=True)
class ClosureTree:
    """Every union-closed family over [n], each pointing to its closure."""

    n: int
    nodes: tuple[SetFamily, ...]
    parent: dict
    root: SetFamily

    def depth_of(self, node: SetFamily) -> int:
        d = 0
        while node != self.root:
            node = self.parent[node]
            d += 1
        return d

    def depth(self) -> int:
        return max(self.depth_of(node) for node in self.nodes)

    def self_loops(self) -> list[SetFamily]:
        return [node for node in self.nodes if self.parent[node] == node]

    def leaves(self) -> list[SetFamily]:
        """Families that are the closure of no other family."""
        targets = {p for c, p in self.parent.items() if c != p}
        return [node for node in self.nodes if node not in targets]

    def children(self, node: SetFamily) -> list[SetFamily]:
        return [c for c in self.nodes if c != node and self.parent[c] == node]

    def edge_list(self) -> str:
        return "".join(
            f"{node_id(c)} {node_id(self.parent[c])}\n" for c in self.nodes
        )

    def to_report(self) -> dict:
        return {
            "n": self.n,
            "nodes": len(self.nodes),
            "depth": self.depth(),
            "root": node_id(self.root),
            "leaves": len(self.leaves()),
            "edges": [[node_id(c), node_id(self.parent[c])] for c in self.nodes],
        }


def node_id(family: SetFamily) -> str:
    """Stable id from the canonical member list, e.g. ``1.3.7``."""
    return ".".join(str(m) for m in family.members)


def closure_tree(n: int) -> ClosureTree:
    nodes = all_union_closed(n)
    parent = {node: closure(node) for node in nodes}
    roots = [node for node in nodes if node.is_power_set()]
    tree = ClosureTree(n, nodes, parent, roots[0])
    depth = tree.depth()
    if depth > n - 1:
        raise DisagreementFound(f"closure tree over [{n}] has depth {depth} > n - 1")
    return tree


@dataclass(frozen=True)
class DensityCensus:
    n: int
    labelled_counts: dict
    iso_counts: dict
    leaf_counts: dict
    union_closed_counts: dict  # f_j for 1 <= j <= n

    def lower_bound(self, k: int) -> int:
        """Number of k-dense families obtained by lifting from a (k-1)-set."""
        return comb(self.n, k - 1) * self.union_closed_counts[k - 1]

    def to_report(self) -> dict:
        return {
            "n": self.n,
            "labelled_counts": {str(k): v for k, v in sorted(self.labelled_counts.items())},
            "iso_counts": {str(k): v for k, v in sorted(self.iso_counts.items())},
            "leaf_counts": {str(k): v for k, v in sorted(self.leaf_counts.items())},
            "union_closed_counts": {
                str(k): v for k, v in sorted(self.union_closed_counts.items())
            },
            "lift_lower_bounds": {
                str(k): self.lower_bound(k) for k in range(2, self.n)
            },
        }


def density_census(n: int) -> DensityCensus:
    """Count families over [n] by density, labelled and up to isomorphism.

    Raises if a labelled count falls below the lifting lower bound
    ``C(n, k-1) * f_{k-1}`` for ``2 <= k <= n - 1``.
    """
    tree = closure_tree(n)
    dens = {node: density(node) for node in tree.nodes}
    labelled = Counter(dens.values())
    classes = defaultdict(set)
    for node, k in dens.items():
        classes[k].add(canonical_iso_form(node))
    leaves = Counter(dens[node] for node in tree.leaves())
    f = {j: count_union_closed(j) for j in range(1, n + 1)}
    census = DensityCensus(
        n,
        dict(sorted(labelled.items())),
        {k: len(v) for k, v in sorted(classes.items())},
        dict(sorted(leaves.items())),
        f,
    )
    for k in range(2, n):
        if labelled[k] < census.lower_bound(k):
            raise DisagreementFound(
                f"only {labelled[k]} {k}-dense families over [{n}], "
                f"expected at least {census.lower_bound(k)}"
            )
    return census


def a_value(k: int, n: int) -> Fraction:
    """Smallest normalized max frequency over all k-dense families on [n]."""
    values = [g_value(F) for F in all_union_closed(n) if density(F) == k]
    if not values:
        raise NoFamilyWithDensity(f"no {k}-dense family over [{n}]")
    return min(values)


def a_table(n: int) -> dict[int, Fraction]:
    return {k: a_value(k, n) for k in range(n)}


@dataclass(frozen=True)
class GProbe:
    g_family: Fraction
    g_closure: Fraction

    @property
    def decreased(self) -> bool:
        """True when g does not increase under closure."""
        return self.g_family >= self.g_closure


def g_monotonicity_probe(family: SetFamily) -> GProbe:
    if family.is_power_set():
        raise ValueError("the power set is its own closure")
    return GProbe(g_value(family), g_value(closure(family)))
