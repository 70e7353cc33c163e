"""Relative subsets, relative generation and closure roots of 1-dense families.

``A`` is a subset of ``B`` relative to ``F`` when ``A == B``, or ``B`` is the
universe, or ``A | C == B`` for some member ``C != B``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .closure import closure
from .errors import (
    CriterionMismatch,
    EmptyGeneratorList,
    FamilyTooLarge,
    GeneratorNotMember,
    NotAMember,
    NotOneDense,
    NotSubfamily,
    PreconditionViolated,
    UniverseTooLarge,
)
from .setcore import (
    MAX_MATERIALIZED,
    SetFamily,
    _check_universe,
    elements_of,
    format_family,
    is_union_closed,
    is_up_set,
)


def _relative(family: SetFamily, a: int, b: int) -> bool:
    if a == b or b == family.full:
        return True
    if a & b != a:
        return False
    need = b & ~a
    for c in family.members:
        if c & b == c and c != b and c & need == need:
            return True
    return False


def is_relative_subset(family: SetFamily, a: int, b: int) -> bool:
    for m in (a, b):
        if m not in family:
            raise NotAMember(f"{elements_of(m)} is not a member of the family")
    return _relative(family, a, b)


class RelativeOrder:
    """The full relative-subset relation on a family, as per-member bitsets.

    ``below[j]`` has bit ``i`` set iff ``members[i]`` is a relative subset
    of ``members[j]``.
    """

    def __init__(self, family: SetFamily):
        self.family = family
        self.members = family.members
        self.index = {m: i for i, m in enumerate(self.members)}
        below = []
        for b in self.members:
            bits = 0
            for i, a in enumerate(self.members):
                if a & b == a and _relative(family, a, b):
                    bits |= 1 << i
            below.append(bits)
        self.below = below

    def holds(self, a: int, b: int) -> bool:
        return bool(self.below[self.index[b]] >> self.index[a] & 1)

    def generated(self, generators: Iterable[int]) -> list[int]:
        gbits = 0
        for g in generators:
            gbits |= 1 << self.index[g]
        return [b for j, b in enumerate(self.members) if self.below[j] & gbits]

    def minimal_within(self, subfamily: Iterable[int]) -> list[int]:
        sub = sorted(subfamily)
        sbits = 0
        for m in sub:
            sbits |= 1 << self.index[m]
        out = []
        for a in sub:
            j = self.index[a]
            if self.below[j] & sbits == 1 << j:
                out.append(a)
        return out


@lru_cache(maxsize=4096)
def relative_order(family: SetFamily) -> RelativeOrder:
    return RelativeOrder(family)


def is_relative_transitive(family: SetFamily) -> tuple[bool, Optional[tuple[int, int, int]]]:
    """Check transitivity of the relative-subset relation over member triples.

    Returns ``(True, None)`` or ``(False, (a, b, c))`` for the first triple
    (in member order) with ``a <=_F b <=_F c`` but not ``a <=_F c``.
    """
    order = relative_order(family)
    members = order.members
    for ia, a in enumerate(members):
        for ib, b in enumerate(members):
            if ia == ib or not order.below[ib] >> ia & 1:
                continue
            for ic, c in enumerate(members):
                if order.below[ic] >> ib & 1 and not order.below[ic] >> ia & 1:
                    return False, (a, b, c)
    return True, None


def minimal_members(family: SetFamily) -> list[int]:
    """Members with no strictly smaller member below them."""
    members = family.members
    return [
        a for a in members
        if not any(b != a and b & a == b for b in members)
    ]


def up_set_generated(generators: Iterable[int], n: int) -> SetFamily:
    """All subsets of ``[n]`` containing at least one generator."""
    gens = sorted(set(int(g) for g in generators))
    if not gens:
        raise EmptyGeneratorList("need at least one generator")
    _check_universe(n, MAX_MATERIALIZED)
    full = (1 << n) - 1
    for g in gens:
        if g == 0 or g & ~full:
            raise NotAMember(f"generator {g:#x} is not a non-empty subset of [{n}]")
    return SetFamily(
        n, tuple(m for m in range(1, 1 << n) if any(g & m == g for g in gens))
    )


def relative_generated(family: SetFamily, generators: Iterable[int]) -> SetFamily:
    """Members ``B`` having some generator ``A`` with ``A <=_F B``."""
    gens = list(generators)
    for g in gens:
        if g not in family:
            raise GeneratorNotMember(f"generator {elements_of(g)} is not a member")
    if not gens:
        raise EmptyGeneratorList("need at least one generator")
    order = relative_order(family)
    # the universe is relatively above everything, so it is always included
    return SetFamily(family.n, tuple(order.generated(gens)))


def _require_subfamily(family: SetFamily, sub: SetFamily) -> None:
    if not sub.issubfamily(family):
        raise NotSubfamily("the second family is not contained in the first")


def relative_minimal_members(family: SetFamily, sub: SetFamily) -> list[int]:
    """Members ``A`` of ``sub`` with no other member of ``sub`` relatively below them."""
    _require_subfamily(family, sub)
    return relative_order(family).minimal_within(sub.members)


def upward_closed_relative(family: SetFamily, sub: SetFamily) -> bool:
    """Whether ``A in sub`` and ``A <=_F B`` always give ``B in sub``."""
    order = relative_order(family)
    sbits = 0
    for m in sub.members:
        sbits |= 1 << order.index[m]
    for j, b in enumerate(order.members):
        if b not in sub and order.below[j] & sbits:
            return False
    return True


def covers_under_closure(family: SetFamily, sub: SetFamily) -> bool:
    """Whether ``closure(sub)`` contains ``family``.

    Computed directly and through the relative-upward-closure criterion;
    the two must agree.
    """
    _require_subfamily(family, sub)
    c = closure(sub)
    direct = all(m in c for m in family.members)
    criterion = upward_closed_relative(family, sub)
    if direct != criterion:
        raise CriterionMismatch(
            f"closure test says {direct}, relative criterion says {criterion} "
            f"for F={family} H={sub}"
        )
    return direct


def _require_one_dense(family: SetFamily) -> None:
    if family.is_power_set() or not is_up_set(family):
        raise NotOneDense("family is not 1-dense (a proper up-set)")


@dataclass(frozen=True)
class RootCertificate:
    input: SetFamily
    generating_set: tuple[int, ...]
    relative_generated: SetFamily
    closure_of_generated: SetFamily

    @property
    def has_root(self) -> bool:
        return self.closure_of_generated == self.input

    @property
    def witness_root(self) -> Optional[SetFamily]:
        return self.relative_generated if self.has_root else None

    def to_text(self) -> str:
        parts = [
            f"has_root={str(self.has_root).lower()}\n",
            "# generating set\n",
            "".join(" ".join(map(str, elements_of(m))) + "\n" for m in self.generating_set),
            "# relatively generated family\n",
            format_family(self.relative_generated),
            "# closure of the relatively generated family\n",
            format_family(self.closure_of_generated),
        ]
        return "".join(parts)

    def to_report(self) -> dict:
        def sets(fam):
            return [elements_of(m) for m in fam]

        return {
            "has_root": self.has_root,
            "n": self.input.n,
            "generating_set": sets(self.generating_set),
            "relative_generated": sets(self.relative_generated.members),
            "closure_of_generated": sets(self.closure_of_generated.members),
            "witness_root": sets(self.witness_root.members) if self.has_root else None,
        }


def has_closure_root(family: SetFamily) -> RootCertificate:
    """Decide whether a 1-dense family is the closure of some union-closed family.

    The family has a root exactly when the family relatively generated by
    its minimal members closes back to it; that family is then a root.
    """
    _require_one_dense(family)
    gens = tuple(minimal_members(family))
    gen_family = relative_generated(family, gens)
    return RootCertificate(family, gens, gen_family, closure(gen_family))


# -- exhaustive subfamily search ---------------------------------------------


def union_closed_subfamilies(n: int, candidates: Iterable[int]) -> Iterator[tuple[int, ...]]:
    """Every union-closed family over ``[n]`` drawn from ``candidates``.

    ``[n]`` is always included.  Masks are decided in descending size,
    so the union of two chosen sets is always decided before either
    is; a choice that breaks union-closure is pruned immediately.
    Yields ascending mask tuples in a deterministic order.
    """
    full = (1 << n) - 1
    order = sorted(
        (m for m in set(candidates) if m != full),
        key=lambda m: (-bin(m).count("1"), m),
    )
    chosen = [full]
    chosen_set = {full}
    count = len(order)

    def rec(i):
        if i == count:
            yield tuple(sorted(chosen))
            return
        a = order[i]
        if all((a | b) in chosen_set for b in chosen):
            chosen.append(a)
            chosen_set.add(a)
            yield from rec(i + 1)
            chosen.pop()
            chosen_set.discard(a)
        yield from rec(i + 1)

    yield from rec(0)


def brute_force_closure_roots(
    family: SetFamily, member_cap: int = 22, existence_only: bool = False
) -> list[SetFamily]:
    """All union-closed ``H`` inside ``family`` (with ``[n]``) whose closure is ``family``.

    With ``existence_only`` the search stops at the first root found.
    """
    if not is_union_closed(family):
        raise PreconditionViolated("family is not union-closed")
    if len(family) > member_cap:
        raise FamilyTooLarge(f"{len(family)} members exceeds the cap of {member_cap}")
    if family.n > 20:
        raise UniverseTooLarge("closure needs n <= 20")
    roots = []
    for members in union_closed_subfamilies(family.n, family.members):
        h = SetFamily(family.n, members)
        if closure(h) == family:
            roots.append(h)
            if existence_only:
                break
    return roots


def root_dominance_check(family: SetFamily, sub: SetFamily) -> bool:
    """For ``sub`` with ``closure(sub) >= family``, test
    ``closure(sub) >= closure(<G>_F)`` where G are the minimal members."""
    _require_one_dense(family)
    _require_subfamily(family, sub)
    if not is_union_closed(sub):
        raise PreconditionViolated("subfamily is not union-closed")
    c = closure(sub)
    if not all(m in c for m in family.members):
        raise PreconditionViolated("closure of the subfamily does not cover the family")
    target = closure(relative_generated(family, minimal_members(family)))
    return all(m in c for m in target.members)
