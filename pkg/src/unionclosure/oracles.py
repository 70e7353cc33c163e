"""Case classifications that predict closure membership, checked against closures.

Two families have an explicit level-by-level description of their
iterated closures:

* the lift ``H = F + {[n]}`` of a union-closed family ``F`` over ``[k]``
  (six cases, levels ``1 <= t <= k``);
* the path family generated by adjacent pairs ``{i, i+1}`` over ``[n]``
  (fourteen cases, levels ``1 <= k <= n - 5``).

Each classifier evaluates every case literally, predicts membership from
the matching cases and compares with the directly computed closure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .closure import density, iterated_closure
from .constructions import in_path_family, lifted_family, path_family
from .errors import (
    DisagreementFound,
    LevelOutOfRange,
    PreconditionViolated,
    UniverseTooSmall,
)
from .setcore import (
    SetFamily,
    format_set,
    full_mask,
    is_union_closed,
    is_up_set,
    mask_of,
    max_element,
    min_element,
    popcount,
    prefix,
)

LIFT_IN = frozenset({"i", "iii", "v"})
LIFT_OUT = frozenset({"ii", "iv", "vi"})
PATH_OUT = frozenset({"i", "ii", "vii", "viii", "ix", "xii", "xiv"})
PATH_IN = frozenset({"iii", "iv", "v", "vi", "x", "xi", "xiii"})


@dataclass(frozen=True)
class CaseReport:
    subject: int
    level: int
    case_label: Optional[str]
    matching_cases: tuple[str, ...]
    predicted_member: bool
    computed_member: bool
    consistent: bool = True  # all matching cases predict the same thing

    @property
    def agrees(self) -> bool:
        return self.consistent and self.predicted_member == self.computed_member

    def describe(self) -> str:
        return (
            f"A={format_set(self.subject)} level={self.level} case={self.case_label} "
            f"matches={','.join(self.matching_cases) or '-'} "
            f"predicted={'in' if self.predicted_member else 'out'} "
            f"computed={'in' if self.computed_member else 'out'}"
        )

    def to_report(self) -> dict:
        return {
            "subject": format_set(self.subject),
            "level": self.level,
            "case": self.case_label,
            "matching_cases": list(self.matching_cases),
            "predicted_member": self.predicted_member,
            "computed_member": self.computed_member,
            "agrees": self.agrees,
        }


# -- lifted family -----------------------------------------------------------


def _lift_cases(a: int, t: int, base: SetFamily, n: int) -> list[str]:
    k = base.n
    low = prefix(k)
    top = full_mask(n) & ~low
    a1, a2 = a & low, a & top
    base_t = iterated_closure(base, t)
    matches = []
    if a2 == 0:
        matches.append("i" if a1 in base_t else "ii")
    if a2 == top:
        base_prev = iterated_closure(base, t - 1)
        lift_prev = iterated_closure(lifted_family(base, n), t - 1)
        ok = all((e | a) in lift_prev for e in base_prev if e & ~a)
        matches.append("iii" if ok else "iv")
    if popcount(a1) >= k - t + 1:
        matches.append("v")
    if a2 != 0 and a2 != top and popcount(a1) <= k - t:
        matches.append("vi")
    return matches


def classify_lifted(a: int, t: int, base: SetFamily, n: int) -> CaseReport:
    """Classify ``a`` at closure level ``t`` of the lift of ``base`` to ``[n]``."""
    k = base.n
    if n < k + 2:
        raise UniverseTooSmall(f"need n >= k + 2 = {k + 2}, got {n}")
    if not 1 <= t <= k:
        raise LevelOutOfRange(f"level t must lie in 1..{k}, got {t}")
    if a <= 0 or a > full_mask(n):
        raise PreconditionViolated(f"{a:#x} is not a non-empty subset of [{n}]")
    matches = _lift_cases(a, t, base, n)
    # the empty-intersection and full-intersection cases come first
    label = matches[0]
    predicted = label in LIFT_IN
    consistent = all((m in LIFT_IN) == predicted for m in matches)
    computed = a in iterated_closure(lifted_family(base, n), t)
    return CaseReport(a, t, label, tuple(matches), predicted, computed, consistent)


def verify_lifted(base: SetFamily, n: int) -> list[CaseReport]:
    """Sweep every subset of [n] at every level 1..k; raise on any disagreement.

    Also checks that the lift has density ``k + 1`` and that the sets
    missing from its k-th closure are exactly the non-empty subsets of
    ``[n] - [k]``, possibly without ``[n] - [k]`` itself.
    """
    if not is_union_closed(base):
        raise PreconditionViolated("base family is not union-closed")
    k = base.n
    reports = []
    for t in range(1, k + 1):
        for a in range(1, 1 << n):
            report = classify_lifted(a, t, base, n)
            if not report.agrees:
                raise DisagreementFound(f"lifted sweep: {report.describe()}", report)
            reports.append(report)
    lifted = lifted_family(base, n)
    d = density(lifted)
    if d != k + 1:
        raise DisagreementFound(f"lift of {base} to [{n}] has density {d}, expected {k + 1}")
    top = full_mask(n) & ~prefix(k)
    level_k = iterated_closure(lifted, k)
    missing = {m for m in range(1, 1 << n) if m not in level_k}
    upper = {m for m in range(1, 1 << n) if m & ~top == 0}
    if missing != upper and missing != upper - {top}:
        raise DisagreementFound(
            f"sets missing from level {k} of the lift are not the expected down-set"
        )
    return reports


# -- path family -------------------------------------------------------------


def _path_cases(a: int, k: int, n: int) -> list[str]:
    size = popcount(a)
    full = full_mask(n)
    e = lambda *xs: mask_of(xs)  # noqa: E731
    s1, s2, sn1, sn = e(1), e(2), e(n - 1), e(n)
    first_two, last_two = s1 | s2, sn1 | sn
    within = lambda m: a & ~m == 0  # noqa: E731
    contains = lambda m: a & m == m  # noqa: E731
    without_max = a & ~(1 << (max_element(a) - 1))
    without_min = a & ~(1 << (min_element(a) - 1))
    lo, hi = min_element(a), max_element(a)
    interior = [j for j in range(lo + 1, hi) if a >> (j - 1) & 1]
    isolated = [j for j in interior if not (a >> (j - 2) & 1) and not (a >> j & 1)]
    head = full & ~(sn1 | sn)  # [n-2]
    tail = full & ~(s1 | s2)  # {3..n}
    middle = head & tail  # {3..n-2}

    big, mid = n - k - 1, n - k - 2
    matches = []
    if contains(s1) and within(full & ~s2):
        matches.append("i")
    if contains(sn) and within(full & ~sn1):
        matches.append("ii")
    if contains(first_two) and within(full & ~sn) and size == big:
        matches.append("iii")
    if contains(last_two) and within(full & ~s1) and size == big:
        matches.append("iv")
    if within(full & ~(s1 | sn)) and size == big:
        matches.append("v")
    if contains(first_two | last_two) and size == big:
        matches.append("vi")
    if within(head) and a & first_two and size == mid and not in_path_family(without_max):
        matches.append("vii")
    if within(tail) and a & last_two and size == mid and not in_path_family(without_min):
        matches.append("viii")
    if size == mid and a & first_two and a & last_two:
        matches.append("ix")
    if within(head) and size == mid and in_path_family(without_max):
        matches.append("x")
    if within(tail) and size == mid and in_path_family(without_min):
        matches.append("xi")
    if within(middle) and size == mid and isolated:
        matches.append("xii")
    if within(middle) and size == mid and not isolated:
        matches.append("xiii")
    if size <= n - k - 3:
        matches.append("xiv")
    return matches


def classify_path(a: int, k: int, n: int) -> CaseReport:
    """Classify a non-member ``a`` of the path family at closure level ``k``."""
    if n < 6:
        raise UniverseTooSmall(f"path classification needs n >= 6, got {n}")
    if not 1 <= k <= n - 5:
        raise PreconditionViolated(f"level k must lie in 1..{n - 5}, got {k}")
    if a <= 0 or a > full_mask(n):
        raise PreconditionViolated(f"{a:#x} is not a non-empty subset of [{n}]")
    if in_path_family(a):
        raise PreconditionViolated(f"{format_set(a)} is a member of the path family")
    if popcount(a) > n - k - 1:
        raise PreconditionViolated(f"{format_set(a)} has more than n - k - 1 elements")
    matches = _path_cases(a, k, n)
    hit_in = any(m in PATH_IN for m in matches)
    hit_out = any(m in PATH_OUT for m in matches)
    consistent = bool(matches) and not (hit_in and hit_out)
    predicted = hit_in and not hit_out
    computed = a in iterated_closure(path_family(n), k)
    label = matches[0] if matches else None
    return CaseReport(a, k, label, tuple(matches), predicted, computed, consistent)


def verify_path(n: int, max_k: Optional[int] = None) -> list[CaseReport]:
    """Sweep the path family over [n] for every level ``k <= n - 5``.

    Besides the classified non-members, checks that members and all sets
    of size ``>= n - k`` lie in the k-th closure, that the density is
    ``n - 1``, that ``{3}`` is in and ``{1,3,4}`` out of level ``n - 4``,
    and that level ``n - 2`` is a proper up-set.
    """
    if not 6 <= n <= 9:
        raise PreconditionViolated(f"path sweep supports 6 <= n <= 9, got {n}")
    top_k = n - 5 if max_k is None else min(max_k, n - 5)
    family = path_family(n)
    reports = []
    for k in range(1, top_k + 1):
        level = iterated_closure(family, k)
        for a in range(1, 1 << n):
            if in_path_family(a) or popcount(a) >= n - k:
                if a not in level:
                    raise DisagreementFound(
                        f"{format_set(a)} expected in level {k} (member or size >= n - k)"
                    )
                continue
            report = classify_path(a, k, n)
            if not report.agrees:
                raise DisagreementFound(f"path sweep: {report.describe()}", report)
            reports.append(report)
    d = density(family)
    if d != n - 1:
        raise DisagreementFound(f"path family over [{n}] has density {d}, expected {n - 1}")
    level = iterated_closure(family, n - 4)
    if mask_of([3]) not in level:
        raise DisagreementFound(f"{{3}} missing from level {n - 4}")
    if mask_of([1, 3, 4]) in level:
        raise DisagreementFound(f"{{1,3,4}} present in level {n - 4}")
    penultimate = iterated_closure(family, n - 2)
    if penultimate.is_power_set() or not is_up_set(penultimate):
        raise DisagreementFound(f"level {n - 2} is not a proper up-set")
    return reports
