"""Batch checks of every closure/density claim at desk scale.

Each check takes the largest universe size to try and either returns a
one-line summary or raises :class:`DisagreementFound`.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import analysis, constructions as cons
from .closure import closure, density, iterated_closure, min_full_level, s_param
from .errors import CriterionMismatch, DisagreementFound
from .oracles import CaseReport, verify_lifted, verify_path
from .relative import (
    brute_force_closure_roots,
    covers_under_closure,
    has_closure_root,
    is_relative_transitive,
    relative_generated,
    relative_minimal_members,
    union_closed_subfamilies,
)
from .setcore import SetFamily, family_from_sets, is_union_closed, is_up_set, prefix

log = logging.getLogger(__name__)


def _fail(message: str, report: Optional[CaseReport] = None):
    raise DisagreementFound(message, report)


def check_laws(max_n: int) -> str:
    total = 0
    for n in range(1, min(max_n, 4) + 1):
        for F in analysis.all_union_closed(n):
            total += 1
            c = closure(F)
            if not is_union_closed(c):
                _fail(f"closure of {F} is not union-closed")
            if not F.issubfamily(c):
                _fail(f"closure of {F} does not contain it")
            if (c == F) != F.is_power_set():
                _fail(f"closure of {F} is not a strict extension")
            d = density(F)
            if d > n - 1:
                _fail(f"{F} has density {d} > n - 1")
            for k in range(d + 1):
                if min_full_level(iterated_closure(F, k)) > max(n - k, 1):
                    _fail(f"level {k} of {F} misses some {n - k}-set")
            if not F.is_power_set() and s_param(F) >= d:
                _fail(f"{F} has s = {s_param(F)} >= density {d}")
            if not F.is_power_set() and (d == 1) != is_up_set(F):
                _fail(f"{F}: 1-dense does not match up-set")
    return f"{total} families over n <= {min(max_n, 4)}"


def check_chain(max_n: int) -> str:
    top = min(max_n, 10)
    for n in range(2, top + 1):
        F = cons.chain_family(n)
        if density(F) != n - 1:
            _fail(f"chain over [{n}] has density {density(F)}")
        if n >= 3 and s_param(F) != n - 2:
            _fail(f"chain over [{n}] has s = {s_param(F)}")
    return f"density n-1 and s n-2 for n <= {top}"


def check_lift(max_n: int) -> str:
    sweeps = 0
    for k in range(1, 4):
        bases = analysis.all_union_closed(k)
        for n in range(k + 2, min(k + 4, max_n) + 1):
            for base in bases:
                sweeps += len(verify_lifted(base, n))
    return f"{sweeps} classified (A, t) pairs, no disagreement"


def check_path(max_n: int) -> str:
    done = []
    for n in range(6, min(max_n, 9) + 1):
        verify_path(n)
        done.append(n)
    if not done:
        return "skipped (needs n >= 6)"
    return f"sweeps agree and density n-1 for n in {done}"


def _one_dense(n: int) -> list[SetFamily]:
    return [F for F in analysis.all_union_closed(n) if not F.is_power_set() and is_up_set(F)]


def check_relative(max_n: int) -> str:
    pairs = 0
    for n in range(1, min(max_n, 4) + 1):
        for F in _one_dense(n):
            for members in union_closed_subfamilies(n, F.members):
                H = SetFamily(n, members)
                pairs += 1
                try:
                    covers = covers_under_closure(F, H)
                except CriterionMismatch as exc:
                    _fail(str(exc))
                K = relative_minimal_members(F, H)
                generated = relative_generated(F, K)
                if covers != (generated == H):
                    _fail(f"minimal-member criterion disagrees for F={F} H={H}")
    F = family_from_sets(4, [[1], [2], [1, 2], [1, 3], [1, 2, 3], [1, 2, 3, 4]])
    ok, triple = is_relative_transitive(F)
    if ok or triple != (0b1, 0b11, 0b111):
        _fail(f"expected non-transitivity witness ({{1}},{{1,2}},{{1,2,3}}), got {triple}")
    return f"{pairs} (F, H) pairs, transitivity counterexample found"


def check_roots(max_n: int) -> str:
    count = 0
    for n in range(1, min(max_n, 4) + 1):
        for F in _one_dense(n):
            cert = has_closure_root(F)
            brute = bool(brute_force_closure_roots(F, existence_only=True))
            if cert.has_root != brute:
                _fail(f"root test says {cert.has_root}, search says {brute} for {F}")
            count += 1
    for n in (5, 7):
        if n <= max_n and has_closure_root(cons.path_upset(n)).has_root:
            _fail(f"odd path up-set over [{n}] should have no root")
    for n in (6, 8):
        if n <= max_n:
            cert = has_closure_root(cons.path_upset(n))
            if not cert.has_root or closure(cert.witness_root) != cert.input:
                _fail(f"even path up-set over [{n}] should have a root")
    if max_n >= 5:
        F = cons.up_set_family([prefix(2)], 5)
        g = relative_generated(F, [prefix(2)])
        if g.members != (prefix(2), prefix(5)) or density(g) != 3:
            _fail("relative generation of [2] inside its up-set over [5] is wrong")
    return f"{count} 1-dense families agree with exhaustive search"


def check_census(max_n: int) -> str:
    out = []
    for n in range(1, min(max_n, 4) + 1):
        census = analysis.density_census(n)
        tree = analysis.closure_tree(n)
        if tree.depth() != n - 1:
            _fail(f"closure tree over [{n}] has depth {tree.depth()}")
        if tree.self_loops() != [tree.root]:
            _fail(f"closure tree over [{n}] has extra self-loops")
        out.append(f"n={n}:{census.labelled_counts}")
    return " ".join(out)


def check_probe(max_n: int) -> str:
    for n in range(5, min(max_n, 8) + 1):
        F = cons.cube_plus_universe(n)
        if density(F) != n - 1:
            _fail(f"cube plus universe over [{n}] has density {density(F)}")
    if max_n >= 6:
        probe = analysis.g_monotonicity_probe(cons.cube_plus_universe(6))
        if probe.decreased:
            _fail("g did not increase under closure at n = 6")
    for n in range(1, min(max_n, 4) + 1):
        a0 = analysis.a_value(0, n)
        if a0 != Fraction(2 ** (n - 1), 2 ** n - 1) or a0 < Fraction(1, 2):
            _fail(f"a_0 over [{n}] is {a0}")
    return "cube-plus-universe densities, g increase and a_0 values confirmed"


def _constructed(max_n: int) -> list[SetFamily]:
    out = [cons.chain_family(n) for n in range(2, min(max_n, 10) + 1)]
    for k in range(1, 4):
        for n in range(k + 2, min(k + 4, max_n) + 1):
            out.extend(cons.lifted_family(b, n) for b in analysis.all_union_closed(k))
    out += [cons.path_family(n) for n in range(6, min(max_n, 9) + 1)]
    out += [cons.path_upset(n) for n in range(5, min(max_n, 8) + 1)]
    out += [cons.cube_plus_universe(n) for n in range(5, min(max_n, 8) + 1)]
    out += [cons.loose_bound_family(n) for n in range(5, min(max_n, 8) + 1)]
    return out


def check_frankl(max_n: int) -> str:
    fams = [F for n in range(1, min(max_n, 4) + 1) for F in analysis.all_union_closed(n)]
    fams += _constructed(max_n)
    for F in fams:
        if not analysis.frankl_check(F).satisfied:
            _fail(f"frequency threshold fails for {F}")
    return f"{len(fams)} families satisfy the threshold"


CHECKS: dict[str, Callable[[int], str]] = {
    "laws": check_laws,
    "chain": check_chain,
    "lift": check_lift,
    "path": check_path,
    "relative": check_relative,
    "roots": check_roots,
    "census": check_census,
    "probe": check_probe,
    "frankl": check_frankl,
}


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    report: Optional[dict] = None


def run_check(name: str, max_n: int) -> CheckResult:
    log.info("running %s (max_n=%d)", name, max_n)
    try:
        return CheckResult(name, True, CHECKS[name](max_n))
    except DisagreementFound as exc:
        rep = exc.report.to_report() if exc.report is not None else None
        return CheckResult(name, False, str(exc), rep)


def _run_star(args):
    return run_check(*args)


def run_checks(names: list[str], max_n: int, threads: int = 1) -> list[CheckResult]:
    jobs = [(name, max_n) for name in names]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(_run_star, jobs))
    return [run_check(*job) for job in jobs]
