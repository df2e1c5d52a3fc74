"""Batch verification of structural claims over enumerated semigroup families.

A job names an enumeration mode plus a bound and a list of named checks;
the driver streams the family, evaluates each check per semigroup, and
aggregates pass counters plus full report records for any counterexample.
Aggregation is commutative, so subtree workers (capped by the NSG_THREADS
environment variable) merge deterministically; exports are byte-stable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Callable, Iterator

from .bettiposet import classify, verify_theorems
from .ci import is_complete_intersection
from .enumeration import (
    Path,
    children,
    enumerate_by_frobenius,
    enumerate_by_genus,
    enumerate_ci_by_frobenius,
    format_token,
    walk_genus_tree,
)
from .factorization import betti_elements
from .semigroup import NumericalSemigroup
from .witt import (
    exponent_sequence,
    exponents_from_cyclotomic_factors,
    factor_into_cyclotomics,
    is_cyclotomic,
)

FILTERS: dict[str, Callable[[NumericalSemigroup], bool]] = {
    "ci": is_complete_intersection,
    "cyclotomic": is_cyclotomic,
    "betti-sorted": lambda S: classify(S).betti_sorted,
    "betti-divisible": lambda S: classify(S).betti_divisible,
    "unique-betti": lambda S: classify(S).unique_betti,
    "forest": lambda S: classify(S).betti_forest,
}


@dataclass(frozen=True)
class EnumerationJob:
    """What to enumerate: mode, bound, optional filters and resume point."""

    mode: str  # by-genus | by-frobenius | ci-by-frobenius
    limit: int
    filters: tuple[str, ...] = ()
    resume_token: str | None = None

    def __post_init__(self):
        if self.mode not in ("by-genus", "by-frobenius", "ci-by-frobenius"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.limit < 0:
            raise ValueError("limit must be >= 0")
        for name in self.filters:
            if name not in FILTERS:
                raise ValueError(f"unknown filter {name!r}")


def enumerate_job(job: EnumerationJob) -> Iterator[NumericalSemigroup]:
    """Stream the family of a job, filters applied.

    A by-frobenius job filtered on "ci" is routed through the gluing-based
    enumerator: it reaches Frobenius numbers the full tree cannot.
    """
    if job.mode == "by-genus":
        stream = enumerate_by_genus(job.limit)
    elif job.mode == "ci-by-frobenius":
        stream = enumerate_ci_by_frobenius(job.limit)
    elif "ci" in job.filters:
        stream = enumerate_ci_by_frobenius(job.limit)
    else:
        stream = enumerate_by_frobenius(job.limit)
    redundant = {"ci"} if job.mode == "ci-by-frobenius" or (
        job.mode == "by-frobenius" and "ci" in job.filters
    ) else set()
    predicates = [FILTERS[name] for name in job.filters if name not in redundant]
    for S in stream:
        if all(predicate(S) for predicate in predicates):
            yield S


@dataclass(frozen=True)
class ReportRecord:
    """Everything worth reporting about one semigroup, recomputable from it."""

    generators: tuple[int, ...]
    frobenius: int
    genus: int
    betti: dict[int, tuple[int, int]]  # b -> (nc, isolated count)
    exponent_prefix: tuple[int, ...]
    flags: dict[str, bool | None]
    verdicts: dict[str, bool]

    def to_json_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "frobenius": self.frobenius,
            "genus": self.genus,
            "betti": {str(b): list(v) for b, v in self.betti.items()},
            "exponent_prefix": [str(e) for e in self.exponent_prefix],
            "flags": self.flags,
            "verdicts": self.verdicts,
        }


def build_report(S: NumericalSemigroup, verdicts: dict[str, bool] | None = None) -> ReportRecord:
    catalog = betti_elements(S)
    flags = classify(S)
    return ReportRecord(
        generators=S.generators,
        frobenius=S.frobenius,
        genus=S.genus,
        betti={b: (data.nc, data.isolated_count) for b, data in catalog.items()},
        exponent_prefix=tuple(exponent_sequence(S)),
        flags=flags.to_json_dict(),
        verdicts=dict(verdicts or {}),
    )


def _check_ci_cyclotomic(S: NumericalSemigroup) -> bool:
    return is_complete_intersection(S) == is_cyclotomic(S)


def _theorem_check(check_id: str) -> Callable[[NumericalSemigroup], bool]:
    def check(S: NumericalSemigroup) -> bool:
        report = verify_theorems(S)
        return next(c.passed for c in report.checks if c.check_id == check_id)

    return check


def _full_exponents(S: NumericalSemigroup) -> dict[int, int] | None:
    """Complete exponent support for finitely supported sequences, else None."""
    if S.is_trivial:
        return {}
    if not S.is_symmetric():
        return None
    factorization = factor_into_cyclotomics(S.polynomial())
    if not factorization.complete:
        return None
    return exponents_from_cyclotomic_factors(factorization.factors)


def _check_negative_support_is_generators(S: NumericalSemigroup) -> bool:
    """Finite support only: indices with negative exponent = minimal generators."""
    exponents = _full_exponents(S)
    if exponents is None:
        return True  # vacuous: the claim quantifies over finitely supported sequences
    negative = {j for j, e in exponents.items() if e < 0}
    return negative == set(S.generators)


def _check_betti_exponents(S: NumericalSemigroup) -> bool:
    """Finite support only: e_b = nc - 1 at every Betti element."""
    exponents = _full_exponents(S)
    if exponents is None:
        return True
    catalog = betti_elements(S)
    support = {j for j, e in exponents.items() if j >= 2 and j not in S.generators}
    if not set(catalog) <= support:
        return False
    return all(exponents.get(b, 0) == data.nc - 1 for b, data in catalog.items())


CHECKS: dict[str, Callable[[NumericalSemigroup], bool]] = {
    "ci-cyclotomic": _check_ci_cyclotomic,
    "thm1": _theorem_check("exponent-values-at-generators-and-gaps"),
    "thm2": _theorem_check("chain-betti-vs-chain-support"),
    "thm5.2": _theorem_check("minimal-betti-vs-minimal-support"),
    "conj-msg": _check_negative_support_is_generators,
    "conj-betti": _check_betti_exponents,
}


@dataclass
class VerificationSummary:
    job: EnumerationJob
    checks: tuple[str, ...]
    total: int = 0
    pass_counts: dict[str, int] = field(default_factory=dict)
    counterexamples: list[ReportRecord] = field(default_factory=list)
    last_token: str | None = None

    @property
    def all_pass(self) -> bool:
        return not self.counterexamples

    def to_json_dict(self) -> dict:
        return {
            "mode": self.job.mode,
            "limit": self.job.limit,
            "filters": list(self.job.filters),
            "checks": list(self.checks),
            "total": self.total,
            "pass_counts": dict(sorted(self.pass_counts.items())),
            "counterexamples": [r.to_json_dict() for r in self.counterexamples],
            "all_pass": self.all_pass,
            "last_token": self.last_token,
        }


def _evaluate(S: NumericalSemigroup, checks: tuple[str, ...]):
    verdicts = {name: CHECKS[name](S) for name in checks}
    record = None
    if not all(verdicts.values()):
        record = build_report(S, verdicts)
    return verdicts, record


def worker_count() -> int:
    value = os.environ.get("NSG_THREADS", "1")
    try:
        return max(1, int(value))
    except ValueError:
        return 1


def _subtree_task(args) -> tuple[int, dict[str, int], list[ReportRecord], str]:
    generators, base_path, g_max, checks = args
    root = NumericalSemigroup(generators)
    total = 0
    pass_counts = {name: 0 for name in checks}
    counterexamples: list[ReportRecord] = []
    last = base_path

    def visit(S: NumericalSemigroup, path: Path):
        nonlocal total, last
        total += 1
        last = path
        verdicts, record = _evaluate(S, checks)
        for name, ok in verdicts.items():
            pass_counts[name] += ok
        if record is not None:
            counterexamples.append(record)
        if len(path) < g_max:
            for g, child in children(S):
                visit(child, path + (g,))

    visit(root, base_path)
    return total, pass_counts, counterexamples, format_token(last)


def run_verification(
    job: EnumerationJob,
    checks,
    progress: Callable[[int, str], None] | None = None,
) -> VerificationSummary:
    """Run the named checks over a job's family and aggregate the outcome.

    Counterexamples are collected as full report records (sorted by
    generators in the summary). A progress callback receives (count, token)
    every few hundred semigroups and the final summary carries the last
    token, so interrupted runs can resume. Parallel workers split the genus
    tree at a fixed shallow depth and merge in subtree order; resumed runs
    are processed serially.
    """
    checks = tuple(checks)
    for name in checks:
        if name not in CHECKS:
            raise ValueError(f"unknown check {name!r}")
    summary = VerificationSummary(job, checks, pass_counts={name: 0 for name in checks})

    workers = worker_count()
    if (
        job.mode == "by-genus"
        and workers > 1
        and job.resume_token is None
        and not job.filters
        and job.limit >= 4
    ):
        _run_parallel(job, checks, summary, workers)
    else:
        _run_serial(job, checks, summary, progress)
    summary.counterexamples.sort(key=lambda r: r.generators)
    return summary


def _run_serial(job, checks, summary, progress):
    if job.mode == "by-genus":
        resume = None
        if job.resume_token is not None:
            from .enumeration import parse_token

            resume = parse_token(job.resume_token)
        stream = walk_genus_tree(job.limit, resume=resume)
    else:
        stream = ((S, ()) for S in enumerate_job(job))
    predicates = [FILTERS[name] for name in job.filters] if job.mode == "by-genus" else []
    for S, path in stream:
        if predicates and not all(p(S) for p in predicates):
            continue
        verdicts, record = _evaluate(S, checks)
        summary.total += 1
        for name, ok in verdicts.items():
            summary.pass_counts[name] += ok
        if record is not None:
            summary.counterexamples.append(record)
        summary.last_token = format_token(path)
        if progress is not None and summary.total % 500 == 0:
            progress(summary.total, summary.last_token)


_SPLIT_DEPTH = 4


def _run_parallel(job, checks, summary, workers):
    split_depth = min(_SPLIT_DEPTH, job.limit - 1)
    frontier: list[tuple[tuple[int, ...], Path]] = []

    # nodes above the split depth are processed here; the subtrees hanging
    # off the split depth go to the pool in DFS order
    def shallow(S: NumericalSemigroup, path: Path):
        verdicts, record = _evaluate(S, checks)
        summary.total += 1
        for name, ok in verdicts.items():
            summary.pass_counts[name] += ok
        if record is not None:
            summary.counterexamples.append(record)
        for g, child in children(S):
            child_path = path + (g,)
            if len(child_path) == split_depth:
                frontier.append((child.generators, child_path))
            else:
                shallow(child, child_path)

    shallow(NumericalSemigroup(1), ())
    tasks = [(generators, path, job.limit, checks) for generators, path in frontier]
    with Pool(workers) as pool:
        for total, pass_counts, counterexamples, last in pool.imap(_subtree_task, tasks):
            summary.total += total
            for name, count in pass_counts.items():
                summary.pass_counts[name] += count
            summary.counterexamples.extend(counterexamples)
            summary.last_token = last
