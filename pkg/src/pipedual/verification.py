"""
Executable checks for the duality between reduced pipe dreams and
minimal antidiagonal families, with machine-readable reports.

The central identity: the transversal dual of the antidiagonal family of
w is exactly the set of reduced pipe dreams of w, and dually.  The
supporting checks localize a failure: every reduced pipe dream meets
every antidiagonal of the family; every minimal transversal is a reduced
pipe dream tracing weakly above w in Bruhat order; inside any rectangle
the largest crossing-free antidiagonal of a reduced pipe dream has
exactly the rank of that rectangle; and dualization is an involution on
antichain families.

A failing check always carries a counterexample family; reports also
carry non-asserted observation counters (see the ``stats`` field).
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import factorial

from .antidiagonals import antidiagonal_family
from .permutations import (
    Permutation,
    all_permutations,
    bruhat_geq,
    identity,
    length,
    rank_matrix,
)
from .pipedreams import PipeDream, enumerate_rp, is_reduced, trace
from .transversals import (
    SetFamily,
    dual_with_nonminimal,
    family_from_json_obj,
    family_to_json_obj,
    is_transversal,
    transversal_dual,
)

# check names in failure-localization order: supporting claims first,
# the headline duality last
CHECK_TRANSVERSALITY = "transversality"
CHECK_DUAL_REDUCEDNESS = "dual_reducedness"
CHECK_RANK_ANTIDIAGONAL = "rank_antidiagonal"
CHECK_DOUBLE_DUAL = "double_dual"
CHECK_DUALITY = "duality"
CHECK_BRUHAT_ORACLE = "bruhat_oracle"

ALL_CHECKS = (
    CHECK_TRANSVERSALITY,
    CHECK_DUAL_REDUCEDNESS,
    CHECK_RANK_ANTIDIAGONAL,
    CHECK_DOUBLE_DUAL,
    CHECK_DUALITY,
)

BRUHAT_ORACLE_MAX_N = 5


@dataclass
class CheckResult:
    passed: bool
    counterexample: SetFamily | None = None

    def __post_init__(self):
        if not self.passed and self.counterexample is None:
            raise ValueError("a failing check must carry a counterexample")


@dataclass
class VerificationReport:
    permutation: Permutation
    checks: dict[str, CheckResult]
    stats: dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.checks.values())

    def failed_checks(self) -> list[str]:
        return [name for name, result in self.checks.items() if not result.passed]


@dataclass
class VerificationRun:
    """Outcome of a sweep over S_n: reports for the permutations finished
    before the budget ran out, in lexicographic order."""

    n: int
    reports: list[VerificationReport]
    exhausted: bool
    elapsed: float

    @property
    def passed_count(self) -> int:
        return sum(1 for report in self.reports if report.passed)


def _difference_family(left: SetFamily, right: SetFamily) -> SetFamily:
    members = set(left.members) ^ set(right.members)
    return SetFamily.from_sets(left.n, members)


def verify_theorem(w: Permutation) -> VerificationReport:
    """Check that dualizing the antidiagonal family yields the reduced
    pipe dreams, and dualizing those yields the family back."""
    rp = enumerate_rp(w)
    ad = antidiagonal_family(w)
    dual_ad = transversal_dual(ad)
    dual_rp = transversal_dual(rp)
    ok = dual_ad == rp and dual_rp == ad
    counterexample = None
    if not ok:
        counterexample = _difference_family(
            dual_ad if dual_ad != rp else dual_rp, rp if dual_ad != rp else ad
        )
    off_staircase = sum(
        1 for member in ad.members if any(r + c > w.n for (r, c) in member)
    )
    return VerificationReport(
        permutation=w,
        checks={CHECK_DUALITY: CheckResult(ok, counterexample)},
        stats={"antidiagonals_off_staircase": off_staircase},
    )


def verify_claim1(w: Permutation) -> VerificationReport:
    """Check that every reduced pipe dream of w meets every member of the
    antidiagonal family of w."""
    ad = antidiagonal_family(w)
    offenders = [
        member for member in enumerate_rp(w).members if not is_transversal(member, ad)
    ]
    result = (
        CheckResult(True)
        if not offenders
        else CheckResult(False, SetFamily.from_sets(w.n, offenders))
    )
    return VerificationReport(w, {CHECK_TRANSVERSALITY: result})


def verify_claim2(w: Permutation) -> VerificationReport:
    """Check that every minimal transversal of the antidiagonal family,
    read as a pipe dream, is reduced and traces to a permutation weakly
    above w in Bruhat order.

    Also records how many non-minimal transversals the final dualization
    round discarded, and how many of those were reduced pipe dreams; the
    counts are observations, not assertions.
    """
    dual, nonminimal = dual_with_nonminimal(antidiagonal_family(w))
    offenders = []
    for member in dual.members:
        try:
            dream = PipeDream(w.n, frozenset(member))
        except ValueError:
            offenders.append(member)
            continue
        if not (is_reduced(dream) and bruhat_geq(trace(dream), w)):
            offenders.append(member)
    reduced_nonminimal = 0
    for member in nonminimal.members:
        try:
            dream = PipeDream(w.n, frozenset(member))
        except ValueError:
            continue
        if is_reduced(dream):
            reduced_nonminimal += 1
    result = (
        CheckResult(True)
        if not offenders
        else CheckResult(False, SetFamily.from_sets(w.n, offenders))
    )
    return VerificationReport(
        w,
        {CHECK_DUAL_REDUCEDNESS: result},
        stats={
            "nonminimal_transversals_seen": len(nonminimal),
            "reduced_nonminimal_transversals": reduced_nonminimal,
        },
    )


def max_elbow_antidiagonal(dream: PipeDream, p: int, q: int) -> int:
    """Largest antidiagonal inside [p] x [q] avoiding every crossing tile
    of the pipe dream: longest strictly-northeast chain over elbow boxes,
    by dynamic programming row by row from the bottom."""
    if not (1 <= p <= dream.n and 1 <= q <= dream.n):
        raise IndexError(f"rectangle ({p}, {q}) out of range for n={dream.n}")
    best = 0
    # below[c] = longest chain with bottom box in a lower row and column <= c
    below = [0] * (q + 1)
    for r in range(p, 0, -1):
        row_best = [0] * (q + 1)
        for c in range(1, q + 1):
            if (r, c) not in dream.crosses:
                row_best[c] = 1 + below[c - 1]
                if row_best[c] > best:
                    best = row_best[c]
        merged = [0] * (q + 1)
        for c in range(1, q + 1):
            merged[c] = max(merged[c - 1], below[c], row_best[c])
        below = merged
    return best


def verify_rank_antidiagonal_law(w: Permutation) -> VerificationReport:
    """Check that for every reduced pipe dream of w and every rectangle,
    the largest crossing-free antidiagonal has size exactly the rank."""
    rm = rank_matrix(w)
    for member in enumerate_rp(w).members:
        dream = PipeDream(w.n, frozenset(member))
        for p in range(1, w.n + 1):
            for q in range(1, w.n + 1):
                if max_elbow_antidiagonal(dream, p, q) != rm.entry(p, q):
                    witness = SetFamily.from_sets(w.n, [member, [(p, q)]])
                    return VerificationReport(
                        w, {CHECK_RANK_ANTIDIAGONAL: CheckResult(False, witness)}
                    )
    return VerificationReport(w, {CHECK_RANK_ANTIDIAGONAL: CheckResult(True)})


def verify_double_dual(w: Permutation) -> VerificationReport:
    """Check that dualizing twice returns the antidiagonal family."""
    ad = antidiagonal_family(w)
    twice = transversal_dual(transversal_dual(ad))
    result = (
        CheckResult(True)
        if twice == ad
        else CheckResult(False, _difference_family(twice, ad))
    )
    return VerificationReport(w, {CHECK_DOUBLE_DUAL: result})


def _permutation_matrix_boxes(w: Permutation) -> list[tuple[int, int]]:
    return [(i, w.images[i - 1]) for i in range(1, w.n + 1)]


def verify_bruhat_oracle(n: int) -> VerificationReport:
    """Check the rank-matrix comparison against an independent Bruhat
    oracle: the reflexive-transitive closure of transpositions that
    increase inversion count by exactly one.

    The report is keyed to the identity of S_n; a counterexample family
    holds the permutation matrices of an offending ordered pair.
    """
    if n > BRUHAT_ORACLE_MAX_N:
        raise ValueError(f"closure oracle is capped at n <= {BRUHAT_ORACLE_MAX_N}")
    perms = list(all_permutations(n))
    index = {w.images: i for i, w in enumerate(perms)}
    lengths = [length(w) for w in perms]
    above = [0] * len(perms)  # above[i]: bitmask of {v : v >= perms[i]}
    for i in sorted(range(len(perms)), key=lambda k: -lengths[k]):
        mask = 1 << i
        img = list(perms[i].images)
        for a in range(n):
            for b in range(a + 1, n):
                img[a], img[b] = img[b], img[a]
                j = index[tuple(img)]
                img[a], img[b] = img[b], img[a]
                if lengths[j] == lengths[i] + 1:
                    mask |= above[j]
        above[i] = mask
    for i, w in enumerate(perms):
        for j, v in enumerate(perms):
            if bruhat_geq(v, w) != bool(above[i] >> j & 1):
                witness = SetFamily.from_sets(
                    n, [_permutation_matrix_boxes(v), _permutation_matrix_boxes(w)]
                )
                return VerificationReport(
                    identity(n), {CHECK_BRUHAT_ORACLE: CheckResult(False, witness)}
                )
    return VerificationReport(identity(n), {CHECK_BRUHAT_ORACLE: CheckResult(True)})


def verify_permutation(w: Permutation) -> VerificationReport:
    """Run every per-permutation check, supporting claims first, and merge
    the results into a single report."""
    parts = [
        verify_claim1(w),
        verify_claim2(w),
        verify_rank_antidiagonal_law(w),
        verify_double_dual(w),
        verify_theorem(w),
    ]
    checks: dict[str, CheckResult] = {}
    stats: dict[str, int] = {}
    for part in parts:
        checks.update(part.checks)
        stats.update(part.stats)
    return VerificationReport(w, checks, stats)


def _verify_worker(images: tuple[int, ...]) -> VerificationReport:
    return verify_permutation(Permutation(images))


def verify_range(
    n: int, budget_seconds: float | None = None, jobs: int = 1
) -> VerificationRun:
    """Run the full check suite for every permutation of S_n in
    lexicographic order.  Stops early, keeping the finished prefix, once
    the time budget is exceeded; budget exhaustion is a status, not an
    error.  With jobs > 1 the permutations are distributed over worker
    processes and reports are merged back in order."""
    if n < 1:
        raise ValueError("n must be at least 1")
    start = time.monotonic()
    deadline = None if budget_seconds is None else start + budget_seconds
    total = factorial(n)
    reports: list[VerificationReport] = []
    exhausted = False
    if jobs <= 1:
        for w in all_permutations(n):
            if deadline is not None and time.monotonic() > deadline:
                exhausted = True
                break
            reports.append(verify_permutation(w))
    else:
        images = [w.images for w in all_permutations(n)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            stream = pool.map(_verify_worker, images, chunksize=16)
            for report in stream:
                reports.append(report)
                if deadline is not None and time.monotonic() > deadline:
                    break
            if len(reports) < total:
                exhausted = True
                pool.shutdown(wait=True, cancel_futures=True)
    return VerificationRun(n, reports, exhausted, time.monotonic() - start)


def report_to_json_obj(report: VerificationReport) -> dict:
    return {
        "w": list(report.permutation.images),
        "checks": {
            name: {
                "pass": result.passed,
                "counterexample": (
                    None
                    if result.counterexample is None
                    else family_to_json_obj(result.counterexample)
                ),
            }
            for name, result in report.checks.items()
        },
        "stats": dict(report.stats),
    }


def report_from_json_obj(obj: dict) -> VerificationReport:
    checks = {
        name: CheckResult(
            entry["pass"],
            None
            if entry["counterexample"] is None
            else family_from_json_obj(entry["counterexample"]),
        )
        for name, entry in obj["checks"].items()
    }
    return VerificationReport(
        Permutation(tuple(obj["w"])), checks, dict(obj.get("stats", {}))
    )


def reports_to_json(reports: list[VerificationReport]) -> str:
    return json.dumps(
        [report_to_json_obj(r) for r in reports], separators=(",", ":")
    )


def reports_from_json(text: str) -> list[VerificationReport]:
    return [report_from_json_obj(obj) for obj in json.loads(text)]
