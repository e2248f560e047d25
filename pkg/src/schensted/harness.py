"""Exhaustive desk-scale verification: case enumeration, sweeps, and RSK.

Every statement the library implements is re-checked here by brute force over
all standard Young tableaux up to a given size, with the two inserted values
ranging over both orders of every gap pair.  Relabeling through a strictly
increasing map changes nothing, so enumerating value set 1..n+2 covers every
order type of (T, x, y).
"""

from __future__ import annotations

import random
import time
from bisect import bisect_left
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterator, Optional

from .fused import commute_check, trail_agreement_above, trail_agreement_below
from .insertion import (
    Trail,
    column_insert,
    insert_into_row,
    row_insert,
    slide_trail,
    validate_trail,
)
from .tableau import Label, Tableau
from .trails import check_relative_position, classify_intersection

# Number of standard Young tableaux with n cells, n = 0, 1, 2, ...
INVOLUTION_NUMBERS = (1, 1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496)


class DuplicateInWord(ValueError):
    pass


@dataclass(frozen=True)
class CaseDescriptor:
    tableau: Tableau
    x: Label
    y: Label


class SweepFailure(AssertionError):
    """First failing case of a sweep, with the invariant that broke."""

    def __init__(self, case: CaseDescriptor, invariant: str, detail: str = ""):
        super().__init__(f"{invariant} failed for {case}" + (f": {detail}" if detail else ""))
        self.case = case
        self.invariant = invariant


@dataclass
class SweepSummary:
    cases_total: int = 0
    failures: int = 0
    variant_counts: dict[str, int] = field(
        default_factory=lambda: {"disjoint": 0, "shared_empty_box": 0, "strong": 0}
    )
    configuration_counts: dict[str, int] = field(
        default_factory=lambda: {"JB": 0, "IJB": 0, "AJB": 0, "IJ": 0, "AB": 0}
    )
    part_ii_hypothesis_failures: int = 0
    elapsed: float = 0.0

    def merge(self, other: "SweepSummary") -> None:
        self.cases_total += other.cases_total
        self.failures += other.failures
        for k, v in other.variant_counts.items():
            self.variant_counts[k] += v
        for k, v in other.configuration_counts.items():
            self.configuration_counts[k] += v
        self.part_ii_hypothesis_failures += other.part_ii_hypothesis_failures

    def records(self) -> list[str]:
        """Line-oriented key=value dump, stable for CI diffing."""
        lines = [
            f"cases_total={self.cases_total}",
            f"failures={self.failures}",
        ]
        lines += [f"variant.{k}={v}" for k, v in sorted(self.variant_counts.items())]
        lines += [
            f"configuration.{k}={v}"
            for k, v in sorted(self.configuration_counts.items())
        ]
        lines.append(f"part_ii_hypothesis_failures={self.part_ii_hypothesis_failures}")
        lines.append(f"elapsed_seconds={self.elapsed:.3f}")
        return lines


def enumerate_syt(n: int) -> Iterator[Tableau]:
    """All standard Young tableaux on labels 1..n, by corner placement of n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        yield Tableau()
        return
    for t in enumerate_syt(n - 1):
        rows = t.rows
        for r in range(len(rows)):
            if r == 0 or len(rows[r]) < len(rows[r - 1]):
                yield Tableau(rows[:r] + (rows[r] + (n,),) + rows[r + 1 :])
        yield Tableau(rows + ((n,),))


def enumerate_cases(n: int) -> Iterator[CaseDescriptor]:
    """All (T, x, y) with T an SYT of size n relabeled into 1..n+2.

    For every choice of two leftover values among 1..n+2, the remaining n
    values relabel the tableau order-preservingly and the leftover pair is
    emitted as (x, y) in both orders.
    """
    values = list(range(1, n + 3))
    pair_maps = []
    for x, y in combinations(values, 2):
        keep = [v for v in values if v != x and v != y]
        pair_maps.append((x, y, keep))
    for t in enumerate_syt(n):
        for x, y, keep in pair_maps:
            rows = tuple(tuple(keep[v - 1] for v in row) for row in t.rows)
            rt = Tableau(rows)
            yield CaseDescriptor(rt, x, y)
            yield CaseDescriptor(rt, y, x)


def perturb_row(
    row: tuple[Label, ...], y_pos: int, rng: random.Random
) -> tuple[Label, ...]:
    """Random valid modification of a row that keeps the element at y_pos fixed.

    Elements left of y_pos may only decrease (staying strictly increasing
    naturals); elements right of y_pos change arbitrarily as long as the row
    stays strictly increasing.
    """
    out = list(row)
    for k in range(y_pos - 1, -1, -1):
        hi = min(row[k], out[k + 1] - 1) if k + 1 <= y_pos else row[k]
        out[k] = rng.randint(k, hi)
    prev = out[y_pos]
    for k in range(y_pos + 1, len(row)):
        prev = prev + rng.randint(1, 4)
        out[k] = prev
    return tuple(out)


def check_modify_property(
    row: tuple[Label, ...], x: Label, rng: random.Random
) -> Optional[Label]:
    """One randomized instance of the bump-stability property.

    If inserting x into the row bumps some y, a random valid modification of
    the row (y kept in place, nothing left of y increased) must bump the same
    y.  Returns the bumped label, or None when x simply appends.
    """
    _, bumped = insert_into_row(row, x)
    if bumped is None:
        return None
    y_pos = bisect_left(row, x)
    modified = perturb_row(row, y_pos, rng)
    _, bumped2 = insert_into_row(modified, x)
    if bumped2 != bumped:
        raise AssertionError(
            f"modified row {modified} bumped {bumped2}, expected {bumped}"
        )
    return bumped


def check_case(case: CaseDescriptor, rng: random.Random, summary: SweepSummary) -> None:
    """Run every per-case invariant; raise SweepFailure on the first violation."""
    t, x, y = case.tableau, case.x, case.y
    try:
        _, col_trail = column_insert(x, t)
        _, row_trail = row_insert(t, y)
        validate_trail(col_trail)
        validate_trail(row_trail)
        if slide_trail(t, row_trail, y) != row_insert(t, y)[0]:
            raise AssertionError("row slide mismatch")
        if slide_trail(t, col_trail, x) != column_insert(x, t)[0]:
            raise AssertionError("column slide mismatch")
    except Exception as err:
        raise SweepFailure(case, "trail", str(err)) from err

    try:
        report = commute_check(t, x, y)
    except Exception as err:
        raise SweepFailure(case, "commutation", str(err)) from err
    if not report.all_equal:
        raise SweepFailure(case, "commutation", "left/right/fused disagree")
    inter = report.intersection
    summary.variant_counts[inter.variant] += 1
    if inter.variant == "strong":
        summary.configuration_counts[inter.configuration] += 1
        try:
            if not check_relative_position(row_trail, col_trail, inter.s_box):
                raise AssertionError("relative position violated")
        except Exception as err:
            raise SweepFailure(case, "relative_position", str(err)) from err
        try:
            if not trail_agreement_below(t, x, y):
                raise SweepFailure(case, "trail_agreement_below")
            above_equal, hypothesis = trail_agreement_above(t, x, y)
            if not hypothesis:
                summary.part_ii_hypothesis_failures += 1
            if not above_equal:
                raise SweepFailure(case, "trail_agreement_above")
        except SweepFailure:
            raise
        except Exception as err:
            raise SweepFailure(case, "trail_agreement", str(err)) from err

    # One randomized bump-stability instance on the first-row insertion.
    if t.rows:
        try:
            check_modify_property(t.rows[0], y, rng)
        except AssertionError as err:
            raise SweepFailure(case, "modify_property", str(err)) from err
    summary.cases_total += 1


def _sweep_level(n: int, seed: int, shard: int = 0, num_shards: int = 1) -> SweepSummary:
    summary = SweepSummary()
    for idx, case in enumerate(enumerate_cases(n)):
        if num_shards > 1 and idx % num_shards != shard:
            continue
        rng = random.Random(f"{seed}:{n}:{idx}")
        check_case(case, rng, summary)
    return summary


def run_sweep(max_n: int, workers: int = 1, seed: int = 0) -> SweepSummary:
    """Check every invariant over all cases with tableau size up to max_n.

    Raises SweepFailure on the first violation; otherwise returns the
    aggregated summary (deterministic for a fixed seed, independent of the
    worker count).
    """
    start = time.perf_counter()
    total = SweepSummary()
    if workers <= 1:
        for n in range(max_n + 1):
            total.merge(_sweep_level(n, seed))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_sweep_level, n, seed, shard, workers)
                for n in range(max_n + 1)
                for shard in range(workers)
            ]
            for fut in futures:
                total.merge(fut.result())
    total.elapsed = time.perf_counter() - start
    return total


def rsk(word: list[Label]) -> tuple[Tableau, Tableau]:
    """Insertion tableau P and recording tableau Q of a word of distinct labels."""
    if len(set(word)) != len(word):
        raise DuplicateInWord(f"word {word} has repeated labels")
    p = Tableau()
    q_grid: dict[tuple[int, int], int] = {}
    for step_index, v in enumerate(word, 1):
        p, trail = row_insert(p, v)
        q_grid[trail.created_box] = step_index
    q_rows: list[tuple[int, ...]] = []
    for r in range(len(p.rows)):
        q_rows.append(tuple(q_grid[(r, c)] for c in range(len(p.rows[r]))))
    return p, Tableau(tuple(q_rows))


def reversal_check(n: int) -> bool:
    """Whether P(reversed w) = transpose(P(w)) for every permutation w of 1..n."""
    for w in permutations(range(1, n + 1)):
        p, _ = rsk(list(w))
        p_rev, _ = rsk(list(reversed(w)))
        if p_rev != p.transpose():
            return False
    return True
