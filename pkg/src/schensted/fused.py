"""Fused simultaneous insertion and the three-way commutation check.

``fused_insert`` computes (x→T)←y in a single pass: it takes the column trail
of x→T and the row trail of T←y, both read off the *original* tableau, slides
each label to the next box of its own trail, and resolves the conflicts that
arise where the two trails meet.  The compositional insertions serve as the
oracle that the fused result must match.
"""

from __future__ import annotations

from dataclasses import dataclass

from .insertion import Trail, column_insert, row_insert, tableau_from_grid
from .tableau import BoxCoord, Label, Tableau, TableauError
from .trails import IntersectionReport, NotAStrongIntersection, classify_intersection


class LabelsNotDistinct(ValueError):
    pass


class InvalidResult(AssertionError):
    """The fused slide produced an invalid tableau (never expected)."""


@dataclass(frozen=True)
class ConflictAssignment:
    """Labels placed in the shared box S and its two successor boxes B, J."""

    s_target: Label
    b_target: Label
    j_target: Label


@dataclass(frozen=True)
class CommutationReport:
    left: Tableau  # (x→T)←y
    right: Tableau  # x→(T←y)
    fused: Tableau
    intersection: IntersectionReport
    all_equal: bool


def resolve_conflict(a: Label, i: Label, s: Label) -> ConflictAssignment:
    """Assign labels to S, B, J where the two trails cross at a labeled box.

    ``a`` and ``i`` both want to slide into S, while ``s`` could slide into
    either successor box; the order of ``a`` and ``i`` decides.
    """
    if len({a, i, s}) != 3:
        raise LabelsNotDistinct(f"a={a}, i={i}, s={s} must be pairwise distinct")
    if not (a < s and i < s):
        raise LabelsNotDistinct(f"expected a={a} < s={s} and i={i} < s={s}")
    if i < a:
        return ConflictAssignment(s_target=i, b_target=s, j_target=a)
    return ConflictAssignment(s_target=a, b_target=i, j_target=s)


def _trail_placements(trail: Trail, inserted: Label) -> list[tuple[BoxCoord, Label]]:
    """Normal sliding: box k receives the previous label, box 0 the inserted value."""
    labels = (inserted,) + trail.labels
    return [(step.box, labels[k]) for k, step in enumerate(trail.steps)]


def fused_insert(t: Tableau, x: Label, y: Label) -> Tableau:
    """Compute (x→T)←y from the two trails of the original tableau alone."""
    if x == y:
        raise LabelsNotDistinct(f"x and y must differ, got {x}")
    _, col_trail = column_insert(x, t)
    _, row_trail = row_insert(t, y)
    report = classify_intersection(row_trail, col_trail, x, y)

    grid = {box: t.get(box) for box in t.boxes()}
    col_place = _trail_placements(col_trail, x)
    row_place = _trail_placements(row_trail, y)

    if report.variant == "disjoint":
        for box, label in col_place + row_place:
            grid[box] = label
    elif report.variant == "shared_empty_box":
        s_box = report.s_box
        # Both final placements target S; replace them by the two-case rule.
        for box, label in col_place + row_place:
            if box != s_box:
                grid[box] = label
        r0, c0 = s_box
        if report.i < report.a:
            grid[s_box] = report.i
            grid[(r0 + 1, c0)] = report.a
        else:
            grid[s_box] = report.a
            grid[(r0, c0 + 1)] = report.i
    else:
        s_box = report.s_box
        s = report.s
        assignment = resolve_conflict(report.a, report.i, s)
        ci = col_trail.boxes.index(s_box)
        ri = row_trail.boxes.index(s_box)
        b_box = col_trail.steps[ci + 1].box
        j_box = row_trail.steps[ri + 1].box
        # Skip the conflicting placements (a→S, i→S, s→B, s→J), slide the rest.
        for box, label in col_place + row_place:
            if box == s_box or label == s:
                continue
            grid[box] = label
        grid[s_box] = assignment.s_target
        grid[b_box] = assignment.b_target
        grid[j_box] = assignment.j_target

    try:
        return tableau_from_grid(grid)
    except TableauError as err:
        raise InvalidResult(f"fused slide produced an invalid tableau: {err}") from err


def commute_check(t: Tableau, x: Label, y: Label) -> CommutationReport:
    """Compare (x→T)←y, x→(T←y), and the fused one-pass computation."""
    after_col, col_trail = column_insert(x, t)
    after_row, row_trail = row_insert(t, y)
    left, _ = row_insert(after_col, y)
    right, _ = column_insert(x, after_row)
    fused = fused_insert(t, x, y)
    report = classify_intersection(row_trail, col_trail, x, y)
    return CommutationReport(
        left=left,
        right=right,
        fused=fused,
        intersection=report,
        all_equal=left == right == fused,
    )


def trail_agreement_below(t: Tableau, x: Label, y: Label) -> bool:
    """Compare the row trails of T←y and (x→T)←y below the crossing row.

    Requires a strong intersection at some box S; returns whether the two
    row trails agree (boxes and labels) on every row strictly below S's row.
    """
    after_col, col_trail = column_insert(x, t)
    _, row_trail = row_insert(t, y)
    report = classify_intersection(row_trail, col_trail, x, y)
    if report.variant != "strong":
        raise NotAStrongIntersection(f"intersection is {report.variant}")
    _, row_trail2 = row_insert(after_col, y)
    crossing_row = report.s_box[0]
    return row_trail.steps[:crossing_row] == row_trail2.steps[:crossing_row]


def trail_agreement_above(t: Tableau, x: Label, y: Label) -> tuple[bool, bool]:
    """Compare the same two row trails above the crossing row.

    Returns ``(above_equal, hypothesis_holds)`` where the hypothesis is that
    the first boxes just above the crossing row agree, with the same label.
    The hypothesis is expected to always hold; it is reported separately so a
    failure of it would be visible on its own.
    """
    after_col, col_trail = column_insert(x, t)
    _, row_trail = row_insert(t, y)
    report = classify_intersection(row_trail, col_trail, x, y)
    if report.variant != "strong":
        raise NotAStrongIntersection(f"intersection is {report.variant}")
    _, row_trail2 = row_insert(after_col, y)
    k = report.s_box[0] + 1
    s1, s2 = row_trail.steps[k:], row_trail2.steps[k:]
    hypothesis = bool(s1) and bool(s2) and s1[0] == s2[0]
    return s1 == s2, hypothesis
