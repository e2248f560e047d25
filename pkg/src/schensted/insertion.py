"""Row and column bumping insertion with full trail recording.

The trail of an insertion is the sequence of boxes it activates, each carrying
the label that box held *before* the insertion, followed by the newly created
box (which is unlabeled).  The insertion itself can be reconstructed from the
trail alone: slide every trail label to the next trail box and drop the
inserted value into the first box (see :func:`slide_trail`).
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Literal, Optional

from .tableau import BoxCoord, Label, Tableau, TableauError

TrailKind = Literal["row", "column"]


class XAlreadyPresent(ValueError):
    pass


class TrailInconsistentWithTableau(ValueError):
    pass


class TrailInvariantViolation(AssertionError):
    """A produced trail breaks one of its structural invariants."""


@dataclass(frozen=True)
class TrailStep:
    box: BoxCoord
    label: Optional[Label]  # None only for the final, newly created box


@dataclass(frozen=True)
class Trail:
    kind: TrailKind
    steps: tuple[TrailStep, ...]

    @property
    def boxes(self) -> tuple[BoxCoord, ...]:
        return tuple(s.box for s in self.steps)

    @property
    def labels(self) -> tuple[Label, ...]:
        """Labels of the bumped boxes, in trail order (final box excluded)."""
        return tuple(s.label for s in self.steps[:-1])

    @property
    def created_box(self) -> BoxCoord:
        return self.steps[-1].box


def validate_trail(trail: Trail) -> None:
    """Check every structural trail invariant; raise on the first violation."""
    steps = trail.steps
    if not steps:
        raise TrailInvariantViolation("trail has no steps")
    if steps[-1].label is not None:
        raise TrailInvariantViolation("final trail step must be unlabeled")
    for s in steps[:-1]:
        if s.label is None:
            raise TrailInvariantViolation("only the final step may be unlabeled")
    labels = trail.labels
    if any(u >= v for u, v in zip(labels, labels[1:])):
        raise TrailInvariantViolation("trail labels must strictly increase")
    if trail.kind == "row":
        # Step k in row k; columns weakly decreasing (weakly to the north-west).
        for k, s in enumerate(steps):
            if s.box[0] != k:
                raise TrailInvariantViolation(f"row-trail step {k} not in row {k}")
        cols = [s.box[1] for s in steps]
        if any(a < b for a, b in zip(cols, cols[1:])):
            raise TrailInvariantViolation("row-trail columns must weakly decrease")
    else:
        for k, s in enumerate(steps):
            if s.box[1] != k:
                raise TrailInvariantViolation(f"column-trail step {k} not in column {k}")
        rows = [s.box[0] for s in steps]
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise TrailInvariantViolation("column-trail rows must weakly decrease")


def insert_into_row(row: tuple[Label, ...], x: Label) -> tuple[tuple[Label, ...], Optional[Label]]:
    """Bump ``x`` into one strictly increasing row.

    Appends when ``x`` exceeds everything; otherwise replaces the smallest
    element greater than ``x`` and reports it as bumped.
    """
    if x in row:
        raise XAlreadyPresent(f"{x} already present in row")
    pos = bisect_left(row, x)
    if pos == len(row):
        return row + (x,), None
    return row[:pos] + (x,) + row[pos + 1 :], row[pos]


def row_insert(t: Tableau, x: Label) -> tuple[Tableau, Trail]:
    """Insert ``x`` by rows (T ← x), bumping upward from the first row."""
    if x in t:
        raise XAlreadyPresent(f"{x} already present in tableau")
    rows = list(t.rows)
    steps: list[TrailStep] = []
    cur = x
    r = 0
    while True:
        if r == len(rows):
            rows.append((cur,))
            steps.append(TrailStep((r, 0), None))
            break
        row = rows[r]
        pos = bisect_left(row, cur)
        if pos == len(row):
            rows[r] = row + (cur,)
            steps.append(TrailStep((r, pos), None))
            break
        bumped = row[pos]
        rows[r] = row[:pos] + (cur,) + row[pos + 1 :]
        steps.append(TrailStep((r, pos), bumped))
        cur = bumped
        r += 1
    return Tableau(tuple(rows)), Trail("row", tuple(steps))


def column_insert(x: Label, t: Tableau) -> tuple[Tableau, Trail]:
    """Insert ``x`` by columns (x → T); the exact column/row mirror of row_insert."""
    if x in t:
        raise XAlreadyPresent(f"{x} already present in tableau")
    width = len(t.rows[0]) if t.rows else 0
    cols: list[list[Label]] = [
        [row[c] for row in t.rows if len(row) > c] for c in range(width)
    ]
    steps: list[TrailStep] = []
    cur = x
    c = 0
    while True:
        if c == len(cols):
            cols.append([cur])
            steps.append(TrailStep((0, c), None))
            break
        col = cols[c]
        pos = bisect_left(col, cur)
        if pos == len(col):
            col.append(cur)
            steps.append(TrailStep((pos, c), None))
            break
        bumped = col[pos]
        col[pos] = cur
        steps.append(TrailStep((pos, c), bumped))
        cur = bumped
        c += 1
    height = max(len(col) for col in cols)
    rows = tuple(
        tuple(col[r] for col in cols if len(col) > r) for r in range(height)
    )
    return Tableau(rows), Trail("column", tuple(steps))


def slide_trail(t: Tableau, trail: Trail, inserted: Label) -> Tableau:
    """Rebuild an insertion result from its trail.

    Each labeled step's label moves to the next step's box and ``inserted``
    fills the first box.  Raises TrailInconsistentWithTableau when a labeled
    step does not match the tableau it claims to come from.
    """
    if inserted in t:
        raise XAlreadyPresent(f"{inserted} already present in tableau")
    grid = {box: t.get(box) for box in t.boxes()}
    for step in trail.steps[:-1]:
        if grid.get(step.box) != step.label:
            raise TrailInconsistentWithTableau(
                f"box {step.box} does not hold label {step.label}"
            )
    for step, nxt in zip(trail.steps, trail.steps[1:]):
        grid[nxt.box] = step.label
    grid[trail.steps[0].box] = inserted
    return tableau_from_grid(grid)


def tableau_from_grid(grid: dict[BoxCoord, Label]) -> Tableau:
    """Assemble a tableau from a box->label mapping; the shape must be contiguous."""
    if not grid:
        return Tableau()
    nrows = max(r for r, _ in grid) + 1
    rows = []
    for r in range(nrows):
        cols = sorted(c for (rr, c) in grid if rr == r)
        if cols != list(range(len(cols))):
            raise TableauError(f"row {r} has gaps: columns {cols}", (r, 0))
        rows.append(tuple(grid[(r, c)] for c in cols))
    return Tableau(tuple(rows))
