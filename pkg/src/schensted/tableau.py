"""Young tableau value type, validity rules, and the plain-text file format.

A tableau is stored as a tuple of rows, row 0 being the first row (drawn at
the bottom in the French convention).  Rows and columns increase strictly and
all labels are pairwise distinct naturals.  Validation happens eagerly at
construction; everything downstream may assume a valid tableau.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

Label = int
BoxCoord = tuple[int, int]  # (row, col), both 0-based
Shape = tuple[int, ...]


class TableauError(ValueError):
    """A tableau invariant is violated; ``box`` points at the offender."""

    def __init__(self, message: str, box: Optional[BoxCoord] = None):
        super().__init__(message)
        self.box = box


class ShapeNotFerrers(TableauError):
    pass


class RowNotIncreasing(TableauError):
    pass


class ColumnNotIncreasing(TableauError):
    pass


class DuplicateLabel(TableauError):
    pass


def _validate(rows: tuple[tuple[Label, ...], ...]) -> None:
    for r, row in enumerate(rows):
        if len(row) == 0:
            raise ShapeNotFerrers(f"row {r} is empty", (r, 0))
        if r > 0 and len(row) > len(rows[r - 1]):
            raise ShapeNotFerrers(
                f"row {r} is longer than row {r - 1}", (r, len(rows[r - 1]))
            )
    seen: dict[Label, BoxCoord] = {}
    for r, row in enumerate(rows):
        for c, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise TableauError(f"label {v!r} at {(r, c)} is not a natural", (r, c))
            if c > 0 and row[c - 1] >= v:
                raise RowNotIncreasing(
                    f"row {r} not strictly increasing at column {c}", (r, c)
                )
            if r > 0 and rows[r - 1][c] >= v:
                raise ColumnNotIncreasing(
                    f"column {c} not strictly increasing at row {r}", (r, c)
                )
            if v in seen:
                raise DuplicateLabel(f"label {v} appears at {seen[v]} and {(r, c)}", (r, c))
            seen[v] = (r, c)


@dataclass(frozen=True)
class Tableau:
    """Immutable tableau; ``rows[0]`` is the first (bottom) row."""

    rows: tuple[tuple[Label, ...], ...] = ()

    def __post_init__(self) -> None:
        _validate(self.rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[Label]]) -> "Tableau":
        return cls(tuple(tuple(row) for row in rows))

    @property
    def shape(self) -> Shape:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def transpose(self) -> "Tableau":
        """Reflect across the diagonal: box (r, c) moves to (c, r)."""
        if not self.rows:
            return Tableau()
        cols = []
        for c in range(len(self.rows[0])):
            cols.append(tuple(row[c] for row in self.rows if len(row) > c))
        return Tableau(tuple(cols))

    def __contains__(self, v: Label) -> bool:
        return any(v in row for row in self.rows)

    def get(self, box: BoxCoord) -> Optional[Label]:
        """Label at ``box``, or ``None`` when the box lies outside the shape."""
        r, c = box
        if 0 <= r < len(self.rows) and 0 <= c < len(self.rows[r]):
            return self.rows[r][c]
        return None

    def entries(self) -> tuple[Label, ...]:
        """All labels, sorted increasingly."""
        return tuple(sorted(v for row in self.rows for v in row))

    def boxes(self) -> Iterable[BoxCoord]:
        for r, row in enumerate(self.rows):
            for c in range(len(row)):
                yield (r, c)


def conjugate(shape: Shape) -> Shape:
    """Conjugate (transposed) partition of a shape."""
    if not shape:
        return ()
    return tuple(sum(1 for n in shape if n > c) for c in range(shape[0]))


def parse_tableau(text: str) -> Tableau:
    """Parse the plain-text tableau format.

    One row per line, labels as space-separated decimal naturals, ``#``
    starts a comment, blank lines are ignored, an empty file is the empty
    tableau.  Rows are expected first row (row 0) first; when the lines are
    given in display order instead (French rendering puts row 0 last) the
    reversed reading is tried before giving up, so rendered output parses
    back to the same tableau.
    """
    rows: list[tuple[Label, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append(tuple(int(tok) for tok in line.split()))
        except ValueError:
            raise TableauError(f"line {lineno}: labels must be decimal naturals")
    try:
        return Tableau(tuple(rows))
    except TableauError as err:
        if len(rows) > 1:
            try:
                return Tableau(tuple(reversed(rows)))
            except TableauError:
                pass
        raise err


def dump_tableau(t: Tableau) -> str:
    """Serialize in the storage order (row 0 first); inverse of parse_tableau."""
    return "\n".join(" ".join(str(v) for v in row) for row in t.rows)
