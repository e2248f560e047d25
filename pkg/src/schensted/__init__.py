"""Bumping insertion on Young tableaux with trail recording and analysis.

The library provides the tableau value type, row and column insertion with
explicit trails, classification of how a row trail and a column trail meet,
a fused one-pass computation of (x→T)←y, and an exhaustive harness that
re-checks the commutation of the two insertions and every supporting
invariant at small sizes.
"""

from .fused import (
    CommutationReport,
    ConflictAssignment,
    InvalidResult,
    LabelsNotDistinct,
    commute_check,
    fused_insert,
    resolve_conflict,
    trail_agreement_above,
    trail_agreement_below,
)
from .harness import (
    CaseDescriptor,
    DuplicateInWord,
    SweepFailure,
    SweepSummary,
    enumerate_cases,
    enumerate_syt,
    reversal_check,
    rsk,
    run_sweep,
)
from .insertion import (
    Trail,
    TrailInconsistentWithTableau,
    TrailStep,
    XAlreadyPresent,
    column_insert,
    insert_into_row,
    row_insert,
    slide_trail,
    validate_trail,
)
from .render import RenderOptions, render_tableau, render_trail
from .tableau import (
    BoxCoord,
    ColumnNotIncreasing,
    DuplicateLabel,
    Label,
    RowNotIncreasing,
    Shape,
    ShapeNotFerrers,
    Tableau,
    TableauError,
    conjugate,
    dump_tableau,
    parse_tableau,
)
from .trails import (
    GeometricTrail,
    IntersectionReport,
    MultipleSharedBoxes,
    NotAStrongIntersection,
    WeakIntersectionDetected,
    check_relative_position,
    classify_intersection,
    geometric_trail,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
