"""Spans of spans over finite sets, with machine-checked bicategory laws."""
from .category import FINSET, FINSET_OP
from .coherence import (
    AxiomReport,
    Law,
    associator,
    check_associator_naturality,
    check_pentagon,
    check_triangle,
    check_unitor_naturality,
    left_unitor,
    pentagon_pivot,
    right_unitor,
    verify_bicategory,
)
from .cospans import (
    CoTwoCell,
    Cospan,
    cospan_compose,
    demo_cobordism,
    dualize,
    dualize_cell,
)
from .errors import *  # noqa: F401,F403
from .finset import (
    Atom,
    ClassRep,
    Diagram,
    ElemId,
    FinMor,
    FinObj,
    LimitResult,
    Pair,
    Tup,
    compose,
    identity,
    inverse,
    is_iso,
    limit,
    limit_mediate,
    pullback,
    pullback_mediate,
    pushout,
    pushout_mediate,
    terminal,
)
from .spans import (
    Span,
    TwoCell,
    TwoCellWitness,
    hcompose_cells,
    hcompose_spans,
    id_two_cell,
    identity_span,
    make_two_cell,
    two_cells_equal,
    vcompose,
)
