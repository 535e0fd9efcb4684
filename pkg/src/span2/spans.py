"""Spans, spans of spans and their isomorphism classes.

A span ``A <- S -> B`` is a 1-cell.  A span of spans ``S <- X -> T`` between
parallel spans is a 2-cell representative; the 2-cell proper is its
isomorphism class, which we identify through a canonical signature (the
multiset of leg images of apex elements).  Compare 2-cells with
:func:`two_cells_equal`, never structurally: the witness kept inside a
:class:`TwoCell` is just one representative.

All functions take the category from their arguments, so the same code
composes spans in FinSet and cospans (spans in FinSet^op).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .category import FINSET
from .errors import NotCommuting, NotComposable, NotInvertible
from .finset import FinObj


@dataclass(frozen=True)
class Span:
    left_foot: FinObj
    right_foot: FinObj
    apex: FinObj
    left_leg: object
    right_leg: object
    category: object = field(default=FINSET, compare=False)

    def __post_init__(self):
        C = self.category
        if C.dom(self.left_leg) != self.apex or C.dom(self.right_leg) != self.apex:
            raise NotComposable("span legs must start at the apex")
        if C.cod(self.left_leg) != self.left_foot or C.cod(self.right_leg) != self.right_foot:
            raise NotComposable("span legs must end at the feet")

    def __str__(self):
        return f"{self.left_foot!r} <- {self.apex!r} -> {self.right_foot!r}"


@dataclass(frozen=True)
class TwoCellWitness:
    """A span of spans ``src <- apex -> dst`` whose two squares commute."""

    src: Span
    dst: Span
    apex: FinObj
    to_src: object
    to_dst: object

    def __post_init__(self):
        S, T = self.src, self.dst
        C = S.category
        if S.left_foot != T.left_foot or S.right_foot != T.right_foot:
            raise NotComposable("2-cell between spans with different feet")
        if C.dom(self.to_src) != self.apex or C.dom(self.to_dst) != self.apex:
            raise NotCommuting("witness legs must start at the witness apex")
        if C.cod(self.to_src) != S.apex or C.cod(self.to_dst) != T.apex:
            raise NotCommuting("witness legs must end at the span apexes")
        if C.compose(S.left_leg, self.to_src) != C.compose(T.left_leg, self.to_dst):
            raise NotCommuting("left square of the span of spans does not commute")
        if C.compose(S.right_leg, self.to_src) != C.compose(T.right_leg, self.to_dst):
            raise NotCommuting("right square of the span of spans does not commute")

    @property
    def category(self):
        return self.src.category


@dataclass(frozen=True)
class TwoCell:
    """Isomorphism class of a span of spans; ``==`` compares src, dst, signature."""

    src: Span
    dst: Span
    signature: tuple
    witness: TwoCellWitness = field(compare=False, repr=False)

    @property
    def category(self):
        return self.src.category


def make_two_cell(w: TwoCellWitness) -> TwoCell:
    sig = w.category.signature(w.apex, w.to_src, w.to_dst)
    return TwoCell(w.src, w.dst, sig, w)


def two_cell(src, dst, apex, to_src, to_dst) -> TwoCell:
    return make_two_cell(TwoCellWitness(src, dst, apex, to_src, to_dst))


def two_cells_equal(c1: TwoCell, c2: TwoCell) -> bool:
    return (
        c1.src == c2.src
        and c1.dst == c2.dst
        and c1.signature == c2.signature
    )


def identity_span(A: FinObj, category=FINSET) -> Span:
    one = category.identity(A)
    return Span(A, A, A, one, one, category)


def id_two_cell(S: Span) -> TwoCell:
    one = S.category.identity(S.apex)
    return two_cell(S, S, S.apex, one, one)


def vcompose(Y: TwoCell, X: TwoCell) -> TwoCell:
    """``Y o X``: the pullback of X's and Y's witnesses over the middle apex."""
    if X.dst != Y.src:
        raise NotComposable("vertical composition needs X.dst == Y.src")
    C = X.category
    x, y = X.witness, Y.witness
    apex, p, q = C.pullback(x.to_dst, y.to_src)
    return two_cell(
        X.src, Y.dst, apex, C.compose(x.to_src, p), C.compose(y.to_dst, q)
    )


def hcompose_spans(S: Span, S2: Span) -> Span:
    """``S ; S2`` from A to C: the chosen pullback over the shared foot B."""
    if S.right_foot != S2.left_foot:
        raise NotComposable("horizontal composition needs S.right_foot == S2.left_foot")
    C = S.category
    apex, p, q = C.pullback(S.right_leg, S2.left_leg)
    return Span(
        S.left_foot,
        S2.right_foot,
        apex,
        C.compose(S.left_leg, p),
        C.compose(S2.right_leg, q),
        C,
    )


def hcompose_cells(X: TwoCell, X2: TwoCell) -> TwoCell:
    """``X ; X2``: pullback of the two witnesses over B, legs by mediation."""
    if X.src.right_foot != X2.src.left_foot:
        raise NotComposable("horizontal composition of 2-cells across different feet")
    C = X.category
    x, x2 = X.witness, X2.witness
    S, S2, T, T2 = X.src, X2.src, X.dst, X2.dst
    apex, a, b = C.pullback(
        C.compose(S.right_leg, x.to_src), C.compose(S2.left_leg, x2.to_src)
    )
    src = hcompose_spans(S, S2)
    dst = hcompose_spans(T, T2)
    p = C.pullback_mediate(
        S.right_leg, S2.left_leg, C.compose(x.to_src, a), C.compose(x2.to_src, b)
    )
    q = C.pullback_mediate(
        T.right_leg, T2.left_leg, C.compose(x.to_dst, a), C.compose(x2.to_dst, b)
    )
    return two_cell(src, dst, apex, p, q)


def is_invertible_witness(X: TwoCell) -> bool:
    C = X.category
    return C.is_iso(X.witness.to_src) and C.is_iso(X.witness.to_dst)


def invert(X: TwoCell) -> TwoCell:
    """Inverse of a 2-cell whose witness legs are both isomorphisms.

    The inverse is represented on the apex of X.dst, with identity src leg.
    """
    if not is_invertible_witness(X):
        raise NotInvertible("only 2-cells with isomorphic witness legs are inverted here")
    C = X.category
    w = X.witness
    back = C.compose(w.to_src, C.inverse(w.to_dst))
    return two_cell(X.dst, X.src, X.dst.apex, C.identity(X.dst.apex), back)
