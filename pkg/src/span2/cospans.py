"""Cospans, composed by pushout, and a toy cobordism model.

A cospan in FinSet is a span in FinSet^op; :func:`dualize` moves between the
two readings without touching the data.  Composition here is computed
directly with pushouts, while the coherence suite for cospans reuses the span
engine over ``FINSET_OP``, so the two paths can be compared.

The cobordism demo replaces manifolds by finite sets of boundary components:
a "cobordism" ``M`` from ``A`` to ``B`` is a cospan ``A -> M <- B`` sending
each boundary circle to the connected component of M containing it.  Gluing
along a shared boundary is the pushout.  Collars exist to make such gluings
possible for manifolds; in FinSet every pushout exists, so this toy keeps the
categorical content and nothing of the smooth structure.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import finset as fs
from .category import FINSET, FINSET_OP
from .coherence import Law, run_check
from .errors import NotCommuting, NotComposable
from .finset import FinObj
from .spans import Span, TwoCell, make_two_cell, TwoCellWitness


@dataclass(frozen=True)
class Cospan:
    """``left_foot -> apex <- right_foot`` with legs read in ``category``."""

    left_foot: FinObj
    right_foot: FinObj
    apex: FinObj
    left_leg: object
    right_leg: object
    category: object = field(default=FINSET, compare=False)

    def __post_init__(self):
        C = self.category
        if C.dom(self.left_leg) != self.left_foot or C.dom(self.right_leg) != self.right_foot:
            raise NotComposable("cospan legs must start at the feet")
        if C.cod(self.left_leg) != self.apex or C.cod(self.right_leg) != self.apex:
            raise NotComposable("cospan legs must land in the apex")


@dataclass(frozen=True)
class CoTwoCell:
    """A cospan of cospans ``src.apex -> apex <- dst.apex`` in FinSet."""

    src: Cospan
    dst: Cospan
    apex: FinObj
    from_src: fs.FinMor
    from_dst: fs.FinMor
    signature: tuple = field(default=None)

    def __post_init__(self):
        S, T = self.src, self.dst
        if S.left_foot != T.left_foot or S.right_foot != T.right_foot:
            raise NotComposable("cospan 2-cell between different feet")
        if self.from_src.dom != S.apex or self.from_dst.dom != T.apex:
            raise NotCommuting("2-cell legs must start at the cospan apexes")
        if self.from_src.cod != self.apex or self.from_dst.cod != self.apex:
            raise NotCommuting("2-cell legs must land in the 2-cell apex")
        for side in ("left_leg", "right_leg"):
            a = fs.compose(self.from_src, getattr(S, side))
            b = fs.compose(self.from_dst, getattr(T, side))
            if a != b:
                raise NotCommuting(f"{side} square of the cospan of cospans fails")
        sig = FINSET_OP.signature(self.apex, self.from_src, self.from_dst)
        if self.signature is not None and tuple(self.signature) != sig:
            raise NotCommuting("stored signature does not match the witness")
        object.__setattr__(self, "signature", sig)

    def same_class(self, other) -> bool:
        return self.src == other.src and self.dst == other.dst and self.signature == other.signature


def _flip(category):
    return FINSET_OP if category is FINSET else FINSET


def dualize(x):
    """Reread a span in C as a cospan in C^op, and vice versa."""
    if isinstance(x, Span):
        return Cospan(x.left_foot, x.right_foot, x.apex, x.left_leg, x.right_leg,
                      _flip(x.category))
    if isinstance(x, Cospan):
        return Span(x.left_foot, x.right_foot, x.apex, x.left_leg, x.right_leg,
                    _flip(x.category))
    raise TypeError(f"cannot dualize {type(x).__name__}")


def dualize_cell(x):
    """TwoCell over FinSet^op <-> CoTwoCell over FinSet."""
    if isinstance(x, TwoCell):
        if x.category is not FINSET_OP:
            raise TypeError("only 2-cells over FinSet^op dualize to FinSet cospans")
        w = x.witness
        return CoTwoCell(dualize(x.src), dualize(x.dst), w.apex, w.to_src, w.to_dst)
    if isinstance(x, CoTwoCell):
        return make_two_cell(TwoCellWitness(
            dualize(x.src), dualize(x.dst), x.apex, x.from_src, x.from_dst
        ))
    raise TypeError(f"cannot dualize {type(x).__name__}")


def identity_cospan(A: FinObj) -> Cospan:
    one = fs.identity(A)
    return Cospan(A, A, A, one, one)


def cospan_compose(C1: Cospan, C2: Cospan) -> Cospan:
    """Glue C1 and C2 along their shared foot (pushout in FinSet)."""
    if C1.category is not FINSET or C2.category is not FINSET:
        raise TypeError("cospan_compose works on cospans in FinSet")
    if C1.right_foot != C2.left_foot:
        raise NotComposable("cospans do not share the middle foot")
    apex, il, ir = fs.pushout(C1.right_leg, C2.left_leg)
    return Cospan(
        C1.left_foot, C2.right_foot, apex,
        fs.compose(il, C1.left_leg), fs.compose(ir, C2.right_leg),
    )


def co_vcompose(Y: CoTwoCell, X: CoTwoCell) -> CoTwoCell:
    """``Y o X`` glued along the middle cospan's apex."""
    if X.dst != Y.src:
        raise NotComposable("vertical composition needs X.dst == Y.src")
    apex, il, ir = fs.pushout(X.from_dst, Y.from_src)
    return CoTwoCell(
        X.src, Y.dst, apex, fs.compose(il, X.from_src), fs.compose(ir, Y.from_dst)
    )


def co_hcompose_cells(X: CoTwoCell, X2: CoTwoCell) -> CoTwoCell:
    if X.src.right_foot != X2.src.left_foot:
        raise NotComposable("horizontal composition across different feet")
    S, S2, T, T2 = X.src, X2.src, X.dst, X2.dst
    apex, a, b = fs.pushout(
        fs.compose(X.from_src, S.right_leg), fs.compose(X2.from_src, S2.left_leg)
    )
    src, dst = cospan_compose(S, S2), cospan_compose(T, T2)
    p = fs.pushout_mediate(
        S.right_leg, S2.left_leg, fs.compose(a, X.from_src), fs.compose(b, X2.from_src)
    )
    q = fs.pushout_mediate(
        T.right_leg, T2.left_leg, fs.compose(a, X.from_dst), fs.compose(b, X2.from_dst)
    )
    return CoTwoCell(src, dst, apex, p, q)


def boundary(n: int, prefix: str = "c") -> FinObj:
    """``n`` labelled boundary circles."""
    return FinObj([f"{prefix}{i}" for i in range(n)], label=prefix)


def cobordism(incoming: FinObj, outgoing: FinObj, components, attach) -> Cospan:
    """Cospan ``incoming -> components <- outgoing``; ``attach`` maps circles to components."""
    M = FinObj(components, label="M")
    attach = {fs.as_elem(c): m for c, m in attach.items()}
    return Cospan(
        incoming, outgoing, M,
        fs.FinMor(incoming, M, {c: attach[c] for c in incoming}),
        fs.FinMor(outgoing, M, {c: attach[c] for c in outgoing}),
    )


def demo_cobordism(n_circles_in: int, n_circles_out: int, seed: int,
                   trials: int = 10, max_obj: int = 3):
    """Run the coherence suite on random cobordisms from n_in to n_out circles.

    Each law is checked on ``trials`` instances whose outer boundaries are the
    given circle sets; interior boundaries and components are random.
    """
    if n_circles_in < 0 or n_circles_out < 0:
        raise ValueError("circle counts must be non-negative")
    first = boundary(n_circles_in, "in")
    last = boundary(n_circles_out, "out")
    return [
        run_check(law, seed, t, max_obj, FINSET_OP, first=first, last=last)
        for law in Law
        for t in range(trials)
    ]
