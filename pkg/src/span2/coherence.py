"""Associator, unitors and machine checks of the bicategory laws.

Orientation follows the construction being checked:

* the associator at (S, S', S'') runs from ``S;(S';S'')`` to ``(S;S');S''``
  and is represented by the limit L of the zig-zag ``S -> B <- S' -> C <- S''``;
* ``right_unitor(S)`` runs ``I_A ; S => S`` and ``left_unitor(S)`` runs
  ``S ; I_B => S``.  These names put the identity span on the opposite side
  from the more common convention.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from enum import Enum

from .category import FINSET
from .errors import NotCommuting, NotComposable
from .generate import (
    instance_rng,
    random_cell,
    random_feet,
    random_parallel,
    random_span,
)
from .spans import (
    Span,
    TwoCell,
    hcompose_cells,
    hcompose_spans,
    id_two_cell,
    identity_span,
    two_cell,
    vcompose,
)


class Law(str, Enum):
    VerticalAssoc = "VerticalAssoc"
    VerticalUnits = "VerticalUnits"
    Interchange = "Interchange"
    HIdentityFunctoriality = "HIdentityFunctoriality"
    AssociatorNaturality = "AssociatorNaturality"
    Pentagon = "Pentagon"
    UnitorNaturality = "UnitorNaturality"
    Triangle = "Triangle"


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of one law on one instance.

    ``seed`` and ``trial`` (with the law and the size bound quoted in the
    evidence) regenerate the instance via :func:`build_instance`.
    """

    law: Law
    seed: int
    trial: int
    passed: bool
    evidence: str

    def to_json(self) -> dict:
        d = asdict(self)
        d["law"] = self.law.value
        return d


# ---------------------------------------------------------------------------
# nested composites and the zig-zag limit


def right_nested(spans):
    """``S1;(S2;(...;Sn))``"""
    if len(spans) == 1:
        return spans[0]
    return hcompose_spans(spans[0], right_nested(spans[1:]))


def left_nested(spans):
    """``((S1;S2);...);Sn``"""
    if len(spans) == 1:
        return spans[0]
    return hcompose_spans(left_nested(spans[:-1]), spans[-1])


def _mediate_right(spans, legs):
    C = spans[0].category
    if len(spans) == 1:
        return legs[0]
    rest = right_nested(spans[1:])
    inner = _mediate_right(spans[1:], legs[1:])
    return C.pullback_mediate(spans[0].right_leg, rest.left_leg, legs[0], inner)


def _mediate_left(spans, legs):
    C = spans[0].category
    if len(spans) == 1:
        return legs[0]
    init = left_nested(spans[:-1])
    inner = _mediate_left(spans[:-1], legs[:-1])
    return C.pullback_mediate(init.right_leg, spans[-1].left_leg, inner, legs[-1])


def _check_chain(spans):
    for S, S2 in zip(spans, spans[1:]):
        if S.right_foot != S2.left_foot:
            raise NotComposable("spans do not form a composable chain")


def zigzag_limit(spans):
    """Limit of ``S1 -> B1 <- S2 -> B2 <- ... <- Sn`` over the interior feet."""
    _check_chain(spans)
    C = spans[0].category
    nodes, edges = {}, []
    for i, S in enumerate(spans, 1):
        nodes[f"s{i}"] = S.apex
    for i, (S, S2) in enumerate(zip(spans, spans[1:]), 1):
        nodes[f"f{i}"] = S.right_foot
        edges.append((f"r{i}", f"s{i}", f"f{i}", S.right_leg))
        edges.append((f"l{i + 1}", f"s{i + 1}", f"f{i}", S2.left_leg))
    return C.limit(nodes, edges)


def limit_cell(spans) -> TwoCell:
    """The 2-cell ``right_nested(spans) <- L -> left_nested(spans)``.

    Both legs are the unique mediating arrows out of the zig-zag limit L,
    hence isomorphisms.
    """
    L = zigzag_limit(spans)
    legs = [L.projections[f"s{i}"] for i in range(1, len(spans) + 1)]
    return two_cell(
        right_nested(spans),
        left_nested(spans),
        L.apex,
        _mediate_right(spans, legs),
        _mediate_left(spans, legs),
    )


def associator(S: Span, S2: Span, S3: Span) -> TwoCell:
    """``S;(S2;S3) => (S;S2);S3`` carried by the limit of the base zig-zag."""
    return limit_cell([S, S2, S3])


def pentagon_pivot(S1, S2, S3, S4) -> TwoCell:
    """``S1;(S2;(S3;S4)) => ((S1;S2);S3);S4`` carried by the 4-span limit."""
    return limit_cell([S1, S2, S3, S4])


def right_unitor(S: Span) -> TwoCell:
    """``I_A ; S => S``, witness apex S with legs ``s -> (f(s), s)`` and 1."""
    C = S.category
    A = S.left_foot
    I_A = identity_span(A, C)
    one = C.identity(S.apex)
    to_src = C.pullback_mediate(C.identity(A), S.left_leg, S.left_leg, one)
    return two_cell(hcompose_spans(I_A, S), S, S.apex, to_src, one)


def left_unitor(S: Span) -> TwoCell:
    """``S ; I_B => S``, witness apex S with legs ``s -> (s, g(s))`` and 1."""
    C = S.category
    B = S.right_foot
    I_B = identity_span(B, C)
    one = C.identity(S.apex)
    to_src = C.pullback_mediate(S.right_leg, C.identity(B), one, S.right_leg)
    return two_cell(hcompose_spans(S, I_B), S, S.apex, to_src, one)


# ---------------------------------------------------------------------------
# law checks


def _describe_span(name, S):
    return f"{name}:{len(S.left_foot)}<-{len(S.apex)}->{len(S.right_foot)}"


def _describe_cell(name, X):
    return f"{name}:{len(X.witness.apex)}"


def _sig(sig):
    return "{" + ", ".join(
        f"{_fmt(s)}->{_fmt(t)}" + (f" x{n}" if n > 1 else "") for s, t, n in sig
    ) + "}"


def _fmt(x):
    if isinstance(x, tuple):
        return "{" + ",".join(map(str, x)) + "}"
    return str(x)


def _compare(law, lhs, rhs, instance, seed, trial):
    if lhs == rhs:
        return AxiomReport(law, seed, trial, True, instance)
    parts = [instance]
    if lhs.src != rhs.src or lhs.dst != rhs.dst:
        parts.append("boundary spans differ")
    parts.append(f"lhs={_sig(lhs.signature)}")
    parts.append(f"rhs={_sig(rhs.signature)}")
    return AxiomReport(law, seed, trial, False, "; ".join(parts))


def _guard(law, seed, trial, instance, build):
    try:
        lhs, rhs = build()
    except NotCommuting as exc:
        return AxiomReport(law, seed, trial, False, f"{instance}; {exc}")
    return _compare(law, lhs, rhs, instance, seed, trial)


def check_vertical_assoc(X, Y, Z, *, seed=0, trial=0, instance="") -> AxiomReport:
    return _guard(Law.VerticalAssoc, seed, trial, instance, lambda: (
        vcompose(Z, vcompose(Y, X)),
        vcompose(vcompose(Z, Y), X),
    ))


def check_vertical_units(X, *, seed=0, trial=0, instance="") -> AxiomReport:
    law = Law.VerticalUnits
    left = _compare(law, vcompose(id_two_cell(X.dst), X), X, instance, seed, trial)
    if not left.passed:
        return left
    return _compare(law, vcompose(X, id_two_cell(X.src)), X, instance, seed, trial)


def check_interchange(X, Y, X2, Y2, *, seed=0, trial=0, instance="") -> AxiomReport:
    """``(Y o X);(Y2 o X2) = (Y;Y2) o (X;X2)``"""
    return _guard(Law.Interchange, seed, trial, instance, lambda: (
        hcompose_cells(vcompose(Y, X), vcompose(Y2, X2)),
        vcompose(hcompose_cells(Y, Y2), hcompose_cells(X, X2)),
    ))


def check_h_identity(S, S2, *, seed=0, trial=0, instance="") -> AxiomReport:
    return _guard(Law.HIdentityFunctoriality, seed, trial, instance, lambda: (
        hcompose_cells(id_two_cell(S), id_two_cell(S2)),
        id_two_cell(hcompose_spans(S, S2)),
    ))


def check_associator_naturality(
    X, X2, X3, *, associator=associator, seed=0, trial=0, instance=""
) -> AxiomReport:
    def build():
        a_src = associator(X.src, X2.src, X3.src)
        a_dst = associator(X.dst, X2.dst, X3.dst)
        return (
            vcompose(a_dst, hcompose_cells(X, hcompose_cells(X2, X3))),
            vcompose(hcompose_cells(hcompose_cells(X, X2), X3), a_src),
        )

    return _guard(Law.AssociatorNaturality, seed, trial, instance, build)


def pentagon_paths(S1, S2, S3, S4, associator=associator):
    """The two composites ``S1;(S2;(S3;S4)) => ((S1;S2);S3);S4``.

    Returns ``(two_edge_path, three_edge_path)``.
    """
    S12 = hcompose_spans(S1, S2)
    S23 = hcompose_spans(S2, S3)
    S34 = hcompose_spans(S3, S4)
    two = vcompose(associator(S12, S3, S4), associator(S1, S2, S34))
    three = vcompose(
        hcompose_cells(associator(S1, S2, S3), id_two_cell(S4)),
        vcompose(
            associator(S1, S23, S4),
            hcompose_cells(id_two_cell(S1), associator(S2, S3, S4)),
        ),
    )
    return two, three


def check_pentagon(
    S1, S2, S3, S4, *, associator=associator, seed=0, trial=0, instance=""
) -> AxiomReport:
    return _guard(
        Law.Pentagon, seed, trial, instance,
        lambda: pentagon_paths(S1, S2, S3, S4, associator),
    )


def triangle_paths(S, S2, associator=associator, left_unitor=left_unitor,
                   right_unitor=right_unitor):
    """Both sides of the triangle ``S;(I_B;S2) => S;S2``.

    Returns ``(via_associator, direct)`` where ``via_associator`` is
    ``(l_S ; 1) o a_{S,I_B,S2}`` and ``direct`` is ``1 ; r_{S2}``.
    """
    I_B = identity_span(S.right_foot, S.category)
    via = vcompose(
        hcompose_cells(left_unitor(S), id_two_cell(S2)),
        associator(S, I_B, S2),
    )
    direct = hcompose_cells(id_two_cell(S), right_unitor(S2))
    return via, direct


def check_triangle(S, S2, *, associator=associator, left_unitor=left_unitor,
                   right_unitor=right_unitor, seed=0, trial=0, instance="") -> AxiomReport:
    return _guard(
        Law.Triangle, seed, trial, instance,
        lambda: triangle_paths(S, S2, associator, left_unitor, right_unitor),
    )


def check_unitor_naturality(X, *, right_unitor=right_unitor, left_unitor=left_unitor,
                            seed=0, trial=0, instance="") -> AxiomReport:
    law = Law.UnitorNaturality
    C = X.category

    def build_r():
        I_A = identity_span(X.src.left_foot, C)
        return (
            vcompose(right_unitor(X.dst), hcompose_cells(id_two_cell(I_A), X)),
            vcompose(X, right_unitor(X.src)),
        )

    def build_l():
        I_B = identity_span(X.src.right_foot, C)
        return (
            vcompose(left_unitor(X.dst), hcompose_cells(X, id_two_cell(I_B))),
            vcompose(X, left_unitor(X.src)),
        )

    r = _guard(law, seed, trial, instance + " [right]", build_r)
    if not r.passed:
        return r
    return _guard(law, seed, trial, instance + " [left]", build_l)


# ---------------------------------------------------------------------------
# random instances and the full verifier


def _spans(rng, feet, max_obj, name, C):
    spans = []
    hints = None
    for i, (A, B) in enumerate(zip(feet, feet[1:])):
        S = random_span(rng, A, B, max_obj, f"{name}{i + 1}_", C, left_hints=hints)
        hints = list(S.right_leg.images) if not C.opposite else None
        spans.append(S)
    return spans


def _parallel(rng, A, B, count, max_obj, name, C):
    spans = [random_span(rng, A, B, max_obj, f"{name}0_", C)]
    for k in range(1, count):
        spans.append(random_parallel(rng, spans[-1], max_obj, f"{name}{k}_"))
    return spans


def _companions(rng, spans, max_obj, name):
    return [
        random_parallel(rng, S, max_obj, f"{name}{i + 1}_") for i, S in enumerate(spans)
    ]


def build_instance(law: Law, seed: int, trial: int, max_obj: int,
                   category=FINSET, first=None, last=None):
    """Regenerate the arguments the checker for ``law`` received.

    Returns ``(args, description)``.
    """
    law = Law(law)
    rng = instance_rng(category.name, seed, law.value, trial, max_obj)
    C = category

    def feet(n):
        return random_feet(rng, n, max_obj, first, last)

    if law in (Law.VerticalAssoc, Law.VerticalUnits, Law.UnitorNaturality):
        A, B = feet(2)
        n = 4 if law is Law.VerticalAssoc else 2
        spans = _parallel(rng, A, B, n, max_obj, "s", C)
        cells = []
        for k in range(n - 1):
            hints = set(cells[-1].witness.to_dst.images) if cells else None
            cells.append(
                random_cell(rng, spans[k], spans[k + 1], max_obj, f"x{k}_", hints)
            )
        desc = " ".join(
            [_describe_span(f"S{k}", s) for k, s in enumerate(spans)]
            + [_describe_cell(f"X{k}", x) for k, x in enumerate(cells)]
        )
        return cells, desc
    if law is Law.Interchange:
        A, B, Cf = feet(3)
        row1 = _parallel(rng, A, B, 3, max_obj, "s", C)
        row2 = [random_span(rng, B, Cf, max_obj, "t0_", C,
                            left_hints=list(row1[0].right_leg.images) or None)]
        row2 += [random_parallel(rng, row2[-1], max_obj, f"t{k}_") for k in (1, 2)]
        X = random_cell(rng, row1[0], row1[1], max_obj, "x_")
        Y = random_cell(rng, row1[1], row1[2], max_obj, "y_", set(X.witness.to_dst.images))
        X2 = random_cell(rng, row2[0], row2[1], max_obj, "xx_")
        Y2 = random_cell(rng, row2[1], row2[2], max_obj, "yy_",
                         set(X2.witness.to_dst.images))
        cells = [X, Y, X2, Y2]
        desc = " ".join(
            [_describe_span(f"S{k}", s) for k, s in enumerate(row1 + row2)]
            + [_describe_cell(n, x) for n, x in zip(["X", "Y", "X'", "Y'"], cells)]
        )
        return cells, desc
    if law is Law.AssociatorNaturality:
        fs4 = feet(4)
        srcs = _spans(rng, fs4, max_obj, "s", C)
        dsts = _companions(rng, srcs, max_obj, "t")
        cells = [
            random_cell(rng, S, T, max_obj, f"x{k}_")
            for k, (S, T) in enumerate(zip(srcs, dsts))
        ]
        desc = " ".join(
            [_describe_span(f"S{k}", s) for k, s in enumerate(srcs)]
            + [_describe_span(f"T{k}", s) for k, s in enumerate(dsts)]
            + [_describe_cell(f"X{k}", x) for k, x in enumerate(cells)]
        )
        return cells, desc
    n_feet = {Law.HIdentityFunctoriality: 3, Law.Triangle: 3, Law.Pentagon: 5}[law]
    spans = _spans(rng, feet(n_feet), max_obj, "s", C)
    return spans, " ".join(_describe_span(f"S{k}", s) for k, s in enumerate(spans))


_CHECKS = {
    Law.VerticalAssoc: check_vertical_assoc,
    Law.VerticalUnits: check_vertical_units,
    Law.Interchange: check_interchange,
    Law.HIdentityFunctoriality: check_h_identity,
    Law.AssociatorNaturality: check_associator_naturality,
    Law.Pentagon: check_pentagon,
    Law.UnitorNaturality: check_unitor_naturality,
    Law.Triangle: check_triangle,
}


def run_check(law, seed, trial, max_obj, category=FINSET, first=None, last=None):
    law = Law(law)
    args, desc = build_instance(law, seed, trial, max_obj, category, first, last)
    instance = (
        f"law={law.value} cat={category.name} seed={seed} trial={trial} "
        f"max_obj={max_obj}"
    )
    if first is not None or last is not None:
        instance += f" ends={len(first) if first else '-'},{len(last) if last else '-'}"
    instance += f" | {desc}"
    return _CHECKS[law](*args, seed=seed, trial=trial, instance=instance)


def verify_bicategory(seed: int, max_obj: int, trials: int, category=FINSET,
                      laws=tuple(Law)) -> list[AxiomReport]:
    """One report per (law, trial), in that order."""
    if max_obj < 0 or trials < 1:
        raise ValueError("need max_obj >= 0 and trials >= 1")
    return [
        run_check(law, seed, t, max_obj, category)
        for law in laws
        for t in range(trials)
    ]
