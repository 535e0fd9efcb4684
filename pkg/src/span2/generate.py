"""Seeded random instances for law checking.

Sizes are drawn by :func:`random_size` (empty now and then, otherwise
uniform up to ``max_obj``); tables are uniform except where a generator
deliberately reuses points so that composites are not vacuous.  Everything is driven by a caller-owned
``random.Random`` and is reproducible from its seed.
"""
from __future__ import annotations

import random

from . import finset as fs
from .category import FINSET
from .finset import FinMor, FinObj
from .spans import Span, two_cell


def instance_rng(*parts) -> random.Random:
    """RNG for one (seed, law, trial, ...) instance; string seeding is stable."""
    return random.Random(":".join(map(str, parts)))


EMPTY_PROB = 0.1


def random_size(rng, max_obj) -> int:
    """0 with probability EMPTY_PROB, else uniform in 1..max_obj.

    Plain uniform 0..max_obj makes some draw in a long chain empty almost
    every time, which degenerates composite instances to the empty case.
    """
    if max_obj == 0 or rng.random() < EMPTY_PROB:
        return 0
    return rng.randint(1, max_obj)


def random_obj(rng, max_obj, prefix, size=None) -> FinObj:
    n = random_size(rng, max_obj) if size is None else size
    return FinObj([f"{prefix}{i}" for i in range(n)], label=prefix)


def random_map(rng, A: FinObj, B: FinObj) -> FinMor:
    if len(A) and not len(B):
        raise ValueError(f"no map from nonempty {A!r} to the empty set")
    return FinMor._raw(A, B, (rng.choice(B.elements) for _ in A.elements))


def random_feet(rng, count, max_obj, first=None, last=None):
    """``count`` consecutive feet A0..A{count-1}; the ends may be pinned."""
    feet = [random_obj(rng, max_obj, f"{chr(ord('a') + i)}") for i in range(count)]
    if first is not None:
        feet[0] = first
    if last is not None:
        feet[-1] = last
    return feet


def _pick(rng, foot, hints):
    if hints and rng.random() < 0.5:
        return rng.choice(hints)
    return rng.choice(foot.elements)


def random_span(rng, A, B, max_obj, prefix, category=FINSET, left_hints=None) -> Span:
    """Random span A <- S -> B.

    ``left_hints`` (points of A, typically the right-leg images of the
    previous span in a chain) are reused for half the left-leg values so
    that chained pullbacks are not almost always empty.
    """
    if category.opposite:
        # a FinSet cospan A -> M <- B; M needs a point if a foot is inhabited
        n = random_size(rng, max_obj)
        if (len(A) or len(B)) and n == 0:
            n = 1
        M = random_obj(rng, max_obj, prefix, size=n)
        return Span(A, B, M, random_map(rng, A, M), random_map(rng, B, M), category)
    n = random_size(rng, max_obj) if (len(A) and len(B)) else 0
    S = random_obj(rng, max_obj, prefix, size=n)
    left = FinMor._raw(S, A, (_pick(rng, A, left_hints) for _ in range(n)))
    return Span(A, B, S, left, random_map(rng, S, B), category)


def random_parallel(rng, S: Span, max_obj, prefix) -> Span:
    """Random span with S's feet; half its points copy the leg values of a point of S.

    Uniform tables rarely put two parallel spans over the same (a, b), which
    would leave almost every 2-cell between them empty.
    """
    C = S.category
    if C.opposite:
        return random_span(rng, S.left_foot, S.right_foot, max_obj, prefix, C)
    A, B = S.left_foot, S.right_foot
    n = random_size(rng, max_obj) if (len(A) and len(B)) else 0
    T = random_obj(rng, max_obj, prefix, size=n)
    legs = list(zip(S.left_leg.images, S.right_leg.images))
    values = [
        rng.choice(legs) if legs and rng.random() < 0.8
        else (rng.choice(A.elements), rng.choice(B.elements))
        for _ in range(n)
    ]
    return Span(
        A, B, T,
        FinMor._raw(T, A, (a for a, _ in values)),
        FinMor._raw(T, B, (b for _, b in values)),
        C,
    )


def random_cell(rng, S: Span, T: Span, max_obj, prefix="x", src_hints=None):
    """A random 2-cell S => T (always valid; possibly with empty apex).

    ``src_hints`` are points of S.apex to favour, e.g. the points the
    previous cell in a vertical chain lands on.
    """
    if S.category.opposite:
        return _random_cocell(rng, S, T, max_obj, prefix)
    compatible = [
        (s, t)
        for s, sl, sr in zip(S.apex.elements, S.left_leg.images, S.right_leg.images)
        for t, tl, tr in zip(T.apex.elements, T.left_leg.images, T.right_leg.images)
        if sl == tl and sr == tr
    ]
    n = random_size(rng, max_obj) if compatible else 0
    hinted = [st for st in compatible if src_hints and st[0] in src_hints]
    picks = [
        rng.choice(hinted) if hinted and rng.random() < 0.8 else rng.choice(compatible)
        for _ in range(n)
    ]
    X = FinObj([f"{prefix}{i}" for i in range(n)], label=prefix)
    # picks are i.i.d., so pairing them with X's sorted elements is fair
    to_src = FinMor._raw(X, S.apex, (s for s, _ in picks))
    to_dst = FinMor._raw(X, T.apex, (t for _, t in picks))
    return two_cell(S, T, X, to_src, to_dst)


def _random_cocell(rng, S, T, max_obj, prefix):
    # every cospan of cospans S.apex -> X <- T.apex factors through the
    # gluing U of S.apex + T.apex along both feet; take a random quotient of
    # U and maybe add a stray point
    nodes = {"a": S.left_foot, "b": S.right_foot, "s": S.apex, "t": T.apex}
    edges = [
        ("sl", "a", "s", S.left_leg),
        ("tl", "a", "t", T.left_leg),
        ("sr", "b", "s", S.right_leg),
        ("tr", "b", "t", T.right_leg),
    ]
    U = fs.colimit(fs.Diagram(nodes, edges))
    k = rng.randint(1, len(U.apex)) if len(U.apex) else 0
    assign = {u: rng.randrange(k) for u in U.apex.elements}
    used = sorted(set(assign.values()))
    extra = rng.randint(0, 1) if max_obj else 0
    X = FinObj([f"{prefix}{i}" for i in range(len(used) + extra)], label=prefix)
    name = {c: fs.Atom(f"{prefix}{i}") for i, c in enumerate(used)}
    q = FinMor._raw(U.apex, X, (name[assign[u]] for u in U.apex.elements))
    return two_cell(
        S, T, X,
        fs.compose(q, U.projections["s"]),
        fs.compose(q, U.projections["t"]),
    )
