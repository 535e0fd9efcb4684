"""Category backends consumed by the span engine.

A backend exposes the handful of operations the bicategory construction
needs: composition, identities, chosen pullbacks with mediating arrows,
limits of finite diagrams with mediating arrows, isomorphism tests and the
canonical signature of a span of spans.  ``FINSET`` is finite sets;
``FINSET_OP`` is its opposite, where arrows are stored as FinSet functions
pointing the other way and pullbacks are FinSet pushouts.
"""
from __future__ import annotations

from collections import Counter

from . import finset as fs
from .errors import PullbackUnavailable


class FinSetCategory:
    name = "FinSet"
    opposite = False

    def dom(self, m):
        return m.dom

    def cod(self, m):
        return m.cod

    def compose(self, g, f):
        return fs.compose(g, f)

    def identity(self, A):
        return fs.identity(A)

    def pullback(self, f, g):
        return fs.pullback(f, g)

    def pullback_mediate(self, f, g, h, k):
        return fs.pullback_mediate(f, g, h, k)

    def limit(self, nodes, edges):
        return fs.limit(fs.Diagram(nodes, edges))

    def limit_mediate(self, L, cone):
        return fs.limit_mediate(L, cone)

    def is_iso(self, m):
        return fs.is_iso(m)

    def inverse(self, m):
        return fs.inverse(m)

    def signature(self, apex, to_src, to_dst):
        """Multiset of leg-image pairs, as a sorted tuple of (s, t, count)."""
        counts = Counter(zip(to_src.images, to_dst.images))
        return tuple(sorted((s, t, n) for (s, t), n in counts.items()))

    def __repr__(self):
        return self.name


class OppositeFinSetCategory(FinSetCategory):
    """FinSet^op.  An arrow ``X -> Y`` here is a FinSet function ``Y -> X``."""

    name = "FinSet^op"
    opposite = True

    def dom(self, m):
        return m.cod

    def cod(self, m):
        return m.dom

    def compose(self, g, f):
        return fs.compose(f, g)

    def pullback(self, f, g):
        return fs.pushout(f, g)

    def pullback_mediate(self, f, g, h, k):
        return fs.pushout_mediate(f, g, h, k)

    def limit(self, nodes, edges):
        flipped = [(lbl, dst, src, m) for lbl, src, dst, m in edges]
        return fs.colimit(fs.Diagram(nodes, flipped))

    def limit_mediate(self, L, cone):
        return fs.colimit_mediate(L, cone)

    def signature(self, apex, to_src, to_dst):
        """Multiset over apex points of their (src-fibre, dst-fibre) pair.

        For a cospan of cospans ``S -> X <- T`` an isomorphism of X must
        preserve which src and dst elements land on each point, so these
        fibres are the complete invariant.
        """
        src_fibre = {x: [] for x in apex.elements}
        dst_fibre = {x: [] for x in apex.elements}
        for s, x in zip(to_src.dom.elements, to_src.images):
            src_fibre[x].append(s)
        for t, x in zip(to_dst.dom.elements, to_dst.images):
            dst_fibre[x].append(t)
        counts = Counter(
            (tuple(src_fibre[x]), tuple(dst_fibre[x])) for x in apex.elements
        )
        return tuple(sorted((s, t, n) for (s, t), n in counts.items()))


class PartialFinSetCategory(FinSetCategory):
    """FinSet restricted to the cospans a predicate admits.

    Models a category where only some pullbacks exist; composing outside the
    admitted cospans raises PullbackUnavailable.
    """

    name = "FinSet|partial"

    def __init__(self, admits):
        self.admits = admits

    def pullback(self, f, g):
        if not self.admits(f, g):
            raise PullbackUnavailable(f"no chosen pullback for {f!r}, {g!r}")
        return fs.pullback(f, g)


FINSET = FinSetCategory()
FINSET_OP = OppositeFinSetCategory()
