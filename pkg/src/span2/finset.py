"""Finite sets and functions: the concrete category everything else runs on.

Elements carry structured identifiers (atoms, pairs, labelled tuples and
merge-class representatives) so that nested constructions such as
``(X x_T Y) x_U Z`` stay printable and reproducible.  Every object keeps its
elements sorted, which makes every operation below deterministic.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import total_ordering
from math import prod
from typing import Iterable, Mapping

from .errors import (
    ApexTooLarge,
    CompositionMismatch,
    InvalidMorphism,
    InvalidObject,
    MalformedDiagram,
    NotACone,
    NotInvertible,
)

# ---------------------------------------------------------------------------
# element identifiers


@total_ordering
class ElemId:
    """Structured element identifier, ordered lexicographically on structure."""

    __slots__ = ("key", "_hash")

    def __init__(self, key):
        self.key = key
        self._hash = hash(key)

    def __eq__(self, other):
        if not isinstance(other, ElemId):
            return NotImplemented
        return self._hash == other._hash and self.key == other.key

    def __lt__(self, other):
        if not isinstance(other, ElemId):
            return NotImplemented
        return self.key < other.key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class Atom(ElemId):
    __slots__ = ("name",)

    def __init__(self, name):
        self.name = str(name)
        super().__init__((0, self.name))

    def __str__(self):
        return self.name


class Pair(ElemId):
    __slots__ = ("left", "right")

    def __init__(self, left, right):
        self.left = as_elem(left)
        self.right = as_elem(right)
        super().__init__((1, self.left.key, self.right.key))

    def __str__(self):
        return f"({self.left},{self.right})"


class Tup(ElemId):
    """Tuple of elements keyed by node label, labels in sorted order."""

    __slots__ = ("items",)

    def __init__(self, items):
        items = tuple((str(lbl), as_elem(e)) for lbl, e in items)
        labels = [lbl for lbl, _ in items]
        if labels != sorted(set(labels)):
            raise InvalidObject(f"tuple labels must be sorted and unique: {labels}")
        self.items = items
        super().__init__((2, tuple((lbl, e.key) for lbl, e in items)))

    def __getitem__(self, label):
        for lbl, e in self.items:
            if lbl == label:
                return e
        raise KeyError(label)

    def __str__(self):
        return "<" + ",".join(f"{lbl}:{e}" for lbl, e in self.items) + ">"


class ClassRep(ElemId):
    __slots__ = ("rep",)

    def __init__(self, rep):
        self.rep = as_elem(rep)
        super().__init__((3, self.rep.key))

    def __str__(self):
        return f"[{self.rep}]"


def as_elem(x) -> ElemId:
    """Coerce plain values to atoms; structured ids pass through."""
    if isinstance(x, ElemId):
        return x
    if isinstance(x, tuple) and len(x) == 2:
        return Pair(x[0], x[1])
    return Atom(x)


# ---------------------------------------------------------------------------
# objects and morphisms


class FinObj:
    """A finite set: a sorted, duplicate-free tuple of element ids.

    Equality and hashing look only at the elements; the label is cosmetic.
    """

    __slots__ = ("elements", "label", "_index")

    def __init__(self, elements: Iterable = (), label: str | None = None):
        elems = sorted(as_elem(e) for e in elements)
        for a, b in zip(elems, elems[1:]):
            if a == b:
                raise InvalidObject(f"duplicate element {a}")
        self.elements = tuple(elems)
        self.label = label
        self._index = {e: i for i, e in enumerate(self.elements)}

    @classmethod
    def _sorted(cls, elems, label=None):
        # caller guarantees strictly increasing order
        obj = cls.__new__(cls)
        obj.elements = tuple(elems)
        obj.label = label
        obj._index = {e: i for i, e in enumerate(obj.elements)}
        return obj

    @classmethod
    def of(cls, *names, label=None):
        return cls(names, label=label)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return as_elem(x) in self._index

    def index(self, x):
        return self._index[x]

    def __eq__(self, other):
        if not isinstance(other, FinObj):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        body = "{" + ",".join(map(str, self.elements)) + "}"
        return f"{self.label}={body}" if self.label else body


class FinMor:
    """A total function ``dom -> cod`` stored as images aligned with dom."""

    __slots__ = ("dom", "cod", "images")

    def __init__(self, dom: FinObj, cod: FinObj, table: Mapping):
        table = {as_elem(k): as_elem(v) for k, v in table.items()}
        missing = [x for x in dom.elements if x not in table]
        if missing:
            raise InvalidMorphism(
                f"table is not total: no image for {', '.join(map(str, missing))}"
            )
        extra = [x for x in table if x not in dom._index]
        if extra:
            raise InvalidMorphism(
                f"table has keys outside the domain: {', '.join(map(str, extra))}"
            )
        bad = [(x, y) for x, y in table.items() if y not in cod._index]
        if bad:
            x, y = bad[0]
            raise InvalidMorphism(f"image {y} of {x} is not in the codomain")
        self.dom = dom
        self.cod = cod
        self.images = tuple(table[x] for x in dom.elements)

    @classmethod
    def _raw(cls, dom, cod, images):
        # caller guarantees images are aligned with dom and land in cod
        m = cls.__new__(cls)
        m.dom, m.cod, m.images = dom, cod, tuple(images)
        return m

    @property
    def table(self) -> dict:
        return dict(zip(self.dom.elements, self.images))

    def __call__(self, x):
        return self.images[self.dom._index[as_elem(x)]]

    def __eq__(self, other):
        if not isinstance(other, FinMor):
            return NotImplemented
        return (
            self.images == other.images
            and self.dom == other.dom
            and self.cod == other.cod
        )

    def __hash__(self):
        return hash((self.dom, self.cod, self.images))

    def __repr__(self):
        pairs = ", ".join(f"{x}->{y}" for x, y in zip(self.dom.elements, self.images))
        return f"FinMor({self.dom!r} -> {self.cod!r}: {pairs})"


def compose(g: FinMor, f: FinMor) -> FinMor:
    """``g o f`` (apply f first)."""
    if f.cod != g.dom:
        raise CompositionMismatch(f"cannot compose: cod {f.cod!r} != dom {g.dom!r}")
    gi = g.images
    idx = g.dom._index
    return FinMor._raw(f.dom, g.cod, (gi[idx[y]] for y in f.images))


def identity(A: FinObj) -> FinMor:
    return FinMor._raw(A, A, A.elements)


_STAR = Atom("*")


def terminal() -> FinObj:
    return FinObj._sorted((_STAR,), label="1")


def to_terminal(A: FinObj) -> FinMor:
    return FinMor._raw(A, terminal(), (_STAR,) * len(A))


def is_iso(f: FinMor) -> bool:
    return len(f.dom) == len(f.cod) and len(set(f.images)) == len(f.images)


def inverse(f: FinMor) -> FinMor:
    if not is_iso(f):
        raise NotInvertible(f"{f!r} is not a bijection")
    back = dict(zip(f.images, f.dom.elements))
    return FinMor._raw(f.cod, f.dom, (back[y] for y in f.cod.elements))


# ---------------------------------------------------------------------------
# pullbacks


def pullback(f: FinMor, g: FinMor):
    """Chosen pullback of ``X -f-> T <-g- Y``: the pairs (x, y) with f(x) = g(y).

    Returns ``(apex, p, q)`` with p, q the coordinate projections.
    """
    if f.cod != g.cod:
        raise CompositionMismatch(f"pullback needs a cospan: {f.cod!r} != {g.cod!r}")
    fibres: dict = {}
    for y, t in zip(g.dom.elements, g.images):
        fibres.setdefault(t, []).append(y)
    xs, ys, elems = [], [], []
    # x outer, y inner over sorted lists: pairs come out already sorted
    for x, t in zip(f.dom.elements, f.images):
        for y in fibres.get(t, ()):
            xs.append(x)
            ys.append(y)
            elems.append(Pair(x, y))
    apex = FinObj._sorted(elems)
    return apex, FinMor._raw(apex, f.dom, xs), FinMor._raw(apex, g.dom, ys)


def pullback_mediate(f: FinMor, g: FinMor, h: FinMor, k: FinMor) -> FinMor:
    """The unique ``u: W -> X x_T Y`` with ``p o u = h`` and ``q o u = k``."""
    apex, _, _ = pullback(f, g)
    if h.dom != k.dom:
        raise NotACone("cone legs have different domains")
    if compose(f, h) != compose(g, k):
        raise NotACone("f o h != g o k")
    return FinMor._raw(h.dom, apex, (Pair(x, y) for x, y in zip(h.images, k.images)))


# ---------------------------------------------------------------------------
# pushouts (union-find on a tagged disjoint union)


class UnionFind:
    """Union-find whose root is always the least element of its class."""

    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        """Merge the classes of x and y; returns True if they were distinct."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if ry < rx:
            rx, ry = ry, rx
        self.parent[ry] = rx
        return True


def _tag(label, e):
    return Tup(((label, e),))


def pushout(f: FinMor, g: FinMor):
    """Pushout of ``Y <-f- B -g-> Z``: ``Y + Z`` glued along f(b) ~ g(b).

    Apex elements are ``ClassRep`` of the least tagged member of each class;
    returns ``(apex, inj_left, inj_right)``.
    """
    if f.dom != g.dom:
        raise CompositionMismatch(f"pushout needs a span: {f.dom!r} != {g.dom!r}")
    apex, (il, ir), _ = _glue(
        [("l", f.cod), ("r", g.cod)],
        [("l", f.images, "r", g.images)],
    )
    return apex, il, ir


def pushout_merges(f: FinMor, g: FinMor) -> int:
    """Number of union operations that joined two distinct classes."""
    if f.dom != g.dom:
        raise CompositionMismatch(f"pushout needs a span: {f.dom!r} != {g.dom!r}")
    _, _, merges = _glue([("l", f.cod), ("r", g.cod)], [("l", f.images, "r", g.images)])
    return merges


def pushout_mediate(f: FinMor, g: FinMor, h: FinMor, k: FinMor) -> FinMor:
    """The unique ``u: Y +_B Z -> W`` with ``u o inj_l = h`` and ``u o inj_r = k``."""
    apex, il, ir = pushout(f, g)
    if h.cod != k.cod:
        raise NotACone("cocone legs have different codomains")
    if h.dom != f.cod or k.dom != g.cod:
        raise NotACone("cocone legs do not start at the pushout's feet")
    if compose(h, f) != compose(k, g):
        raise NotACone("h o f != k o g")
    images = []
    for c in apex.elements:
        (lbl, e), = c.rep.items
        images.append(h(e) if lbl == "l" else k(e))
    return FinMor._raw(apex, h.cod, images)


def _glue(parts, relations):
    """Quotient of a tagged disjoint union.

    ``parts`` is a list of (tag, FinObj); ``relations`` a list of
    (tag_a, images_a, tag_b, images_b) identifying images_a[i] with images_b[i].
    Returns the apex, one injection per part, and the number of effective merges.
    """
    tagged = {tag: [_tag(tag, e) for e in obj.elements] for tag, obj in parts}
    uf = UnionFind(x for xs in tagged.values() for x in xs)
    merges = 0
    for ta, ia, tb, ib in relations:
        for a, b in zip(ia, ib):
            merges += uf.union(_tag(ta, a), _tag(tb, b))
    reps = {}
    for xs in tagged.values():
        for x in xs:
            r = uf.find(x)
            if r not in reps:
                reps[r] = ClassRep(r)
    apex = FinObj(reps.values())
    injections = [
        FinMor._raw(obj, apex, (reps[uf.find(x)] for x in tagged[tag]))
        for tag, obj in parts
    ]
    return apex, injections, merges


# ---------------------------------------------------------------------------
# finite diagrams and their limits


@dataclass(frozen=True)
class Diagram:
    """Finite diagram: labelled objects and labelled arrows between them."""

    nodes: Mapping[str, FinObj]
    edges: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "nodes", dict(self.nodes))
        edges = tuple(tuple(e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        seen = set()
        for label, src, dst, mor in edges:
            if label in seen:
                raise MalformedDiagram(f"duplicate edge label {label!r}")
            seen.add(label)
            for end in (src, dst):
                if end not in self.nodes:
                    raise MalformedDiagram(f"edge {label!r} has dangling endpoint {end!r}")
            if mor.dom != self.nodes[src] or mor.cod != self.nodes[dst]:
                raise MalformedDiagram(
                    f"edge {label!r} does not run from node {src!r} to node {dst!r}"
                )


@dataclass(frozen=True)
class LimitResult:
    apex: FinObj
    projections: Mapping[str, FinMor]
    diagram: Diagram = field(repr=False)


def limit(D: Diagram, max_product: int | None = None) -> LimitResult:
    """Limit by product-then-filter: all node tuples satisfying every edge.

    Edges are checked as soon as both endpoints are assigned, which prunes
    the product without changing the result or its order.
    """
    labels = sorted(D.nodes)
    size = prod(len(D.nodes[n]) for n in labels)
    if max_product is not None and size > max_product:
        raise ApexTooLarge(f"limit would enumerate {size} tuples (bound {max_product})")
    pos = {n: i for i, n in enumerate(labels)}
    # checks[i]: edges whose later endpoint (in label order) is labels[i]
    checks = [[] for _ in labels]
    for _, src, dst, mor in D.edges:
        checks[max(pos[src], pos[dst])].append((pos[src], pos[dst], mor))

    tuples = []
    current = [None] * len(labels)

    def extend(i):
        if i == len(labels):
            tuples.append(tuple(current))
            return
        for e in D.nodes[labels[i]].elements:
            current[i] = e
            if all(mor(current[s]) == current[d] for s, d, mor in checks[i]):
                extend(i + 1)

    extend(0)
    apex = FinObj._sorted([Tup(zip(labels, t)) for t in tuples])
    projections = {
        n: FinMor._raw(apex, D.nodes[n], (t[i] for t in tuples))
        for i, n in enumerate(labels)
    }
    return LimitResult(apex, projections, D)


def limit_mediate(L: LimitResult, cone: Mapping[str, FinMor]) -> FinMor:
    """The unique arrow ``W -> L.apex`` through which ``cone`` factors."""
    D = L.diagram
    if set(cone) != set(D.nodes):
        raise NotACone("cone must have one leg per diagram node")
    labels = sorted(D.nodes)
    doms = {cone[n].dom for n in labels}
    if len(doms) > 1:
        raise NotACone("cone legs have different domains")
    for n in labels:
        if cone[n].cod != D.nodes[n]:
            raise NotACone(f"cone leg {n!r} does not land in its node")
    for label, src, dst, mor in D.edges:
        if compose(mor, cone[src]) != cone[dst]:
            raise NotACone(f"cone fails the equation of edge {label!r}")
    if not labels:
        raise NotACone("empty cone has no domain; use to_terminal")
    W = cone[labels[0]].dom
    cols = [cone[n].images for n in labels]
    return FinMor._raw(W, L.apex, (Tup(zip(labels, row)) for row in zip(*cols)))


def colimit(D: Diagram) -> LimitResult:
    """Colimit of a finite diagram: tagged disjoint union glued along edges.

    ``projections`` here are the coprojections ``node -> apex``.  Used by the
    opposite-category backend; not part of the FinSet surface.
    """
    labels = sorted(D.nodes)
    apex, injections, _ = _glue(
        [(n, D.nodes[n]) for n in labels],
        [(src, mor.dom.elements, dst, mor.images) for _, src, dst, mor in D.edges],
    )
    return LimitResult(apex, dict(zip(labels, injections)), D)


def colimit_mediate(L: LimitResult, cocone: Mapping[str, FinMor]) -> FinMor:
    D = L.diagram
    if set(cocone) != set(D.nodes):
        raise NotACone("cocone must have one leg per diagram node")
    cods = {m.cod for m in cocone.values()}
    if len(cods) != 1:
        raise NotACone("cocone legs have different codomains")
    for label, src, dst, mor in D.edges:
        if compose(cocone[dst], mor) != cocone[src]:
            raise NotACone(f"cocone fails the equation of edge {label!r}")
    W = cods.pop()
    images = []
    for c in L.apex.elements:
        (lbl, e), = c.rep.items
        images.append(cocone[lbl](e))
    u = FinMor._raw(L.apex, W, images)
    for n, inj in L.projections.items():
        if compose(u, inj) != cocone[n]:
            raise NotACone(f"cocone leg {n!r} does not factor through the colimit")
    return u


def all_maps(A: FinObj, B: FinObj):
    """Every function A -> B (|B|^|A| of them), in lexicographic order."""
    for images in itertools.product(B.elements, repeat=len(A)):
        yield FinMor._raw(A, B, images)
