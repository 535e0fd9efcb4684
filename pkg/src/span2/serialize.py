"""JSON encoding of objects, morphisms, spans, cospans, 2-cells and diagrams.

Element ids are a string (atom), ``{"pair": [e, e]}``, ``{"tuple": [[label,
e], ...]}`` or ``{"class": e}``.  Inside a composite value, morphism
endpoints are usually references (``"apex"``, ``"left_foot"``, a diagram
node label, ...) rather than repeated objects.  Output is deterministic:
elements sorted, tables in domain order, keys in a fixed order.
"""
from __future__ import annotations

import json
import re

from . import finset as fs
from .category import FINSET
from .cospans import CoTwoCell, Cospan
from .errors import Span2Error
from .finset import ClassRep, FinMor, FinObj, Pair, Tup
from .spans import Span, TwoCell, TwoCellWitness, make_two_cell


class DecodeError(Span2Error):
    """Input that does not decode; ``path`` is a JSON path like ``$.left_leg``."""

    def __init__(self, path, message):
        self.path = path
        self.message = message
        super().__init__(f"{path}: {message}")


# ---------------------------------------------------------------------------
# encoding


def encode_elem(e):
    if isinstance(e, fs.Atom):
        return e.name
    if isinstance(e, Pair):
        return {"pair": [encode_elem(e.left), encode_elem(e.right)]}
    if isinstance(e, Tup):
        return {"tuple": [[lbl, encode_elem(x)] for lbl, x in e.items]}
    if isinstance(e, ClassRep):
        return {"class": encode_elem(e.rep)}
    raise TypeError(f"not an element id: {e!r}")


def encode_obj(A: FinObj):
    d = {}
    if A.label is not None:
        d["label"] = A.label
    d["elements"] = [encode_elem(e) for e in A.elements]
    return d


def encode_mor(m: FinMor, dom=None, cod=None):
    """``dom``/``cod`` are reference names; full objects are written if omitted."""
    return {
        "dom": dom if dom is not None else encode_obj(m.dom),
        "cod": cod if cod is not None else encode_obj(m.cod),
        "table": [[encode_elem(x), encode_elem(y)] for x, y in zip(m.dom.elements, m.images)],
    }


def encode_span(S: Span):
    return {
        "kind": "span",
        "left_foot": encode_obj(S.left_foot),
        "right_foot": encode_obj(S.right_foot),
        "apex": encode_obj(S.apex),
        "left_leg": encode_mor(S.left_leg, "apex", "left_foot"),
        "right_leg": encode_mor(S.right_leg, "apex", "right_foot"),
    }


def encode_cospan(K: Cospan):
    return {
        "kind": "cospan",
        "left_foot": encode_obj(K.left_foot),
        "right_foot": encode_obj(K.right_foot),
        "apex": encode_obj(K.apex),
        "left_leg": encode_mor(K.left_leg, "left_foot", "apex"),
        "right_leg": encode_mor(K.right_leg, "right_foot", "apex"),
    }


def _encode_sig_part(x):
    if isinstance(x, tuple):
        return [encode_elem(e) for e in x]
    return encode_elem(x)


def encode_signature(sig):
    return [[_encode_sig_part(s), _encode_sig_part(t), n] for s, t, n in sig]


def encode_two_cell(X: TwoCell):
    w = X.witness
    return {
        "kind": "two_cell",
        "src": encode_span(X.src),
        "dst": encode_span(X.dst),
        "witness": {
            "apex": encode_obj(w.apex),
            "to_src": encode_mor(w.to_src, "apex", "src.apex"),
            "to_dst": encode_mor(w.to_dst, "apex", "dst.apex"),
        },
        "signature": encode_signature(X.signature),
    }


def encode_co_two_cell(X: CoTwoCell):
    return {
        "kind": "co_two_cell",
        "src": encode_cospan(X.src),
        "dst": encode_cospan(X.dst),
        "witness": {
            "apex": encode_obj(X.apex),
            "from_src": encode_mor(X.from_src, "src.apex", "apex"),
            "from_dst": encode_mor(X.from_dst, "dst.apex", "apex"),
        },
        "signature": encode_signature(X.signature),
    }


def encode_diagram(D: fs.Diagram):
    return {
        "nodes": {n: encode_obj(D.nodes[n]) for n in sorted(D.nodes)},
        "edges": [[lbl, s, t, encode_mor(m, s, t)] for lbl, s, t, m in D.edges],
    }


def encode_limit(L: fs.LimitResult):
    return {
        "apex": encode_obj(L.apex),
        "projections": {
            n: encode_mor(L.projections[n], "apex", encode_obj(L.diagram.nodes[n]))
            for n in sorted(L.projections)
        },
    }


def encode(value):
    for cls, fn in _ENCODERS:
        if isinstance(value, cls):
            return fn(value)
    raise TypeError(f"cannot encode {type(value).__name__}")


_ENCODERS = [
    (TwoCell, encode_two_cell),
    (CoTwoCell, encode_co_two_cell),
    (Span, encode_span),
    (Cospan, encode_cospan),
    (fs.LimitResult, encode_limit),
    (fs.Diagram, encode_diagram),
    (FinMor, encode_mor),
    (FinObj, encode_obj),
]


def dumps(value) -> str:
    return json.dumps(encode(value), indent=2) + "\n"


# ---------------------------------------------------------------------------
# decoding


def _need(d, key, path, kind=dict):
    if not isinstance(d, dict):
        raise DecodeError(path, "expected a JSON object")
    if key not in d:
        raise DecodeError(path, f"missing key {key!r}")
    v = d[key]
    if kind is not None and not isinstance(v, kind):
        raise DecodeError(f"{path}.{key}", f"expected {kind.__name__}")
    return v


def decode_elem(x, path="$"):
    if isinstance(x, str):
        return fs.Atom(x)
    if isinstance(x, dict) and len(x) == 1:
        (key, v), = x.items()
        if key == "pair" and isinstance(v, list) and len(v) == 2:
            return Pair(decode_elem(v[0], path + ".pair[0]"), decode_elem(v[1], path + ".pair[1]"))
        if key == "tuple" and isinstance(v, list):
            items = []
            for i, item in enumerate(v):
                if not (isinstance(item, list) and len(item) == 2 and isinstance(item[0], str)):
                    raise DecodeError(f"{path}.tuple[{i}]", "tuple items are [label, element]")
                items.append((item[0], decode_elem(item[1], f"{path}.tuple[{i}]")))
            try:
                return Tup(items)
            except Span2Error as exc:
                raise DecodeError(path, str(exc)) from None
        if key == "class":
            return ClassRep(decode_elem(v, path + ".class"))
    raise DecodeError(path, f"not an element id: {json.dumps(x)}")


def decode_obj(d, path="$") -> FinObj:
    elems = _need(d, "elements", path, list)
    label = d.get("label")
    if label is not None and not isinstance(label, str):
        raise DecodeError(path + ".label", "label must be a string")
    decoded = [decode_elem(e, f"{path}.elements[{i}]") for i, e in enumerate(elems)]
    try:
        A = FinObj(decoded, label=label)
    except Span2Error as exc:
        raise DecodeError(path + ".elements", f"invariant violated (no duplicates): {exc}") from None
    return A


def _resolve(ref, names, path):
    if isinstance(ref, str):
        if ref not in names:
            raise DecodeError(path, f"unknown object reference {ref!r}")
        return names[ref]
    return decode_obj(ref, path)


def decode_mor(d, names=None, path="$") -> FinMor:
    names = names or {}
    dom = _resolve(_need(d, "dom", path, None), names, path + ".dom")
    cod = _resolve(_need(d, "cod", path, None), names, path + ".cod")
    rows = _need(d, "table", path, list)
    table = {}
    for i, row in enumerate(rows):
        p = f"{path}.table[{i}]"
        if not (isinstance(row, list) and len(row) == 2):
            raise DecodeError(p, "table rows are [element, image]")
        x = decode_elem(row[0], p)
        if x in table:
            raise DecodeError(p, f"invariant violated (function): {x} listed twice")
        table[x] = decode_elem(row[1], p)
    try:
        return FinMor(dom, cod, table)
    except Span2Error as exc:
        raise DecodeError(path + ".table", f"invariant violated (totality): {exc}") from None


def _names(d, roles, path):
    names = {}
    for role in roles:
        names[role] = decode_obj(_need(d, role, path), f"{path}.{role}")
    for role in roles:
        if names[role].label is not None:
            names.setdefault(names[role].label, names[role])
    return names


def decode_span(d, path="$", category=FINSET) -> Span:
    names = _names(d, ("left_foot", "right_foot", "apex"), path)
    legs = [decode_mor(_need(d, k, path), names, f"{path}.{k}") for k in ("left_leg", "right_leg")]
    try:
        return Span(names["left_foot"], names["right_foot"], names["apex"], *legs, category)
    except Span2Error as exc:
        raise DecodeError(path, f"invariant violated (span legs): {exc}") from None


def decode_cospan(d, path="$") -> Cospan:
    names = _names(d, ("left_foot", "right_foot", "apex"), path)
    legs = [decode_mor(_need(d, k, path), names, f"{path}.{k}") for k in ("left_leg", "right_leg")]
    try:
        return Cospan(names["left_foot"], names["right_foot"], names["apex"], *legs)
    except Span2Error as exc:
        raise DecodeError(path, f"invariant violated (cospan legs): {exc}") from None


def _check_signature(d, cell, path):
    if "signature" in d:
        stored = d["signature"]
        if stored != encode_signature(cell.signature):
            raise DecodeError(path + ".signature", "stored signature does not match the witness")


def decode_two_cell(d, path="$") -> TwoCell:
    src = decode_span(_need(d, "src", path), path + ".src")
    dst = decode_span(_need(d, "dst", path), path + ".dst")
    w = _need(d, "witness", path)
    wp = path + ".witness"
    apex = decode_obj(_need(w, "apex", wp), wp + ".apex")
    names = {"apex": apex, "src.apex": src.apex, "dst.apex": dst.apex}
    to_src = decode_mor(_need(w, "to_src", wp), names, wp + ".to_src")
    to_dst = decode_mor(_need(w, "to_dst", wp), names, wp + ".to_dst")
    try:
        cell = make_two_cell(TwoCellWitness(src, dst, apex, to_src, to_dst))
    except Span2Error as exc:
        raise DecodeError(wp, f"invariant violated (commuting squares): {exc}") from None
    _check_signature(d, cell, path)
    return cell


def decode_co_two_cell(d, path="$") -> CoTwoCell:
    src = decode_cospan(_need(d, "src", path), path + ".src")
    dst = decode_cospan(_need(d, "dst", path), path + ".dst")
    w = _need(d, "witness", path)
    wp = path + ".witness"
    apex = decode_obj(_need(w, "apex", wp), wp + ".apex")
    names = {"apex": apex, "src.apex": src.apex, "dst.apex": dst.apex}
    from_src = decode_mor(_need(w, "from_src", wp), names, wp + ".from_src")
    from_dst = decode_mor(_need(w, "from_dst", wp), names, wp + ".from_dst")
    try:
        cell = CoTwoCell(src, dst, apex, from_src, from_dst)
    except Span2Error as exc:
        raise DecodeError(wp, f"invariant violated (commuting squares): {exc}") from None
    _check_signature(d, cell, path)
    return cell


def decode_diagram(d, path="$") -> fs.Diagram:
    raw_nodes = _need(d, "nodes", path)
    nodes = {n: decode_obj(v, f"{path}.nodes.{n}") for n, v in raw_nodes.items()}
    edges = []
    for i, e in enumerate(d.get("edges", [])):
        p = f"{path}.edges[{i}]"
        if isinstance(e, dict):
            e = [e.get("label"), e.get("src"), e.get("dst"), e.get("mor")]
        if not (isinstance(e, list) and len(e) == 4):
            raise DecodeError(p, "edges are [label, src, dst, morphism]")
        label, src, dst, mor = e
        edges.append((label, src, dst, decode_mor(mor, nodes, p + "[3]")))
    try:
        return fs.Diagram(nodes, edges)
    except Span2Error as exc:
        raise DecodeError(path + ".edges", f"invariant violated (well-formed diagram): {exc}") from None


def _leg_direction(d):
    # True if legs start at the apex (span), False if they land there (cospan)
    leg = d.get("left_leg", {})
    if isinstance(leg, dict):
        if leg.get("dom") == "apex" or leg.get("dom") == d.get("apex"):
            return True
        if leg.get("cod") == "apex" or leg.get("cod") == d.get("apex"):
            return False
    return True


def decode(d, path="$"):
    """Decode a span, cospan, 2-cell or diagram, dispatching on ``kind``."""
    if not isinstance(d, dict):
        raise DecodeError(path, "expected a JSON object")
    kind = d.get("kind")
    if kind is None:
        if "nodes" in d:
            kind = "diagram"
        elif "witness" in d:
            w = d["witness"]
            kind = "co_two_cell" if isinstance(w, dict) and "from_src" in w else "two_cell"
        else:
            kind = "span" if _leg_direction(d) else "cospan"
    decoders = {
        "span": decode_span,
        "cospan": decode_cospan,
        "two_cell": decode_two_cell,
        "co_two_cell": decode_co_two_cell,
        "diagram": decode_diagram,
    }
    if kind not in decoders:
        raise DecodeError(path + ".kind", f"unknown kind {kind!r}")
    return decoders[kind](d, path)


def locate(text: str, path: str) -> int:
    """Best-effort 1-based line of the value at ``path`` within ``text``."""
    pos = 0
    for key in re.findall(r"\.([A-Za-z_][\w.]*?)(?=\.|\[|$)|\[(\d+)\]", path):
        name, _ = key
        if name:
            hit = text.find(f'"{name}"', pos)
            if hit >= 0:
                pos = hit
    return text.count("\n", 0, pos) + 1
