"""Shared brute-force oracles and hypothesis strategies.

The oracles here are deliberately naive (full products, full permutation
search, naive equivalence closure) and never call the engine's own
pullback/pushout/limit code.
"""
import itertools

import hypothesis.strategies as st
import pytest

from span2.finset import FinMor, FinObj, as_elem


def obj(*names, label=None):
    return FinObj(names, label=label)


def mor(dom, cod, table):
    return FinMor(dom, cod, table)


def maps_between(A, B):
    """All functions A -> B, as dicts."""
    for images in itertools.product(B.elements, repeat=len(A)):
        yield dict(zip(A.elements, images))


def brute_pullback_pairs(f, g):
    return sorted(
        (x, y)
        for x, y in itertools.product(f.dom.elements, g.dom.elements)
        if f.table[x] == g.table[y]
    )


def brute_limit_tuples(nodes, edges):
    """All node assignments satisfying every edge, as dicts label -> element."""
    labels = sorted(nodes)
    out = []
    for combo in itertools.product(*(nodes[n].elements for n in labels)):
        t = dict(zip(labels, combo))
        if all(m.table[t[s]] == t[d] for _, s, d, m in edges):
            out.append(t)
    return out


def naive_classes(elements, relations):
    """Equivalence classes generated by ``relations`` (pairs), by closure."""
    classes = [{e} for e in elements]
    for a, b in relations:
        ca = next(c for c in classes if a in c)
        cb = next(c for c in classes if b in c)
        if ca is not cb:
            classes.remove(cb)
            ca |= cb
    return classes


def brute_witness_iso(w1, w2):
    """Search for a bijection phi: X1 -> X2 with to_src2 o phi = to_src1 and
    to_dst2 o phi = to_dst1 (FinSet spans of spans)."""
    X1, X2 = w1.apex.elements, w2.apex.elements
    if len(X1) != len(X2):
        return False
    s1, d1 = w1.to_src.table, w1.to_dst.table
    s2, d2 = w2.to_src.table, w2.to_dst.table
    for perm in itertools.permutations(X2):
        if all(s2[y] == s1[x] and d2[y] == d1[x] for x, y in zip(X1, perm)):
            return True
    return False


def brute_cocell_iso(c1, c2):
    """Bijection phi: X1 -> X2 with phi o from_src1 = from_src2 etc."""
    X1, X2 = c1.apex.elements, c2.apex.elements
    if len(X1) != len(X2):
        return False
    for perm in itertools.permutations(X2):
        phi = dict(zip(X1, perm))
        if all(phi[c1.from_src.table[s]] == c2.from_src.table[s] for s in c1.from_src.dom) and all(
            phi[c1.from_dst.table[t]] == c2.from_dst.table[t] for t in c1.from_dst.dom
        ):
            return True
    return False


# ---------------------------------------------------------------------------
# hypothesis strategies


@st.composite
def finobjs(draw, max_size=4, prefix="e"):
    n = draw(st.integers(0, max_size))
    return FinObj([f"{prefix}{i}" for i in range(n)], label=prefix)


@st.composite
def finmors(draw, A, B):
    if len(A) and not len(B):
        raise ValueError("no maps into the empty set")
    images = [draw(st.sampled_from(B.elements)) for _ in A.elements]
    return FinMor(A, B, dict(zip(A.elements, images)))


@st.composite
def cospans(draw, max_size=4):
    """Random X -f-> T <-g- Y."""
    T = draw(finobjs(max_size, "t"))
    nx = draw(st.integers(0, max_size)) if len(T) else 0
    ny = draw(st.integers(0, max_size)) if len(T) else 0
    X = FinObj([f"x{i}" for i in range(nx)])
    Y = FinObj([f"y{i}" for i in range(ny)])
    return draw(finmors(X, T)), draw(finmors(Y, T))


@st.composite
def spans_of_finmors(draw, max_size=4):
    """Random Y <-f- B -g-> Z."""
    B = draw(finobjs(max_size, "b"))
    Y = draw(finobjs(max_size, "y"))
    Z = draw(finobjs(max_size, "z"))
    if len(B) and not (len(Y) and len(Z)):
        B = FinObj([])
    return draw(finmors(B, Y)), draw(finmors(B, Z))


@pytest.fixture
def golden_cospan():
    X = obj(1, 2, 3)
    Y = obj(4, 5)
    T = obj("a", "b")
    f = mor(X, T, {1: "a", 2: "a", 3: "b"})
    g = mor(Y, T, {4: "b", 5: "a"})
    return f, g


def E(x):
    return as_elem(x)


def pytest_terminal_summary(terminalreporter):
    acc = __import__("sys").modules.get("test_acceptance")
    if acc is not None and acc.RESULTS:
        terminalreporter.section("acceptance")
        for line in acc.RESULTS:
            terminalreporter.write_line(line)
