"""Acceptance gate: one test per headline criterion, zero tolerance.

Each test records a ``PASS``/``FAIL`` line; the lines are printed at the end
of the pytest run (see ``conftest.pytest_terminal_summary``) and when this
file is executed directly::

    python3 tests/test_acceptance.py
"""
import json
import subprocess
import sys
import time
from pathlib import Path

import pytest

from span2 import finset as fs
from span2.category import FINSET_OP
from span2.coherence import Law, build_instance, pentagon_paths, pentagon_pivot, verify_bicategory
from span2.cospans import CoTwoCell, cospan_compose, dualize, dualize_cell
from span2.finset import Diagram, FinMor, FinObj, Pair
from span2.generate import instance_rng, random_cell, random_feet, random_parallel, random_span
from span2.spans import hcompose_cells, hcompose_spans, two_cell, two_cells_equal, vcompose

sys.path.insert(0, str(Path(__file__).parent))
from conftest import (  # noqa: E402
    brute_cocell_iso,
    brute_limit_tuples,
    brute_witness_iso,
    maps_between,
)

FIX = Path(__file__).parent / "fixtures"
RESULTS = []


def record(name, ok, detail):
    RESULTS.append(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    print(RESULTS[-1])
    assert ok, detail


def cli(*argv):
    return subprocess.run(
        [sys.executable, "-m", "span2.cli", *map(str, argv)],
        capture_output=True, text=True,
    )


def random_cospan(rng, max_obj=4):
    """X -f-> T <-g- Y with every object of size <= max_obj."""
    T = FinObj([f"t{i}" for i in range(rng.randint(0, max_obj))])
    nx = rng.randint(0, max_obj) if len(T) else 0
    ny = rng.randint(0, max_obj) if len(T) else 0
    X = FinObj([f"x{i}" for i in range(nx)])
    Y = FinObj([f"y{i}" for i in range(ny)])
    # bias images so that pullbacks are usually inhabited
    hot = rng.sample(T.elements, min(2, len(T))) if len(T) else []
    pick = lambda: rng.choice(hot) if hot and rng.random() < 0.5 else rng.choice(T.elements)
    return (
        FinMor._raw(X, T, (pick() for _ in range(nx))),
        FinMor._raw(Y, T, (pick() for _ in range(ny))),
    )


def cospan_diagram(f, g):
    return Diagram({"S": f.dom, "B": f.cod, "S2": g.dom}, [("f", "S", "B", f), ("g", "S2", "B", g)])


# ---------------------------------------------------------------------------


def test_full_verifier_certificate():
    t0 = time.perf_counter()
    reports = verify_bicategory(seed=42, max_obj=3, trials=50)
    dt = time.perf_counter() - t0
    passed = sum(r.passed for r in reports)
    per_law = {law: sum(r.law is law for r in reports) for law in Law}
    ok = len(reports) == 400 and passed == 400 and set(per_law.values()) == {50} and dt < 60
    record("verify seed=42 max_obj=3 trials=50", ok, f"{passed}/{len(reports)} passed in {dt:.2f}s")


def test_vertical_associativity_at_scale():
    bad = 0
    for t in range(200):
        (X, Y, Z), _ = build_instance(Law.VerticalAssoc, 1001, t, 4)
        bad += not two_cells_equal(vcompose(Z, vcompose(Y, X)), vcompose(vcompose(Z, Y), X))
    record("vertical associativity (200 triples, objects <= 4)", bad == 0, f"{200 - bad}/200 equal")


def test_interchange_at_scale():
    bad = 0
    for t in range(200):
        (X, Y, X2, Y2), _ = build_instance(Law.Interchange, 1002, t, 3)
        lhs = hcompose_cells(vcompose(Y, X), vcompose(Y2, X2))
        rhs = vcompose(hcompose_cells(Y, Y2), hcompose_cells(X, X2))
        bad += not two_cells_equal(lhs, rhs)
    record("interchange (200 grids)", bad == 0, f"{200 - bad}/200 equal")


def _relabelled(rng, X, perturb):
    w = X.witness
    names = [f"y{i}" for i in range(len(w.apex))]
    rng.shuffle(names)
    rename = dict(zip(w.apex.elements, names))
    Y = FinObj(names)
    src = {rename[x]: w.to_src(x) for x in w.apex}
    dst = {rename[x]: w.to_dst(x) for x in w.apex}
    if perturb and names:
        y = rng.choice(names)
        T = X.dst
        here = dst[y]
        alts = [t for t in T.apex if t != here
                and T.left_leg(t) == T.left_leg(here) and T.right_leg(t) == T.right_leg(here)]
        if alts:
            dst[y] = rng.choice(alts)
    return two_cell(X.src, X.dst, Y, FinMor(Y, X.src.apex, src), FinMor(Y, X.dst.apex, dst))


def _soundness_pair(t):
    rng = instance_rng("accept-soundness", t)
    A, B = random_feet(rng, 2, 2)
    S = random_span(rng, A, B, 5, "s")
    T = random_parallel(rng, S, 5, "t")
    X = random_cell(rng, S, T, 5, "x")
    mode = rng.random()
    if mode < 0.4:
        return X, _relabelled(rng, X, perturb=False)
    if mode < 0.7:
        return X, _relabelled(rng, X, perturb=True)
    return X, random_cell(rng, S, T, 5, "z")


def _co_soundness_pair(t):
    # cospans of cospans; spans kept small so the apex stays <= 5
    rng = instance_rng("accept-co-soundness", t)
    A, B = random_feet(rng, 2, 2)
    S = random_span(rng, A, B, 2, "m", FINSET_OP)
    T = random_span(rng, A, B, 2, "n", FINSET_OP)
    c1 = dualize_cell(random_cell(rng, S, T, 2, "x"))
    if rng.random() < 0.5:
        return c1, dualize_cell(random_cell(rng, S, T, 2, "z"))
    names = [f"y{i}" for i in range(len(c1.apex))]
    rng.shuffle(names)
    Y = FinObj(names)
    phi = FinMor(c1.apex, Y, dict(zip(c1.apex.elements, names)))
    return c1, CoTwoCell(c1.src, c1.dst, Y, fs.compose(phi, c1.from_src), fs.compose(phi, c1.from_dst))


def test_signature_soundness():
    disagreements, equal = 0, 0
    for t in range(500):
        if t % 5 == 4:
            c1, c2 = _co_soundness_pair(t)
            assert len(c1.apex) <= 5 and len(c2.apex) <= 5
            sig = c1.same_class(c2)
            brute = brute_cocell_iso(c1, c2)
        else:
            c1, c2 = _soundness_pair(t)
            assert len(c1.witness.apex) <= 5 and len(c2.witness.apex) <= 5
            sig = two_cells_equal(c1, c2)
            brute = brute_witness_iso(c1.witness, c2.witness)
        disagreements += sig != brute
        equal += brute
    record(
        "signature soundness (500 witness pairs, apexes <= 5)",
        disagreements == 0,
        f"{disagreements} disagreements ({equal} isomorphic pairs, {500 - equal} not)",
    )


def _unique_commuting(W, apex, projections, cone):
    hits = [
        t for t in maps_between(W, apex)
        if all(fs.compose(p, FinMor(W, apex, t)) == cone[n] for n, p in projections.items())
    ]
    return hits


def test_universal_property_oracle():
    failures = 0
    for t in range(200):
        rng = instance_rng("accept-universal", t)
        f, g = random_cospan(rng)
        apex, p, q = fs.pullback(f, g)
        w = rng.randint(0, 3) if len(apex) else 0
        W = FinObj([f"w{i}" for i in range(w)])
        u0 = FinMor._raw(W, apex, (rng.choice(apex.elements) for _ in range(w)))
        h, k = fs.compose(p, u0), fs.compose(q, u0)
        hits = _unique_commuting(W, apex, {"p": p, "q": q}, {"p": h, "q": k})
        ok = len(hits) == 1 and fs.pullback_mediate(f, g, h, k) == FinMor(W, apex, hits[0])

        L = fs.limit(cospan_diagram(f, g))
        v0 = FinMor._raw(W, L.apex, (rng.choice(L.apex.elements) for _ in range(w))) if len(L.apex) \
            else FinMor(W, L.apex, {})
        cone = {n: fs.compose(pr, v0) for n, pr in L.projections.items()}
        hits = _unique_commuting(W, L.apex, L.projections, cone)
        ok = ok and len(hits) == 1 and fs.limit_mediate(L, cone) == FinMor(W, L.apex, hits[0])
        failures += not ok
    record("universal property (200 cospans, |W| <= 3)", failures == 0, f"{200 - failures}/200 unique mediators")


def test_limit_agrees_with_pullback():
    failures = 0
    for t in range(100):
        rng = instance_rng("accept-limit", t)
        f, g = random_cospan(rng)
        apex, p, q = fs.pullback(f, g)
        L = fs.limit(cospan_diagram(f, g))
        u = fs.pullback_mediate(f, g, L.projections["S"], L.projections["S2"])
        ok = (
            fs.is_iso(u)
            and fs.compose(p, u) == L.projections["S"]
            and fs.compose(q, u) == L.projections["S2"]
            and fs.compose(fs.compose(f, p), u) == L.projections["B"]
        )
        failures += not ok
    record("limit/pullback agreement (100 cospans)", failures == 0, f"{100 - failures}/100 isomorphic over the diagram")


def _expected_pivot_signature(spans):
    nodes = {f"s{i}": S.apex for i, S in enumerate(spans, 1)}
    edges = []
    for i, (S, S2) in enumerate(zip(spans, spans[1:]), 1):
        nodes[f"f{i}"] = S.right_foot
        edges += [(f"r{i}", f"s{i}", f"f{i}", S.right_leg), (f"l{i}", f"s{i + 1}", f"f{i}", S2.left_leg)]
    counts = {}
    for tup in brute_limit_tuples(nodes, edges):
        a, b, c, d = (tup[f"s{i}"] for i in range(1, 5))
        key = (Pair(a, Pair(b, Pair(c, d))), Pair(Pair(Pair(a, b), c), d))
        counts[key] = counts.get(key, 0) + 1
    return tuple(sorted((s, t, n) for (s, t), n in counts.items()))


def test_pentagon_pivot():
    failures, inhabited = 0, 0
    for t in range(50):
        spans, _ = build_instance(Law.Pentagon, 1007, t, 3)
        expected = _expected_pivot_signature(spans)
        two, three = pentagon_paths(*spans)
        pivot = pentagon_pivot(*spans)
        ok = two.signature == expected and three.signature == expected and pivot.signature == expected
        failures += not ok
        inhabited += bool(expected)
    record(
        "pentagon pivot (50 quadruples, apexes <= 3)",
        failures == 0,
        f"{50 - failures}/50 match the enumerated limit ({inhabited} with nonempty L)",
    )


def test_duality():
    failures = 0
    for t in range(100):
        rng = instance_rng("accept-duality", t)
        A, B, C = random_feet(rng, 3, 3)
        K1 = dualize(random_span(rng, A, B, 3, "m", FINSET_OP))
        K2 = dualize(random_span(rng, B, C, 3, "n", FINSET_OP))
        direct = cospan_compose(K1, K2)
        via_op = dualize(hcompose_spans(dualize(K1), dualize(K2)))
        ok = (
            direct.apex.elements == via_op.apex.elements
            and direct.left_leg == via_op.left_leg
            and direct.right_leg == via_op.right_leg
        )
        failures += not ok
    demo = cli("demo", "--seed", "7")
    reports = json.loads(demo.stdout) if demo.returncode in (0, 1) else []
    ok = failures == 0 and demo.returncode == 0 and reports and all(r["passed"] for r in reports)
    record(
        "duality (100 cospan pairs) and demo --seed 7",
        ok,
        f"{100 - failures}/100 element-for-element; demo exit {demo.returncode}, "
        f"{sum(r['passed'] for r in reports)}/{len(reports)} passed",
    )


def test_golden_fixtures_through_cli():
    a = cli("compose", FIX / "spanA.json", FIX / "spanB.json")
    a2 = cli("compose", FIX / "spanA.json", FIX / "spanB.json")
    b = cli("compose", FIX / "cospanA.json", FIX / "cospanB.json")
    span_apex = json.loads(a.stdout)["apex"]["elements"] if a.returncode == 0 else None
    co_apex = json.loads(b.stdout)["apex"]["elements"] if b.returncode == 0 else None
    ok = (
        span_apex == [{"pair": ["1", "5"]}, {"pair": ["2", "5"]}, {"pair": ["3", "4"]}]
        and a.stdout == a2.stdout
        and co_apex is not None and len(co_apex) == 3
    )
    record(
        "golden fixtures via CLI JSON",
        ok,
        f"pullback apex {span_apex}; pushout apex size {len(co_apex) if co_apex else None}",
    )


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
