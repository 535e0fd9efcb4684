"""Toy cobordisms: glue a few by hand, then run the coherence suite.

Cobordisms are modelled as cospans of finite sets (boundary circles ->
connected components <- boundary circles); gluing is a pushout.  This keeps
the categorical content only, nothing smooth.

    python3 scripts/cobordism_demo.py --seed 7 --max-circles 3
"""
import argparse

from span2.cospans import cobordism, cospan_compose, demo_cobordism
from span2.finset import FinObj


def show(name, K):
    comps = {}
    for side, foot, leg in (("in", K.left_foot, K.left_leg), ("out", K.right_foot, K.right_leg)):
        for c in foot:
            comps.setdefault(leg(c), []).append(f"{side}:{c}")
    parts = "; ".join(f"{m}: {', '.join(v) or '(closed)'}" for m, v in sorted(comps.items()))
    closed = len(K.apex) - len(comps)
    print(f"{name}: {len(K.apex)} component(s) [{parts}]" + (f" +{closed} closed" if closed else ""))


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--max-circles", type=int, default=3)
    p.add_argument("--trials", type=int, default=10)
    args = p.parse_args()

    o = lambda *xs: FinObj(xs)
    pants = cobordism(o("c1", "c2"), o("c3"), ["P"], {"c1": "P", "c2": "P", "c3": "P"})
    cyl = cobordism(o("c3"), o("c4"), ["Q"], {"c3": "Q", "c4": "Q"})
    cap = cobordism(o("c4"), o(), ["D"], {"c4": "D"})
    two_cyl = cobordism(o("c1", "c2"), o("c3", "c4"), ["A", "B"],
                        {"c1": "A", "c3": "A", "c2": "B", "c4": "B"})
    show("pants", pants)
    show("pants;cylinder", cospan_compose(pants, cyl))
    show("pants;cylinder;cap", cospan_compose(cospan_compose(pants, cyl), cap))
    show("two cylinders", two_cyl)
    copants = cobordism(o("c3", "c4"), o("c5"), ["R"], {"c3": "R", "c4": "R", "c5": "R"})
    show("two cylinders;copants", cospan_compose(two_cyl, copants))

    print()
    bad = 0
    for n_in in range(args.max_circles + 1):
        for n_out in range(args.max_circles + 1):
            reports = demo_cobordism(n_in, n_out, args.seed, args.trials)
            ok = sum(r.passed for r in reports)
            bad += ok != len(reports)
            print(f"{n_in} -> {n_out} circles: {ok}/{len(reports)} laws passed")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
