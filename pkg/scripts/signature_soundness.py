"""Compare signature equality of 2-cells with brute-force isomorphism search.

    python3 scripts/signature_soundness.py --trials 2000 --max-apex 5
"""
import argparse
import itertools

from span2.finset import FinMor, FinObj
from span2.generate import instance_rng, random_cell, random_feet, random_parallel, random_span
from span2.spans import two_cell, two_cells_equal


def isomorphic(w1, w2):
    X1, X2 = w1.apex.elements, w2.apex.elements
    if len(X1) != len(X2):
        return False
    pairs = list(zip(w1.to_src.images, w1.to_dst.images))
    s2, d2 = w2.to_src.table, w2.to_dst.table
    return any(
        all((s2[y], d2[y]) == pair for pair, y in zip(pairs, perm))
        for perm in itertools.permutations(X2)
    )


def shuffled_copy(rng, X):
    w = X.witness
    names = [f"y{i}" for i in range(len(w.apex))]
    rng.shuffle(names)
    Y = FinObj(names)
    src = dict(zip(names, w.to_src.images))
    dst = dict(zip(names, w.to_dst.images))
    return two_cell(X.src, X.dst, Y, FinMor(Y, X.src.apex, src), FinMor(Y, X.dst.apex, dst))


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--trials", type=int, default=2000)
    p.add_argument("--max-apex", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    agree = iso = 0
    for t in range(args.trials):
        rng = instance_rng("soundness", args.seed, t)
        A, B = random_feet(rng, 2, 2)
        S = random_span(rng, A, B, args.max_apex, "s")
        T = random_parallel(rng, S, args.max_apex, "t")
        X = random_cell(rng, S, T, args.max_apex, "x")
        Y = shuffled_copy(rng, X) if rng.random() < 0.4 else random_cell(rng, S, T, args.max_apex, "y")
        brute = isomorphic(X.witness, Y.witness)
        iso += brute
        agree += brute == two_cells_equal(X, Y)
    print(f"{agree}/{args.trials} agree ({iso} isomorphic pairs); disagreements: {args.trials - agree}")
    return 0 if agree == args.trials else 1


if __name__ == "__main__":
    raise SystemExit(main())
