"""Sweep the law checker over seeds and size bounds.

Prints, per (law, max_obj), how many instances passed and how many were
non-vacuous (some witness or composite apex inhabited), plus wall time.

    python3 scripts/run_verify.py --seeds 0 1 2 --sizes 0 1 2 3 4 --trials 50
"""
import argparse
import time
from collections import defaultdict

from span2.category import FINSET, FINSET_OP
from span2.coherence import Law, build_instance, run_check, zigzag_limit
from span2.spans import Span


def inhabited(law, args):
    if law in (Law.Pentagon, Law.Triangle, Law.HIdentityFunctoriality):
        return len(zigzag_limit(args).apex) > 0
    return any(len(a.apex if isinstance(a, Span) else a.witness.apex) > 0 for a in args)


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    p.add_argument("--sizes", type=int, nargs="+", default=[0, 1, 2, 3, 4])
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--opposite", action="store_true", help="check spans in FinSet^op (cospans)")
    args = p.parse_args()
    C = FINSET_OP if args.opposite else FINSET

    passed = defaultdict(int)
    nonvac = defaultdict(int)
    total = defaultdict(int)
    failures = []
    t0 = time.perf_counter()
    for seed in args.seeds:
        for n in args.sizes:
            for law in Law:
                for t in range(args.trials):
                    r = run_check(law, seed, t, n, C)
                    inst, _ = build_instance(law, seed, t, n, C)
                    key = (law.value, n)
                    total[key] += 1
                    passed[key] += r.passed
                    nonvac[key] += inhabited(law, inst)
                    if not r.passed:
                        failures.append(r)
    dt = time.perf_counter() - t0

    print(f"{'law':<24}{'max_obj':>8}{'passed':>10}{'non-vacuous':>13}")
    for law in Law:
        for n in args.sizes:
            key = (law.value, n)
            print(f"{law.value:<24}{n:>8}{passed[key]:>6}/{total[key]:<4}{nonvac[key]:>9}/{total[key]}")
    print(f"\n{sum(passed.values())}/{sum(total.values())} passed in {dt:.1f}s ({C.name})")
    for r in failures[:10]:
        print("FAIL", r.evidence)
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
