"""Sweep the whole strategy pair battery with both decision methods.

For every pair the observational comparison (set equality of view-set
families) is checked against the brute-force oracle (run every closed
deterministic view set as a test and compare convergence verdicts both
ways).  Any disagreement, or any test run lost to the interaction
budget, fails the sweep.

Run from the repository root:

    python scripts/oracle_sweep.py [-v]
"""
import argparse
import sys
import time

from gamesem.corpus import PAIRS, build_pair
from gamesem.equiv import brute_force_leq, obs_equiv


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-v", "--verbose", action="store_true",
                    help="print the per-pair leq verdicts too")
    ns = ap.parse_args(argv)

    width = max(len(f"{p.left} vs {p.right}") for p in PAIRS)
    bad = 0
    t0 = time.time()
    for p in PAIRS:
        s1, s2 = build_pair(p)
        rep = obs_equiv(s1, s2, p.bounds)
        fwd = brute_force_leq(s1, s2, p.bounds)
        bwd = brute_force_leq(s2, s1, p.bounds)
        oracle_equal = fwd.holds and bwd.holds
        excluded = fwd.bound_exceeded + bwd.bound_exceeded
        agree = rep.equal == oracle_equal == p.expect_equal and excluded == 0
        bad += not agree
        mark = "ok " if agree else "BAD"
        name = f"{p.left} vs {p.right}"
        print(f"{mark} {name:<{width}}  obs={rep.verdict:<15} "
              f"oracle_equal={oracle_equal!s:<5} expect={p.expect_equal!s:<5} "
              f"tested={fwd.tested + bwd.tested:>4} excluded={excluded}")
        if ns.verbose:
            print(f"    {p.left} <= {p.right}: {fwd.verdict}")
            print(f"    {p.right} <= {p.left}: {bwd.verdict}")

    dt = time.time() - t0
    print(f"\n{len(PAIRS)} pairs in {dt:.1f}s, disagreements: {bad}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
