#!/usr/bin/env python3
"""Randomized soundness/completeness sweep.

Draws random shift systems, builds guaranteed members from random cofactor
combinations and random non-members by rejection, decides each, and
cross-checks every verdict numerically.  Prints a summary table; use --json
for machine-readable output.

Typical run:

    python scripts/membership_sweep.py --count 200 --seed 2026
"""

import argparse
import json
import random
import sys
import time

from gamma_ideal.ideal import (
    decide_membership,
    normal_form,
    random_member,
    random_poly,
    random_shift_system,
)
from gamma_ideal.numeric import verify_verdict


def sweep(count: int, seed: int, samples: int, tol: float, separation: float):
    rng = random.Random(seed)
    stats = {
        "members": 0,
        "non_members": 0,
        "member_max_residual": 0.0,
        "non_member_min_peak": float("inf"),
        "inconsistencies": 0,
    }

    for k in range(count):
        sys_ = random_shift_system(rng, require_relation=True)
        member = random_member(sys_, rng)
        verdict = decide_membership(member, sys_)
        assert verdict.is_member, "random_member produced a non-member"
        report = verify_verdict(verdict, sys_, n_samples=samples, seed=k, tol=tol)
        stats["members"] += 1
        stats["member_max_residual"] = max(
            stats["member_max_residual"], report.max_relative_residual
        )
        stats["inconsistencies"] += not report.verdict_consistent

    produced = 0
    while produced < count:
        sys_ = random_shift_system(rng)
        p = random_poly(sys_.arity, rng)
        if normal_form(p, sys_).is_zero():
            continue
        produced += 1
        verdict = decide_membership(p, sys_)
        report = verify_verdict(
            verdict, sys_, n_samples=samples, seed=produced, tol=tol,
            separation=separation,
        )
        stats["non_members"] += 1
        stats["non_member_min_peak"] = min(
            stats["non_member_min_peak"], report.max_relative_residual
        )
        stats["inconsistencies"] += not report.verdict_consistent

    return stats


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=100, help="sweeps per direction")
    ap.add_argument("--seed", type=int, default=2026)
    ap.add_argument("--samples", type=int, default=20)
    ap.add_argument("--tol", type=float, default=1e-8)
    ap.add_argument("--separation", type=float, default=1e-4)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    start = time.perf_counter()
    stats = sweep(args.count, args.seed, args.samples, args.tol, args.separation)
    elapsed = time.perf_counter() - start

    if args.json:
        print(json.dumps({**stats, "elapsed_seconds": elapsed}, sort_keys=True, indent=2))
    else:
        print(f"members decided + verified:      {stats['members']}")
        print(f"  worst relative residual:       {stats['member_max_residual']:.3e}")
        print(f"non-members decided + verified:  {stats['non_members']}")
        print(f"  weakest witness residual:      {stats['non_member_min_peak']:.3e}")
        print(f"inconsistent verdicts:           {stats['inconsistencies']}")
        print(f"elapsed:                         {elapsed:.2f}s")
    return 1 if stats["inconsistencies"] else 0


if __name__ == "__main__":
    sys.exit(main())
