#!/usr/bin/env python3
"""Search for order-reduced candidates at points that are both pole and zero.

When alpha is simultaneously a generalized pole and a generalized zero, the
direct candidate Q^{-1} Gamma^+ x(z) can fail outright (the shipped
6-dimensional example: condition (A) already fails), but it is expected that
for some data it survives with an order strictly between 1 and the chain
length.  This harness scans seed-fixed random realizations for such instances
and prints whatever it finds; nothing is asserted, and an empty run is a
normal outcome.
"""

import argparse
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from polecancel.pcf import PcfCandidate, _chain_poly, verify_pcf
from polecancel.realization import build_q
from polecancel.sampling import random_realization
from polecancel.spectral import classify_point, eigenvalues_rational, jordan_chains


def unguarded_candidate(r, chain):
    """The direct construction with the generalized-zero guard removed."""
    p = r.gamma_plus.to_rat() @ _chain_poly(chain)
    eta = build_q(r).q.inverse() @ p
    return PcfCandidate(
        eta=tuple(row[0] for row in eta.entries),
        alpha=chain.alpha,
        provenance="user_supplied",
    )


def scan(seed, max_dim):
    r = random_realization(seed=seed, max_dim=max_dim)
    q = build_q(r)
    if q.q.det().is_zero():
        return
    for alpha, _ in eigenvalues_rational(r.op).eigenvalues:
        verdict = classify_point(r, alpha)
        if not (verdict.is_generalized_pole and verdict.is_generalized_zero):
            continue
        pole_order = max(verdict.pole_partial_multiplicities)
        zero_order = verdict.zero_resolvent_pole_order
        for chain in jordan_chains(r.op, alpha):
            rep = verify_pcf(q, unguarded_candidate(r, chain))
            status = "reduced order" if 0 < rep.order < chain.length else (
                "full order" if rep.order >= chain.length else "not a pcf")
            print(f"seed={seed} n={r.n} alpha={alpha} "
                  f"pole_order={pole_order} zero_order={zero_order} "
                  f"chain_length={chain.length} -> order={rep.order} ({status})")
            if 0 < rep.order < chain.length:
                print(f"  HIT: eta = {[str(f) for f in unguarded_candidate(r, chain).eta]}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", type=int, default=200, help="number of seeds to scan")
    ap.add_argument("--start", type=int, default=0, help="first seed")
    ap.add_argument("--max-dim", type=int, default=5)
    args = ap.parse_args()
    for seed in range(args.start, args.start + args.seeds):
        try:
            scan(seed, args.max_dim)
        except Exception as exc:  # a scan, not a proof: log and move on
            print(f"seed={seed}: skipped ({type(exc).__name__}: {exc})")


if __name__ == "__main__":
    main()
