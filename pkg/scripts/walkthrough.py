#!/usr/bin/env python3
"""Walk the golden corpus end to end and print every derived object.

Runs the whole pipeline on each shipped realization: Q, negative index,
poles/zeros, pole cancellation candidates (direct and shift-regularized),
chain recovery, Gram products, the inverse function and a root function.
Everything printed is exact.
"""

import argparse
import os
import sys
from fractions import Fraction

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from polecancel import io as pcio
from polecancel.pcf import (
    AlphaIsGeneralizedZero,
    construct_pcf,
    construct_pcf_regularized,
    construct_root_function,
    gram_products,
    hat_chains_at,
    recover_chain,
    verify_pcf,
    verify_root_function,
)
from polecancel.realization import (
    RelationReport,
    build_q,
    hat_q,
    hat_realization,
    kappa,
    kappa_sample,
    minimality,
    sample_upper_half_points,
)
from polecancel.spectral import (
    classify_point,
    eigenvalues_rational,
    generalized_zeros_rational,
    jordan_chains,
)

GOLDEN = os.path.join(os.path.dirname(__file__), "..", "golden")


def matrix_lines(name, m):
    for i, row in enumerate(m.entries):
        for j, e in enumerate(row):
            print(f"  {name}[{i}][{j}] = {e}")


def walk(path, sample_points):
    r = pcio.load_realization(path)
    print(f"== {os.path.basename(path)} (n={r.n}, m={r.m}, form={r.form}) ==")
    q = build_q(r)
    matrix_lines("Q", q.q)
    print(f"  minimal: {minimality(r)}")
    k = kappa(r)
    print(f"  kappa = {k}, sampled = {kappa_sample(q, sample_points)}")

    spectrum = eigenvalues_rational(r.op)
    for alpha, mult in spectrum.eigenvalues:
        chains = jordan_chains(r.op, alpha)
        parts = ", ".join(str(c.length) for c in chains)
        print(f"  pole alpha={alpha}: multiplicity {mult}, partial multiplicities {parts}")
    zeros = generalized_zeros_rational(r)
    for beta, order in zeros:
        print(f"  zero beta={beta}: resolvent pole order {order}")

    for alpha, _ in spectrum.eigenvalues:
        chain = jordan_chains(r.op, alpha)[0]
        try:
            cand = construct_pcf(r, chain)
            tag = "direct"
        except AlphaIsGeneralizedZero:
            cand = construct_pcf_regularized(r, chain)
            tag = "regularized"
        rep = verify_pcf(q, cand)
        print(f"  candidate at {alpha} [{tag}]: order {rep.order}, strong {rep.strong}")
        if cand.shift is not None:
            matrix_lines("  S", cand.shift)
        for i, f in enumerate(cand.eta):
            print(f"    eta[{i}] = {f}")
        if rep.order >= chain.length:
            rec = recover_chain(r, cand, chain.length)
            print(f"    recovered chain of length {rec.length}: match {rec == chain}")
            table = gram_products(r if cand.shift is None else r.with_shift(cand.shift),
                                  cand, cand, chain.length)
            matrix_lines("  gram", table)

    result = hat_realization(r)
    if isinstance(result, RelationReport):
        print(f"  inverse: relation, multivalued dimension {result.multivalued_dim}")
    else:
        print("  inverse: operator realization")
        matrix_lines("A_hat", result.op)
    matrix_lines("Q_hat", hat_q(r))

    for beta, _ in zeros:
        verdict = classify_point(r, beta)
        if verdict.is_generalized_pole:
            print(f"  root function at {beta}: skipped (also a pole)")
            continue
        root = construct_root_function(r, hat_chains_at(r, beta)[0])
        rrep = verify_root_function(q, root)
        print(f"  root function at {beta}: order {rrep.order}, strong {rrep.strong}")
        for i, f in enumerate(root.xi):
            print(f"    xi[{i}] = {f}")
    print()


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sample", type=int, default=200, help="kappa sample point count")
    ap.add_argument("--seed", type=int, default=42)
    args = ap.parse_args()
    points = sample_upper_half_points(args.sample, args.seed)
    for name in ("ex31a.json", "ex31b.json", "ex33.json"):
        walk(os.path.join(GOLDEN, name), points)


if __name__ == "__main__":
    main()
