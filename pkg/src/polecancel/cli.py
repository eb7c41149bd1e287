"""Command-line front end.

Every subcommand maps 1:1 onto a library operation and prints a stable,
diffable text layout; all computation is exact, `--decimal` only adds
approximate renderings for human inspection.

Exit codes: 0 success, 1 validation or parse error, 2 computational error,
3 inconclusive verdict present in a verification report.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import List, Optional

from .field import PoleAtPoint, QQi, RatFunc, SingularAtPoint
from .matrices import ConstMatrix, ShapeMismatch, SingularMatrixFunction
from .realization import (
    PoleAtSample,
    QFunction,
    RealizationError,
    Realization,
    RelationReport,
    build_q,
    hat_q,
    hat_realization,
    kappa,
    kappa_sample,
    minimality,
    sample_upper_half_points,
    validate,
)
from .spectral import (
    NotAnEigenvalue,
    classify_point,
    eigenvalues_rational,
    generalized_zeros_rational,
    jordan_chains,
)
from .pcf import (
    AlphaIsGeneralizedZero,
    BetaIsGeneralizedPole,
    PcfCandidate,
    PoleInChainRecovery,
    SearchExhausted,
    construct_pcf,
    construct_pcf_regularized,
    construct_root_function,
    cororder_probe,
    gram_products,
    hat_chains_at,
    recover_chain,
    verify_pcf,
    verify_root_function,
)
from . import io as pcio

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_COMPUTE = 2
EXIT_INCONCLUSIVE = 3

_COMPUTE_ERRORS = (
    AlphaIsGeneralizedZero,
    BetaIsGeneralizedPole,
    NotAnEigenvalue,
    PoleAtPoint,
    PoleAtSample,
    PoleInChainRecovery,
    SearchExhausted,
    SingularAtPoint,
    SingularMatrixFunction,
    ArithmeticError,
)


class CliError(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        super().__init__(message)


def _fmt_scalar(x: QQi, decimal: Optional[int]) -> str:
    s = str(x)
    if decimal is not None:
        c = x.to_complex()
        s += f" ~ {c.real:.{decimal}g}{c.imag:+.{decimal}g}i"
    return s


def _fmt_vector(v: ConstMatrix, decimal: Optional[int]) -> str:
    return "(" + ", ".join(_fmt_scalar(v.entries[i][0], decimal) for i in range(v.rows)) + ")"


def _print_matrix(name: str, m, decimal: Optional[int]) -> None:
    for i, row in enumerate(m.entries):
        for j, e in enumerate(row):
            if isinstance(e, RatFunc):
                print(f"{name}[{i}][{j}] = {e}")
            else:
                print(f"{name}[{i}][{j}] = {_fmt_scalar(e, decimal)}")


def _load(path: str) -> Realization:
    r = pcio.load_realization(path)
    failures = validate(r)
    if failures:
        lines = "; ".join(f"{code}: {msg}" for code, msg in failures)
        raise CliError(EXIT_INVALID, f"invalid realization: {lines}")
    return r


def _parse_rational(s: str, what: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(EXIT_COMPUTE, f"{what} must be rational, got {s!r}: {exc}")


def _pcf_report_lines(rep) -> List[str]:
    lines = [f"order = {rep.order}", f"strong = {'yes' if rep.strong else 'no'}"]
    base = [("A", rep.vanish), ("B", rep.limits_exist), ("C", rep.kernel_bounded),
            ("C_s", rep.kernel_limits)]
    for name, verdicts in base:
        lines.append(f"({name}) {verdicts[0]}")
    top = max(rep.order, 1)
    for j in range(1, top):
        lines.append(f"(D_{j}) {rep.vanish[j]}  (E_{j}) {rep.limits_exist[j]}  "
                     f"(F_{j}) {rep.kernel_bounded[j]}  (F_s,{j}) {rep.kernel_limits[j]}")
    return lines


def _root_report_lines(rep) -> List[str]:
    lines = [f"order = {rep.order}", f"strong = {'yes' if rep.strong else 'no'}"]
    base = [("K", rep.limits_exist), ("L", rep.vanish), ("M", rep.kernel_bounded),
            ("M_s", rep.kernel_limits)]
    for name, verdicts in base:
        lines.append(f"({name}) {verdicts[0]}")
    top = max(rep.order, 1)
    for j in range(1, top):
        lines.append(f"(K_{j}) {rep.limits_exist[j]}  (L_{j}) {rep.vanish[j]}  "
                     f"(M_{j}) {rep.kernel_bounded[j]}  (M_s,{j}) {rep.kernel_limits[j]}")
    return lines


def _has_inconclusive(rep) -> bool:
    top = max(rep.order, 1)
    fields = (rep.vanish, rep.limits_exist, rep.kernel_bounded, rep.kernel_limits)
    return any(f[j] == "inconclusive" for f in fields for j in range(top))


def cmd_validate(args) -> int:
    try:
        r = pcio.load_realization(args.file)
    except pcio.DocumentError as exc:
        print(f"parse error: {exc}")
        return EXIT_INVALID
    failures = validate(r)
    if failures:
        for code, msg in failures:
            print(f"{code}: {msg}")
        return EXIT_INVALID
    print("ok")
    return EXIT_OK


def cmd_q(args) -> int:
    r = _load(args.file)
    _print_matrix("Q", build_q(r).q, args.decimal)
    return EXIT_OK


def cmd_kappa(args) -> int:
    r = _load(args.file)
    k = kappa(r)
    print(f"kappa = {k}")
    if args.sample:
        pts = sample_upper_half_points(args.sample, args.seed)
        ks = kappa_sample(build_q(r), pts)
        print(f"kappa_sample = {ks} (points={args.sample}, seed={args.seed}, threshold=-1e-08)")
        if ks > k:
            raise CliError(EXIT_COMPUTE, "numeric sample exceeds exact kappa")
    return EXIT_OK


def cmd_minimal(args) -> int:
    r = _load(args.file)
    print("minimal: " + ("yes" if minimality(r) else "no"))
    return EXIT_OK


def cmd_poles(args) -> int:
    r = _load(args.file)
    spectrum = eigenvalues_rational(r.op)
    for alpha, mult in spectrum.eigenvalues:
        parts = ", ".join(str(c.length) for c in jordan_chains(r.op, alpha))
        print(f"alpha = {alpha} (algebraic multiplicity {mult}; partial multiplicities: {parts})")
    if spectrum.residual_degree:
        print(f"non-rational characteristic factor of degree {spectrum.residual_degree}")
    return EXIT_OK


def cmd_zeros(args) -> int:
    r = _load(args.file)
    for beta, order in generalized_zeros_rational(r):
        print(f"beta = {beta} (resolvent pole order {order})")
    return EXIT_OK


def cmd_chains(args) -> int:
    r = _load(args.file)
    alpha = _parse_rational(args.alpha, "alpha")
    for idx, chain in enumerate(jordan_chains(r.op, alpha)):
        print(f"chain {idx} (length {chain.length}):")
        for j, v in enumerate(chain.vectors):
            print(f"  x_{j} = {_fmt_vector(v, args.decimal)}")
    return EXIT_OK


def cmd_pcf(args) -> int:
    r = _load(args.file)
    alpha = _parse_rational(args.alpha, "alpha")
    chains = jordan_chains(r.op, alpha)
    if args.chain >= len(chains):
        raise CliError(EXIT_COMPUTE, f"chain index {args.chain} out of range ({len(chains)} chains)")
    chain = chains[args.chain]
    if args.prefix is not None:
        if not (1 <= args.prefix <= chain.length):
            raise CliError(EXIT_COMPUTE, f"prefix must be in 1..{chain.length}")
        chain = chain.prefix(args.prefix)
    if args.regularize:
        cand = construct_pcf_regularized(r, chain)
    else:
        try:
            cand = construct_pcf(r, chain)
        except AlphaIsGeneralizedZero as exc:
            raise CliError(EXIT_COMPUTE, f"{exc} (hint: retry with --regularize)")
    for i, f in enumerate(cand.eta):
        print(f"eta[{i}] = {f}")
    if cand.shift is not None:
        _print_matrix("S", cand.shift, args.decimal)
        for i, f in enumerate(cand.poly_part):
            print(f"p[{i}] = {f}")
    rep = verify_pcf(build_q(r), cand)
    for line in _pcf_report_lines(rep):
        print(line)
    if args.save_eta:
        pcio.save_eta(args.save_eta, cand.alpha, cand.eta)
    return EXIT_INCONCLUSIVE if _has_inconclusive(rep) else EXIT_OK


def _load_candidate(r: Realization, path: str, alpha_arg: Optional[str]) -> PcfCandidate:
    try:
        alpha, entries = pcio.load_eta(path)
    except pcio.DocumentError as exc:
        raise CliError(EXIT_INVALID, str(exc))
    if alpha_arg is not None:
        alpha = _parse_rational(alpha_arg, "alpha")
    if len(entries) != r.m:
        raise CliError(EXIT_INVALID, f"candidate has {len(entries)} entries, expected {r.m}")
    return PcfCandidate(eta=entries, alpha=alpha, provenance="user_supplied")


def cmd_verify(args) -> int:
    r = _load(args.file)
    cand = _load_candidate(r, args.eta, args.alpha)
    rep = verify_pcf(build_q(r), cand)
    for line in _pcf_report_lines(rep):
        print(line)
    for j, v in enumerate(rep.eta_derivative_limits[: max(rep.order, 1)]):
        print(f"eta_vec_{j} = {_fmt_vector(v, args.decimal)}")
    return EXIT_INCONCLUSIVE if _has_inconclusive(rep) else EXIT_OK


def cmd_recover(args) -> int:
    r = _load(args.file)
    cand = _load_candidate(r, args.eta, args.alpha)
    try:
        chain = recover_chain(r, cand, args.order)
    except ValueError as exc:
        raise CliError(EXIT_COMPUTE, str(exc))
    print(f"alpha = {chain.alpha}")
    for j, v in enumerate(chain.vectors):
        print(f"x_{j} = {_fmt_vector(v, args.decimal)}")
    return EXIT_OK


def cmd_gram(args) -> int:
    r = _load(args.file)
    cand_a = _load_candidate(r, args.eta, args.alpha)
    cand_b = _load_candidate(r, args.eta2, args.alpha) if args.eta2 else cand_a
    try:
        table = gram_products(r, cand_a, cand_b, args.order)
    except ValueError as exc:
        raise CliError(EXIT_COMPUTE, str(exc))
    _print_matrix("gram", table, args.decimal)
    return EXIT_OK


def cmd_invert(args) -> int:
    r = _load(args.file)
    _print_matrix("Q_hat", hat_q(r), args.decimal)
    result = hat_realization(r)
    if isinstance(result, RelationReport):
        pts = ", ".join(str(p) for p in result.tested_points)
        print(f"relation: multivalued dimension {result.multivalued_dim} (tested z1: {pts})")
    else:
        print("operator hat realization:")
        _print_matrix("A_hat", result.op, args.decimal)
        _print_matrix("Gamma_hat", result.gamma, args.decimal)
    return EXIT_OK


def cmd_rootfn(args) -> int:
    r = _load(args.file)
    beta = _parse_rational(args.beta, "beta")
    try:
        hat_chains = hat_chains_at(r, beta)
    except ValueError as exc:
        raise CliError(EXIT_COMPUTE, str(exc))
    if args.chain >= len(hat_chains):
        raise CliError(EXIT_COMPUTE, f"chain index {args.chain} out of range ({len(hat_chains)} chains)")
    cand = construct_root_function(r, hat_chains[args.chain])
    polynomial = all(f.den.degree == 0 for f in cand.xi)
    for i, f in enumerate(cand.xi):
        print(f"xi[{i}] = {f}")
    print("polynomial: " + ("yes" if polynomial else "no"))
    rep = verify_root_function(build_q(r), cand)
    for line in _root_report_lines(rep):
        print(line)
    return EXIT_INCONCLUSIVE if _has_inconclusive(rep) else EXIT_OK


def cmd_cororder(args) -> int:
    r = _load(args.file)
    alpha = _parse_rational(args.alpha, "alpha")
    rows = cororder_probe(r, alpha)
    print("chain  prefix  maximal  order  strong")
    for row in rows:
        print(f"{row.chain_index:5d}  {row.prefix_length:6d}  {str(row.maximal).lower():7s}  "
              f"{row.order:5d}  {str(row.strong).lower()}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="polecancel",
        description="Exact pole cancellation functions for matrix generalized Nevanlinna functions",
    )
    p.add_argument("--decimal", type=int, default=None, metavar="K",
                   help="also render scalars as K-digit decimal approximations (display only)")
    p.add_argument("--jobs", type=int, default=1,
                   help="reserved for parallel verification; computations are exact either way")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, **extra):
        sp = sub.add_parser(name)
        sp.add_argument("file")
        sp.set_defaults(fn=fn)
        return sp

    add("validate", cmd_validate)
    add("q", cmd_q)
    sp = add("kappa", cmd_kappa)
    sp.add_argument("--sample", type=int, default=0, metavar="N")
    sp.add_argument("--seed", type=int, default=0, metavar="S")
    add("minimal", cmd_minimal)
    add("poles", cmd_poles)
    add("zeros", cmd_zeros)
    sp = add("chains", cmd_chains)
    sp.add_argument("--alpha", required=True)
    sp = add("pcf", cmd_pcf)
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--chain", type=int, default=0, metavar="K")
    sp.add_argument("--prefix", type=int, default=None, metavar="L")
    sp.add_argument("--regularize", action="store_true")
    sp.add_argument("--save-eta", default=None, metavar="PATH")
    sp = add("verify", cmd_verify)
    sp.add_argument("--alpha", default=None)
    sp.add_argument("--eta", required=True)
    sp = add("recover", cmd_recover)
    sp.add_argument("--alpha", default=None)
    sp.add_argument("--eta", required=True)
    sp.add_argument("--order", type=int, required=True, metavar="L")
    sp = add("gram", cmd_gram)
    sp.add_argument("--alpha", default=None)
    sp.add_argument("--eta", required=True)
    sp.add_argument("--eta2", default=None)
    sp.add_argument("--order", type=int, required=True, metavar="L")
    add("invert", cmd_invert)
    sp = add("rootfn", cmd_rootfn)
    sp.add_argument("--beta", required=True)
    sp.add_argument("--chain", type=int, default=0, metavar="K")
    sp = add("cororder", cmd_cororder)
    sp.add_argument("--alpha", required=True)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except pcio.DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (RealizationError, ShapeMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except _COMPUTE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
