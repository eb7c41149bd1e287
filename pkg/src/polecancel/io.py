"""File formats: realization documents (JSON) and candidate eta files.

Scalars serialize as {"re": "p/q", "im": "p/q"} with fractions in lowest
terms; matrices are row-major lists of lists.  Candidate files carry rational
function entries as "num | den" coefficient lists (lowest degree first) in the
combined a/b+c/di scalar form.  parse(print(x)) = x for all documents.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import List, Optional, Tuple

from .field import QQi, Poly, RatFunc
from .matrices import ConstMatrix
from .realization import Realization


class DocumentError(ValueError):
    pass


def _frac_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def scalar_to_doc(x: QQi) -> dict:
    return {"re": _frac_str(x.re), "im": _frac_str(x.im)}


def scalar_from_doc(d) -> QQi:
    try:
        return QQi(Fraction(d["re"]), Fraction(d["im"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"bad scalar {d!r}") from exc


def matrix_to_doc(m: ConstMatrix) -> list:
    return [[scalar_to_doc(e) for e in row] for row in m.entries]


def matrix_from_doc(rows) -> ConstMatrix:
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise DocumentError("matrix must be a non-empty list of rows")
    return ConstMatrix([[scalar_from_doc(e) for e in row] for row in rows])


def realization_to_doc(r: Realization) -> dict:
    doc = {
        "space_dim": r.n,
        "param_dim": r.m,
        "gram": matrix_to_doc(r.gram),
        "a": matrix_to_doc(r.op),
        "gamma": matrix_to_doc(r.gamma),
        "z0": scalar_to_doc(r.z0),
        "form": r.form,
    }
    if r.shift is not None:
        doc["shift"] = matrix_to_doc(r.shift)
    if r.base_value is not None:
        doc["base_value"] = matrix_to_doc(r.base_value)
    return doc


def realization_from_doc(doc: dict) -> Realization:
    try:
        n = int(doc["space_dim"])
        m = int(doc["param_dim"])
        gram = matrix_from_doc(doc["gram"])
        a = matrix_from_doc(doc["a"])
        gamma = matrix_from_doc(doc["gamma"])
        z0 = scalar_from_doc(doc["z0"])
        form = doc.get("form", "simple")
    except KeyError as exc:
        raise DocumentError(f"missing key {exc}") from exc
    if gram.rows != n or a.rows != n or gamma.rows != n or gamma.cols != m:
        raise DocumentError("matrix shapes disagree with space_dim/param_dim")
    shift = matrix_from_doc(doc["shift"]) if "shift" in doc else None
    base = matrix_from_doc(doc["base_value"]) if "base_value" in doc else None
    return Realization(gram=gram, op=a, gamma=gamma, z0=z0, form=form,
                       shift=shift, base_value=base)


def load_realization(path: str) -> Realization:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DocumentError(f"cannot read realization file {path}: {exc}") from exc
    return realization_from_doc(doc)


def save_realization(path: str, r: Realization) -> None:
    with open(path, "w") as fh:
        json.dump(realization_to_doc(r), fh, indent=1)
        fh.write("\n")


def ratfunc_to_str(f: RatFunc) -> str:
    num = ", ".join(str(c) for c in f.num.coeffs) or "0/1"
    den = ", ".join(str(c) for c in f.den.coeffs)
    return f"{num} | {den}"


def ratfunc_from_str(s: str) -> RatFunc:
    try:
        num_s, den_s = s.split("|")
        num = Poly([QQi.parse(t.strip()) for t in num_s.split(",")])
        den = Poly([QQi.parse(t.strip()) for t in den_s.split(",")])
    except (ValueError, IndexError) as exc:
        raise DocumentError(f"bad rational function string {s!r}") from exc
    return RatFunc(num, den)


def eta_to_doc(alpha: Fraction, entries: Tuple[RatFunc, ...]) -> dict:
    return {"alpha": _frac_str(alpha), "entries": [ratfunc_to_str(f) for f in entries]}


def eta_from_doc(doc: dict) -> Tuple[Fraction, Tuple[RatFunc, ...]]:
    try:
        alpha = Fraction(doc["alpha"])
        entries = tuple(ratfunc_from_str(s) for s in doc["entries"])
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"bad eta document: {exc}") from exc
    return alpha, entries


def load_eta(path: str):
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DocumentError(f"cannot read eta file {path}: {exc}") from exc
    return eta_from_doc(doc)


def save_eta(path: str, alpha: Fraction, entries) -> None:
    with open(path, "w") as fh:
        json.dump(eta_to_doc(alpha, tuple(entries)), fh, indent=1)
        fh.write("\n")
