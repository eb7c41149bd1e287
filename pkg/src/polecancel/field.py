"""Exact arithmetic: Gaussian rationals, polynomials, reduced rational functions.

Everything here is immutable and exact (fractions.Fraction underneath); there is
no floating point on any computation path.  The bivariate types represent
functions of (z, u) where u plays the role of the conjugated second variable.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union


class ZeroDenominator(ZeroDivisionError):
    pass


class PoleAtPoint(ArithmeticError):
    pass


class SingularAtPoint(ArithmeticError):
    pass


#: Distinguished order of the identically-zero function.
ORDER_INF = math.inf

ScalarLike = Union["QQi", Fraction, int]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class QQi:
    """A Gaussian rational re + im*i with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, *a):
        raise AttributeError("QQi is immutable")

    @staticmethod
    def coerce(x: ScalarLike) -> "QQi":
        if isinstance(x, QQi):
            return x
        return QQi(x)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = QQi.coerce(other)
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __add__(self, other):
        other = QQi.coerce(other)
        return QQi(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return QQi(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-QQi.coerce(other))

    def __rsub__(self, other):
        return QQi.coerce(other) + (-self)

    def __mul__(self, other):
        other = QQi.coerce(other)
        return QQi(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QQi":
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return QQi(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * QQi.coerce(other).inverse()

    def __rtruediv__(self, other):
        return QQi.coerce(other) * self.inverse()

    def conj(self) -> "QQi":
        return QQi(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return not self.im

    def to_complex(self) -> complex:
        return complex(self.re) + 1j * complex(self.im)

    def __repr__(self):
        return f"QQi({self.re!r}, {self.im!r})"

    def __str__(self):
        if not self.im:
            return _frac_str(self.re)
        if not self.re:
            return _frac_str(self.im) + "i"
        sign = "+" if self.im > 0 else "-"
        return f"{_frac_str(self.re)}{sign}{_frac_str(abs(self.im))}i"

    @staticmethod
    def parse(s: str) -> "QQi":
        """Inverse of str(): accepts 'a/b', 'a/bi', 'a/b+c/di', 'a/b-c/di'."""
        s = s.strip().replace(" ", "")
        if not s:
            raise ValueError("empty scalar")
        if s.endswith("i"):
            body = s[:-1]
            # split at the last +/- that is not leading
            for k in range(len(body) - 1, 0, -1):
                if body[k] in "+-":
                    re_part, im_part = body[:k], body[k:]
                    if im_part in ("+", "-"):
                        im_part += "1"
                    return QQi(Fraction(re_part), Fraction(im_part))
            if body in ("", "+", "-"):
                body += "1"
            return QQi(0, Fraction(body))
        return QQi(Fraction(s))


def _frac_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


ZERO = QQi(0)
ONE = QQi(1)
I = QQi(0, 1)


class Poly:
    """Univariate polynomial over QQi; coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[ScalarLike] = ()):
        cs = [QQi.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    @staticmethod
    def coerce(x) -> "Poly":
        if isinstance(x, Poly):
            return x
        return Poly([QQi.coerce(x)])

    @staticmethod
    def x() -> "Poly":
        return Poly([0, 1])

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def leading(self) -> QQi:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        return self.coeffs == Poly.coerce(other).coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = Poly.coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-Poly.coerce(other))

    def __rsub__(self, other):
        return Poly.coerce(other) + (-self)

    def __mul__(self, other):
        other = Poly.coerce(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def scale(self, c: ScalarLike) -> "Poly":
        c = QQi.coerce(c)
        return Poly([a * c for a in self.coeffs])

    def divmod(self, other: "Poly"):
        other = Poly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dlead = other.leading().inverse()
        dd = other.degree
        quo = [ZERO] * max(0, len(rem) - dd)
        for k in range(len(rem) - dd - 1, -1, -1):
            c = rem[k + dd] * dlead
            if c:
                quo[k] = c
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        return Poly(quo), Poly(rem[:dd] if dd else [])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(self.leading().inverse())

    def _gauss_coeffs(self):
        """Coefficients as primitive Gaussian-integer pairs (re, im)."""
        from math import gcd as igcd

        lcm = 1
        for c in self.coeffs:
            for d in (c.re.denominator, c.im.denominator):
                lcm = lcm * d // igcd(lcm, d)
        content = 0
        scaled = []
        for c in self.coeffs:
            re = c.re.numerator * (lcm // c.re.denominator)
            im = c.im.numerator * (lcm // c.im.denominator)
            scaled.append((re, im))
            content = igcd(content, igcd(abs(re), abs(im)))
        if content == 0:
            return []
        return [(re // content, im // content) for re, im in scaled]

    def gcd(self, other: "Poly") -> "Poly":
        """Monic gcd over the field QQ(i).

        Primitive pseudo-remainder sequence over plain machine Gaussian
        integers: coefficients stay bounded instead of the exploding fractions
        of plain Euclid, and the inner loop avoids Fraction overhead entirely.
        """
        a = self._gauss_coeffs()
        b = Poly.coerce(other)._gauss_coeffs()
        if len(a) < len(b):
            a, b = b, a
        while b:
            r = _gauss_primitive(_gauss_pseudo_rem(a, b))
            a, b = b, r
        return Poly([QQi(Fraction(re), Fraction(im)) for re, im in a]).monic()

    def deriv(self) -> "Poly":
        return Poly([QQi(k) * c for k, c in enumerate(self.coeffs)][1:])

    def eval(self, p: ScalarLike) -> QQi:
        p = QQi.coerce(p)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * p + c
        return acc

    def eval_complex(self, p: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * p + c.to_complex()
        return acc

    def shift(self, a: ScalarLike) -> "Poly":
        """Compose with z -> z + a (Taylor shift)."""
        a = QQi.coerce(a)
        out = Poly()
        for c in reversed(self.coeffs):
            out = out * Poly([a, 1]) + Poly([c])
        return out

    def mult_at(self, alpha: ScalarLike) -> int:
        """Multiplicity of alpha as a root (0 if not a root)."""
        if self.is_zero():
            raise ValueError("multiplicity undefined for the zero polynomial")
        alpha = QQi.coerce(alpha)
        m, p = 0, self
        lin = Poly([-alpha, 1])
        while p.eval(alpha) == ZERO:
            p = p // lin
            m += 1
        return m

    def conj_coeffs(self) -> "Poly":
        return Poly([c.conj() for c in self.coeffs])

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.coeffs)

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        return format_poly(self)


def _gauss_pseudo_rem(a, b):
    """Pseudo-remainder of coefficient lists of Gaussian-integer pairs."""
    db = len(b) - 1
    lb_re, lb_im = b[-1]
    r = list(a)
    while True:
        while r and r[-1] == (0, 0):
            r.pop()
        dr = len(r) - 1
        if dr < db:
            return r
        top_re, top_im = r[-1]
        shift = dr - db
        new = [(cr * lb_re - ci * lb_im, cr * lb_im + ci * lb_re) for cr, ci in r]
        for j, (br, bi) in enumerate(b):
            tr = top_re * br - top_im * bi
            ti = top_re * bi + top_im * br
            nr, ni = new[j + shift]
            new[j + shift] = (nr - tr, ni - ti)
        new.pop()
        r = new


def _gauss_primitive(c):
    from math import gcd as igcd

    content = 0
    for re, im in c:
        content = igcd(content, igcd(abs(re), abs(im)))
    if content <= 1:
        return c
    return [(re // content, im // content) for re, im in c]


def format_poly(p: Poly, var: str = "z") -> str:
    if p.is_zero():
        return "0"
    terms = []
    for k, c in enumerate(p.coeffs):
        if not c:
            continue
        if k == 0:
            terms.append(str(c) if c.im or c.re.denominator != 1 else str(c.re.numerator))
        else:
            zs = var if k == 1 else f"{var}^{k}"
            if c == ONE:
                terms.append(zs)
            else:
                cs = str(c) if c.im or c.re.denominator != 1 else str(c.re.numerator)
                terms.append(f"({cs}){zs}")
    return " + ".join(terms)


PolyLike = Union[Poly, ScalarLike]


class RatFunc:
    """Reduced rational function num/den over QQi with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: PolyLike, den: PolyLike = 1, _reduced=False):
        num, den = Poly.coerce(num), Poly.coerce(den)
        if den.is_zero():
            raise ZeroDenominator("rational function with zero denominator")
        if not _reduced:
            if num.is_zero():
                den = Poly([1])
            else:
                g = num.gcd(den)
                if g.degree > 0:
                    num, den = num // g, den // g
                lc = den.leading().inverse()
                num, den = num.scale(lc), den.scale(lc)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RatFunc is immutable")

    @staticmethod
    def coerce(x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, Poly):
            return RatFunc(x)
        return RatFunc(Poly.coerce(x))

    @staticmethod
    def z() -> "RatFunc":
        return RatFunc(Poly.x())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        other = RatFunc.coerce(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = RatFunc.coerce(other)
        a, b = self, other
        if a.den == b.den:
            # common factors of the sum with the shared denominator are rare
            # but possible; a single reduction handles them
            return RatFunc(a.num + b.num, a.den)
        if a.den.degree == 0:
            # monic constant denominator is 1; polynomial plus reduced fraction
            return RatFunc(a.num * b.den + b.num, b.den, _reduced=True)
        if b.den.degree == 0:
            return RatFunc(b.num * a.den + a.num, a.den, _reduced=True)
        g = a.den.gcd(b.den)
        if g.degree == 0:
            # coprime denominators: the result is automatically reduced
            return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den, _reduced=True)
        bq = b.den // g
        num = a.num * bq + b.num * (a.den // g)
        # any surviving common factor must divide g; reduce against it only
        h = num.gcd(g)
        den = a.den * bq
        if h.degree > 0:
            num, den = num // h, den // h
        lc = den.leading().inverse()
        return RatFunc(num.scale(lc), den.scale(lc), _reduced=True) if lc != ONE else RatFunc(num, den, _reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other):
        return RatFunc.coerce(other) + (-self)

    def __mul__(self, other):
        other = RatFunc.coerce(other)
        a, b = self, other
        if a.num.is_zero() or b.num.is_zero():
            return RatFunc(Poly(), Poly([1]), _reduced=True)
        # cross-reduce; the factors are then pairwise coprime
        g1 = a.num.gcd(b.den) if b.den.degree else Poly([1])
        g2 = b.num.gcd(a.den) if a.den.degree else Poly([1])
        an = a.num // g1 if g1.degree else a.num
        bd = b.den // g1 if g1.degree else b.den
        bn = b.num // g2 if g2.degree else b.num
        ad = a.den // g2 if g2.degree else a.den
        num = an * bn
        den = ad * bd
        lc = den.leading().inverse()
        if lc != ONE:
            num, den = num.scale(lc), den.scale(lc)
        return RatFunc(num, den, _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        return self * RatFunc.coerce(other).inverse()

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) * self.inverse()

    def eval(self, p: ScalarLike) -> QQi:
        p = QQi.coerce(p)
        d = self.den.eval(p)
        if not d:
            raise PoleAtPoint(f"pole at {p}")
        return self.num.eval(p) / d

    def eval_complex(self, p: complex) -> complex:
        return self.num.eval_complex(p) / self.den.eval_complex(p)

    def order_at(self, alpha: ScalarLike):
        """Zero order (positive) / pole order (negative) at alpha.

        Returns ORDER_INF for the zero function.
        """
        if self.is_zero():
            return ORDER_INF
        alpha = QQi.coerce(alpha)
        return self.num.mult_at(alpha) - self.den.mult_at(alpha)

    def taylor(self, alpha: ScalarLike, k: int) -> list:
        """First k Taylor coefficients at alpha; requires regularity there."""
        alpha = QQi.coerce(alpha)
        if not self.is_zero() and self.order_at(alpha) < 0:
            raise PoleAtPoint(f"pole at {alpha}; no Taylor expansion")
        num = self.num.shift(alpha)
        den = self.den.shift(alpha)
        d0 = den.coeffs[0].inverse()
        out = []
        ncs = list(num.coeffs) + [ZERO] * k
        dcs = list(den.coeffs) + [ZERO] * k
        for j in range(k):
            acc = ncs[j]
            for i in range(j):
                acc = acc - out[i] * dcs[j - i]
            out.append(acc * d0)
        return out

    def deriv(self) -> "RatFunc":
        return RatFunc(
            self.num.deriv() * self.den - self.num * self.den.deriv(),
            self.den * self.den,
        )

    def conj_coeffs(self) -> "RatFunc":
        # f^#(z) with conjugated coefficients; reduced form is preserved up to
        # denominator normalization (conjugate of monic is monic).
        return RatFunc(self.num.conj_coeffs(), self.den.conj_coeffs(), _reduced=True)

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self):
        return f"{format_poly(self.num)} / {format_poly(self.den)}"


def rf_reduce(num: PolyLike, den: PolyLike) -> RatFunc:
    return RatFunc(num, den)


# ---------------------------------------------------------------------------
# rational real roots


def _int_divisors(n: int) -> list:
    n = abs(n)
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def rational_real_roots(p: Poly) -> list:
    """All rational real roots of p with multiplicities, as (Fraction, mult).

    The real-root content is isolated by intersecting p with its
    coefficient-conjugate; the rational-root test is then run on the cleared
    integer coefficients.  Multiplicities are taken in the original p.
    """
    if p.is_zero():
        raise ValueError("root finding on the zero polynomial")
    g = p.gcd(p.conj_coeffs())
    # g is monic and self-conjugate, hence has real rational coefficients
    roots = []
    zero_mult = p.mult_at(ZERO)
    if zero_mult:
        roots.append((Fraction(0), zero_mult))
    for _ in range(g.mult_at(ZERO)):
        g = g // Poly.x()
    if g.degree < 1:
        return roots
    denoms = 1
    for c in g.coeffs:
        denoms = denoms * c.re.denominator // math.gcd(denoms, c.re.denominator)
    ints = [int(c.re * denoms) for c in g.coeffs]
    a0 = next(c for c in ints if c != 0)
    an = ints[-1]
    cands = set()
    for num in _int_divisors(a0):
        for den in _int_divisors(an):
            cands.add(Fraction(num, den))
            cands.add(Fraction(-num, den))
    for r in sorted(cands):
        if g.eval(QQi(r)) == ZERO:
            roots.append((r, p.mult_at(QQi(r))))
    roots.sort()
    return roots


# ---------------------------------------------------------------------------
# bivariate layer


class BiPoly:
    """Polynomial in (z, u) over QQi, sparse dict {(deg_z, deg_u): coeff}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for key, c in dict(terms).items():
                c = QQi.coerce(c)
                if c:
                    t[(int(key[0]), int(key[1]))] = c
        object.__setattr__(self, "terms", t)

    def __setattr__(self, *a):
        raise AttributeError("BiPoly is immutable")

    @staticmethod
    def coerce(x) -> "BiPoly":
        if isinstance(x, BiPoly):
            return x
        if isinstance(x, Poly):
            return BiPoly.from_z_poly(x)
        return BiPoly({(0, 0): QQi.coerce(x)})

    @staticmethod
    def from_z_poly(p: Poly) -> "BiPoly":
        return BiPoly({(k, 0): c for k, c in enumerate(p.coeffs)})

    @staticmethod
    def from_u_poly(p: Poly) -> "BiPoly":
        return BiPoly({(0, k): c for k, c in enumerate(p.coeffs)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return self.terms == BiPoly.coerce(other).terms

    def __add__(self, other):
        other = BiPoly.coerce(other)
        t = dict(self.terms)
        for k, c in other.terms.items():
            t[k] = t.get(k, ZERO) + c
        return BiPoly(t)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-BiPoly.coerce(other))

    def __mul__(self, other):
        other = BiPoly.coerce(other)
        t = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                t[k] = t.get(k, ZERO) + c1 * c2
        return BiPoly(t)

    __rmul__ = __mul__

    def deg_u(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def deg_z(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def eval(self, a: ScalarLike, b: ScalarLike) -> QQi:
        a, b = QQi.coerce(a), QQi.coerce(b)
        acc = ZERO
        za, zb = {0: ONE}, {0: ONE}
        for (i, j), c in self.terms.items():
            if i not in za:
                za[i] = _pow(a, i)
            if j not in zb:
                zb[j] = _pow(b, j)
            acc = acc + c * za[i] * zb[j]
        return acc

    def as_u_poly(self) -> list:
        """Coefficients in u, each a Poly in z, lowest u-degree first."""
        d = self.deg_u()
        buckets = [dict() for _ in range(d + 1)]
        for (i, j), c in self.terms.items():
            buckets[j][i] = c
        out = []
        for b in buckets:
            n = max(b, default=-1) + 1
            out.append(Poly([b.get(i, ZERO) for i in range(n)]))
        return out

    @staticmethod
    def build_from_u_coeffs(coeffs: Sequence[Poly]) -> "BiPoly":
        t = {}
        for j, p in enumerate(coeffs):
            for i, c in enumerate(p.coeffs):
                if c:
                    t[(i, j)] = c
        return BiPoly(t)

    def swap_vars(self) -> "BiPoly":
        return BiPoly({(j, i): c for (i, j), c in self.terms.items()})

    def shift(self, a: ScalarLike, b: ScalarLike) -> "BiPoly":
        """Compose with (z, u) -> (z + a, u + b)."""
        coeffs = self.as_u_poly()
        shifted = [p.shift(a) for p in coeffs]
        # now shift in u: treat as poly in u with Poly coefficients
        out = {}
        b = QQi.coerce(b)
        # Horner in u over the ring QQi[z]
        acc: list = []
        for p in reversed(shifted):
            # acc = acc * (u + b) + p
            new = [Poly()] * (len(acc) + 1)
            for j, q in enumerate(acc):
                new[j + 1] = new[j + 1] + q
                new[j] = new[j] + q.scale(b)
            new[0] = new[0] + p
            acc = new
        return BiPoly.build_from_u_coeffs(acc)

    def leading_key(self):
        # lex order with z weighted before u
        return max(self.terms, key=lambda k: (k[0], k[1]))

    def __repr__(self):
        return f"BiPoly({self.terms!r})"


def _pow(a: QQi, k: int) -> QQi:
    out = ONE
    for _ in range(k):
        out = out * a
    return out


def _u_poly_gcd(f: BiPoly, g: BiPoly) -> BiPoly:
    """gcd in QQ(i)[z][u] via content/primitive-part split."""
    if f.is_zero():
        return _bipoly_normalize(g)
    if g.is_zero():
        return _bipoly_normalize(f)

    def content(p: BiPoly) -> Poly:
        c = Poly()
        for q in p.as_u_poly():
            c = c.gcd(q) if c else q.monic()
        return c

    def primitive(p: BiPoly, c: Poly):
        return [q // c for q in p.as_u_poly()]

    cf, cg = content(f), content(g)
    cc = cf.gcd(cg)
    # Euclid in QQ(i)(z)[u] with RatFunc coefficients
    a = [RatFunc(q) for q in primitive(f, cf)]
    b = [RatFunc(q) for q in primitive(g, cg)]

    def trim(p):
        while p and p[-1].is_zero():
            p.pop()
        return p

    a, b = trim(a), trim(b)
    while b:
        # a mod b
        a = a[:]
        inv = b[-1].inverse()
        while len(a) >= len(b):
            c = a[-1] * inv
            if c:
                for j in range(len(b)):
                    a[len(a) - len(b) + j] = a[len(a) - len(b) + j] - c * b[j]
            a.pop()
            trim(a)
        a, b = b, a
    # clear denominators of a, primitivize
    den = Poly([1])
    for c in a:
        den = den * (c.den // den.gcd(c.den))
    polys = [(c * RatFunc(den)).num for c in a]
    cont = Poly()
    for q in polys:
        cont = cont.gcd(q) if cont else q.monic()
    polys = [q // cont for q in polys]
    return _bipoly_normalize(BiPoly.build_from_u_coeffs(polys)) * cc


def _bipoly_normalize(p: BiPoly) -> BiPoly:
    if p.is_zero():
        return p
    lc = p.terms[p.leading_key()]
    inv = lc.inverse()
    return BiPoly({k: c * inv for k, c in p.terms.items()})


def bipoly_gcd(f: BiPoly, g: BiPoly) -> BiPoly:
    return _bipoly_normalize(_u_poly_gcd(f, g))


def bipoly_exact_div(f: BiPoly, g: BiPoly) -> BiPoly:
    """Exact division f/g in QQ(i)[z,u]; raises if it does not divide."""
    if g.is_zero():
        raise ZeroDivisionError("bivariate division by zero")
    if f.is_zero():
        return BiPoly()
    a = [RatFunc(q) for q in f.as_u_poly()]
    b = [RatFunc(q) for q in g.as_u_poly()]
    while b and b[-1].is_zero():
        b.pop()
    quo = [RatFunc(0)] * max(0, len(a) - len(b) + 1)
    inv = b[-1].inverse()
    rem = a[:]

    def trim(p):
        while p and p[-1].is_zero():
            p.pop()

    trim(rem)
    while len(rem) >= len(b):
        c = rem[-1] * inv
        quo[len(rem) - len(b)] = c
        for j in range(len(b)):
            rem[len(rem) - len(b) + j] = rem[len(rem) - len(b) + j] - c * b[j]
        rem.pop()
        trim(rem)
    if rem:
        raise ValueError("bivariate division is not exact")
    out = []
    for c in quo:
        if c.den.degree != 0:
            raise ValueError("bivariate division is not exact")
        out.append(c.num.scale(c.den.leading().inverse()))
    return BiPoly.build_from_u_coeffs(out)


def divide_by_z_minus_u(f: BiPoly) -> BiPoly:
    """Exact division of f(z, u) by (z - u); requires f(z, z) = 0."""
    # synthetic division by (u - z) over QQi[z], then negate
    coeffs = f.as_u_poly()
    n = len(coeffs)
    if n == 0:
        return BiPoly()
    quo = [Poly()] * (n - 1)
    carry = Poly()
    zpoly = Poly.x()
    for j in range(n - 1, 0, -1):
        carry = coeffs[j] + carry
        quo[j - 1] = carry
        carry = carry * zpoly
    if coeffs[0] + carry:
        raise ValueError("f is not divisible by (z - u)")
    return BiPoly.build_from_u_coeffs([-q for q in quo])


class BiRatFunc:
    """Reduced bivariate rational function in (z, u) over QQi."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, _reduced=False):
        num, den = BiPoly.coerce(num), BiPoly.coerce(den)
        if den.is_zero():
            raise ZeroDenominator("bivariate rational function with zero denominator")
        if not _reduced:
            if num.is_zero():
                den = BiPoly.coerce(1)
            else:
                g = bipoly_gcd(num, den)
                if g.terms != {(0, 0): ONE}:
                    num = bipoly_exact_div(num, g)
                    den = bipoly_exact_div(den, g)
                lc = den.terms[den.leading_key()].inverse()
                num = BiPoly({k: c * lc for k, c in num.terms.items()})
                den = BiPoly({k: c * lc for k, c in den.terms.items()})
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("BiRatFunc is immutable")

    @staticmethod
    def coerce(x) -> "BiRatFunc":
        if isinstance(x, BiRatFunc):
            return x
        if isinstance(x, RatFunc):
            return BiRatFunc(BiPoly.from_z_poly(x.num), BiPoly.from_z_poly(x.den))
        return BiRatFunc(BiPoly.coerce(x))

    @staticmethod
    def from_ratfunc_in_u(f: RatFunc) -> "BiRatFunc":
        return BiRatFunc(BiPoly.from_u_poly(f.num), BiPoly.from_u_poly(f.den))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        other = BiRatFunc.coerce(other)
        return self.num == other.num and self.den == other.den

    def __add__(self, other):
        other = BiRatFunc.coerce(other)
        return BiRatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return BiRatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        return self + (-BiRatFunc.coerce(other))

    def __mul__(self, other):
        other = BiRatFunc.coerce(other)
        return BiRatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def regular_at(self, a: ScalarLike, b: ScalarLike) -> bool:
        return bool(self.den.eval(a, b))

    def taylor_coeff(self, a: ScalarLike, b: ScalarLike, i: int, j: int) -> QQi:
        """Bivariate Taylor coefficient of (z-a)^i (u-b)^j at (a, b)."""
        if not self.regular_at(a, b):
            raise SingularAtPoint(f"singular at ({a}, {b})")
        num = self.num.shift(a, b)
        den = self.den.shift(a, b)
        d0 = den.eval(ZERO, ZERO).inverse()
        # series division up to (i, j), ordered by (p, q) componentwise
        c = {}
        nt, dt = num.terms, den.terms
        for p in range(i + 1):
            for q in range(j + 1):
                acc = nt.get((p, q), ZERO)
                for (r, s), cv in c.items():
                    if r <= p and s <= q and (r, s) != (p, q):
                        acc = acc - cv * dt.get((p - r, q - s), ZERO)
                c[(p, q)] = acc * d0
        return c[(i, j)]

    def mixed_partial_at(self, a: ScalarLike, b: ScalarLike, i: int, j: int) -> QQi:
        """d^{i+j}/dz^i du^j at (a, b); i!*j! times the Taylor coefficient."""
        coeff = self.taylor_coeff(a, b, i, j)
        return coeff * QQi(math.factorial(i) * math.factorial(j))

    def __repr__(self):
        return f"BiRatFunc({self.num!r}, {self.den!r})"


def nevanlinna_kernel_entry(f: RatFunc) -> BiRatFunc:
    """(f(z) - f(u)) / (z - u) as a reduced bivariate rational function."""
    az, bz = BiPoly.from_z_poly(f.num), BiPoly.from_z_poly(f.den)
    au, bu = BiPoly.from_u_poly(f.num), BiPoly.from_u_poly(f.den)
    num = az * bu - au * bz
    return BiRatFunc(divide_by_z_minus_u(num), bz * bu)
