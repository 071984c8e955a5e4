"""Exact scalar tower: rationals, Gaussian rationals, univariate rational functions.

Three interoperable scalar classes:

  fractions.Fraction          rationals p/q, canonical by construction
  GaussRat                    a + b*i with Fraction real/imaginary parts
  RatFunc                     p(z)/q(z), p and q ZPoly over GaussRat, reduced, q monic

Mixed arithmetic works through Python's reflected-operator protocol: ints and
Fractions coerce up to GaussRat, GaussRat coerces up to RatFunc.  Every class
canonicalizes on construction, so == is plain structural comparison and a value
equal to one lower in the tower compares (and hashes) equal to it.

ZPoly is the internal polynomial workhorse: immutable tuple of GaussRat
coefficients in ascending degree order with no trailing zeros (the zero
polynomial is the empty tuple, degree -1).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Rat = Union[int, Fraction]


class PoleError(ZeroDivisionError):
    """Evaluation of a rational function at a zero of its denominator."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class GaussRat:
    """Gaussian rational a + b*i, components stored as Fractions."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRat is immutable")

    # -- coercion ----------------------------------------------------------

    @staticmethod
    def coerce(x) -> "GaussRat":
        if isinstance(x, GaussRat):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussRat(x)
        raise TypeError(f"cannot coerce {x!r} to GaussRat")

    def _binary(self, other):
        if isinstance(other, GaussRat):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussRat(other)
        return None

    # -- ring/field ops ----------------------------------------------------

    def __add__(self, other):
        o = self._binary(other)
        if o is None:
            return NotImplemented
        return GaussRat(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._binary(other)
        if o is None:
            return NotImplemented
        return GaussRat(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._binary(other)
        if o is None:
            return NotImplemented
        return GaussRat(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._binary(other)
        if o is None:
            return NotImplemented
        return GaussRat(self.re * o.re - self.im * o.im,
                        self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __pos__(self):
        return self

    def inverse(self) -> "GaussRat":
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("inverse of zero GaussRat")
        return GaussRat(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = self._binary(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._binary(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = GaussRat(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "GaussRat":
        return GaussRat(self.re, -self.im)

    # -- structure ---------------------------------------------------------

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussRat):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussRat({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_rational_like(self)


_GR_ZERO = GaussRat(0)
_GR_ONE = GaussRat(1)
_GR_I = GaussRat(0, 1)


def _fmt_frac(q: Fraction) -> str:
    return str(q)


def format_rational_like(x) -> str:
    """Canonical string for a Fraction or GaussRat: "p/q", "a+bi", "-i", ..."""
    if isinstance(x, (int, Fraction)):
        return str(x)
    re, im = x.re, x.im
    if im == 0:
        return _fmt_frac(re)
    if im == 1:
        imtxt = "i"
    elif im == -1:
        imtxt = "-i"
    else:
        imtxt = f"{_fmt_frac(im)}i"
    if re == 0:
        return imtxt
    sign = "+" if im > 0 else ""
    return f"{_fmt_frac(re)}{sign}{imtxt}"


class ZPoly:
    """Univariate polynomial in z over GaussRat; ascending coefficient tuple."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [GaussRat.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("ZPoly is immutable")

    @staticmethod
    def const(c) -> "ZPoly":
        return ZPoly((GaussRat.coerce(c),))

    @staticmethod
    def var() -> "ZPoly":
        return ZPoly((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> GaussRat:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, ZPoly):
            return other
        if isinstance(other, (int, Fraction, GaussRat)):
            return ZPoly((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return ZPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return ZPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return ZPoly()
        out = [_GR_ZERO] * (len(a) + len(b) - 1)
        for j, aj in enumerate(a):
            if not aj:
                continue
            for k, bk in enumerate(b):
                if bk:
                    out[j + k] = out[j + k] + aj * bk
        return ZPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = ZPoly((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other: "ZPoly"):
        o = self._coerce(other)
        if o is None or o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dv = o.coeffs
        dd = len(dv) - 1
        lead_inv = dv[-1].inverse()
        quot = [_GR_ZERO] * max(0, len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if not c:
                continue
            q = c * lead_inv
            quot[k - dd] = q
            for j in range(dd + 1):
                rem[k - dd + j] = rem[k - dd + j] - q * dv[j]
        return ZPoly(quot), ZPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "ZPoly":
        if self.is_zero():
            return self
        inv = self.leading().inverse()
        return ZPoly(tuple(c * inv for c in self.coeffs))

    def derivative(self) -> "ZPoly":
        return ZPoly(tuple(c * k for k, c in enumerate(self.coeffs) if k))

    def __call__(self, z0):
        """Evaluate by Horner; exact for GaussRat-like z0, float for complex."""
        if isinstance(z0, (int, Fraction, GaussRat)):
            acc = _GR_ZERO
            for c in reversed(self.coeffs):
                acc = acc * z0 + c
            return acc
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z0 + complex(c)
        return acc

    # -- structure -----------------------------------------------------------

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"ZPoly({list(self.coeffs)!r})"

    def __str__(self):
        return format_zpoly(self)


def zpoly_gcd(a: ZPoly, b: ZPoly) -> ZPoly:
    """Monic gcd by the Euclidean algorithm (remainders kept monic)."""
    while not b.is_zero():
        a, b = b, (a % b).monic()
    return a.monic()


def format_zpoly(p: ZPoly, var: str = "z") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        if k == 0:
            body = format_rational_like(c)
        else:
            zk = var if k == 1 else f"{var}^{k}"
            if c == 1:
                body = zk
            elif c == -1:
                body = f"-{zk}"
            else:
                ctxt = format_rational_like(c)
                if ("+" in ctxt[1:]) or ("-" in ctxt[1:]):
                    ctxt = f"({ctxt})"
                body = f"{ctxt}*{zk}"
        if parts and not body.startswith("-"):
            parts.append("+" + body)
        else:
            parts.append(body)
    return "".join(parts)


class RatFunc:
    """Rational function num(z)/den(z), reduced, denominator monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, ZPoly):
            num = ZPoly((num,)) if isinstance(num, (int, Fraction, GaussRat)) else ZPoly(num)
        if den is None:
            den = ZPoly((1,))
        elif not isinstance(den, ZPoly):
            den = ZPoly((den,)) if isinstance(den, (int, Fraction, GaussRat)) else ZPoly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in RatFunc")
        if num.is_zero():
            den = ZPoly((1,))
        else:
            g = zpoly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            lc = den.leading()
            if lc != 1:
                inv = lc.inverse()
                num = num * inv
                den = den * inv
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @staticmethod
    def coerce(x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction, GaussRat)):
            return RatFunc(ZPoly((x,)))
        if isinstance(x, ZPoly):
            return RatFunc(x)
        raise TypeError(f"cannot coerce {x!r} to RatFunc")

    @staticmethod
    def var() -> "RatFunc":
        return RatFunc(ZPoly.var())

    def _binary(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction, GaussRat, ZPoly)):
            return RatFunc.coerce(other)
        return None

    # -- field ops -----------------------------------------------------------

    def __add__(self, other):
        o = self._binary(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._binary(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        o = self._binary(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._binary(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._binary(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero RatFunc")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._binary(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if self.num.is_zero():
                raise ZeroDivisionError("negative power of zero RatFunc")
            return RatFunc(self.den ** (-k), self.num ** (-k))
        return RatFunc(self.num ** k, self.den ** k)

    def inverse(self) -> "RatFunc":
        return 1 / self

    def derivative(self) -> "RatFunc":
        """Exact d/dz by the quotient rule."""
        return RatFunc(self.num.derivative() * self.den - self.num * self.den.derivative(),
                       self.den * self.den)

    def __call__(self, z0):
        """Exact evaluation at GaussRat-like z0; complex path for numerics."""
        if isinstance(z0, (int, Fraction, GaussRat)):
            dv = self.den(z0)
            if not dv:
                raise PoleError(f"evaluation at pole z={z0} of {self}")
            return self.num(z0) * dv.inverse()
        dv = self.den(z0)
        return self.num(z0) / dv

    # -- structure -----------------------------------------------------------

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def constant_value(self) -> GaussRat:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.coeffs[0] if self.num.coeffs else _GR_ZERO

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        o = self._binary(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash((self.num.coeffs, self.den.coeffs))

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self):
        ntxt = format_zpoly(self.num)
        if self.den.degree == 0:
            return ntxt
        dtxt = format_zpoly(self.den)
        if self.num.degree > 0 or ("+" in ntxt[1:]) or ("-" in ntxt[1:]):
            ntxt = f"({ntxt})"
        return f"{ntxt}/({dtxt})"


Scalar = Union[Fraction, GaussRat, RatFunc]


def simplify_scalar(x) -> Scalar:
    """Downcast to the lowest tower level representing the same value."""
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, RatFunc):
        if x.is_constant():
            x = x.constant_value()
        else:
            return x
    if isinstance(x, GaussRat):
        return x.re if x.im == 0 else x
    if isinstance(x, Fraction):
        return x
    raise TypeError(f"not a scalar: {x!r}")


def scalar_str(x) -> str:
    """Canonical string form; round-trips through parsing.parse_scalar."""
    x = simplify_scalar(x)
    if isinstance(x, RatFunc):
        return str(x)
    return format_rational_like(x)


def scalar_complex(x) -> complex:
    """Float image of a constant scalar (RatFunc must be constant)."""
    x = simplify_scalar(x)
    if isinstance(x, Fraction):
        return complex(float(x), 0.0)
    if isinstance(x, GaussRat):
        return complex(x)
    raise ValueError(f"{x} is not a constant scalar")
