"""Exponential polynomials: finite sums of p(z)*exp(c*z) with exact data.

p ranges over polynomials with Gaussian-rational coefficients and c over
Gaussian rationals.  The class is closed under ring operations and d/dz, the
zero test is exact (terms are keyed by frequency, so the canonical form of 0
is the empty sum), and evaluation at a complex point is the only approximate
operation.
"""

from __future__ import annotations

import cmath
from typing import Iterable, Union

from .fields import GaussRat, ZPoly, format_zpoly, scalar_str
from .linalg import det_cofactor

ScalarLike = Union[int, "GaussRat"]


def _freq_key(c: GaussRat):
    return (c.re, c.im)


class ExpPoly:
    """sum over c of p_c(z) * exp(c*z), stored as {c: p_c} with p_c != 0."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for c, p in terms.items():
                c = GaussRat.coerce(c)
                if not isinstance(p, ZPoly):
                    p = ZPoly.const(p)
                if not p.is_zero():
                    acc = clean.get(c)
                    clean[c] = p if acc is None else acc + p
                    if clean[c].is_zero():
                        del clean[c]
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ExpPoly is immutable")

    @staticmethod
    def zero() -> "ExpPoly":
        return ExpPoly()

    @staticmethod
    def const(c) -> "ExpPoly":
        return ExpPoly({GaussRat.coerce(0): ZPoly.const(c)})

    @staticmethod
    def var() -> "ExpPoly":
        return ExpPoly({GaussRat.coerce(0): ZPoly.var()})

    @staticmethod
    def poly(p: ZPoly) -> "ExpPoly":
        return ExpPoly({GaussRat.coerce(0): p})

    @staticmethod
    def exp(c) -> "ExpPoly":
        """e^{c z}"""
        return ExpPoly({GaussRat.coerce(c): ZPoly.const(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_polynomial(self) -> bool:
        return all(not c for c in self.terms)

    def polynomial_part(self) -> ZPoly:
        """The frequency-0 term; the whole function when is_polynomial()."""
        for c, p in self.terms.items():
            if not c:
                return p
        return ZPoly()

    def _coerce(self, other):
        if isinstance(other, ExpPoly):
            return other
        if isinstance(other, ZPoly):
            return ExpPoly.poly(other)
        if isinstance(other, (int, GaussRat)) or type(other).__name__ == "Fraction":
            return ExpPoly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        merged = dict(self.terms)
        for c, p in other.terms.items():
            merged[c] = merged[c] + p if c in merged else p
        return ExpPoly(merged)

    __radd__ = __add__

    def __neg__(self):
        return ExpPoly({c: -p for c, p in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict = {}
        for c1, p1 in self.terms.items():
            for c2, p2 in other.terms.items():
                c = c1 + c2
                prod = p1 * p2
                out[c] = out[c] + prod if c in out else prod
        return ExpPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers leave the ring")
        result = ExpPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def derivative(self) -> "ExpPoly":
        """(p e^{cz})' = (p' + c p) e^{cz}, termwise."""
        out = {}
        for c, p in self.terms.items():
            q = p.derivative() + p * c
            if not q.is_zero():
                out[c] = q
        return ExpPoly(out)

    def __call__(self, z0: complex) -> complex:
        z0 = complex(z0)
        total = 0j
        for c, p in self.terms.items():
            total += complex(p(z0)) * cmath.exp(complex(c) * z0)
        return total

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"ExpPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for c in sorted(self.terms, key=_freq_key):
            p = self.terms[c]
            ps = format_zpoly(p)
            if not c:
                parts.append(ps)
                continue
            if p.degree == 0 and p.leading() == 1:
                head = ""
            else:
                head = f"({ps})*" if (p.degree > 0 or "/" in ps or "-" in ps) else f"{ps}*"
            cs = scalar_str(c)
            arg = f"{cs}z" if cs not in ("1",) else "z"
            if any(ch in cs for ch in "+-/") and cs.lstrip("-") != cs or "+" in cs or "/" in cs:
                arg = f"({cs})z"
            parts.append(f"{head}exp({arg})")
        return " + ".join(parts)


def wronskian(fns: Iterable) -> object:
    """W(F_0,...,F_n) = det of the consecutive-derivative matrix.

    Elements need +, -, *, derivative(), and a zero test; exponential
    polynomials and rational functions both qualify.  An identically zero
    result is the dependence flag: the caller decides whether that is an
    error.
    """
    fns = list(fns)
    if not fns:
        raise ValueError("need at least one function")
    rows = [fns]
    for _ in range(len(fns) - 1):
        rows.append([g.derivative() for g in rows[-1]])
    return det_cofactor(rows)
