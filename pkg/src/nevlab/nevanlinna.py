"""Growth and value-distribution numerics for entire curves.

This is the floating-point layer of the package.  A curve C -> CP^n is given
by n+1 exponential polynomial components without common zeros; its growth is
measured by circle averages of log of the sup norm, its intersections with
hypersurface targets by integrated zero counts over divisors computed with
the winding machinery.  The harness at the bottom compares both sides of the
truncated main inequality on a radius grid, with truncation levels taken
from the certified bound chain and general position checked by resultants.

Floats enter only through quadrature and through zero locations; divisor
multiplicities, truncation levels, and admissibility stay exact.  Components
are evaluated directly, so radii beyond the overflow range of exp (around
700 for unit frequencies) are out of scope.
"""

from __future__ import annotations

import cmath
import math
import operator
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .bounds import compute_truncation_levels
from .expfunc import ExpPoly
from .fields import GaussRat, RatFunc, ZPoly, zpoly_gcd
from .hpoly import HPoly, monomials
from .linalg import det_cofactor
from .quadrature import QuadResult, circle_average, default_target
from .resultant import HypersurfaceFamily, is_admissible
from .zeros import Divisor, exppoly_zeros, ratfunc_divisors, zpoly_zeros

__all__ = [
    "AdmissibilityError", "DegeneracyError", "EntireCurve", "as_curve",
    "characteristic", "zeros_in_disk", "counting_function",
    "log_modulus_average", "jensen_check", "wronskian",
    "DivisorBoundReport", "divisor_bound_check", "nondegeneracy_check",
    "normalize_target", "compose_target", "quotient_zeros",
    "defect_estimate", "NevanlinnaProfile", "build_profile",
    "TargetReport", "SmtReport", "smt_verify",
    "LogDerivativeReport", "log_derivative_diagnostic",
]


class DegeneracyError(ValueError):
    """A curve or composed target fails a required nondegeneracy condition."""


class AdmissibilityError(ValueError):
    """The target family is not in general position."""


# ---------------------------------------------------------------------------
# curves


def _as_exppoly(c) -> ExpPoly:
    if isinstance(c, ExpPoly):
        return c
    if isinstance(c, ZPoly):
        return ExpPoly.poly(c)
    return ExpPoly.const(c)


_SCREEN_RADII = (0.713, 1.618, 3.374)
_SCREEN_ANGLES = 24


class EntireCurve:
    """Holomorphic map C -> CP^n given by n+1 exponential polynomial components.

    The tuple must be reduced (no common zeros).  Polynomial tuples are
    checked exactly through a gcd; once genuine exponential terms appear two
    components can share infinitely many zeros without an algebraic witness,
    so mixed tuples only get a finite point screen.
    """

    __slots__ = ("components",)

    def __init__(self, components: Iterable):
        comps = tuple(_as_exppoly(c) for c in components)
        if len(comps) < 2:
            raise ValueError("a projective curve needs at least two components")
        if all(c.is_zero() for c in comps):
            raise ValueError("all components vanish identically")
        object.__setattr__(self, "components", comps)
        self._check_reduced()

    def __setattr__(self, name, value):
        raise AttributeError("EntireCurve is immutable")

    def _check_reduced(self) -> None:
        live = [c for c in self.components if not c.is_zero()]
        if all(c.is_polynomial() for c in live):
            g = reduce(zpoly_gcd, [c.polynomial_part() for c in live])
            if g.degree >= 1:
                raise DegeneracyError(
                    "components share a polynomial factor; divide it out first")
            return
        for rr in _SCREEN_RADII:
            for k in range(_SCREEN_ANGLES):
                z = rr * cmath.exp(2j * math.pi * (k + 0.37) / _SCREEN_ANGLES)
                if self.norm_at(z) == 0.0:
                    raise DegeneracyError(
                        f"components all vanish near z = {z:.6g}")

    @property
    def n(self) -> int:
        return len(self.components) - 1

    def is_polynomial(self) -> bool:
        return all(c.is_polynomial() for c in self.components)

    def __call__(self, z: complex) -> tuple[complex, ...]:
        return tuple(c(z) for c in self.components)

    def norm_at(self, z: complex) -> float:
        return max(abs(v) for v in self(z))

    def __eq__(self, other):
        if not isinstance(other, EntireCurve):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return "EntireCurve(" + ", ".join(str(c) for c in self.components) + ")"


CurveLike = Union[EntireCurve, Sequence]


def as_curve(f: CurveLike) -> EntireCurve:
    return f if isinstance(f, EntireCurve) else EntireCurve(f)


# ---------------------------------------------------------------------------
# vectorized evaluation

def _vector_eval(e: ExpPoly):
    """Array-in, array-out evaluator for one exponential polynomial."""
    data = [(complex(c), np.array([complex(a) for a in reversed(p.coeffs)]))
            for c, p in e.terms.items()]

    def ev(zs: np.ndarray) -> np.ndarray:
        out = np.zeros_like(zs, dtype=complex)
        for c, desc in data:
            term = np.polyval(desc, zs)
            if c:
                term = term * np.exp(c * zs)
            out += term
        return out

    return ev


def _log_norm_integrand(curve: EntireCurve):
    evs = [_vector_eval(c) for c in curve.components]

    def fn(zs: np.ndarray) -> np.ndarray:
        mags = np.abs(evs[0](zs))
        for ev in evs[1:]:
            np.maximum(mags, np.abs(ev(zs)), out=mags)
        return np.log(mags)

    fn.vectorized = True
    return fn


# ---------------------------------------------------------------------------
# characteristic


@lru_cache(maxsize=4096)
def _log_norm_average(curve: EntireCurve, r: float, target: float) -> QuadResult:
    return circle_average(_log_norm_integrand(curve), r, target=target)


def characteristic(f: CurveLike, r: float, target: Optional[float] = None) -> float:
    """T(r): mean of log max_i |f_i| over |z| = r, minus the same mean at r = 1.

    Nonnegative and nondecreasing in r >= 1 up to quadrature error; invariant
    under scaling all components by a common nonzero constant; exactly
    k*log r when the components are monomials with top degree k and the top
    monomial has unit coefficient modulus.
    """
    if r < 1:
        raise ValueError("the growth scale is normalized at r = 1; need r >= 1")
    curve = as_curve(f)
    if target is None:
        target = default_target()
    if r == 1.0:
        return 0.0
    hi = _log_norm_average(curve, float(r), target)
    lo = _log_norm_average(curve, 1.0, target)
    for res, rr in ((hi, r), (lo, 1.0)):
        if not res.converged:
            warnings.warn(
                f"circle average at r={rr:g} stopped at error {res.error:.2e}",
                stacklevel=2)
    return hi.value - lo.value


# ---------------------------------------------------------------------------
# divisors and counting


def zeros_in_disk(f, r: float) -> Divisor:
    """Divisor of zeros in |z| <= r.

    Accepts a polynomial, a rational function (poles are dropped; use
    ratfunc_divisors when both halves matter), or an exponential polynomial.
    """
    if isinstance(f, ZPoly):
        return zpoly_zeros(f, r)
    if isinstance(f, RatFunc):
        zer, _ = ratfunc_divisors(f, r)
        return zer
    if isinstance(f, ExpPoly):
        return exppoly_zeros(f, r)
    raise TypeError(f"no zero finder for {type(f).__name__}")


def counting_function(div: Divisor, r: float,
                      level: Optional[int] = None) -> float:
    """Integrated count N(r) of the divisor, normalized at radius 1.

    A point at |a| < 1 (the origin included) contributes mult * log r, a
    point at 1 <= |a| <= r contributes mult * log(r/|a|), points outside are
    ignored.  level caps each multiplicity (truncated counting); None means
    no cap.
    """
    if r < 1:
        raise ValueError("counting is normalized at radius 1; need r >= 1")
    if r > div.r * (1 + 1e-12):
        raise ValueError(f"divisor only known out to |z| <= {div.r:g}")
    if level is not None and level < 1:
        raise ValueError("truncation level must be a positive integer")
    total = 0.0
    for a, m in div.points:
        if level is not None:
            m = min(m, level)
        aa = abs(a)
        if aa <= 1.0:
            total += m * math.log(r)
        elif aa <= r:
            total += m * math.log(r / aa)
    return total


# ---------------------------------------------------------------------------
# Jensen residuals


def _nudge_radius(r: float, pts) -> float:
    # sample circles must not pass through subtracted points: a coincident
    # sample evaluates 0/0
    rr = r
    for _ in range(8):
        if all(abs(abs(a) - rr) > 1e-9 * max(rr, 1.0) for a, _ in pts):
            break
        rr *= 1.0 + 4e-9
    return rr


def log_modulus_average(ev, r: float, subtract=(),
                        target: Optional[float] = None) -> tuple[float, bool]:
    """Mean of log|fn| over |z| = r with listed (point, mult) factors removed.

    Each factor (z - a)^m is divided out of the integrand and its exact mean
    m * log max(r, |a|) added back, so zeros and poles near (or on) the
    circle cost nothing in accuracy.  ev must be an array evaluator.  Returns
    (value, converged).
    """
    pts = tuple(subtract)
    base = math.fsum(m * math.log(max(r, abs(a))) for a, m in pts)

    def g(zs: np.ndarray) -> np.ndarray:
        out = np.log(np.abs(ev(zs)))
        for a, m in pts:
            out -= m * np.log(np.abs(zs - a))
        return out

    g.vectorized = True
    res = circle_average(g, r, target=target)
    return base + res.value, res.converged


def jensen_check(phi, r: float, target: Optional[float] = None) -> float:
    """Residual |N_zeros(r) - N_poles(r) - (mean log|phi| at r minus at 1)|.

    Both circle means subtract every zero and pole analytically, leaving
    smooth integrands; the residual therefore measures quadrature error plus
    root placement error and should sit far below 1e-6 for honest inputs.
    """
    if r < 1:
        raise ValueError("need r >= 1")
    if target is None:
        target = default_target()
    big = 1.5 * r + 1.0
    if isinstance(phi, ZPoly):
        phi = RatFunc(phi)
    if isinstance(phi, RatFunc):
        zer, pol = ratfunc_divisors(phi, big)
        num = np.array([complex(a) for a in reversed(phi.num.coeffs)])
        den = np.array([complex(a) for a in reversed(phi.den.coeffs)])

        def ev(zs):
            return np.polyval(num, zs) / np.polyval(den, zs)
    elif isinstance(phi, ExpPoly):
        zer, pol = exppoly_zeros(phi, big), None
        ev = _vector_eval(phi)
    else:
        raise TypeError(f"no divisor support for {type(phi).__name__}")
    pts = list(zer.points)
    n_count = counting_function(zer, r)
    if pol is not None:
        pts += [(a, -m) for a, m in pol.points]
        n_count -= counting_function(pol, r)
    hi, _ = log_modulus_average(ev, _nudge_radius(r, pts), pts, target)
    lo, _ = log_modulus_average(ev, _nudge_radius(1.0, pts), pts, target)
    return abs(n_count - (hi - lo))


# ---------------------------------------------------------------------------
# wronskians and the divisor bound


def wronskian(fns: Sequence, orders: Optional[Sequence[int]] = None) -> ExpPoly:
    """Determinant of the derivative matrix with one row per requested order.

    orders defaults to (0, 1, ..., len(fns)-1).  An identically zero result
    is the linear dependence flag; it is returned, not raised, so callers
    decide severity.
    """
    fns = [_as_exppoly(f) for f in fns]
    if not fns:
        raise ValueError("need at least one function")
    if orders is None:
        orders = range(len(fns))
    orders = tuple(orders)
    if len(orders) != len(fns):
        raise ValueError("need as many derivative orders as functions")
    if len(set(orders)) != len(orders) or any(k < 0 for k in orders):
        raise ValueError("orders must be distinct and nonnegative")
    rows = [list(fns)]
    for _ in range(max(orders)):
        rows.append([g.derivative() for g in rows[-1]])
    return det_cofactor([rows[k] for k in orders])


@dataclass(frozen=True)
class DivisorBoundReport:
    """Per-site comparison of quotient order against the truncated sum."""

    holds: bool
    p0: int
    # (site, ord(product) - ord(wronskian), sum_i min(ord(f_i), p0))
    sites: tuple[tuple[complex, int, int], ...]
    boundary_nudged: bool


def divisor_bound_check(f: CurveLike, r: float,
                        match_tol: float = 1e-7) -> DivisorBoundReport:
    """Check ord_a(f_0...f_n / W) <= sum_i min(ord_a(f_i), n) inside |z| <= r.

    W is the consecutive-order wronskian of the components.  Polynomial
    components only: multiplicities come from exact squarefree structure and
    only the positions are floating point, matched within match_tol.
    """
    curve = as_curve(f)
    if not curve.is_polynomial():
        raise ValueError("exact order comparison needs polynomial components")
    n = curve.n
    w = wronskian(curve.components)
    if w.is_zero():
        raise DegeneracyError("components are linearly dependent")
    comp_divs = [zpoly_zeros(c.polynomial_part(), r) for c in curve.components]
    w_div = zpoly_zeros(w.polynomial_part(), r)
    nudged = w_div.boundary_nudged or any(d.boundary_nudged for d in comp_divs)

    def order_at(div: Divisor, a: complex) -> int:
        for b, m in div.points:
            if abs(b - a) <= match_tol * (1.0 + abs(a)):
                return m
        return 0

    seen: list[complex] = []
    sites = []
    holds = True
    for div in comp_divs:
        for a, _ in div.points:
            if any(abs(a - b) <= match_tol * (1.0 + abs(a)) for b in seen):
                continue
            seen.append(a)
            quot = sum(order_at(d, a) for d in comp_divs) - order_at(w_div, a)
            cap = sum(min(order_at(d, a), n) for d in comp_divs)
            sites.append((a, quot, cap))
            if quot > cap:
                holds = False
    return DivisorBoundReport(holds=holds, p0=n, sites=tuple(sites),
                              boundary_nudged=nudged)


# ---------------------------------------------------------------------------
# nondegeneracy


def nondegeneracy_check(f: CurveLike, max_degree: int = 4,
                        seed: int = 7) -> int:
    """Numeric certificate that no form of degree <= max_degree kills the curve.

    For each degree e the monomials f^I with |I| = e are evaluated at
    3*C(n+e, n) pseudorandom points; a rank drop of the resulting matrix
    means some fixed linear combination of the monomials vanishes at every
    sample, which pins an algebraic relation up to floating point.  Returns
    the largest degree verified; raises DegeneracyError on a rank drop.  A
    drop is decisive, a pass is strong evidence rather than proof.
    """
    curve = as_curve(f)
    n = curve.n
    rng = np.random.default_rng(seed)
    evs = [_vector_eval(c) for c in curve.components]
    for e in range(1, max_degree + 1):
        exps = monomials(n, e)
        rows = 3 * len(exps)
        zs = (0.4 + 2.3 * rng.random(rows)) * np.exp(2j * np.pi * rng.random(rows))
        vals = np.column_stack([ev(zs) for ev in evs])
        mat = np.empty((rows, len(exps)), dtype=complex)
        for j, exp in enumerate(exps):
            col = np.ones(rows, dtype=complex)
            for i, k in enumerate(exp):
                if k:
                    col = col * vals[:, i] ** k
            mat[:, j] = col
        # row scaling: raw monomial values spread over many orders of
        # magnitude and would swamp the rank tolerance
        norms = np.max(np.abs(mat), axis=1)
        norms[norms == 0.0] = 1.0
        mat /= norms[:, None]
        if np.linalg.matrix_rank(mat) < len(exps):
            raise DegeneracyError(
                f"components satisfy an algebraic relation of degree {e}")
    return max_degree


# ---------------------------------------------------------------------------
# targets along the curve


def _coeff_parts(c) -> tuple[ZPoly, ZPoly]:
    if isinstance(c, RatFunc):
        return c.num, c.den
    if isinstance(c, ZPoly):
        return c, ZPoly((1,))
    return ZPoly((c,)), ZPoly((1,))


def _scalar_inverse(c):
    if isinstance(c, RatFunc):
        return c.inverse()
    if isinstance(c, GaussRat):
        return c.inverse()
    return Fraction(1) / Fraction(c)


def normalize_target(qf: HPoly) -> HPoly:
    """Scale the form so one coefficient is exactly 1.

    Constant coefficients are preferred (the scale then commutes with every
    later evaluation); otherwise the lexicographically first term is used.
    Counting against the scaled form shifts nothing that grows like the
    curve, which is the normalization the moving-target inequality needs.
    """
    items = qf.terms_desc()
    if not items:
        raise ValueError("zero form")
    pick = None
    for _, c in items:
        if not (isinstance(c, RatFunc) and not c.is_constant()):
            pick = c
            break
    if pick is None:
        pick = items[0][1]
    return qf * _scalar_inverse(pick)


def compose_target(qf: HPoly, f: CurveLike) -> tuple[ExpPoly, ZPoly]:
    """Pull the form back along the curve, clearing coefficient denominators.

    Returns (E, D) with Q(f) = E/D: E an exponential polynomial (each
    numerator multiplied by the other denominators), D the product of all
    coefficient denominators, constant when nothing moves.
    """
    curve = as_curve(f)
    if qf.nvars != curve.n + 1:
        raise ValueError(
            f"form in {qf.nvars} variables against a curve in {curve.n + 1}")
    items = qf.terms_desc()
    parts = [(exp,) + _coeff_parts(c) for exp, c in items]
    d_total = reduce(operator.mul, (den for _, _, den in parts), ZPoly((1,)))
    total = ExpPoly.zero()
    for j, (exp, num, _) in enumerate(parts):
        cof = num
        for k, (_, _, den) in enumerate(parts):
            if k != j:
                cof = cof * den
        mono = ExpPoly.const(1)
        for i, k in enumerate(exp):
            if k:
                mono = mono * curve.components[i] ** k
        total = total + ExpPoly.poly(cof) * mono
    return total, d_total


def quotient_zeros(e_part: ExpPoly, d_part: ZPoly, r: float,
                   match_tol: float = 1e-6) -> Divisor:
    """Zero divisor of E/D inside |z| <= r.

    Numerator zeros matching a denominator zero lose that multiplicity;
    leftover denominator zeros are poles of the quotient and never enter a
    zero count.
    """
    if e_part.is_zero():
        raise DegeneracyError("form vanishes identically along the curve")
    ediv = exppoly_zeros(e_part, r)
    if d_part.degree <= 0:
        return ediv
    ddiv = zpoly_zeros(d_part, r)
    pts = []
    for a, m in ediv.points:
        drop = sum(k for b, k in ddiv.points
                   if abs(a - b) <= match_tol * (1.0 + abs(a)))
        if m > drop:
            pts.append((a, m - drop))
    return Divisor(points=tuple(pts), r=min(ediv.r, ddiv.r),
                   boundary_nudged=ediv.boundary_nudged or ddiv.boundary_nudged)


# ---------------------------------------------------------------------------
# defects and profiles


def defect_estimate(f: CurveLike, qf: HPoly, r_max: float,
                    level: Optional[int] = None, grid_points: int = 12,
                    target: Optional[float] = None) -> float:
    """Numeric stand-in for the defect: min over the top half of a geometric
    radius grid of 1 - N(r)/(deg(Q) T(r)).

    The true defect is a lim inf as r -> infinity; the top-half minimum on a
    finite grid converges to it from whatever transient the small radii
    carry.  Can dip slightly below 0 or sit slightly under 1 from quadrature
    and grid effects.
    """
    curve = as_curve(f)
    e_part, d_part = compose_target(qf, curve)
    div = quotient_zeros(e_part, d_part, r_max * (1 + 1e-9))
    radii = np.geomspace(max(2.0, math.sqrt(r_max)), r_max, grid_points)
    vals = []
    for r in radii[grid_points // 2:]:
        t = characteristic(curve, float(r), target)
        if t <= 0.0:
            continue
        vals.append(1.0 - counting_function(div, float(r), level)
                    / (qf.degree * t))
    if not vals:
        raise ValueError("characteristic vanishes across the grid; "
                         "defects need a nonconstant curve")
    return min(vals)


@dataclass(frozen=True)
class NevanlinnaProfile:
    """Characteristic sampled on an increasing radius grid."""

    radii: tuple[float, ...]
    t_values: tuple[float, ...]

    def __post_init__(self):
        if len(self.radii) != len(self.t_values):
            raise ValueError("grid and values differ in length")
        if any(r <= 1.0 for r in self.radii):
            raise ValueError("profile radii must exceed 1")
        if any(b <= a for a, b in zip(self.radii, self.radii[1:])):
            raise ValueError("profile radii must increase")
        slack = 1e-6 * (1.0 + max(abs(t) for t in self.t_values))
        if any(b < a - slack for a, b in zip(self.t_values, self.t_values[1:])):
            raise ValueError("characteristic must be nondecreasing")


def build_profile(f: CurveLike, radii: Sequence[float],
                  target: Optional[float] = None) -> NevanlinnaProfile:
    curve = as_curve(f)
    rs = tuple(float(r) for r in radii)
    return NevanlinnaProfile(rs, tuple(characteristic(curve, r, target)
                                       for r in rs))


# ---------------------------------------------------------------------------
# the main inequality harness


@dataclass(frozen=True)
class TargetReport:
    """One target's contribution to the inequality."""

    form: HPoly                       # after normalization
    degree: int
    truncation: Optional[int]         # None = counted untruncated
    counts: tuple[float, ...]         # truncated N(r) on the grid
    defect: float
    coeff_growth: float               # max_c T_c(r_max) / T_f(r_max), 0 if fixed


@dataclass(frozen=True)
class SmtReport:
    """Grid evaluation of (q - n - 1 - eps) T(r) <= sum_j N_j(r)/d_j."""

    n: int
    q: int
    eps: Fraction
    fixed: bool
    profile: NevanlinnaProfile
    targets: tuple[TargetReport, ...]
    lhs: tuple[float, ...]
    rhs: tuple[float, ...]
    margins: tuple[float, ...]        # rhs - lhs, nonnegative when it holds
    r0: Optional[float]               # first grid radius with no later violation
    violating_measure: float          # total width of grid cells touching one
    defect_sum: float
    nondegenerate_to: int
    level_note: Optional[str]

    @property
    def holds_everywhere(self) -> bool:
        return all(m >= 0.0 for m in self.margins)

    @property
    def holds_eventually(self) -> bool:
        return self.r0 is not None


def smt_verify(f: CurveLike, targets, eps, radii: Sequence[float],
               truncations: Optional[Sequence[Optional[int]]] = None,
               nondegeneracy_degree: int = 4,
               target: Optional[float] = None) -> SmtReport:
    """Evaluate the truncated main inequality on a radius grid.

    Checks first that the family is in general position and that the curve
    passes the nondegeneracy rank test, then measures both sides at every
    radius.  Forms are normalized so one coefficient is 1 before counting.
    Truncation levels come from the certified bound chain unless supplied;
    levels too large to materialize fall back to untruncated counting, which
    only raises the right side, and level_note records the fallback.
    """
    curve = as_curve(f)
    if isinstance(targets, HypersurfaceFamily):
        fam = targets
    else:
        fam = HypersurfaceFamily(curve.n, tuple(targets))
    if fam.n != curve.n:
        raise ValueError("family and curve dimensions differ")
    rs = tuple(float(r) for r in radii)
    if len(rs) < 2 or any(r <= 1.0 for r in rs) or list(rs) != sorted(set(rs)):
        raise ValueError("need a strictly increasing grid of radii > 1")
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")

    adm = is_admissible(fam)
    if not adm.admissible:
        raise AdmissibilityError(
            f"family not in general position; failing subset {adm.failing_subset}")
    nondeg = nondegeneracy_check(curve, nondegeneracy_degree)

    n, q = curve.n, fam.q
    fixed = not fam.is_moving()
    level_note = None
    if truncations is not None:
        levels = tuple(truncations)
        if len(levels) != q:
            raise ValueError(f"expected {q} truncation levels")
    else:
        chain = compute_truncation_levels(n, q, eps, fam.degrees, fixed=fixed)
        if chain.materialized:
            levels = chain.truncations
        else:
            levels = (None,) * q
            level_note = ("certified truncation levels exceed the digit "
                          "budget; counting untruncated")

    profile = build_profile(curve, rs, target)
    r_max = rs[-1]
    t_rmax = profile.t_values[-1]

    reports = []
    for qf, lev in zip(fam.polys, levels):
        norm = normalize_target(qf)
        e_part, d_part = compose_target(norm, curve)
        div = quotient_zeros(e_part, d_part, r_max * (1 + 1e-9))
        counts = tuple(counting_function(div, r, lev) for r in rs)
        half = len(rs) // 2
        defect = min(1.0 - counts[i] / (qf.degree * profile.t_values[i])
                     for i in range(half, len(rs))
                     if profile.t_values[i] > 0.0)
        growth = 0.0
        for _, c in norm.terms_desc():
            if isinstance(c, RatFunc) and not c.is_constant():
                t_c = characteristic((c.den, c.num), r_max, target)
                growth = max(growth, t_c / t_rmax if t_rmax > 0 else math.inf)
        reports.append(TargetReport(form=norm, degree=qf.degree,
                                    truncation=lev, counts=counts,
                                    defect=defect, coeff_growth=growth))

    factor = float(q - n - 1 - eps)
    lhs = tuple(factor * t for t in profile.t_values)
    rhs = tuple(math.fsum(rep.counts[i] / rep.degree for rep in reports)
                for i in range(len(rs)))
    margins = tuple(b - a for a, b in zip(lhs, rhs))

    r0 = None
    for i in range(len(rs)):
        if all(m >= 0.0 for m in margins[i:]):
            r0 = rs[i]
            break
    bad = 0.0
    for i in range(len(rs) - 1):
        if margins[i] < 0.0 or margins[i + 1] < 0.0:
            bad += rs[i + 1] - rs[i]

    return SmtReport(n=n, q=q, eps=eps, fixed=fixed, profile=profile,
                     targets=tuple(reports), lhs=lhs, rhs=rhs,
                     margins=margins, r0=r0, violating_measure=bad,
                     defect_sum=math.fsum(rep.defect for rep in reports),
                     nondegenerate_to=nondeg, level_note=level_note)


# ---------------------------------------------------------------------------
# log-derivative diagnostic


@dataclass(frozen=True)
class LogDerivativeReport:
    """Mean of log+ |W/(f_0...f_n)| against T(r), per radius."""

    radii: tuple[float, ...]
    ratios: tuple[float, ...]
    nonincreasing_fraction: float
    converged: bool


def log_derivative_diagnostic(f: CurveLike, radii: Sequence[float],
                              target: float = 1e-6) -> LogDerivativeReport:
    """Probe how small the wronskian is against the component product.

    The compactness lemma behind the main inequality forces the mean of
    log+ |W/(f_0...f_n)| on |z| = r to grow slower than T(r) outside an
    exceptional set.  log+ kinks wherever the modulus crosses 1 and spikes
    near product zeros, so the default quadrature target is looser and
    convergence is reported rather than enforced: this is a diagnostic, not
    a certificate.
    """
    curve = as_curve(f)
    w = wronskian(curve.components)
    if w.is_zero():
        raise DegeneracyError("components are linearly dependent")
    prod = reduce(operator.mul, curve.components)
    wev, pev = _vector_eval(w), _vector_eval(prod)
    rs = tuple(float(r) for r in radii)
    pdiv = exppoly_zeros(prod, max(rs) * 1.01)
    moduli = [abs(a) for a, _ in pdiv.points]

    def integrand(zs: np.ndarray) -> np.ndarray:
        ratio = np.abs(wev(zs)) / np.abs(pev(zs))
        return np.log(np.maximum(ratio, 1.0))

    integrand.vectorized = True
    ratios, ok = [], True
    out_radii = []
    for r in rs:
        # keep a gap of 3e-4 r to the nearest product zero: the spike there
        # is integrable but slow for the trapezoid rule
        rr = r
        for _ in range(32):
            if all(abs(m - rr) > 3e-4 * rr for m in moduli):
                break
            rr *= 1.0 + 1e-3
        res = circle_average(integrand, rr, target=target)
        ok = ok and res.converged
        t = characteristic(curve, rr)
        ratios.append(res.value / t if t > 0.0 else math.inf)
        out_radii.append(rr)
    downs = sum(1 for a, b in zip(ratios, ratios[1:]) if b <= a + 1e-12)
    frac = downs / max(1, len(ratios) - 1)
    return LogDerivativeReport(radii=tuple(out_radii), ratios=tuple(ratios),
                               nonincreasing_fraction=frac, converged=ok)
