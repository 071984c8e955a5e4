"""Resultants of homogeneous forms, general-position checks, power certificates.

Three layers:

  sylvester_resultant   classical 2d x 2d determinant for binary forms (oracle)
  macaulay_resultant    n+1 forms of common degree d via the Macaulay quotient
                        det(M)/det(M''), built at critical degree
                        t = (n+1)(d-1)+1; normalized so res(x_0^d,...,x_n^d)=1
  is_admissible         every (n+1)-subset of a family has resultant not
                        identically zero, decided exactly; returns a witness
                        parameter point where all subset resultants are
                        simultaneously nonzero, or the failing subset

plus power_certificate: the minimal s with x_i^s * R in the degree-s graded
piece of the ideal generated by the family, with exact cofactors.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence

from .fields import GaussRat, PoleError, RatFunc, simplify_scalar
from .hpoly import HPoly, monomials
from .linalg import det_sparse, solve_system


class DegenerateResultantError(RuntimeError):
    """Macaulay numerator and minor both vanish after all retries."""


class NotAdmissibleError(ValueError):
    """A certificate was requested for a family whose resultant vanishes."""


def sylvester_resultant(p: HPoly, q: HPoly):
    """Resultant of two binary forms of equal degree d >= 1.

    Zero exactly when the forms share a nontrivial common zero over the
    algebraic closure.
    """
    if p.nvars != 2 or q.nvars != 2:
        raise ValueError("sylvester_resultant needs binary forms")
    d = p.degree
    if q.degree != d:
        raise ValueError(f"unequal degrees {p.degree} vs {q.degree}")
    if d < 1:
        raise ValueError("degree must be >= 1")
    # dehomogenize: coefficient of t^k is the coefficient of x0^k x1^(d-k)
    pc = [p.coeffs.get((k, d - k), Fraction(0)) for k in range(d + 1)]
    qc = [q.coeffs.get((k, d - k), Fraction(0)) for k in range(d + 1)]
    size = 2 * d
    rows = []
    for i in range(d):  # rows of p coefficients, descending powers
        rows.append({i + j: pc[d - j] for j in range(d + 1) if pc[d - j]})
    for i in range(d):
        rows.append({i + j: qc[d - j] for j in range(d + 1) if qc[d - j]})
    return simplify_scalar(det_sparse(rows, size))


def _macaulay_dets(polys: Sequence[HPoly], d: int):
    """det(M) and det(M'') of the Macaulay construction at critical degree."""
    nvars = polys[0].nvars
    n = nvars - 1
    t = (n + 1) * (d - 1) + 1
    cols = monomials(n, t)
    col_index = {m: k for k, m in enumerate(cols)}
    reduced = {}
    rows = []
    for gamma in cols:
        i = next(k for k, e in enumerate(gamma) if e >= d)
        reduced[gamma] = sum(1 for e in gamma if e >= d) == 1
        shift = gamma[:i] + (gamma[i] - d,) + gamma[i + 1:]
        row = {}
        for exp, c in polys[i].coeffs.items():
            target = tuple(a + b for a, b in zip(exp, shift))
            row[col_index[target]] = c
        rows.append(row)
    det_m = det_sparse(rows, len(cols))
    nr = [k for k, m in enumerate(cols) if not reduced[m]]
    nr_index = {k: j for j, k in enumerate(nr)}
    sub_rows = []
    for k in nr:
        row = rows[k]
        sub_rows.append({nr_index[c]: v for c, v in row.items() if c in nr_index})
    det_minor = det_sparse(sub_rows, len(nr)) if nr else Fraction(1)
    return det_m, det_minor


def random_unimodular(nvars: int, rng: random.Random) -> list[list[int]]:
    """Product of shear matrices: integer entries, determinant exactly 1."""
    a = [[1 if i == j else 0 for j in range(nvars)] for i in range(nvars)]
    for _ in range(3):
        i, j = rng.sample(range(nvars), 2)
        c = rng.choice([-2, -1, 1, 2])
        for k in range(nvars):
            a[i][k] += c * a[j][k]
    return a


def macaulay_resultant(polys: Sequence[HPoly], retries: int = 5, seed: int = 1):
    """Resultant of n+1 forms of common degree d in n+1 variables.

    Vanishes exactly when the system has a nontrivial common zero; equals 1 on
    (x_0^d, ..., x_n^d).  A degenerate 0/0 quotient is retried under random
    unimodular coordinate changes (resultant invariant since det = 1).
    """
    polys = list(polys)
    nvars = polys[0].nvars
    if len(polys) != nvars:
        raise ValueError(f"need {nvars} forms in {nvars} variables, got {len(polys)}")
    d = polys[0].degree
    if d < 1:
        raise ValueError("common degree must be >= 1")
    if any(p.degree != d or p.nvars != nvars for p in polys):
        raise ValueError("forms must share one degree and one variable count")
    det_m, det_minor = _macaulay_dets(polys, d)
    if det_minor:
        return simplify_scalar(det_m / det_minor)
    rng = random.Random(seed)
    for _ in range(retries):
        a = random_unimodular(nvars, rng)
        moved = [p.compose_linear(a) for p in polys]
        det_m, det_minor = _macaulay_dets(moved, d)
        if det_minor:
            return simplify_scalar(det_m / det_minor)
    raise DegenerateResultantError(
        f"Macaulay minor vanished in {retries} random coordinate frames")


@dataclass(frozen=True)
class HypersurfaceFamily:
    """q homogeneous forms in n+1 variables, degrees d_1..d_q."""

    n: int
    polys: tuple[HPoly, ...]

    def __init__(self, n: int, polys: Sequence[HPoly]):
        polys = tuple(polys)
        if not polys:
            raise ValueError("empty family")
        for p in polys:
            if p.nvars != n + 1:
                raise ValueError(f"form has {p.nvars} variables, expected {n + 1}")
            if p.is_zero():
                raise ValueError("zero form in family")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "polys", polys)

    @property
    def q(self) -> int:
        return len(self.polys)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(p.degree for p in self.polys)

    def common_degree(self) -> int:
        return lcm(*self.degrees) if len(self.degrees) > 1 else self.degrees[0]

    def lifted(self) -> tuple[HPoly, ...]:
        """Family raised to the common degree by Q_j -> Q_j^(d/d_j)."""
        d = self.common_degree()
        return tuple(p ** (d // p.degree) for p in self.polys)

    def is_moving(self) -> bool:
        return any(p.is_moving() for p in self.polys)


@dataclass(frozen=True)
class AdmissibilityReport:
    admissible: bool
    witness: Optional[GaussRat]
    failing_subset: Optional[tuple[int, ...]]
    subsets_checked: int
    points_tried: int


def gaussian_point_stream():
    """Deterministic distinct Gaussian rationals: small favorites then integers."""
    favorites = [GaussRat(0), GaussRat(1), GaussRat(-1), GaussRat(2), GaussRat(-2),
                 GaussRat(Fraction(1, 2)), GaussRat(Fraction(-1, 2)),
                 GaussRat(0, 1), GaussRat(0, -1), GaussRat(1, 1),
                 GaussRat(Fraction(1, 3)), GaussRat(Fraction(-1, 3))]
    yield from favorites
    k = 3
    while True:
        yield GaussRat(k)
        yield GaussRat(-k)
        yield GaussRat(Fraction(1, k + 1))
        k += 1


def _subset_zero_budget(lifted: Sequence[HPoly], subset: tuple[int, ...], d: int, n: int) -> int:
    """Upper bound on distinct parameter zeros of the subset's resultant.

    The resultant has degree d^n in each form's coefficients, so substituting
    rational-function coefficients of height h_i yields a rational function of
    the parameter with numerator degree at most d^n * sum(h_i).
    """
    total_h = sum(lifted[j].coeff_height() for j in subset)
    return d ** n * total_h + 1


def is_admissible(fam: HypersurfaceFamily, max_points: Optional[int] = None) -> AdmissibilityReport:
    """Exact general-position verdict for the family.

    Every (n+1)-subset must have resultant (an element of the coefficient
    field) not identically zero.  Moving coefficients are decided by
    specialization at a deterministic stream of parameter points: one nonzero
    value proves nonvanishing, while more distinct vanishing points than the
    subset's zero budget proves identical vanishing.
    """
    n = fam.n
    if fam.q < n + 1:
        raise ValueError(f"admissibility needs q >= n+1, got q={fam.q}, n={n}")
    d = fam.common_degree()
    lifted = fam.lifted()
    subsets = list(itertools.combinations(range(fam.q), n + 1))

    fixed_subsets = [s for s in subsets if not any(lifted[j].is_moving() for j in s)]
    moving_subsets = [s for s in subsets if any(lifted[j].is_moving() for j in s)]

    fixed_values = {}
    for s in fixed_subsets:
        r = macaulay_resultant([lifted[j].specialize(0) for j in s])
        fixed_values[s] = r
        if not r:
            return AdmissibilityReport(False, None, s, len(subsets), 0)

    if not moving_subsets:
        return AdmissibilityReport(True, GaussRat(0), None, len(subsets), 1)

    budgets = {s: _subset_zero_budget(lifted, s, d, n) for s in moving_subsets}
    if max_points is None:
        max_points = sum(budgets.values()) + 1
    zero_counts = {s: 0 for s in moving_subsets}
    nonzero_seen = {s: False for s in moving_subsets}
    tried = 0
    for z0 in gaussian_point_stream():
        if tried >= max_points:
            break
        try:
            specialized = {j: lifted[j].specialize(z0)
                           for j in set(j for s in moving_subsets for j in s)}
        except PoleError:
            continue
        tried += 1
        all_good = True
        for s in moving_subsets:
            r = macaulay_resultant([specialized[j] for j in s])
            if r:
                nonzero_seen[s] = True
            else:
                all_good = False
                zero_counts[s] += 1
                if zero_counts[s] > budgets[s] and not nonzero_seen[s]:
                    return AdmissibilityReport(False, None, s, len(subsets), tried)
        if all_good:
            return AdmissibilityReport(True, z0, None, len(subsets), tried)
    # only reachable when the caller capped max_points below the zero budget
    raise RuntimeError(f"admissibility undecided within {tried} parameter points")


@dataclass(frozen=True)
class PowerCertificate:
    """Exact identity x_i^s * R = sum_j b_j * Q_j for the family."""

    index: int
    s: int
    resultant: object
    cofactors: tuple[HPoly, ...]
    polys: tuple[HPoly, ...]

    def verify(self) -> bool:
        nvars = self.polys[0].nvars
        lhs = HPoly.monomial(nvars, tuple(self.s if k == self.index else 0
                                          for k in range(nvars)), self.resultant)
        acc = HPoly.zero(nvars, self.s)
        for b, q in zip(self.cofactors, self.polys):
            if not b.is_zero():
                acc = acc + b * q
        return acc == lhs


def power_certificate(polys: Sequence[HPoly], index: int,
                      resultant=None) -> PowerCertificate:
    """Minimal s with x_index^s * R in the degree-s piece of (Q_0,...,Q_n).

    The bound s <= (n+1)(d-1)+1 always suffices for families with nonzero
    resultant (top socle degree of the complete-intersection quotient), so
    failure up to the bound signals non-admissibility.
    """
    polys = list(polys)
    nvars = polys[0].nvars
    n = nvars - 1
    d = polys[0].degree
    if any(p.degree != d for p in polys) or len(polys) != nvars:
        raise ValueError("need n+1 forms of one degree in n+1 variables")
    if not (0 <= index < nvars):
        raise ValueError(f"coordinate index {index} out of range")
    r = macaulay_resultant(polys) if resultant is None else resultant
    if not r:
        raise NotAdmissibleError("family resultant vanishes; no certificate exists")
    s_max = (n + 1) * (d - 1) + 1
    for s in range(d, s_max + 1):
        shifts = monomials(n, s - d)
        var_of = {}
        for j in range(nvars):
            for m in shifts:
                var_of[(j, m)] = len(var_of)
        eq_rows: dict[tuple, dict] = {}
        for (j, m), v in var_of.items():
            for exp, c in polys[j].coeffs.items():
                target = tuple(a + b for a, b in zip(exp, m))
                row = eq_rows.setdefault(target, {})
                row[v] = row.get(v, Fraction(0)) + c
        target_exp = tuple(s if k == index else 0 for k in range(nvars))
        eqs = []
        for mono in monomials(n, s):
            rhs = r if mono == target_exp else Fraction(0)
            eqs.append((eq_rows.get(mono, {}), rhs))
        sol = solve_system(eqs)
        if sol is None:
            continue
        cof = []
        for j in range(nvars):
            coeffs = {m: sol[var_of[(j, m)]] for m in shifts
                      if var_of[(j, m)] in sol and sol[var_of[(j, m)]]}
            cof.append(HPoly(nvars, s - d, coeffs))
        cert = PowerCertificate(index, s, r, tuple(cof), tuple(polys))
        if not cert.verify():
            raise AssertionError("certificate verification failed after solve")
        return cert
    raise NotAdmissibleError(
        f"no power certificate up to the Macaulay bound s={s_max}; "
        "family is not in general position")
