"""Command-line front end.

Every subcommand reads exact inputs (JSON files or expression strings),
runs one pipeline stage, and emits a deterministic JSON report: keys are
sorted, exact scalars are rendered as strings, and writing with -o goes
through a temp file and os.replace so a crash never leaves a half-written
report.

Exit codes: 0 the computation ran (verdicts like "not admissible" are data,
not failures), 1 a mathematical obstruction (degenerate curve, inadmissible
family where admissibility is required, violated margin), 2 malformed input.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import os
import sys
import tempfile
from fractions import Fraction
from typing import Optional

import numpy as np

from . import __version__
from .acceptance import CHECKS, run_all
from .bounds import compute_truncation_levels
from .expfunc import ExpPoly
from .fields import GaussRat, RatFunc, ZPoly
from .filtration import build_filtration
from .hpoly import HPoly
from .nevanlinna import (AdmissibilityError, DegeneracyError, characteristic,
                         defect_estimate, jensen_check, smt_verify, wronskian)
from .parsing import (CURVE_SCHEMA, InputError, ParseError, POLY_SCHEMA,
                      SCALAR_GRAMMAR, SYSTEM_SCHEMA, curve_from_json,
                      family_from_json, load_json_file)
from .resultant import NotAdmissibleError, is_admissible, macaulay_resultant, power_certificate


def _raise_digit_limit() -> None:
    # materialized truncation levels can run to thousands of digits and
    # json.dumps must be able to print them
    try:
        sys.set_int_max_str_digits(2_000_000)
    except AttributeError:
        pass


def _plain(obj):
    """Recursively convert report objects to JSON-ready builtins."""
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else str(obj)
    if isinstance(obj, (GaussRat, ZPoly, RatFunc, HPoly, ExpPoly, Fraction)):
        return str(obj)
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: _plain(getattr(obj, f.name))
                for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (np.floating, np.integer)):
        return _plain(obj.item())
    return str(obj)


def _emit(doc: dict, path: Optional[str]) -> None:
    text = json.dumps(_plain(doc), indent=2, sort_keys=True) + "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    target = os.path.abspath(path)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(target), suffix=".part")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"not a rational number: {text!r} ({e})")


def _parse_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise InputError(f"{what} must be comma-separated integers, got {text!r}")


def _parse_floats(text: str, what: str) -> tuple[float, ...]:
    try:
        return tuple(float(tok) for tok in text.split(","))
    except ValueError:
        raise InputError(f"{what} must be comma-separated numbers, got {text!r}")


def _load_family(path: str):
    return family_from_json(load_json_file(path))


def _load_curve(path: str):
    return curve_from_json(load_json_file(path))


# ---------------------------------------------------------------------------
# subcommands


def cmd_resultant(args) -> int:
    fam = _load_family(args.system)
    if fam.q != fam.n + 1:
        raise InputError(
            f"resultant needs exactly n+1 = {fam.n + 1} forms, got {fam.q}")
    res = macaulay_resultant(fam.polys, seed=args.seed)
    _emit({"tool": "resultant", "version": __version__,
           "n": fam.n, "degrees": fam.degrees,
           "resultant": res, "is_zero": not res}, args.output)
    return 0


def cmd_admissible(args) -> int:
    fam = _load_family(args.system)
    rep = is_admissible(fam, max_points=args.max_points)
    doc = {"tool": "admissible", "version": __version__,
           "n": fam.n, "q": fam.q, "moving": fam.is_moving()}
    doc.update(_plain(rep))
    _emit(doc, args.output)
    return 0


def cmd_certificate(args) -> int:
    fam = _load_family(args.system)
    if fam.q != fam.n + 1:
        raise InputError(
            f"certificate needs exactly n+1 = {fam.n + 1} forms, got {fam.q}")
    if not 0 <= args.index <= fam.n:
        raise InputError(f"--index must lie in 0..{fam.n}")
    cert = power_certificate(fam.polys, args.index)
    _emit({"tool": "certificate", "version": __version__,
           "n": fam.n, "index": cert.index, "power": cert.s,
           "resultant": cert.resultant,
           "cofactor_terms": [len(c.coeffs) for c in cert.cofactors],
           "verified": cert.verify()}, args.output)
    return 0


def cmd_filtration(args) -> int:
    fam = _load_family(args.system)
    subset = _parse_ints(args.subset, "--subset")
    d = fam.common_degree()
    if args.level % d:
        raise InputError(f"--level must be a multiple of the common degree {d}")
    table = build_filtration(fam, subset, args.level)
    _emit({"tool": "filtration", "version": __version__,
           "n": table.n, "d": table.d, "level": table.big_n,
           "subset": table.subset, "tuples": table.tuples,
           "multiplicities": table.multiplicities,
           "m_total": table.m_total, "block_count": table.k_count,
           "a_constant": table.a_constant,
           "a_lower_bound": table.a_lower_bound()}, args.output)
    return 0


def cmd_bounds(args) -> int:
    eps = _parse_fraction(args.eps)
    degrees = _parse_ints(args.degrees, "--degrees")
    rep = compute_truncation_levels(args.n, len(degrees), eps, degrees,
                                    fixed=args.fixed,
                                    digit_budget=args.digit_budget)
    doc = {"tool": "bounds", "version": __version__}
    doc.update(_plain(rep))
    doc["materialized"] = rep.materialized
    _emit(doc, args.output)
    return 0


def cmd_jensen(args) -> int:
    from .parsing import parse_ratfunc
    phi = parse_ratfunc(args.phi)
    radii = _parse_floats(args.radii, "--radii")
    if any(r <= 1.0 for r in radii):
        raise InputError("every radius must exceed 1")
    residuals = [jensen_check(phi, r) for r in radii]
    _emit({"tool": "jensen", "version": __version__, "phi": phi,
           "radii": radii, "residuals": residuals,
           "max_residual": max(residuals)}, args.output)
    return 0


def cmd_wronskian(args) -> int:
    curve = _load_curve(args.curve)
    orders = _parse_ints(args.orders, "--orders") if args.orders else None
    w = wronskian(curve.components, orders=orders)
    _emit({"tool": "wronskian", "version": __version__,
           "components": list(curve.components),
           "orders": orders if orders else list(range(len(curve.components))),
           "wronskian": w, "is_zero": w.is_zero()}, args.output)
    return 0


def cmd_defects(args) -> int:
    curve = _load_curve(args.curve)
    fam = _load_family(args.system)
    if fam.n != curve.n:
        raise InputError(
            f"system lives in dimension {fam.n} but the curve maps into {curve.n}")
    rows = []
    for qf in fam.polys:
        delta = defect_estimate(curve, qf, args.rmax, level=args.level,
                                grid_points=args.grid)
        rows.append({"form": qf, "degree": qf.degree, "defect": delta})
    total = sum(r["defect"] for r in rows)
    _emit({"tool": "defects", "version": __version__,
           "rmax": args.rmax, "level": args.level,
           "targets": rows, "defect_sum": total,
           "defect_budget": curve.n + 1}, args.output)
    return 0


def _plot_svg(path: str, radii, lhs, rhs) -> None:
    w, h, pad = 640, 400, 48
    lo = min(min(lhs), min(rhs), 0.0)
    hi = max(max(lhs), max(rhs)) or 1.0
    sx = lambda r: pad + (w - 2 * pad) * (r - radii[0]) / (radii[-1] - radii[0])
    sy = lambda v: h - pad - (h - 2 * pad) * (v - lo) / (hi - lo)
    def poly(vals, color):
        pts = " ".join(f"{sx(r):.1f},{sy(v):.1f}" for r, v in zip(radii, vals))
        return (f'<polyline fill="none" stroke="{color}" stroke-width="2" '
                f'points="{pts}"/>')
    ticks = []
    for i in range(5):
        r = radii[0] + (radii[-1] - radii[0]) * i / 4
        v = lo + (hi - lo) * i / 4
        ticks.append(f'<text x="{sx(r):.0f}" y="{h - pad + 18}" '
                     f'text-anchor="middle" font-size="11">{r:.1f}</text>')
        ticks.append(f'<text x="{pad - 6}" y="{sy(v):.0f}" '
                     f'text-anchor="end" font-size="11">{v:.1f}</text>')
    svg = f"""<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">
<rect width="{w}" height="{h}" fill="white"/>
<rect x="{pad}" y="{pad}" width="{w - 2 * pad}" height="{h - 2 * pad}" fill="none" stroke="#999"/>
{poly(lhs, "#1f6fb2")}
{poly(rhs, "#c23b22")}
{''.join(ticks)}
<text x="{w - pad}" y="{pad - 10}" text-anchor="end" font-size="12" fill="#1f6fb2">truncated counting sum</text>
<text x="{w - pad}" y="{pad + 6}" text-anchor="end" font-size="12" fill="#c23b22">(q - n - 1 - eps) T</text>
</svg>
"""
    with open(path, "w") as fh:
        fh.write(svg)


def cmd_smt(args) -> int:
    curve = _load_curve(args.curve)
    fam = _load_family(args.system)
    if fam.n != curve.n:
        raise InputError(
            f"system lives in dimension {fam.n} but the curve maps into {curve.n}")
    eps = _parse_fraction(args.eps)
    if args.rmin <= 1.0 or args.rmax <= args.rmin or args.steps < 2:
        raise InputError("need 1 < rmin < rmax and at least 2 steps")
    radii = [float(r) for r in np.linspace(args.rmin, args.rmax, args.steps)]
    rep = smt_verify(curve, fam.polys, eps, radii,
                     nondegeneracy_degree=args.nondeg_degree)
    doc = {"tool": "smt", "version": __version__,
           "holds_everywhere": rep.holds_everywhere,
           "holds_eventually": rep.holds_eventually}
    doc.update(_plain(rep))
    _emit(doc, args.output)
    if args.plot:
        _plot_svg(args.plot, rep.profile.radii, rep.lhs, rep.rhs)
    return 0


def cmd_characteristic(args) -> int:
    curve = _load_curve(args.curve)
    radii = _parse_floats(args.radii, "--radii")
    if any(r < 1.0 for r in radii):
        raise InputError("every radius must be at least 1")
    values = [characteristic(curve, r) for r in radii]
    _emit({"tool": "characteristic", "version": __version__,
           "components": list(curve.components),
           "radii": radii, "values": values}, args.output)
    return 0


def cmd_schema(args) -> int:
    if args.kind == "scalar":
        sys.stdout.write(SCALAR_GRAMMAR.rstrip() + "\n")
        return 0
    table = {"polynomial": POLY_SCHEMA, "system": SYSTEM_SCHEMA,
             "curve": CURVE_SCHEMA}
    _emit(table[args.kind], args.output)
    return 0


def cmd_selftest(args) -> int:
    wanted = args.only.split(",") if args.only else None
    known = {name for name, _ in CHECKS}
    if wanted and not set(wanted) <= known:
        raise InputError(f"unknown check(s): {sorted(set(wanted) - known)}")
    results = run_all(names=wanted, echo=print)
    passed = sum(r.passed for r in results)
    print(f"{passed}/{len(results)} checks passed")
    return 0 if passed == len(results) else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="nevlab",
        description="exact resultants, filtrations, truncation bounds, and "
                    "Nevanlinna functionals for entire curves")
    p.add_argument("--version", action="version", version=f"nevlab {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=fn)
        sp.add_argument("-o", "--output", metavar="FILE",
                        help="write the JSON report here (atomically) instead of stdout")
        return sp

    sp = add("resultant", cmd_resultant, "Macaulay resultant of n+1 forms")
    sp.add_argument("system", help="system JSON file")
    sp.add_argument("--seed", type=int, default=1, help="specialization seed")

    sp = add("admissible", cmd_admissible, "general-position check for a family")
    sp.add_argument("system")
    sp.add_argument("--max-points", type=int, default=None,
                    help="cap on specialization attempts per subset")

    sp = add("certificate", cmd_certificate,
             "express a power of one coordinate inside the ideal of the family")
    sp.add_argument("system")
    sp.add_argument("--index", type=int, required=True,
                    help="coordinate index to certify")

    sp = add("filtration", cmd_filtration, "graded filtration table at one level")
    sp.add_argument("system")
    sp.add_argument("--subset", required=True, help="n comma-separated form indices")
    sp.add_argument("--level", type=int, required=True, help="graded level N")

    sp = add("bounds", cmd_bounds, "truncation levels for given (n, q, eps, degrees)")
    sp.add_argument("--n", type=int, required=True, help="projective dimension")
    sp.add_argument("--eps", required=True, help="error budget, e.g. 1/2")
    sp.add_argument("--degrees", required=True, help="comma-separated target degrees")
    sp.add_argument("--fixed", action="store_true",
                    help="constant-coefficient chain (much smaller levels)")
    sp.add_argument("--digit-budget", type=int, default=None,
                    help="max decimal digits before levels are left symbolic")

    sp = add("jensen", cmd_jensen, "zero/pole counting vs boundary averages")
    sp.add_argument("--phi", required=True, help="rational expression in z, e.g. (z-2)/(z+3)")
    sp.add_argument("--radii", default="2,5,10")

    sp = add("wronskian", cmd_wronskian, "Wronskian determinant of curve components")
    sp.add_argument("curve")
    sp.add_argument("--orders", default=None, help="derivative orders, e.g. 0,1,2")

    sp = add("characteristic", cmd_characteristic, "growth function of a curve")
    sp.add_argument("curve")
    sp.add_argument("--radii", default="2,5,10,20")

    sp = add("defects", cmd_defects, "deficiency estimates for each target form")
    sp.add_argument("curve")
    sp.add_argument("system")
    sp.add_argument("--rmax", type=float, default=50.0)
    sp.add_argument("--level", type=int, default=None, help="truncation level for counting")
    sp.add_argument("--grid", type=int, default=12)

    sp = add("smt", cmd_smt, "verify the main inequality along a radius grid")
    sp.add_argument("curve")
    sp.add_argument("system")
    sp.add_argument("--eps", default="1/2")
    sp.add_argument("--rmin", type=float, default=10.0)
    sp.add_argument("--rmax", type=float, default=50.0)
    sp.add_argument("--steps", type=int, default=20)
    sp.add_argument("--nondeg-degree", type=int, default=4,
                    help="degree up to which algebraic independence is screened")
    sp.add_argument("--plot", metavar="FILE.svg", default=None,
                    help="write an SVG of both sides of the inequality")

    sp = add("schema", cmd_schema, "print input formats")
    sp.add_argument("kind", choices=("scalar", "polynomial", "system", "curve"))

    sp = add("selftest", cmd_selftest, "run the acceptance battery")
    sp.add_argument("--only", default=None, help="comma-separated check names")

    return p


def main(argv=None) -> int:
    _raise_digit_limit()
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"nevlab: input error:\n{e.caret()}", file=sys.stderr)
        return 2
    except InputError as e:
        print(f"nevlab: input error: {e}", file=sys.stderr)
        return 2
    except (DegeneracyError, AdmissibilityError, NotAdmissibleError) as e:
        print(f"nevlab: {e}", file=sys.stderr)
        return 1
    except ArithmeticError as e:          # includes violated margins
        print(f"nevlab: {e}", file=sys.stderr)
        return 1
    except AssertionError:
        print("nevlab: internal invariant violated (is the family admissible?)",
              file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
