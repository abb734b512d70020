"""Horizontal cuts, extraction of (U,N) representations and operator comparison.

An implication I(x,y) = U(N(x),y) with continuous N can be rewritten with a
different pair whenever some cut I(., alpha) with alpha != e is again a
continuous negation. ``extract_representation`` rebuilds the pair for such an
alpha; ``uniqueness_verdict`` looks for those alphas on the uninorm side.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import InvalidArgument, PreconditionViolation
from .negations import Negation, modified_pseudo_inverse
from .numerics import (
    ContinuityVerdict,
    Grid,
    Tolerances,
    monotone_continuity_probe,
    uniform_grid,
)
from .uninorms import AxiomReport, BinaryOperator, check_uninorm_axioms

ROLES = ("uninorm-cut", "implication-cut")


@dataclass(frozen=True)
class CutReport:
    alpha: float
    role: str
    monotone_ok: bool
    continuity: ContinuityVerdict
    endpoint_low: float
    endpoint_high: float
    valid: bool


@dataclass(frozen=True)
class RepresentationRecord:
    alpha: float
    n_star: Negation
    u_star: BinaryOperator
    reconstruction_residual: float
    u_star_axiom_residual: float
    cut: CutReport
    axioms: Optional[AxiomReport] = None


@dataclass(frozen=True)
class UniquenessVerdict:
    operator: str
    neutral: float
    unique: bool
    witnesses: tuple
    scanned: int


@dataclass(frozen=True)
class EqualityRecord:
    residual: float
    witness: tuple
    compared: int
    passed: bool


@dataclass(frozen=True)
class CoincidenceReport:
    a: float
    d: float
    outer_residual: float
    outer_witness: tuple
    coincide: bool
    inner_residual: float
    inner_witness: tuple
    disagree_inside: bool


def scan_cut(op: BinaryOperator, role: str, alpha: float, grid: Grid, tol: Tolerances) -> CutReport:
    if role not in ROLES:
        raise InvalidArgument(f"role must be one of {ROLES}, got {role!r}")
    alpha = float(alpha)
    cut = op.cut(alpha)
    v = np.asarray(cut(grid.points), dtype=float)
    step = np.diff(v)
    if role == "uninorm-cut":
        monotone_ok = bool(np.all(step >= -tol.eq_tol))
        ends_ok = abs(v[0]) <= tol.exact_tol and abs(v[-1] - 1.0) <= tol.exact_tol
    else:
        monotone_ok = bool(np.all(step <= tol.eq_tol))
        ends_ok = abs(v[0] - 1.0) <= tol.exact_tol and abs(v[-1]) <= tol.exact_tol
    verdict = monotone_continuity_probe(cut, grid, tol)
    return CutReport(alpha, role, monotone_ok, verdict, float(v[0]), float(v[-1]),
                     bool(monotone_ok and verdict.continuous and ends_ok))


def scan_cuts(op: BinaryOperator, role: str, alphas: Sequence[float], grid: Optional[Grid] = None,
              tol: Tolerances = Tolerances()):
    grid = grid or uniform_grid(400)
    alphas = sorted(float(a) for a in alphas)
    lo_ok = (lambda a: 0.0 < a < 1.0) if role == "uninorm-cut" else (lambda a: 0.0 <= a < 1.0)
    bad = [a for a in alphas if not lo_ok(a)]
    if bad:
        raise InvalidArgument(f"alpha values out of range for {role}: {bad}")
    return [scan_cut(op, role, a, grid, tol) for a in alphas]


def default_alphas(op: BinaryOperator) -> list:
    """The 99 points i/100 plus the neutral element and any declared special points."""
    cands = list(np.arange(1, 100) / 100)
    if op.neutral is not None:
        cands.append(float(op.neutral))
    cands.extend(float(p) for p in op.special_points)
    return sorted({a for a in cands if 0.0 < a < 1.0})


def extract_representation(i: BinaryOperator, alpha: float, grid: Optional[Grid] = None,
                           tol: Tolerances = Tolerances(), check_axioms: bool = True,
                           axiom_grid: Optional[Grid] = None) -> RepresentationRecord:
    """Rebuild (N*, U*) from the cut of ``i`` at ``alpha``.

    N* = I(., alpha) and U*(x,y) = I(R_{N*}(x), y), with the pseudo-inverse
    computed by bisection. The cut is re-verified first; an invalid cut raises
    PreconditionViolation carrying its CutReport.
    """
    grid = grid or uniform_grid(400)
    report = scan_cut(i, "implication-cut", alpha, grid, tol)
    if not report.valid:
        raise PreconditionViolation(f"the cut at alpha={alpha:g} is not a continuous negation", report=report)
    alpha = float(alpha)
    cut = i.cut(alpha)
    n_star = Negation(cut, f"N*[{i.name},{alpha:g}]", claimed_continuous=True)
    r = modified_pseudo_inverse(n_star, use_closed_form=False)

    def u_func(x, y):
        ux, inv = np.unique(x, return_inverse=True)
        rx = np.asarray(r(ux), dtype=float)[inv.ravel()]
        return i(rx, y)

    u_star = BinaryOperator(u_func, f"U*[{i.name},{alpha:g}]", "uninorm", alpha,
                            bool(i(0.0, 0.0) >= 1.0 - tol.eq_tol))

    p = grid.points
    gx, gy = np.meshgrid(p, p, indexing="ij")
    recon = float(np.max(np.abs(u_star(n_star(gx), gy) - i(gx, gy))))

    axioms = None
    axiom_res = float("nan")
    if check_axioms:
        axioms = check_uninorm_axioms(u_star, axiom_grid or grid, tol)
        axiom_res = max(r.worst_residual for r in axioms.reports())
    return RepresentationRecord(alpha, n_star, u_star, recon, axiom_res, report, axioms)


def uniqueness_verdict(u: BinaryOperator, grid: Optional[Grid] = None, alphas: Optional[Sequence[float]] = None,
                       tol: Tolerances = Tolerances()) -> UniquenessVerdict:
    if u.neutral is None:
        raise InvalidArgument("uniqueness_verdict needs a uninorm with a known neutral element")
    e = float(u.neutral)
    alphas = default_alphas(u) if alphas is None else alphas
    reports = scan_cuts(u, "uninorm-cut", alphas, grid, tol)
    witnesses = tuple(r.alpha for r in reports if r.valid and abs(r.alpha - e) > tol.exact_tol)
    return UniquenessVerdict(u.name, e, not witnesses, witnesses, len(reports))


def _pair_grid(grid: Grid, interior: bool):
    p = grid.interior if interior else grid.points
    gx, gy = np.meshgrid(p, p, indexing="ij")
    return gx.ravel(), gy.ravel()


def operators_equal(a: BinaryOperator, b: BinaryOperator, grid: Optional[Grid] = None,
                    tol: Tolerances = Tolerances(), exclusions: Sequence = (), interior: bool = False,
                    threshold: Optional[float] = None) -> EqualityRecord:
    """Max |A - B| over grid pairs, skipping the listed points."""
    grid = grid or uniform_grid(400)
    x, y = _pair_grid(grid, interior)
    keep = np.ones(x.shape, dtype=bool)
    for ex, ey in exclusions:
        keep &= ~((np.abs(x - ex) <= 1e-15) & (np.abs(y - ey) <= 1e-15))
    x, y = x[keep], y[keep]
    res = np.abs(np.asarray(a(x, y)) - np.asarray(b(x, y)))
    res = np.where(np.isnan(res), np.inf, res)
    if res.size == 0:
        return EqualityRecord(0.0, (), 0, True)
    k = int(np.argmax(res))
    worst = float(res[k])
    limit = tol.eq_tol if threshold is None else threshold
    return EqualityRecord(worst, (float(x[k]), float(y[k])), int(res.size), worst <= limit)


def coincidence_region_check(u1: BinaryOperator, u2: BinaryOperator, a: float, d: float,
                             grid: Optional[Grid] = None, tol: Tolerances = Tolerances()) -> CoincidenceReport:
    if not a < d:
        raise InvalidArgument("coincidence check needs a < d")
    grid = grid or uniform_grid(400)
    x, y = _pair_grid(grid, False)
    diff = np.abs(np.asarray(u1(x, y)) - np.asarray(u2(x, y)))
    outer_x = (x <= a) | (x >= d)
    outer_y = (y <= a) | (y >= d)
    outer = outer_x & outer_y
    inner = (x > a) & (x < d) & (y > a) & (y < d)

    def worst(mask):
        if not mask.any():
            return 0.0, ()
        idx = np.nonzero(mask)[0]
        k = idx[int(np.argmax(diff[idx]))]
        return float(diff[k]), (float(x[k]), float(y[k]))

    o_res, o_w = worst(outer)
    i_res, i_w = worst(inner)
    return CoincidenceReport(float(a), float(d), o_res, o_w, o_res <= tol.exact_tol, i_res,
                             i_w if i_res > tol.eq_tol else (), i_res > tol.eq_tol)
